#include "ttpnr/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttpnr {

size_t StateHash::operator()(const TimedState& s) const {
  // FNV-1a over the raw status bytes.
  uint64_t h = 1469598103934665603ull;
  const auto* bytes = reinterpret_cast<const unsigned char*>(s.status.data());
  const size_t len = s.status.size() * sizeof(StatusCode);
  for (size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

TimedState initial_state(const TtpnrNet& net) {
  TimedState s;
  s.status.assign(net.num_activities(), kUnstarted);
  return s;
}

namespace {

// Token count of a place under the status-vector encoding. Precedence places
// without a producer (possible in hand-edited nets) never hold tokens.
int tokens_in(const TtpnrNet& net, const TimedState& s, const Place& p) {
  switch (p.kind) {
    case PlaceKind::Source:
      return s.unstarted(p.to) ? 1 : 0;
    case PlaceKind::Sink:
      return s.fired(p.from) ? 1 : 0;
    case PlaceKind::Precedence:
      if (p.from < 0) return 0;
      return (s.fired(p.from) && (p.to < 0 || s.unstarted(p.to))) ? 1 : 0;
    case PlaceKind::Resource:
      return net.capacities[p.resource];  // self-loops conserve the count
  }
  return 0;
}

bool transition_enabled(const TtpnrNet& net, const TimedState& s,
                        const Transition& t) {
  if (!s.unstarted(t.activity)) return false;
  for (const Arc& a : t.inputs) {
    if (tokens_in(net, s, net.places[a.place]) < a.weight) return false;
  }
  return true;
}

}  // namespace

void enabled_transitions(const TtpnrNet& net, const TimedState& s,
                         std::vector<int>& out) {
  out.clear();
  for (const Transition& t : net.transitions) {
    if (transition_enabled(net, s, t)) out.push_back(t.id);
  }
}

std::vector<int> enabled_transitions(const TtpnrNet& net, const TimedState& s) {
  std::vector<int> out;
  enabled_transitions(net, s, out);
  return out;
}

FireResult fire(const TtpnrNet& net, const TimedState& s, int t) {
  if (t < 0 || t >= net.num_activities()) {
    throw std::logic_error("fire: unknown transition " + std::to_string(t));
  }
  const Transition& tr = net.transitions[t];
  if (!s.unstarted(tr.activity)) {
    throw std::logic_error("fire: transition " + std::to_string(t) +
                           " already fired");
  }

  // Consume the smallest-delay tokens from each input place; the time jump
  // is the largest delay we were forced to take.
  int delta = 0;
  std::vector<int> delays;  // scratch for resource places
  for (const Arc& a : tr.inputs) {
    const Place& p = net.places[a.place];
    switch (p.kind) {
      case PlaceKind::Source:
      case PlaceKind::Sink:
      case PlaceKind::Precedence: {
        if (tokens_in(net, s, p) < a.weight) {
          throw std::logic_error("fire: transition " + std::to_string(t) +
                                 " is not enabled");
        }
        // A precedence token decays with its producer's residual.
        if (p.kind == PlaceKind::Precedence) {
          delta = std::max(delta, s.residual(p.from));
        }
        break;
      }
      case PlaceKind::Resource: {
        const int r = p.resource;
        delays.clear();
        for (const auto& [j, u] : net.resource_users[r]) {
          if (s.executing(j)) delays.insert(delays.end(), u, s.residual(j));
        }
        const int zero_tokens = net.capacities[r] - static_cast<int>(delays.size());
        if (net.capacities[r] < a.weight) {
          throw std::logic_error("fire: transition " + std::to_string(t) +
                                 " is not enabled (resource " +
                                 std::to_string(r) + ")");
        }
        if (a.weight > zero_tokens) {
          // Need (weight - zero_tokens) of the smallest positive delays.
          const int need = a.weight - zero_tokens;
          std::nth_element(delays.begin(), delays.begin() + (need - 1),
                           delays.end());
          delta = std::max(delta, delays[need - 1]);
        }
        break;
      }
    }
  }

  FireResult out;
  out.delta = delta;
  out.next = s;
  if (delta > 0) {
    for (StatusCode& code : out.next.status) {
      if (code > 0) code = static_cast<StatusCode>(std::max(0, code - delta));
    }
  }
  // The fired activity starts after the jump with its full duration left;
  // zero-duration activities complete immediately.
  out.next.status[tr.activity] = static_cast<StatusCode>(tr.duration);
  return out;
}

bool is_goal(const TtpnrNet& net, const TimedState& s) {
  const int sink = net.num_activities() - 1;
  return s.done(sink);
}

std::string canonical_key(const TimedState& s) {
  std::string key;
  key.reserve(s.status.size() * 2);
  for (StatusCode code : s.status) {
    const auto u = static_cast<uint16_t>(code);
    key.push_back(static_cast<char>(u & 0xff));
    key.push_back(static_cast<char>(u >> 8));
  }
  return key;
}

TokenBag derived_marking(const TtpnrNet& net, const TimedState& s) {
  TokenBag bag(net.places.size());
  for (const Place& p : net.places) {
    switch (p.kind) {
      case PlaceKind::Source:
      case PlaceKind::Sink:
      case PlaceKind::Precedence: {
        const int count = tokens_in(net, s, p);
        if (count > 0) {
          bag[p.id][p.kind == PlaceKind::Precedence ? s.residual(p.from) : 0] +=
              count;
        }
        break;
      }
      case PlaceKind::Resource: {
        int in_use = 0;
        for (const auto& [j, u] : net.resource_users[p.resource]) {
          if (s.executing(j)) {
            bag[p.id][s.residual(j)] += u;
            in_use += u;
          }
        }
        const int zero = net.capacities[p.resource] - in_use;
        if (zero > 0) bag[p.id][0] += zero;
        break;
      }
    }
  }
  return bag;
}

}  // namespace ttpnr
