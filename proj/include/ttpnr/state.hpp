// Search states over the net: a per-activity status vector from which the
// full delayed marking is reconstructible. A token with positive delay is
// not yet available; firing a transition may consume delayed tokens, which
// advances the clock by the largest consumed delay and decrements every
// remaining delay accordingly.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ttpnr/net.hpp"

namespace ttpnr {

// Per-activity code: kUnstarted, 0 = done, theta > 0 = executing with theta
// time units left.
using StatusCode = int16_t;
inline constexpr StatusCode kUnstarted = -1;

struct TimedState {
  std::vector<StatusCode> status;

  bool unstarted(int j) const { return status[j] == kUnstarted; }
  bool executing(int j) const { return status[j] > 0; }
  bool done(int j) const { return status[j] == 0; }
  bool fired(int j) const { return status[j] != kUnstarted; }
  int residual(int j) const { return status[j] > 0 ? status[j] : 0; }

  bool operator==(const TimedState&) const = default;
};

struct StateHash {
  size_t operator()(const TimedState& s) const;
};

struct FireResult {
  TimedState next;
  int delta = 0;  // time jump: the largest delay among consumed tokens
};

TimedState initial_state(const TtpnrNet& net);

// Transitions whose input places all hold enough tokens, counting delayed
// ones. Sorted by transition id.
std::vector<int> enabled_transitions(const TtpnrNet& net, const TimedState& s);
void enabled_transitions(const TtpnrNet& net, const TimedState& s,
                         std::vector<int>& out);

// Fires transition t: consumes the smallest-delay tokens from each input
// place, jumps time by the largest consumed delay, clamps every other
// residual at zero, and starts t's activity with its full duration as the
// produced-token delay. Throws std::logic_error if t is not enabled or its
// activity already fired.
FireResult fire(const TtpnrNet& net, const TimedState& s, int t);

bool is_goal(const TtpnrNet& net, const TimedState& s);

// Byte serialization of the status vector; equal iff the states are equal.
std::string canonical_key(const TimedState& s);

// delay -> token count per place, reconstructed from the status vector.
using TokenBag = std::vector<std::map<int, int>>;
TokenBag derived_marking(const TtpnrNet& net, const TimedState& s);

}  // namespace ttpnr
