#include "ttpnr/net.hpp"

#include <sstream>
#include <stdexcept>

namespace ttpnr {

TtpnrNet build_net(const RcpspInstance& inst) {
  {
    std::vector<std::string> bad = validate_instance(inst);
    if (!bad.empty()) {
      throw std::invalid_argument("cannot build net, invalid instance: " + bad.front());
    }
  }
  const int n = inst.num_activities();
  const int k = inst.num_resources();
  for (int j = 1; j < n - 1; ++j) {
    if (inst.predecessors[j].empty() || inst.successors[j].empty()) {
      throw std::invalid_argument(
          "cannot build net: instance is not dummy-closed (activity " +
          std::to_string(j) + ")");
    }
  }

  TtpnrNet net;
  net.capacities = inst.capacities;
  net.transitions.resize(n);

  auto add_place = [&](PlaceKind kind) -> Place& {
    Place& p = net.places.emplace_back();
    p.id = static_cast<int>(net.places.size()) - 1;
    p.kind = kind;
    return p;
  };

  Place& src = add_place(PlaceKind::Source);
  src.to = inst.source();
  net.source_place = src.id;

  std::vector<int> edge_place(inst.edges.size());
  for (size_t e = 0; e < inst.edges.size(); ++e) {
    Place& p = add_place(PlaceKind::Precedence);
    p.from = inst.edges[e].first;
    p.to = inst.edges[e].second;
    edge_place[e] = p.id;
  }

  Place& snk = add_place(PlaceKind::Sink);
  snk.from = inst.sink();
  net.sink_place = snk.id;

  net.resource_place_base = static_cast<int>(net.places.size());
  for (int r = 0; r < k; ++r) {
    Place& p = add_place(PlaceKind::Resource);
    p.resource = r;
  }

  for (int j = 0; j < n; ++j) {
    Transition& t = net.transitions[j];
    t.id = j;
    t.activity = j;
    t.duration = inst.activities[j].duration;
  }
  net.transitions[inst.source()].inputs.push_back({net.source_place, 1});
  net.transitions[inst.sink()].outputs.push_back({net.sink_place, 1});
  for (size_t e = 0; e < inst.edges.size(); ++e) {
    const auto& [i, j] = inst.edges[e];
    net.transitions[i].outputs.push_back({edge_place[e], 1});
    net.transitions[j].inputs.push_back({edge_place[e], 1});
  }
  // Zero-demand arcs are never materialized.
  net.resource_users.resize(k);
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < k; ++r) {
      const int u = inst.activities[j].demands[r];
      if (u > 0) {
        net.transitions[j].inputs.push_back({net.resource_place(r), u});
        net.transitions[j].outputs.push_back({net.resource_place(r), u});
        net.resource_users[r].emplace_back(j, u);
      }
    }
  }

  net.initial_marking.assign(net.places.size(), 0);
  net.initial_marking[net.source_place] = 1;
  for (int r = 0; r < k; ++r) {
    net.initial_marking[net.resource_place(r)] = net.capacities[r];
  }
  return net;
}

std::string to_dot(const TtpnrNet& net) {
  std::ostringstream out;
  out << "digraph ttpnr {\n  rankdir=LR;\n";
  for (const Place& p : net.places) {
    out << "  p" << p.id << " [shape=circle label=\"";
    switch (p.kind) {
      case PlaceKind::Source: out << "src"; break;
      case PlaceKind::Sink: out << "sink"; break;
      case PlaceKind::Precedence: out << p.from << "," << p.to; break;
      case PlaceKind::Resource:
        out << "r" << p.resource << " (c=" << net.capacities[p.resource] << ")";
        break;
    }
    out << "\"];\n";
  }
  for (const Transition& t : net.transitions) {
    out << "  t" << t.id << " [shape=box label=\"act " << t.activity
        << " (d=" << t.duration << ")\"];\n";
    for (const Arc& a : t.inputs) {
      out << "  p" << a.place << " -> t" << t.id;
      if (a.weight != 1) out << " [label=\"" << a.weight << "\"]";
      out << ";\n";
    }
    for (const Arc& a : t.outputs) {
      out << "  t" << t.id << " -> p" << a.place;
      if (a.weight != 1) out << " [label=\"" << a.weight << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ttpnr
