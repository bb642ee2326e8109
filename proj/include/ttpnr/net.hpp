// Timed transition Petri net with resource places, built from an RCPSP
// instance. One transition per activity; one place per precedence edge;
// a source and a sink place; one capacity-holding place per resource.
// Resource arcs consume tokens when an activity starts and redeposit the
// same amount carrying the activity's duration as token delay.

#pragma once

#include <string>
#include <vector>

#include "ttpnr/instance.hpp"

namespace ttpnr {

enum class PlaceKind { Source, Sink, Precedence, Resource };

struct Place {
  int id = 0;
  PlaceKind kind = PlaceKind::Precedence;
  int from = -1;      // producing activity (precedence/sink places)
  int to = -1;        // consuming activity (precedence/source places)
  int resource = -1;  // resource index (resource places)
};

struct Arc {
  int place = 0;
  int weight = 1;
};

struct Transition {
  int id = 0;
  int activity = 0;
  int duration = 0;
  std::vector<Arc> inputs;
  std::vector<Arc> outputs;
};

struct TtpnrNet {
  std::vector<Place> places;
  std::vector<Transition> transitions;  // index == activity id
  std::vector<int> initial_marking;     // tokens per place, all with zero delay
  std::vector<int> capacities;
  // Per resource: (activity, weight) of every transition touching its place.
  std::vector<std::vector<std::pair<int, int>>> resource_users;
  int source_place = -1;
  int sink_place = -1;
  int resource_place_base = -1;  // resource r lives at resource_place_base + r

  int num_activities() const { return static_cast<int>(transitions.size()); }
  int num_resources() const { return static_cast<int>(capacities.size()); }
  int resource_place(int r) const { return resource_place_base + r; }
};

// Throws std::invalid_argument when the instance fails validation or is not
// dummy-closed.
TtpnrNet build_net(const RcpspInstance& inst);

// Graphviz view of the net structure, for documentation.
std::string to_dot(const TtpnrNet& net);

}  // namespace ttpnr
