// RCPSP instance model: activities with integer durations and renewable
// resource demands, a precedence DAG over dense ids, and per-resource
// capacities. Ids 0 and n+1 are the dummy source and sink.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ttpnr {

struct Activity {
  int id = 0;
  int duration = 0;
  std::vector<int> demands;  // one entry per renewable resource

  bool operator==(const Activity&) const = default;
};

struct RcpspInstance {
  std::vector<Activity> activities;        // index == id, 0..n+1
  std::vector<std::pair<int, int>> edges;  // (i, j): i must finish before j starts
  std::vector<int> capacities;

  // Derived adjacency, rebuilt by finalize(). Not part of value identity.
  std::vector<std::vector<int>> successors;
  std::vector<std::vector<int>> predecessors;

  int num_activities() const { return static_cast<int>(activities.size()); }
  int num_real_activities() const { return num_activities() - 2; }
  int num_resources() const { return static_cast<int>(capacities.size()); }
  int source() const { return 0; }
  int sink() const { return num_activities() - 1; }

  // Sorts and dedups edges, rebuilds successor/predecessor lists. Must be
  // called after mutating activities or edges; all factories here do so.
  void finalize();

  bool operator==(const RcpspInstance& other) const {
    return activities == other.activities && edges == other.edges &&
           capacities == other.capacities;
  }
};

// Convenience factory; demands[j] must have one entry per capacity.
RcpspInstance make_instance(const std::vector<int>& durations,
                            const std::vector<std::vector<int>>& demands,
                            std::vector<std::pair<int, int>> edges,
                            std::vector<int> capacities);

// Structural validation. Empty result means the instance is sound; otherwise
// one human-readable string per violated invariant.
std::vector<std::string> validate_instance(const RcpspInstance& inst);

// Connects every predecessor-less real activity to the source and every
// successor-less one to the sink (plus source->sink when there are no real
// activities). Idempotent.
RcpspInstance close_dummies(const RcpspInstance& inst);

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Kahn's algorithm with a FIFO queue; newly released activities are enqueued
// in ascending id order, which fixes the order deterministically.
// Throws CycleError naming one cycle if the graph is cyclic.
std::vector<int> topological_order(const RcpspInstance& inst);

}  // namespace ttpnr
