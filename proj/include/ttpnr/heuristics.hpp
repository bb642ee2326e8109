// Lower bounds on the remaining makespan of a timed state. The critical-path
// bound relaxes resource capacities and propagates residual earliest finish
// times through the precedence DAG; the resource-load bound relaxes
// precedence and divides the remaining workload of each resource by its
// capacity. Both are consistent, and so is their pointwise maximum.

#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "ttpnr/instance.hpp"
#include "ttpnr/state.hpp"

namespace ttpnr {

enum class HeuristicKind { Zero, CriticalPath, ResourceLoad, MaxOfBoth };

std::string heuristic_name(HeuristicKind kind);
HeuristicKind heuristic_from_name(const std::string& name);  // zero|cp|res|max

int h_cp(const RcpspInstance& inst, const std::vector<int>& topo_order,
         const TimedState& s);
int h_res(const RcpspInstance& inst, const TimedState& s);
int h_max(const RcpspInstance& inst, const std::vector<int>& topo_order,
          const TimedState& s);

// Recomputation-free bound for a zero-cost successor: when the firing did
// not advance the clock, the parent's bound carries over exactly.
template <typename Recompute>
int cached_child_h(int parent_h, int delta, Recompute&& recompute) {
  if (delta == 0) {
    assert(recompute() == parent_h);
    return parent_h;
  }
  return recompute();
}

// Reuses the topological order and the propagation buffer across calls.
// One evaluator per solve; not safe to share between threads.
class HeuristicEvaluator {
 public:
  HeuristicEvaluator(const RcpspInstance& inst, HeuristicKind kind);

  int operator()(const TimedState& s);
  HeuristicKind kind() const { return kind_; }
  const std::vector<int>& topo_order() const { return topo_; }

 private:
  const RcpspInstance* inst_;
  HeuristicKind kind_;
  std::vector<int> topo_;
  std::vector<int> ref_;
};

}  // namespace ttpnr
