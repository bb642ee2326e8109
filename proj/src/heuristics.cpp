#include "ttpnr/heuristics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttpnr {

std::string heuristic_name(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::Zero: return "zero";
    case HeuristicKind::CriticalPath: return "cp";
    case HeuristicKind::ResourceLoad: return "res";
    case HeuristicKind::MaxOfBoth: return "max";
  }
  return "?";
}

HeuristicKind heuristic_from_name(const std::string& name) {
  if (name == "zero") return HeuristicKind::Zero;
  if (name == "cp") return HeuristicKind::CriticalPath;
  if (name == "res") return HeuristicKind::ResourceLoad;
  if (name == "max") return HeuristicKind::MaxOfBoth;
  throw std::invalid_argument("unknown heuristic: " + name);
}

namespace {

// Residual earliest finish propagation: done activities contribute nothing,
// executing ones their remaining time, unstarted ones the latest predecessor
// finish plus their own duration. The sink's value is the bound.
int propagate_ref(const RcpspInstance& inst, const std::vector<int>& topo,
                  const TimedState& s, std::vector<int>& ref) {
  ref.assign(inst.num_activities(), 0);
  for (int j : topo) {
    if (s.done(j)) continue;
    if (s.executing(j)) {
      ref[j] = s.residual(j);
      continue;
    }
    int latest = 0;
    for (int i : inst.predecessors[j]) latest = std::max(latest, ref[i]);
    ref[j] = latest + inst.activities[j].duration;
  }
  return ref[inst.sink()];
}

}  // namespace

int h_cp(const RcpspInstance& inst, const std::vector<int>& topo_order,
         const TimedState& s) {
  std::vector<int> ref;
  return propagate_ref(inst, topo_order, s, ref);
}

int h_res(const RcpspInstance& inst, const TimedState& s) {
  int best = 0;
  for (int r = 0; r < inst.num_resources(); ++r) {
    long long workload = 0;
    for (int j = 0; j < inst.num_activities(); ++j) {
      const int u = inst.activities[j].demands[r];
      if (u == 0) continue;
      if (s.executing(j)) {
        workload += static_cast<long long>(s.residual(j)) * u;
      } else if (s.unstarted(j)) {
        workload += static_cast<long long>(inst.activities[j].duration) * u;
      }
    }
    const int c = inst.capacities[r];
    const int bound = static_cast<int>((workload + c - 1) / c);  // ceil
    best = std::max(best, bound);
  }
  return best;
}

int h_max(const RcpspInstance& inst, const std::vector<int>& topo_order,
          const TimedState& s) {
  return std::max(h_cp(inst, topo_order, s), h_res(inst, s));
}

HeuristicEvaluator::HeuristicEvaluator(const RcpspInstance& inst,
                                       HeuristicKind kind)
    : inst_(&inst), kind_(kind), topo_(topological_order(inst)) {}

int HeuristicEvaluator::operator()(const TimedState& s) {
  switch (kind_) {
    case HeuristicKind::Zero:
      return 0;
    case HeuristicKind::CriticalPath:
      return propagate_ref(*inst_, topo_, s, ref_);
    case HeuristicKind::ResourceLoad:
      return h_res(*inst_, s);
    case HeuristicKind::MaxOfBoth:
      return std::max(propagate_ref(*inst_, topo_, s, ref_), h_res(*inst_, s));
  }
  return 0;
}

}  // namespace ttpnr
