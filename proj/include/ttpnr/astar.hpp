// A* over the reachability graph of the net. Nodes are expanded by minimal
// f = g + h; ties prefer higher g, then more finished activities, then more
// executing activities, then insertion order, which drives the search
// depth-first through equal-f plateaus. Consistency of the bounds makes the
// first expansion of a state optimal, so expanded states are never reopened;
// duplicate entries are pruned against the closed set and stale open entries
// are skipped when popped.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttpnr/heuristics.hpp"
#include "ttpnr/instance.hpp"
#include "ttpnr/net.hpp"
#include "ttpnr/schedule.hpp"
#include "ttpnr/state.hpp"

namespace ttpnr {

enum class SolveStatus { Solved, TimedOut, Infeasible };

std::string solve_status_name(SolveStatus status);

struct SearchStats {
  uint64_t expanded = 0;
  uint64_t generated = 0;
  uint64_t duplicates_pruned = 0;  // closed hits at generation + stale pops
  uint64_t zero_cost_cache_hits = 0;
  uint64_t peak_open = 0;
  uint64_t peak_closed = 0;
  uint64_t reopen_violations = 0;  // closed state seen again with lower g
  double wall_time_s = 0;
};

struct SolveBudget {
  double timeout_s = 300.0;
  uint64_t node_limit = 0;  // 0 = unlimited expansions
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  Schedule schedule;  // meaningful only when Solved
  SearchStats stats;
};

SolveResult solve(const TtpnrNet& net, const RcpspInstance& inst,
                  HeuristicKind heuristic, const SolveBudget& budget = {});

struct TraceEntry {
  std::string key;  // canonical state key
  int g = 0;
  int h = 0;
  int f = 0;
};

// The first `limit` expansions with their priority data, in expansion order.
std::vector<TraceEntry> expand_trace(const TtpnrNet& net,
                                     const RcpspInstance& inst,
                                     HeuristicKind heuristic, size_t limit);

}  // namespace ttpnr
