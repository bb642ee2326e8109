#include "ttpnr/astar.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>
#include <unordered_set>

namespace ttpnr {

std::string solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::TimedOut: return "timeout";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

struct Node {
  TimedState state;
  int32_t g = 0;
  int32_t h = 0;
  int32_t parent = -1;
  int16_t fired = -1;  // transition that produced this node
  int16_t finished = 0;
  int16_t active = 0;
};

struct OpenEntry {
  int32_t f = 0;
  int32_t g = 0;
  int16_t finished = 0;
  int16_t active = 0;
  uint32_t seq = 0;  // node pool index; doubles as the FIFO tie-break
};

// priority_queue pops the *largest* element, so this orders by "worse than".
struct WorseThan {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;
    if (a.finished != b.finished) return a.finished < b.finished;
    if (a.active != b.active) return a.active < b.active;
    return a.seq > b.seq;
  }
};

// The closed set stores node indices but hashes/compares their states, so
// each state is held once, inside its node.
struct NodeStateHash {
  const std::deque<Node>* pool;
  size_t operator()(uint32_t i) const { return StateHash{}((*pool)[i].state); }
};
struct NodeStateEq {
  const std::deque<Node>* pool;
  bool operator()(uint32_t a, uint32_t b) const {
    return (*pool)[a].state == (*pool)[b].state;
  }
};

void count_statuses(const TimedState& s, int16_t& finished, int16_t& active) {
  int done = 0, executing = 0;
  for (StatusCode code : s.status) {
    done += code == 0;
    executing += code > 0;
  }
  finished = static_cast<int16_t>(done);
  active = static_cast<int16_t>(executing);
}

SolveResult solve_impl(const TtpnrNet& net, const RcpspInstance& inst,
                       HeuristicKind heuristic, const SolveBudget& budget,
                       std::vector<TraceEntry>* trace, size_t trace_limit) {
  const auto t_start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t_start)
        .count();
  };

  SolveResult result;
  SearchStats& stats = result.stats;
  HeuristicEvaluator heval(inst, heuristic);

  std::deque<Node> nodes;
  std::unordered_set<uint32_t, NodeStateHash, NodeStateEq> closed(
      16, NodeStateHash{&nodes}, NodeStateEq{&nodes});
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, WorseThan> open;

  {
    Node root;
    root.state = initial_state(net);
    root.g = 0;
    root.h = heval(root.state);
    count_statuses(root.state, root.finished, root.active);
    nodes.push_back(std::move(root));
    open.push({nodes[0].g + nodes[0].h, nodes[0].g, nodes[0].finished,
               nodes[0].active, 0});
    stats.generated = 1;
    stats.peak_open = 1;
  }

  std::vector<int> enabled;
  uint64_t iterations = 0;
  while (!open.empty()) {
    if ((++iterations & 1023u) == 0 && elapsed() > budget.timeout_s) {
      result.status = SolveStatus::TimedOut;
      stats.wall_time_s = elapsed();
      return result;
    }
    if (budget.node_limit > 0 && stats.expanded >= budget.node_limit) {
      result.status = SolveStatus::TimedOut;
      stats.wall_time_s = elapsed();
      return result;
    }

    const OpenEntry top = open.top();
    open.pop();
    Node& node = nodes[top.seq];

    if (auto it = closed.find(top.seq); it != closed.end()) {
      // Stale copy of an already expanded state.
      ++stats.duplicates_pruned;
      if (node.g < nodes[*it].g) ++stats.reopen_violations;
      continue;
    }
    closed.insert(top.seq);
    stats.peak_closed = std::max<uint64_t>(stats.peak_closed, closed.size());

    if (trace && trace->size() < trace_limit) {
      trace->push_back(
          {canonical_key(node.state), node.g, node.h, node.g + node.h});
      if (trace->size() >= trace_limit) {
        stats.wall_time_s = elapsed();
        return result;  // trace-only run; outcome is irrelevant
      }
    }

    if (is_goal(net, node.state)) {
      Schedule sched;
      sched.starts.assign(net.num_activities(), 0);
      sched.makespan = node.g;
      for (const Node* cur = &node; cur->parent >= 0;
           cur = &nodes[cur->parent]) {
        sched.starts[net.transitions[cur->fired].activity] = cur->g;
      }
      result.status = SolveStatus::Solved;
      result.schedule = std::move(sched);
      stats.wall_time_s = elapsed();
      return result;
    }

    ++stats.expanded;
    enabled_transitions(net, node.state, enabled);
    const int32_t parent_g = node.g;
    const int32_t parent_h = node.h;
    for (int t : enabled) {
      FireResult fired = fire(net, node.state, t);
      ++stats.generated;

      const uint32_t candidate = static_cast<uint32_t>(nodes.size());
      Node child;
      child.state = std::move(fired.next);
      child.g = parent_g + fired.delta;
      nodes.push_back(std::move(child));
      if (auto it = closed.find(candidate); it != closed.end()) {
        ++stats.duplicates_pruned;
        if (nodes[candidate].g < nodes[*it].g) ++stats.reopen_violations;
        nodes.pop_back();
        continue;
      }

      Node& kept = nodes[candidate];
      kept.h = cached_child_h(parent_h, fired.delta,
                              [&] { return heval(kept.state); });
      if (fired.delta == 0) ++stats.zero_cost_cache_hits;
      kept.parent = static_cast<int32_t>(top.seq);
      kept.fired = static_cast<int16_t>(t);
      count_statuses(kept.state, kept.finished, kept.active);
      open.push({kept.g + kept.h, kept.g, kept.finished, kept.active,
                 candidate});
      stats.peak_open = std::max<uint64_t>(stats.peak_open, open.size());
    }
  }

  result.status = SolveStatus::Infeasible;
  stats.wall_time_s = elapsed();
  return result;
}

}  // namespace

SolveResult solve(const TtpnrNet& net, const RcpspInstance& inst,
                  HeuristicKind heuristic, const SolveBudget& budget) {
  return solve_impl(net, inst, heuristic, budget, nullptr, 0);
}

std::vector<TraceEntry> expand_trace(const TtpnrNet& net,
                                     const RcpspInstance& inst,
                                     HeuristicKind heuristic, size_t limit) {
  std::vector<TraceEntry> trace;
  if (limit == 0) return trace;
  solve_impl(net, inst, heuristic, {}, &trace, limit);
  return trace;
}

}  // namespace ttpnr
