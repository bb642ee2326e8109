#include "ttpnr/instance.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ttpnr {

void RcpspInstance::finalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const int n = num_activities();
  successors.assign(n, {});
  predecessors.assign(n, {});
  for (const auto& [i, j] : edges) {
    if (i >= 0 && i < n && j >= 0 && j < n) {
      successors[i].push_back(j);
      predecessors[j].push_back(i);
    }
  }
}

RcpspInstance make_instance(const std::vector<int>& durations,
                            const std::vector<std::vector<int>>& demands,
                            std::vector<std::pair<int, int>> edges,
                            std::vector<int> capacities) {
  RcpspInstance inst;
  inst.activities.resize(durations.size());
  for (size_t j = 0; j < durations.size(); ++j) {
    inst.activities[j].id = static_cast<int>(j);
    inst.activities[j].duration = durations[j];
    inst.activities[j].demands =
        j < demands.size() ? demands[j] : std::vector<int>(capacities.size(), 0);
  }
  inst.edges = std::move(edges);
  inst.capacities = std::move(capacities);
  inst.finalize();
  return inst;
}

namespace {

// Kahn pass used by both the validator and topological_order. Returns the
// processed order; shorter than num_activities() iff there is a cycle.
std::vector<int> kahn_order(const RcpspInstance& inst) {
  const int n = inst.num_activities();
  std::vector<int> indegree(n, 0);
  for (const auto& [i, j] : inst.edges) {
    (void)i;
    ++indegree[j];
  }
  std::deque<int> queue;
  for (int j = 0; j < n; ++j) {
    if (indegree[j] == 0) queue.push_back(j);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!queue.empty()) {
    const int j = queue.front();
    queue.pop_front();
    order.push_back(j);
    for (int k : inst.successors[j]) {  // successors are in ascending id order
      if (--indegree[k] == 0) queue.push_back(k);
    }
  }
  return order;
}

std::string find_cycle_string(const RcpspInstance& inst,
                              const std::vector<int>& order) {
  const int n = inst.num_activities();
  std::vector<bool> removed(n, false);
  for (int j : order) removed[j] = true;
  int start = -1;
  for (int j = 0; j < n && start < 0; ++j) {
    if (!removed[j]) start = j;
  }
  if (start < 0) return "cycle";
  // Every node Kahn could not remove keeps an unremoved predecessor, so
  // walking predecessors from any leftover node must revisit a node.
  std::vector<int> path;
  std::vector<int> seen_at(n, -1);
  int cur = start;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    for (int p : inst.predecessors[cur]) {
      if (!removed[p]) {
        cur = p;
        break;
      }
    }
  }
  // path[i+1] precedes path[i]; cur precedes path.back(). Emit forward.
  std::ostringstream out;
  out << "cycle: " << cur;
  for (int p = static_cast<int>(path.size()) - 1; p >= seen_at[cur]; --p) {
    out << " -> " << path[p];
  }
  return out.str();
}

}  // namespace

std::vector<std::string> validate_instance(const RcpspInstance& inst) {
  std::vector<std::string> bad;
  std::ostringstream msg;
  auto flag = [&](auto&&... parts) {
    msg.str("");
    (msg << ... << parts);
    bad.push_back(msg.str());
  };

  const int n = inst.num_activities();
  const int k = inst.num_resources();
  if (n < 2) {
    flag("instance must contain the dummy source and sink activities");
    return bad;
  }

  for (int r = 0; r < k; ++r) {
    if (inst.capacities[r] <= 0) flag("capacity of resource ", r, " must be positive");
  }

  for (int j = 0; j < n; ++j) {
    const Activity& a = inst.activities[j];
    if (a.id != j) flag("activity at index ", j, " carries id ", a.id);
    if (a.duration < 0) flag("negative duration at activity ", j);
    if (a.duration > 32000) flag("duration of activity ", j, " exceeds supported range");
    if (static_cast<int>(a.demands.size()) != k) {
      flag("activity ", j, " has ", a.demands.size(), " demands for ", k, " resources");
      continue;
    }
    for (int r = 0; r < k; ++r) {
      if (a.demands[r] < 0) flag("negative demand at activity ", j, ", resource ", r);
      if (r < static_cast<int>(inst.capacities.size()) && a.demands[r] > inst.capacities[r]) {
        flag("demand of activity ", j, " for resource ", r, " exceeds capacity (",
             a.demands[r], " > ", inst.capacities[r], ")");
      }
    }
  }

  for (int d : {inst.source(), inst.sink()}) {
    const Activity& a = inst.activities[d];
    if (a.duration != 0) flag("dummy activity ", d, " must have zero duration");
    for (int r = 0; r < static_cast<int>(a.demands.size()); ++r) {
      if (a.demands[r] != 0) flag("dummy activity ", d, " must have zero demands");
    }
  }

  bool edges_ok = true;
  for (const auto& [i, j] : inst.edges) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      flag("edge (", i, ", ", j, ") references an unknown activity");
      edges_ok = false;
    } else if (i == j) {
      flag("self-loop at ", i);
      edges_ok = false;
    }
  }
  if (!edges_ok) return bad;

  const std::vector<int> order = kahn_order(inst);
  if (static_cast<int>(order.size()) != n) {
    flag(find_cycle_string(inst, order));
    return bad;
  }

  // Reachability of every real activity from the source and to the sink.
  std::vector<bool> from_source(n, false), to_sink(n, false);
  from_source[inst.source()] = true;
  for (auto it = order.begin(); it != order.end(); ++it) {
    if (!from_source[*it]) continue;
    for (int k2 : inst.successors[*it]) from_source[k2] = true;
  }
  to_sink[inst.sink()] = true;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!to_sink[*it]) continue;
    for (int p : inst.predecessors[*it]) to_sink[p] = true;
  }
  for (int j = 1; j < n - 1; ++j) {
    if (!from_source[j]) flag("activity ", j, " is unreachable from the source");
    if (!to_sink[j]) flag("activity ", j, " cannot reach the sink");
  }

  return bad;
}

RcpspInstance close_dummies(const RcpspInstance& inst) {
  RcpspInstance out = inst;
  const int n = out.num_activities();
  if (n < 2) return out;
  const int sink = out.sink();
  for (int j = 1; j < sink; ++j) {
    if (out.predecessors[j].empty()) out.edges.emplace_back(0, j);
    if (out.successors[j].empty()) out.edges.emplace_back(j, sink);
  }
  if (out.predecessors[sink].empty() && n == 2) out.edges.emplace_back(0, sink);
  out.finalize();
  return out;
}

std::vector<int> topological_order(const RcpspInstance& inst) {
  const std::vector<int> order = kahn_order(inst);
  if (static_cast<int>(order.size()) != inst.num_activities()) {
    throw CycleError(find_cycle_string(inst, order));
  }
  return order;
}

}  // namespace ttpnr
