#include "ttpnr/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ttpnr {

namespace {

struct BruteForceSearch {
  const RcpspInstance& inst;
  int n = 0;
  int horizon = 0;
  std::vector<std::vector<int>> usage;  // usage[r][t]
  std::vector<int> starts;
  std::vector<bool> scheduled;
  int best_makespan;
  std::vector<int> best_starts;

  explicit BruteForceSearch(const RcpspInstance& i)
      : inst(i), n(i.num_activities()) {
    for (const Activity& a : inst.activities) horizon += a.duration;
    usage.assign(inst.num_resources(), std::vector<int>(horizon + 1, 0));
    starts.assign(n, 0);
    scheduled.assign(n, false);
    scheduled[0] = true;  // dummy source at time 0
    best_makespan = horizon + 1;
  }

  // Earliest t >= lower where activity j fits into the remaining capacity
  // over its whole duration.
  int earliest_fit(int j, int lower) const {
    const Activity& a = inst.activities[j];
    int t = lower;
    while (true) {
      bool fits = true;
      for (int r = 0; r < inst.num_resources() && fits; ++r) {
        const int u = a.demands[r];
        if (u == 0) continue;
        for (int q = t; q < t + a.duration; ++q) {
          if (usage[r][q] + u > inst.capacities[r]) {
            fits = false;
            t = q + 1;  // jump past the blocking slot
            break;
          }
        }
      }
      if (fits) return t;
    }
  }

  void occupy(int j, int start, int sign) {
    const Activity& a = inst.activities[j];
    for (int r = 0; r < inst.num_resources(); ++r) {
      const int u = a.demands[r];
      if (u == 0) continue;
      for (int q = start; q < start + a.duration; ++q) usage[r][q] += sign * u;
    }
  }

  void descend(int placed, int partial_makespan) {
    if (partial_makespan >= best_makespan) return;  // cannot improve
    if (placed == n - 2) {
      best_makespan = partial_makespan;
      best_starts = starts;
      return;
    }
    for (int j = 1; j < n - 1; ++j) {
      if (scheduled[j]) continue;
      bool eligible = true;
      int lower = 0;
      for (int i : inst.predecessors[j]) {
        if (!scheduled[i]) {
          eligible = false;
          break;
        }
        lower = std::max(lower, starts[i] + inst.activities[i].duration);
      }
      if (!eligible) continue;
      const int start = earliest_fit(j, lower);
      starts[j] = start;
      scheduled[j] = true;
      occupy(j, start, +1);
      descend(placed + 1,
              std::max(partial_makespan, start + inst.activities[j].duration));
      occupy(j, start, -1);
      scheduled[j] = false;
    }
  }
};

}  // namespace

BruteForceResult brute_force_optimum(const RcpspInstance& inst,
                                     int max_real_activities) {
  if (inst.num_real_activities() > max_real_activities) {
    throw SizeCapError("brute force refused: " +
                       std::to_string(inst.num_real_activities()) +
                       " real activities exceed the cap of " +
                       std::to_string(max_real_activities));
  }

  BruteForceSearch search(inst);
  search.descend(0, 0);

  BruteForceResult out;
  Schedule& sched = out.schedule;
  sched.starts = search.best_starts.empty() ? std::vector<int>(inst.num_activities(), 0)
                                            : search.best_starts;
  sched.starts[0] = 0;
  int sink_start = 0;
  for (int i : inst.predecessors[inst.sink()]) {
    sink_start = std::max(sink_start, sched.starts[i] + inst.activities[i].duration);
  }
  sched.starts[inst.sink()] = sink_start;
  sched.makespan = sink_start;
  out.makespan = sink_start;
  return out;
}

RcpspInstance random_instance(uint32_t seed, int n_real_activities,
                              int n_resources, int max_duration,
                              double demand_density) {
  std::mt19937 rng(seed);
  // Draw bounded ints from the raw stream so results do not depend on the
  // standard library's distribution implementations.
  auto bounded = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint32_t>(hi - lo + 1));
  };

  const int n = n_real_activities;
  const int k = n_resources;
  std::vector<int> durations(n + 2, 0);
  std::vector<std::vector<int>> demands(n + 2, std::vector<int>(k, 0));
  for (int j = 1; j <= n; ++j) {
    durations[j] = bounded(0, max_duration);
    for (int r = 0; r < k; ++r) {
      if (bounded(0, 999) < static_cast<int>(demand_density * 1000)) {
        demands[j][r] = bounded(1, 4);
      }
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (bounded(0, 99) < 30) edges.emplace_back(i, j);
    }
  }

  std::vector<int> capacities(k, 1);
  for (int r = 0; r < k; ++r) {
    int max_demand = 1;
    for (int j = 1; j <= n; ++j) max_demand = std::max(max_demand, demands[j][r]);
    capacities[r] = max_demand + bounded(0, 2);
  }

  return close_dummies(make_instance(durations, demands, std::move(edges),
                                     std::move(capacities)));
}

}  // namespace ttpnr
