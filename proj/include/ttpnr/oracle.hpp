// Ground-truth machinery kept independent of the search stack: an exact
// brute-force optimum for small instances (every precedence-feasible
// activity sequence decoded with the serial schedule-generation scheme)
// and a seeded random-instance generator for property tests.

#pragma once

#include <cstdint>
#include <stdexcept>

#include "ttpnr/instance.hpp"
#include "ttpnr/schedule.hpp"

namespace ttpnr {

struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BruteForceResult {
  int makespan = 0;
  Schedule schedule;
};

inline constexpr int kOracleSizeCap = 9;

// Exact optimum by enumerating precedence-feasible sequences, decoding each
// with earliest precedence- and resource-feasible starts, and pruning
// branches that cannot beat the incumbent. Throws SizeCapError above
// max_real_activities.
BruteForceResult brute_force_optimum(const RcpspInstance& inst,
                                     int max_real_activities = kOracleSizeCap);

// Deterministic in seed: random DAG over n real activities, closed with
// dummies, demands drawn with the given density, capacities at least the
// largest single demand. Always passes validation.
RcpspInstance random_instance(uint32_t seed, int n_real_activities,
                              int n_resources, int max_duration,
                              double demand_density);

}  // namespace ttpnr
