// A start-time assignment for every activity. The makespan is the start of
// the dummy sink. The validator checks the two feasibility conditions:
// no activity starts before a predecessor finishes, and no resource is ever
// used beyond its capacity.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ttpnr/instance.hpp"

namespace ttpnr {

struct Schedule {
  std::vector<int> starts;  // index by activity id
  int makespan = 0;

  bool operator==(const Schedule&) const = default;
};

// Empty result means feasible. Throws std::invalid_argument when the
// schedule does not assign a start to every activity.
std::vector<std::string> validate_schedule(const RcpspInstance& inst,
                                           const Schedule& sched);

// {"makespan": M, "starts": {"<activity id>": S, ...}}
std::string schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const std::string& text, int num_activities);
Schedule schedule_from_json_file(const std::string& path, int num_activities);
void write_schedule_file(const std::string& path, const Schedule& sched);

}  // namespace ttpnr
