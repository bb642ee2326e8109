#include "ttpnr/schedule.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ttpnr {

std::vector<std::string> validate_schedule(const RcpspInstance& inst,
                                           const Schedule& sched) {
  const int n = inst.num_activities();
  if (static_cast<int>(sched.starts.size()) != n) {
    throw std::invalid_argument("schedule assigns " +
                                std::to_string(sched.starts.size()) +
                                " start times for " + std::to_string(n) +
                                " activities");
  }

  std::vector<std::string> bad;
  std::ostringstream msg;
  auto flag = [&](auto&&... parts) {
    msg.str("");
    (msg << ... << parts);
    bad.push_back(msg.str());
  };

  for (int j = 0; j < n; ++j) {
    if (sched.starts[j] < 0) flag("activity ", j, " starts at negative time");
  }
  if (sched.starts[0] != 0) flag("dummy source must start at time 0");
  if (sched.makespan != sched.starts[inst.sink()]) {
    flag("makespan field (", sched.makespan, ") differs from sink start (",
         sched.starts[inst.sink()], ")");
  }

  for (const auto& [i, j] : inst.edges) {
    const int finish_i = sched.starts[i] + inst.activities[i].duration;
    if (sched.starts[j] < finish_i) {
      flag("precedence violated: activity ", j, " starts at ", sched.starts[j],
           " before activity ", i, " finishes at ", finish_i);
    }
  }

  int end = 0;
  for (int j = 0; j < n; ++j) {
    end = std::max(end, sched.starts[j] + inst.activities[j].duration);
  }
  for (int r = 0; r < inst.num_resources(); ++r) {
    std::vector<int> usage(end + 1, 0);
    for (int j = 0; j < n; ++j) {
      const int u = inst.activities[j].demands[r];
      if (u == 0) continue;
      for (int t = sched.starts[j];
           t < sched.starts[j] + inst.activities[j].duration; ++t) {
        usage[t] += u;
      }
    }
    for (int t = 0; t <= end; ++t) {
      if (usage[t] > inst.capacities[r]) {
        flag("resource ", r, " over capacity at time ", t, " (usage ",
             usage[t], " > ", inst.capacities[r], ")");
      }
    }
  }

  return bad;
}

std::string schedule_to_json(const Schedule& sched) {
  nlohmann::json starts = nlohmann::json::object();
  for (size_t j = 0; j < sched.starts.size(); ++j) {
    starts[std::to_string(j)] = sched.starts[j];
  }
  nlohmann::json doc;
  doc["makespan"] = sched.makespan;
  doc["starts"] = starts;
  return doc.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text, int num_activities) {
  nlohmann::json doc = nlohmann::json::parse(text);
  Schedule sched;
  sched.makespan = doc.at("makespan").get<int>();
  const auto& starts = doc.at("starts");
  sched.starts.resize(num_activities);
  for (int j = 0; j < num_activities; ++j) {
    const std::string key = std::to_string(j);
    if (!starts.contains(key)) {
      throw std::invalid_argument("schedule is missing activity " + key);
    }
    sched.starts[j] = starts.at(key).get<int>();
  }
  return sched;
}

Schedule schedule_from_json_file(const std::string& path, int num_activities) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return schedule_from_json(buf.str(), num_activities);
}

void write_schedule_file(const std::string& path, const Schedule& sched) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << schedule_to_json(sched);
}

}  // namespace ttpnr
