#include "ttpnr/psplib.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace ttpnr {

namespace {

std::string lower_trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  std::string out = s.substr(b, e - b + 1);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_integer(const std::string& tok) {
  if (tok.empty()) return false;
  size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  return true;
}

std::vector<long long> integer_tokens(const std::string& line) {
  std::vector<long long> out;
  for (const std::string& tok : split_tokens(line)) {
    if (is_integer(tok)) out.push_back(std::stoll(tok));
  }
  return out;
}

bool all_integer_tokens(const std::string& line) {
  const auto toks = split_tokens(line);
  if (toks.empty()) return false;
  return std::all_of(toks.begin(), toks.end(), is_integer);
}

struct SmReader {
  std::vector<std::string> lines;

  explicit SmReader(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  int line_no(size_t index) const { return static_cast<int>(index) + 1; }

  // Index of the first line whose trimmed lowercase form starts with any of
  // the given prefixes.
  std::optional<size_t> find_prefix(std::initializer_list<const char*> prefixes,
                                    size_t from = 0) const {
    for (size_t i = from; i < lines.size(); ++i) {
      const std::string norm = lower_trim(lines[i]);
      for (const char* p : prefixes) {
        if (norm.rfind(p, 0) == 0) return i;
      }
    }
    return std::nullopt;
  }

  // The first integer on the located line; used for the header counters.
  long long header_value(std::initializer_list<const char*> prefixes,
                         const char* what) const {
    const auto at = find_prefix(prefixes);
    if (!at) throw ParseError(0, std::string("missing header line: ") + what);
    const auto ints = integer_tokens(lines[*at]);
    if (ints.empty()) {
      throw ParseError(line_no(*at), std::string("no value on ") + what + " line");
    }
    return ints.front();
  }

  // Data rows of a section: the all-integer lines between the header and the
  // next separator ('*' line) or section-like header.
  std::vector<size_t> section_rows(size_t header_index) const {
    std::vector<size_t> rows;
    for (size_t i = header_index + 1; i < lines.size(); ++i) {
      const std::string norm = lower_trim(lines[i]);
      if (norm.rfind('*', 0) == 0) break;
      if (norm.empty()) continue;
      if (all_integer_tokens(lines[i])) rows.push_back(i);
    }
    return rows;
  }
};

}  // namespace

RcpspInstance parse_sm(std::istream& in) {
  SmReader reader(in);

  const long long njobs = reader.header_value({"jobs"}, "job count");
  if (njobs < 2 || njobs > 100000) {
    throw ParseError(0, "implausible job count: " + std::to_string(njobs));
  }
  const long long n_renewable =
      reader.header_value({"- renewable", "-renewable"}, "renewable resource count");
  if (n_renewable < 0) throw ParseError(0, "negative renewable resource count");
  for (auto [prefixes, label] :
       {std::pair{std::initializer_list<const char*>{"- nonrenewable", "-nonrenewable"},
                  "nonrenewable"},
        std::pair{std::initializer_list<const char*>{"- doubly", "-doubly"},
                  "doubly constrained"}}) {
    if (const auto at = reader.find_prefix(prefixes)) {
      const auto ints = integer_tokens(reader.lines[*at]);
      if (!ints.empty() && ints.front() != 0) {
        throw ParseError(reader.line_no(*at),
                         std::string(label) + " resources are unsupported");
      }
    }
  }

  const auto prec_at = reader.find_prefix({"precedence relation"});
  if (!prec_at) throw ParseError(0, "missing PRECEDENCE RELATIONS section");
  const auto req_at = reader.find_prefix({"requests/durations", "requests / durations"});
  if (!req_at) throw ParseError(0, "missing REQUESTS/DURATIONS section");
  const auto avail_at =
      reader.find_prefix({"resourceavailabilities", "resource availabilities"});
  if (!avail_at) throw ParseError(0, "missing RESOURCEAVAILABILITIES section");

  const int n = static_cast<int>(njobs);
  const int k = static_cast<int>(n_renewable);

  // PRECEDENCE RELATIONS: jobnr #modes #successors successor...
  std::vector<std::pair<int, int>> edges;
  {
    const auto rows = reader.section_rows(*prec_at);
    if (static_cast<int>(rows.size()) != n) {
      throw ParseError(reader.line_no(*prec_at),
                       "job count mismatch in precedence section: expected " +
                           std::to_string(n) + " rows, found " +
                           std::to_string(rows.size()));
    }
    std::vector<bool> seen(n + 1, false);
    for (size_t row : rows) {
      const auto ints = integer_tokens(reader.lines[row]);
      if (ints.size() < 3) {
        throw ParseError(reader.line_no(row), "malformed precedence row");
      }
      const long long job = ints[0], modes = ints[1], nsucc = ints[2];
      if (job < 1 || job > n) {
        throw ParseError(reader.line_no(row),
                         "job number out of range: " + std::to_string(job));
      }
      if (seen[job]) {
        throw ParseError(reader.line_no(row),
                         "duplicate precedence row for job " + std::to_string(job));
      }
      seen[job] = true;
      if (modes != 1) {
        throw ParseError(reader.line_no(row),
                         "multi-mode unsupported: job " + std::to_string(job) +
                             " declares " + std::to_string(modes) + " modes");
      }
      if (static_cast<long long>(ints.size()) != 3 + nsucc) {
        throw ParseError(reader.line_no(row),
                         "successor count mismatch: declared " +
                             std::to_string(nsucc) + ", found " +
                             std::to_string(ints.size() - 3));
      }
      for (size_t s = 3; s < ints.size(); ++s) {
        const long long succ = ints[s];
        if (succ < 1 || succ > n) {
          throw ParseError(reader.line_no(row),
                           "successor out of range: " + std::to_string(succ));
        }
        edges.emplace_back(static_cast<int>(job) - 1, static_cast<int>(succ) - 1);
      }
    }
  }

  // REQUESTS/DURATIONS: jobnr mode duration demand...
  std::vector<int> durations(n, 0);
  std::vector<std::vector<int>> demands(n, std::vector<int>(k, 0));
  {
    const auto rows = reader.section_rows(*req_at);
    if (static_cast<int>(rows.size()) != n) {
      throw ParseError(reader.line_no(*req_at),
                       "job count mismatch in requests section: expected " +
                           std::to_string(n) + " rows, found " +
                           std::to_string(rows.size()));
    }
    std::vector<bool> seen(n + 1, false);
    for (size_t row : rows) {
      const auto ints = integer_tokens(reader.lines[row]);
      if (static_cast<int>(ints.size()) != 3 + k) {
        throw ParseError(reader.line_no(row),
                         "malformed request row: expected " +
                             std::to_string(3 + k) + " values, found " +
                             std::to_string(ints.size()));
      }
      const long long job = ints[0], mode = ints[1], duration = ints[2];
      if (job < 1 || job > n) {
        throw ParseError(reader.line_no(row),
                         "job number out of range: " + std::to_string(job));
      }
      if (seen[job]) {
        throw ParseError(reader.line_no(row),
                         "duplicate request row for job " + std::to_string(job));
      }
      seen[job] = true;
      if (mode != 1) {
        throw ParseError(reader.line_no(row),
                         "multi-mode unsupported: job " + std::to_string(job) +
                             " uses mode " + std::to_string(mode));
      }
      if (duration < 0 || duration > 32000) {
        throw ParseError(reader.line_no(row),
                         "duration out of range: " + std::to_string(duration));
      }
      durations[job - 1] = static_cast<int>(duration);
      for (int r = 0; r < k; ++r) {
        if (ints[3 + r] < 0) {
          throw ParseError(reader.line_no(row), "negative resource demand");
        }
        demands[job - 1][r] = static_cast<int>(ints[3 + r]);
      }
    }
  }

  // RESOURCEAVAILABILITIES: k capacities, possibly spread over lines.
  std::vector<int> capacities;
  {
    for (size_t i = *avail_at + 1;
         i < reader.lines.size() && static_cast<int>(capacities.size()) < k; ++i) {
      const std::string norm = lower_trim(reader.lines[i]);
      if (norm.rfind('*', 0) == 0) break;
      if (!all_integer_tokens(reader.lines[i])) continue;  // column header
      for (long long v : integer_tokens(reader.lines[i])) {
        if (static_cast<int>(capacities.size()) == k) break;
        capacities.push_back(static_cast<int>(v));
      }
    }
    if (static_cast<int>(capacities.size()) != k) {
      throw ParseError(reader.line_no(*avail_at),
                       "expected " + std::to_string(k) + " capacities, found " +
                           std::to_string(capacities.size()));
    }
  }

  RcpspInstance inst =
      make_instance(durations, demands, std::move(edges), std::move(capacities));
  if (const auto bad = validate_instance(inst); !bad.empty()) {
    std::string joined;
    for (const std::string& b : bad) {
      if (!joined.empty()) joined += "; ";
      joined += b;
    }
    throw ParseError(0, "parsed instance is invalid: " + joined);
  }
  return inst;
}

RcpspInstance parse_sm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_sm(in);
}

std::string write_sm(const RcpspInstance& inst, const std::string& name) {
  const int n = inst.num_activities();
  const int k = inst.num_resources();
  int horizon = 0;
  for (const Activity& a : inst.activities) horizon += a.duration;

  std::ostringstream out;
  const std::string rule(72, '*');
  out << rule << "\n";
  out << "file with basedata            : " << name << "\n";
  out << "initial value random generator: 0\n";
  out << rule << "\n";
  out << "projects                      :  1\n";
  out << "jobs (incl. supersource/sink ):  " << n << "\n";
  out << "horizon                       :  " << horizon << "\n";
  out << "RESOURCES\n";
  out << "  - renewable                 :  " << k << "   R\n";
  out << "  - nonrenewable              :  0   N\n";
  out << "  - doubly constrained        :  0   D\n";
  out << rule << "\n";
  out << "PROJECT INFORMATION:\n";
  out << "pronr.  #jobs rel.date duedate tardcost  MPM-Time\n";
  out << std::setw(5) << 1 << std::setw(7) << (n - 2) << std::setw(9) << 0
      << std::setw(8) << horizon << std::setw(9) << 0 << std::setw(10)
      << horizon << "\n";
  out << rule << "\n";
  out << "PRECEDENCE RELATIONS:\n";
  out << "jobnr.    #modes  #successors   successors\n";
  for (int j = 0; j < n; ++j) {
    out << std::setw(4) << (j + 1) << std::setw(9) << 1 << std::setw(12)
        << inst.successors[j].size() << "        ";
    for (int s : inst.successors[j]) out << std::setw(4) << (s + 1);
    out << "\n";
  }
  out << rule << "\n";
  out << "REQUESTS/DURATIONS:\n";
  out << "jobnr. mode duration";
  for (int r = 0; r < k; ++r) out << "  R " << (r + 1);
  out << "\n" << std::string(72, '-') << "\n";
  for (int j = 0; j < n; ++j) {
    out << std::setw(4) << (j + 1) << std::setw(7) << 1 << std::setw(9)
        << inst.activities[j].duration << "   ";
    for (int r = 0; r < k; ++r) out << std::setw(5) << inst.activities[j].demands[r];
    out << "\n";
  }
  out << rule << "\n";
  out << "RESOURCEAVAILABILITIES:\n";
  out << " ";
  for (int r = 0; r < k; ++r) out << " R " << (r + 1) << " ";
  out << "\n" << " ";
  for (int r = 0; r < k; ++r) out << std::setw(4) << inst.capacities[r] << " ";
  out << "\n" << rule << "\n";
  return out.str();
}

void write_sm_file(const std::string& path, const RcpspInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << write_sm(inst, path);
}

OptimumTable parse_optima(std::istream& in, const std::string& set_prefix) {
  OptimumTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_tokens(line);
    if (toks.size() < 2 || !is_integer(toks[0]) || !is_integer(toks[1])) {
      continue;  // banner, header, or separator
    }
    if (toks.size() < 3 || !is_integer(toks[2])) {
      throw ParseError(line_no, "row lacks a makespan column");
    }
    const long long group = std::stoll(toks[0]);
    const long long number = std::stoll(toks[1]);
    const long long makespan = std::stoll(toks[2]);
    if (makespan <= 0) {
      throw ParseError(line_no, "makespan must be positive, got " +
                                    std::to_string(makespan));
    }
    const std::string key =
        set_prefix + std::to_string(group) + "_" + std::to_string(number);
    if (!table.emplace(key, static_cast<int>(makespan)).second) {
      throw ParseError(line_no, "duplicate entry for " + key);
    }
  }
  return table;
}

OptimumTable parse_optima_file(const std::string& path,
                               const std::string& set_prefix) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_optima(in, set_prefix);
}

}  // namespace ttpnr
