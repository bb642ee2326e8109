// Reader and writer for the PSPLIB single-mode `.sm` text format, plus a
// reader for the published optimum tables. Parsing is line-oriented and
// whitespace tolerant; section headers are matched case-insensitively on
// prefixes because the library files vary in padding.

#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "ttpnr/instance.hpp"

namespace ttpnr {

struct ParseError : std::runtime_error {
  int line;  // 1-based; 0 when no single line is at fault
  ParseError(int line_number, const std::string& message)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + message
                               : message),
        line(line_number) {}
};

// Jobs are remapped from PSPLIB's 1-based numbering to 0-based ids with the
// dummy source at 0 and the dummy sink at n+1. Only renewable resources are
// supported; files declaring nonrenewable or doubly constrained resources,
// or any multi-mode job, are rejected. The horizon field is ignored.
RcpspInstance parse_sm(std::istream& in);
RcpspInstance parse_sm_file(const std::string& path);

// Canonical `.sm` serialization; parse_sm(write_sm(x)) == x.
std::string write_sm(const RcpspInstance& inst,
                     const std::string& name = "instance");
void write_sm_file(const std::string& path, const RcpspInstance& inst);

// instance name -> published optimal makespan
using OptimumTable = std::map<std::string, int>;

// Rows of (parameter group, instance number, makespan [, ...]) become
// entries keyed "<set_prefix><group>_<number>". Non-tabular lines are
// ignored; a row with a broken makespan column or a duplicate key is an
// error.
OptimumTable parse_optima(std::istream& in, const std::string& set_prefix = "j30");
OptimumTable parse_optima_file(const std::string& path,
                               const std::string& set_prefix = "j30");

}  // namespace ttpnr
