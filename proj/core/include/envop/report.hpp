#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "envop/parser.hpp"

namespace envop {

/// Options shared by all verbs; read from CLI flags only.
struct RunOptions {
  int arity = 0;             // 0 = verb default
  int weight = 0;            // 0 = verb default
  std::string order;         // generator permutation "a>b>c", or a
                             // truncation order for the series verbs
  std::string field = "rational";  // "rational" or a prime
  std::string series;        // input series text (series verbs)
  std::string dual;          // candidate dual series text
  std::string demo_name;     // subject of the demo verb
};

/// A command result: everything in `lines` (the plain-text form) is
/// derived from `body` (the machine-readable form).
struct Report {
  std::string command;
  std::map<std::string, std::string> config;
  nlohmann::json body;
  std::vector<std::string> lines;
};

/// Dispatches a verb. `doc` may be null for the series, raney, and demo
/// verbs. Throws input_error / internal_error; never exits.
Report run_command(const std::string& verb, const PresentationDocument* doc,
                   const RunOptions& opt);

std::string emit_text(const Report& r);
std::string emit_json(const Report& r);

}  // namespace envop
