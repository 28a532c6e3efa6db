#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "vbs/model.hpp"

namespace vbs {

struct ParseOptions {
  bool check_well_defined = false;
  double tolerance = 1e-9;
};

// Text model format, line oriented; '#' starts a comment.
//   variable <id> decision|random <state> [<state>...]
//   precede <x> <y>
//   utility <name> over [<id>...] values <real>...
//   potential <name> over [<id>...] values <real>...
// Domains must list variables in declaration order; values fill the table
// with the last domain variable varying fastest.
DecisionProblem parse_model(std::string_view text,
                            const ParseOptions& options = {});

DecisionProblem load_model(const std::string& path,
                           const ParseOptions& options = {});

// Inverse of parse_model up to comments/whitespace: parsing the output
// reproduces the problem exactly (values round-trip bit for bit).
std::string serialize_model(const DecisionProblem& problem);

// The `vbs` command line: check / solve / count / order / oracle.
// Exit status 0 = ok, 1 = validation or solve failure, 2 = usage or syntax.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vbs
