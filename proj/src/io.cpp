#include "vbs/io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "vbs/errors.hpp"

namespace vbs {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

double parse_real(const std::string& token, std::size_t line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + token.size())
    throw ParseError("expected a number, got '" + token + "'", line_no);
  return v;
}

}  // namespace

DecisionProblem parse_model(std::string_view text, const ParseOptions& options) {
  std::vector<Variable> vars;
  std::vector<Valuation> vals;
  PrecedenceRelation prec;
  std::map<std::string, VarIndex, std::less<>> by_id;

  auto resolve = [&](const std::string& id, std::size_t line_no) {
    auto it = by_id.find(id);
    if (it == by_id.end())
      throw ParseError("unknown variable '" + id + "'", line_no);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;

    if (tok[0] == "variable") {
      if (tok.size() < 4)
        throw ParseError("variable needs an id, a kind and at least one state",
                         line_no);
      Variable v;
      v.id = tok[1];
      if (tok[2] == "decision")
        v.kind = VarKind::Decision;
      else if (tok[2] == "random")
        v.kind = VarKind::Random;
      else
        throw ParseError("kind must be 'decision' or 'random', got '" + tok[2] +
                             "'",
                         line_no);
      v.frame.assign(tok.begin() + 3, tok.end());
      v.index = vars.size();
      if (!by_id.emplace(v.id, v.index).second)
        throw ParseError("variable '" + v.id + "' declared twice", line_no);
      vars.push_back(std::move(v));
    } else if (tok[0] == "precede") {
      if (tok.size() != 3)
        throw ParseError("precede needs exactly two variables", line_no);
      prec.arcs.emplace_back(resolve(tok[1], line_no), resolve(tok[2], line_no));
    } else if (tok[0] == "utility" || tok[0] == "potential") {
      if (tok.size() < 3 || tok[2] != "over")
        throw ParseError(tok[0] + " needs a name followed by 'over'", line_no);
      Valuation v;
      v.kind = tok[0] == "utility" ? ValuationKind::Utility
                                   : ValuationKind::Potential;
      v.name = tok[1];
      std::size_t k = 3;
      for (; k < tok.size() && tok[k] != "values"; ++k) {
        VarIndex idx = resolve(tok[k], line_no);
        if (!v.domain.empty() && idx <= v.domain.back())
          throw ParseError(
              "domain of '" + v.name + "' must list distinct variables in "
              "declaration order",
              line_no);
        v.domain.push_back(idx);
      }
      if (k == tok.size())
        throw ParseError("missing 'values' in " + tok[0] + " '" + v.name + "'",
                         line_no);
      for (++k; k < tok.size(); ++k)
        v.values.push_back(parse_real(tok[k], line_no));
      std::size_t want = frame_size(vars, v.domain);
      if (v.values.size() != want)
        throw ParseError("'" + v.name + "' needs " + std::to_string(want) +
                             " values, got " + std::to_string(v.values.size()),
                         line_no);
      if (v.kind == ValuationKind::Potential)
        for (double x : v.values)
          if (!(x >= 0.0 && x <= 1.0))
            throw ParseError("potential value " + format_double(x) +
                                 " outside [0, 1]",
                             line_no);
      vals.push_back(std::move(v));
    } else {
      throw ParseError("unknown statement '" + tok[0] + "'", line_no);
    }
  }

  DecisionProblem problem(std::move(vars), std::move(vals), std::move(prec));
  if (options.check_well_defined) check_well_defined(problem, options.tolerance);
  return problem;
}

DecisionProblem load_model(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), options);
}

std::string serialize_model(const DecisionProblem& problem) {
  std::ostringstream out;
  for (const Variable& v : problem.variables()) {
    out << "variable " << v.id
        << (v.kind == VarKind::Decision ? " decision" : " random");
    for (const std::string& s : v.frame) out << ' ' << s;
    out << '\n';
  }
  if (!problem.precedence().arcs.empty()) out << '\n';
  for (auto [x, y] : problem.precedence().arcs)
    out << "precede " << problem.variable(x).id << ' '
        << problem.variable(y).id << '\n';
  out << '\n';
  std::size_t unnamed = 0;
  for (const Valuation& v : problem.valuations()) {
    out << (v.kind == ValuationKind::Utility ? "utility " : "potential ")
        << (v.name.empty() ? "_" + std::to_string(unnamed++) : v.name)
        << " over";
    for (VarIndex i : v.domain) out << ' ' << problem.variable(i).id;
    out << " values";
    for (double x : v.values) out << ' ' << format_double(x);
    out << '\n';
  }
  return out.str();
}

}  // namespace vbs
