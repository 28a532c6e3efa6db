#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vbs/algebra.hpp"
#include "vbs/errors.hpp"
#include "vbs/fusion.hpp"
#include "vbs/io.hpp"
#include "vbs/oracle.hpp"

namespace vbs {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string counter_line(const OperationCounter& c) {
  return "add " + std::to_string(c.additions) + " mul " +
         std::to_string(c.multiplications) + " cmp " +
         std::to_string(c.comparisons) + " div " + std::to_string(c.divisions);
}

nlohmann::json counter_json(const OperationCounter& c) {
  return {{"add", c.additions},
          {"mul", c.multiplications},
          {"cmp", c.comparisons},
          {"div", c.divisions}};
}

std::vector<std::string> id_list(const DecisionProblem& p, const VarSet& s) {
  std::vector<std::string> out;
  for (VarIndex v : s) out.push_back(p.variable(v).id);
  return out;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& s : parts) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

DeletionSequence sequence_from_flag(const DecisionProblem& problem,
                                    const std::string& flag) {
  DeletionSequence seq;
  std::string id;
  for (char c : flag + ",") {
    if (c != ',') {
      id += c;
      continue;
    }
    if (id.empty()) continue;
    auto v = problem.find_variable(id);
    if (!v) throw UnknownVariable("no variable named " + id + " in --order");
    seq.order.push_back(*v);
    id.clear();
  }
  return seq;
}

nlohmann::json strategy_json(const DecisionProblem& p, const Strategy& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const SolutionTable& t : s.tables) {
    const Variable& d = p.variable(t.decision);
    nlohmann::json choices = nlohmann::json::array();
    for (std::size_t c : t.choices) choices.push_back(d.frame[c]);
    out.push_back({{"decision", d.id},
                   {"over", id_list(p, t.domain)},
                   {"choices", choices}});
  }
  return out;
}

void print_strategy(std::ostream& out, const DecisionProblem& p,
                    const Strategy& s) {
  for (const SolutionTable& t : s.tables) {
    const Variable& d = p.variable(t.decision);
    out << "strategy " << d.id << " over "
        << (t.domain.empty() ? "<>" : joined(id_list(p, t.domain))) << "\n";
    for (std::size_t i = 0; i < t.choices.size(); ++i) {
      Configuration c{t.domain, unflatten(p.variables(), t.domain, i)};
      out << "  " << format_configuration(p.variables(), c) << " -> "
          << d.frame[t.choices[i]] << "\n";
    }
  }
}

int cmd_check(const std::string& path, double tolerance, bool json,
              std::ostream& out) {
  load_model(path, {.check_well_defined = true, .tolerance = tolerance});
  if (json)
    out << nlohmann::json{{"ok", true}}.dump() << "\n";
  else
    out << "ok\n";
  return 0;
}

int cmd_solve(const std::string& path, const std::string& order, bool json,
              std::ostream& out) {
  DecisionProblem problem = load_model(path, {.check_well_defined = true});
  std::optional<DeletionSequence> seq;
  if (!order.empty()) seq = sequence_from_flag(problem, order);
  SolveReport report = solve(problem, std::move(seq));

  std::vector<std::string> ids = id_list(problem, report.sequence.order);
  if (json) {
    out << nlohmann::json{{"meu", report.meu},
                          {"counter", counter_json(report.counter)},
                          {"order", ids},
                          {"strategy", strategy_json(problem, report.strategy)}}
               .dump()
        << "\n";
    return 0;
  }
  out << "MEU " << fixed6(report.meu) << " / " << counter_line(report.counter)
      << "\n";
  out << "order " << joined(ids) << "\n";
  print_strategy(out, problem, report.strategy);
  return 0;
}

int cmd_count(const std::string& path, const std::string& order, bool json,
              std::ostream& out) {
  DecisionProblem problem = load_model(path, {.check_well_defined = true});
  std::optional<DeletionSequence> seq;
  if (!order.empty()) seq = sequence_from_flag(problem, order);
  SolveReport report = solve(problem, std::move(seq));
  if (json)
    out << counter_json(report.counter).dump() << "\n";
  else
    out << counter_line(report.counter) << "\n";
  return 0;
}

int cmd_order(const std::string& path, bool json, std::ostream& out) {
  DecisionProblem problem = load_model(path);
  DeletionSequence seq = one_step_look_ahead(problem);
  VarSet all;
  for (const Variable& v : problem.variables()) all.push_back(v.index);
  VarSet first = candidate_next(problem, all);
  if (json) {
    out << nlohmann::json{{"order", id_list(problem, seq.order)},
                          {"first_candidates", id_list(problem, first)}}
               .dump()
        << "\n";
    return 0;
  }
  out << joined(id_list(problem, seq.order)) << "\n";
  out << "first " << joined(id_list(problem, first)) << "\n";
  return 0;
}

int cmd_oracle(const std::string& path, std::uint64_t cap, bool json,
               std::ostream& out) {
  DecisionProblem problem = load_model(path, {.check_well_defined = true});
  SolveReport fusion = solve(problem);
  double global = global_solve(problem);
  BruteForceResult brute = brute_force_solve(problem, cap);
  double replay = evaluate_strategy(problem, fusion.strategy);
  if (json) {
    out << nlohmann::json{{"fusion", fusion.meu},
                          {"global", global},
                          {"brute", brute.meu},
                          {"strategy_eval", replay},
                          {"delta_global", global - fusion.meu},
                          {"delta_brute", brute.meu - fusion.meu},
                          {"delta_strategy", replay - fusion.meu}}
               .dump()
        << "\n";
    return 0;
  }
  out << "fusion " << fixed6(fusion.meu) << "\n";
  out << "global " << fixed6(global) << " delta "
      << fixed6(global - fusion.meu) << "\n";
  out << "brute " << fixed6(brute.meu) << " delta "
      << fixed6(brute.meu - fusion.meu) << "\n";
  out << "strategy " << fixed6(replay) << " delta "
      << fixed6(replay - fusion.meu) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"solver for symmetric Bayesian decision problems"};
  app.require_subcommand(1);

  std::string path, order;
  double tolerance = 1e-9;
  std::uint64_t cap = 1000000;
  bool json = false;

  CLI::App* check = app.add_subcommand("check", "validate a model file");
  check->add_option("file", path)->required();
  check->add_option("--tolerance", tolerance, "well-definedness tolerance");
  check->add_flag("--json", json);

  CLI::App* solve = app.add_subcommand("solve", "fusion solve: MEU + strategy");
  solve->add_option("file", path)->required();
  solve->add_option("--order", order, "comma-separated deletion sequence");
  solve->add_flag("--json", json);

  CLI::App* count = app.add_subcommand("count", "operation counts of a solve");
  count->add_option("file", path)->required();
  count->add_option("--order", order, "comma-separated deletion sequence");
  count->add_flag("--json", json);

  CLI::App* ord = app.add_subcommand("order", "heuristic deletion sequence");
  ord->add_option("file", path)->required();
  ord->add_flag("--json", json);

  CLI::App* oracle =
      app.add_subcommand("oracle", "cross-check the solver against oracles");
  oracle->add_option("file", path)->required();
  oracle->add_option("--cap", cap, "strategy enumeration cap");
  oracle->add_flag("--json", json);

  std::vector<const char*> argv{"vbs"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(path, tolerance, json, out);
    if (solve->parsed()) return cmd_solve(path, order, json, out);
    if (count->parsed()) return cmd_count(path, order, json, out);
    if (ord->parsed()) return cmd_order(path, json, out);
    if (oracle->parsed()) return cmd_oracle(path, cap, json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace vbs
