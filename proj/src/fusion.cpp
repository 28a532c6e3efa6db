#include "vbs/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vbs/algebra.hpp"
#include "vbs/errors.hpp"

namespace vbs {

FuseResult fuse(const DecisionProblem& problem,
                const std::vector<Valuation>& items, VarIndex x,
                OperationCounter& counter) {
  const std::vector<Variable>& vars = problem.variables();
  std::vector<Valuation> bearing, rest;
  for (const Valuation& v : items) {
    if (std::binary_search(v.domain.begin(), v.domain.end(), x))
      bearing.push_back(v);
    else
      rest.push_back(v);
  }
  if (bearing.empty())
    throw VariableNotInDomain("no valuation bears on " + vars[x].id);

  FuseResult out;
  Valuation combined = combine_many(vars, std::move(bearing), counter);
  if (vars[x].kind == VarKind::Decision) {
    if (combined.kind != ValuationKind::Utility)
      throw DecisionUnderPotentialOnly(
          "decision " + vars[x].id + " is carried only by potentials");
    auto [marginal, table] = marginalize_decision(vars, combined, x, counter);
    out.solution = std::move(table);
    rest.push_back(std::move(marginal));
  } else {
    rest.push_back(marginalize_random(vars, combined, x, counter));
  }
  out.valuations = std::move(rest);
  return out;
}

VarSet candidate_next(const DecisionProblem& problem, const VarSet& remaining) {
  VarSet out;
  for (VarIndex x : remaining) {
    bool minimal = true;
    for (VarIndex z : remaining)
      if (z != x && problem.precedes(x, z)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(x);
  }
  return out;
}

DeletionSequence one_step_look_ahead(const DecisionProblem& problem) {
  const std::vector<Variable>& vars = problem.variables();
  // domains only; combination is never carried out
  std::vector<VarSet> domains;
  for (const Valuation& v : problem.valuations()) domains.push_back(v.domain);

  VarSet remaining;
  for (const Variable& v : vars) remaining.push_back(v.index);

  DeletionSequence seq;
  while (!remaining.empty()) {
    VarSet candidates = candidate_next(problem, remaining);
    VarIndex pick = candidates.front();  // ascending, so ties favor low index
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (VarIndex x : candidates) {
      VarSet fused;
      for (const VarSet& d : domains)
        if (std::binary_search(d.begin(), d.end(), x)) fused = set_union(fused, d);
      std::size_t cost = frame_size(vars, fused);
      if (cost < best) {
        best = cost;
        pick = x;
      }
    }
    // replay the fusion on domains alone
    VarSet fused;
    std::vector<VarSet> next;
    for (const VarSet& d : domains) {
      if (std::binary_search(d.begin(), d.end(), pick))
        fused = set_union(fused, d);
      else
        next.push_back(d);
    }
    next.push_back(set_minus(fused, VarSet{pick}));
    domains = std::move(next);
    seq.order.push_back(pick);
    remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
  }
  return seq;
}

void validate_sequence(const DecisionProblem& problem,
                       const DeletionSequence& seq) {
  std::size_t n = problem.variables().size();
  if (seq.order.size() != n)
    throw InvalidDeletionSequence("sequence must list all " +
                                  std::to_string(n) + " variables");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < seq.order.size(); ++i) {
    VarIndex x = seq.order[i];
    if (x >= n) throw InvalidDeletionSequence("unknown variable in sequence");
    if (pos[x] != n)
      throw InvalidDeletionSequence("variable " + problem.variable(x).id +
                                    " deleted twice");
    pos[x] = i;
  }
  // equivalent to "each entry is minimal among what remains": whenever
  // x precedes y, y must be deleted first
  for (VarIndex x = 0; x < n; ++x)
    for (VarIndex y = 0; y < n; ++y)
      if (problem.precedes(x, y) && pos[y] > pos[x])
        throw InvalidDeletionSequence(
            problem.variable(x).id + " precedes " + problem.variable(y).id +
            ", so " + problem.variable(y).id + " must be deleted first");
}

SolveReport solve(const DecisionProblem& problem,
                  std::optional<DeletionSequence> seq) {
  SolveReport report;
  report.sequence = seq ? std::move(*seq) : one_step_look_ahead(problem);
  validate_sequence(problem, report.sequence);

  std::vector<Valuation> items = problem.valuations();
  std::vector<std::optional<SolutionTable>> tables(problem.variables().size());
  for (VarIndex x : report.sequence.order) {
    FuseResult step = fuse(problem, items, x, report.counter);
    items = std::move(step.valuations);
    if (step.solution) tables[x] = std::move(step.solution);
  }
  // every domain is empty now; what remains are scalars of disconnected
  // pieces (well-defined problems leave potentials of exactly 1)
  Valuation final_val =
      combine_many(problem.variables(), std::move(items), report.counter);
  report.meu = final_val.values.front();
  if (!std::isfinite(report.meu)) throw Error("expected utility is not finite");

  for (VarIndex d : problem.decision_variables()) {
    SolutionTable& t = *tables[d];
    // sanity: a table may only mention variables deleted after its decision
    std::vector<std::size_t> pos(problem.variables().size());
    for (std::size_t i = 0; i < report.sequence.order.size(); ++i)
      pos[report.sequence.order[i]] = i;
    for (VarIndex v : t.domain)
      if (pos[v] <= pos[d]) throw Error("strategy table domain is unsound");
    report.strategy.tables.push_back(std::move(t));
  }
  return report;
}

}  // namespace vbs
