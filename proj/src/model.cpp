#include "vbs/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "vbs/algebra.hpp"
#include "vbs/errors.hpp"

namespace vbs {

Closure transitive_closure(const PrecedenceRelation& prec, std::size_t n) {
  Closure c(n);
  for (auto [x, y] : prec.arcs) c.set(x, y);
  for (VarIndex k = 0; k < n; ++k)
    for (VarIndex x = 0; x < n; ++x)
      if (c.precedes(x, k))
        for (VarIndex y = 0; y < n; ++y)
          if (c.precedes(k, y)) c.set(x, y);
  return c;
}

void validate_partial_order(const Closure& closure,
                            const std::vector<Variable>& vars) {
  for (VarIndex x = 0; x < closure.size(); ++x) {
    if (!closure.precedes(x, x)) continue;
    std::string cycle = vars[x].id;
    for (VarIndex y = 0; y < closure.size(); ++y)
      if (y != x && closure.precedes(x, y) && closure.precedes(y, x))
        cycle += " > " + vars[y].id;
    cycle += " > " + vars[x].id;
    throw CyclicPrecedence("precedence is cyclic: " + cycle);
  }
}

void check_perfect_recall(const Closure& closure,
                          const std::vector<Variable>& vars) {
  for (const Variable& d : vars) {
    if (d.kind != VarKind::Decision) continue;
    for (const Variable& r : vars) {
      if (r.kind != VarKind::Random) continue;
      if (!closure.comparable(d.index, r.index))
        throw PerfectRecallViolation("decision " + d.id + " and random " +
                                         r.id + " are not ordered",
                                     d.index, r.index);
    }
  }
}

DecisionProblem::DecisionProblem(std::vector<Variable> vars,
                                 std::vector<Valuation> vals,
                                 PrecedenceRelation prec)
    : vars_(std::move(vars)), vals_(std::move(vals)), prec_(std::move(prec)) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    Variable& v = vars_[i];
    v.index = i;
    if (v.id.empty()) throw ModelError("variable with empty id");
    if (!ids.insert(v.id).second)
      throw ModelError("duplicate variable id " + v.id);
    if (v.frame.empty()) throw ModelError("variable " + v.id + " has no states");
    std::set<std::string> labels;
    for (const std::string& s : v.frame) {
      if (s.empty()) throw ModelError("variable " + v.id + " has an empty state label");
      if (!labels.insert(s).second)
        throw ModelError("variable " + v.id + " repeats state " + s);
    }
    (v.kind == VarKind::Decision ? decisions_ : randoms_).push_back(i);
  }

  bool any_utility = false;
  VarSet utility_union, potential_union;
  for (const Valuation& val : vals_) {
    if (!is_sorted_unique(val.domain))
      throw ModelError("valuation " + val.name +
                       ": domain must be distinct variables in declaration order");
    for (VarIndex v : val.domain)
      if (v >= vars_.size())
        throw UnknownVariable("valuation " + val.name + ": unknown variable");
    if (val.values.size() != frame_size(vars_, val.domain))
      throw ModelError("valuation " + val.name + ": expected " +
                       std::to_string(frame_size(vars_, val.domain)) +
                       " values, got " + std::to_string(val.values.size()));
    for (double x : val.values) {
      if (!std::isfinite(x))
        throw ModelError("valuation " + val.name + ": non-finite value");
      // only nonnegativity here; values above 1 are a normalization problem
      // and get a far better diagnosis from check_well_defined
      if (val.kind == ValuationKind::Potential && x < 0.0)
        throw ModelError("valuation " + val.name + ": negative potential value " +
                         format_double(x));
    }
    if (val.kind == ValuationKind::Utility) {
      any_utility = true;
      utility_union = set_union(utility_union, val.domain);
    } else {
      potential_union = set_union(potential_union, val.domain);
    }
  }
  if (!any_utility) throw ModelError("a problem needs at least one utility valuation");
  for (VarIndex d : decisions_)
    if (!is_subset(VarSet{d}, utility_union))
      throw ModelError("decision " + vars_[d].id +
                       " is not covered by any utility valuation");
  for (VarIndex r : randoms_)
    if (!is_subset(VarSet{r}, potential_union))
      throw ModelError("random variable " + vars_[r].id +
                       " is not covered by any potential valuation");

  for (auto [x, y] : prec_.arcs) {
    if (x >= vars_.size() || y >= vars_.size())
      throw UnknownVariable("precedence arc over unknown variable");
    if (x == y)
      throw CyclicPrecedence("precedence is cyclic: " + vars_[x].id + " > " +
                             vars_[x].id);
  }
  closure_ = transitive_closure(prec_, vars_.size());
  validate_partial_order(closure_, vars_);
  check_perfect_recall(closure_, vars_);
}

std::optional<VarIndex> DecisionProblem::find_variable(
    std::string_view id) const {
  for (const Variable& v : vars_)
    if (v.id == id) return v.index;
  return std::nullopt;
}

VarSet DecisionProblem::potential_decisions() const {
  OperationCounter scratch;
  Valuation joint = joint_potential(*this, scratch);
  VarSet out;
  for (VarIndex v : joint.domain)
    if (vars_[v].kind == VarKind::Decision) out.push_back(v);
  return out;
}

VarSet DecisionProblem::utility_randoms() const {
  OperationCounter scratch;
  Valuation joint = joint_utility(*this, scratch);
  VarSet out;
  for (VarIndex v : joint.domain)
    if (vars_[v].kind == VarKind::Random) out.push_back(v);
  return out;
}

VarSet predecessors(const DecisionProblem& problem, VarIndex d) {
  if (d >= problem.variables().size())
    throw UnknownVariable("no variable with index " + std::to_string(d));
  if (problem.variable(d).kind != VarKind::Decision)
    throw ModelError(problem.variable(d).id + " is not a decision variable");
  VarSet out;
  for (VarIndex r : problem.random_variables())
    if (problem.precedes(r, d)) out.push_back(r);
  return out;
}

VarSet predecessors(const DecisionProblem& problem, std::string_view id) {
  auto d = problem.find_variable(id);
  if (!d) throw UnknownVariable("no variable named " + std::string(id));
  return predecessors(problem, *d);
}

namespace {

Valuation joint_of_kind(const DecisionProblem& problem, ValuationKind kind,
                        OperationCounter& counter) {
  std::vector<Valuation> items;
  for (const Valuation& v : problem.valuations())
    if (v.kind == kind) items.push_back(v);
  if (items.empty()) {
    // unit: empty domain, single 1 (absorbed freely by any combination)
    Valuation unit;
    unit.kind = kind;
    unit.values = {1.0};
    return unit;
  }
  return combine_many(problem.variables(), std::move(items), counter);
}

}  // namespace

Valuation joint_potential(const DecisionProblem& problem,
                          OperationCounter& counter) {
  return joint_of_kind(problem, ValuationKind::Potential, counter);
}

Valuation joint_utility(const DecisionProblem& problem,
                        OperationCounter& counter) {
  return joint_of_kind(problem, ValuationKind::Utility, counter);
}

void check_well_defined(const DecisionProblem& problem, double tolerance) {
  OperationCounter scratch;
  Valuation joint = joint_potential(problem, scratch);
  VarSet q;
  for (VarIndex v : joint.domain)
    if (problem.variable(v).kind == VarKind::Decision) q.push_back(v);
  Valuation summed = joint;
  for (VarIndex r : set_minus(joint.domain, q))
    summed = marginalize_random(problem.variables(), summed, r, scratch);
  for (std::size_t i = 0; i < summed.values.size(); ++i) {
    if (std::fabs(summed.values[i] - 1.0) <= tolerance) continue;
    Configuration offending{q, unflatten(problem.variables(), q, i)};
    throw NotWellDefined(
        "joint potential sums to " + format_double(summed.values[i]) +
            " (not 1) at " + format_configuration(problem.variables(), offending),
        offending, summed.values[i]);
  }
}

}  // namespace vbs
