#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "vbs/types.hpp"

namespace vbs {

Closure transitive_closure(const PrecedenceRelation& prec, std::size_t n);

// Throws CyclicPrecedence if any variable precedes itself.
void validate_partial_order(const Closure& closure,
                            const std::vector<Variable>& vars);

// Every decision/random pair must be comparable; throws PerfectRecallViolation.
void check_perfect_recall(const Closure& closure,
                          const std::vector<Variable>& vars);

// A symmetric decision problem: variables, valuations bearing on them and a
// precedence partial order. Construction runs every structural validation;
// well-definedness of the joint potential is a separate (numeric) check.
class DecisionProblem {
 public:
  DecisionProblem(std::vector<Variable> vars, std::vector<Valuation> vals,
                  PrecedenceRelation prec);

  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Valuation>& valuations() const { return vals_; }
  const PrecedenceRelation& precedence() const { return prec_; }
  const Closure& closure() const { return closure_; }

  const Variable& variable(VarIndex i) const { return vars_[i]; }
  std::optional<VarIndex> find_variable(std::string_view id) const;

  bool precedes(VarIndex x, VarIndex y) const { return closure_.precedes(x, y); }

  const VarSet& decision_variables() const { return decisions_; }
  const VarSet& random_variables() const { return randoms_; }

  // Decision variables appearing in the joint potential's domain (q).
  VarSet potential_decisions() const;
  // Random variables appearing in the joint utility's domain (p).
  VarSet utility_randoms() const;

  bool operator==(const DecisionProblem&) const = default;

 private:
  std::vector<Variable> vars_;
  std::vector<Valuation> vals_;
  PrecedenceRelation prec_;
  Closure closure_;
  VarSet decisions_;
  VarSet randoms_;
};

// Random variables known when D is decided: {R random | R precedes D}.
// D must name a decision variable.
VarSet predecessors(const DecisionProblem& problem, std::string_view id);
VarSet predecessors(const DecisionProblem& problem, VarIndex d);

// Combination of all potential valuations (unit valuation if there are none).
// Pure bookkeeping for validation/oracles; `counter` is caller-provided so
// solve() counters are never polluted.
Valuation joint_potential(const DecisionProblem& problem,
                          OperationCounter& counter);
Valuation joint_utility(const DecisionProblem& problem,
                        OperationCounter& counter);

// The joint potential, summed over its random variables, must be 1 for every
// configuration of its decision variables. Throws NotWellDefined.
void check_well_defined(const DecisionProblem& problem,
                        double tolerance = 1e-9);

}  // namespace vbs
