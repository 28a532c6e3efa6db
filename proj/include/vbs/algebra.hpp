#pragma once

#include <utility>
#include <vector>

#include "vbs/types.hpp"

namespace vbs {

// Restriction x^{|h} of a configuration to a sub-domain h.
Configuration project(const Configuration& x, const VarSet& h);

// Pointwise product over the union domain. Utility if either operand is a
// utility. Adds one multiplication per result entry.
Valuation combine(const std::vector<Variable>& vars, const Valuation& a,
                  const Valuation& b, OperationCounter& counter);

// Left fold of combine in a fixed greedy order: repeatedly merge the pair
// whose union domain has the smallest frame, ties broken by the
// lexicographically smallest list-position pair, result replacing the
// earlier position. A single item is returned untouched at no cost.
Valuation combine_many(const std::vector<Variable>& vars,
                       std::vector<Valuation> items,
                       OperationCounter& counter);

// Sum r out of a. Adds (result length) x (|frame(r)| - 1) additions.
Valuation marginalize_random(const std::vector<Variable>& vars,
                             const Valuation& a, VarIndex r,
                             OperationCounter& counter);

// Max d out of a utility valuation, recording the maximizing state of d per
// remaining configuration (earliest state in frame order on ties). Adds
// (result length) x (|frame(d)| - 1) comparisons.
std::pair<Valuation, SolutionTable> marginalize_decision(
    const std::vector<Variable>& vars, const Valuation& a, VarIndex d,
    OperationCounter& counter);

// Marginalize a down to g, deleting one variable at a time. The next variable
// deleted is always a minimal element (under the precedence closure) of the
// set still to delete, lowest declaration index on ties; sum for random
// variables, max for decisions. Argmax tables are discarded.
Valuation ordered_marginal(const std::vector<Variable>& vars,
                           const Closure& closure, Valuation a,
                           const VarSet& g, OperationCounter& counter);

}  // namespace vbs
