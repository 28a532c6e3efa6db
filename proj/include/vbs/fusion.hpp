#pragma once

#include <optional>
#include <vector>

#include "vbs/model.hpp"
#include "vbs/types.hpp"

namespace vbs {

struct DeletionSequence {
  std::vector<VarIndex> order;  // first entry deleted first

  bool operator==(const DeletionSequence&) const = default;
};

// One argmax table per decision variable, ascending declaration index.
struct Strategy {
  std::vector<SolutionTable> tables;

  bool operator==(const Strategy&) const = default;
};

struct SolveReport {
  double meu = 0.0;
  Strategy strategy;
  DeletionSequence sequence;
  OperationCounter counter;
};

struct FuseResult {
  std::vector<Valuation> valuations;
  std::optional<SolutionTable> solution;  // present when x is a decision
};

// Fus_x: combine the valuations bearing on x, marginalize x out of the
// product, pass the rest through untouched (original order, marginal
// appended). x must appear in at least one domain.
FuseResult fuse(const DecisionProblem& problem,
                const std::vector<Valuation>& items, VarIndex x,
                OperationCounter& counter);

// Variables of `remaining` that may be deleted next: those preceding no
// other remaining variable. Ascending declaration index.
VarSet candidate_next(const DecisionProblem& problem, const VarSet& remaining);

// Full deletion sequence picked one step at a time: among the candidates,
// the one whose fusion would combine over the smallest frame (ties by
// declaration index). Tracked symbolically; no table arithmetic.
DeletionSequence one_step_look_ahead(const DecisionProblem& problem);

// Every variable exactly once, each a minimal element of what remains.
// Throws InvalidDeletionSequence.
void validate_sequence(const DecisionProblem& problem,
                       const DeletionSequence& seq);

// Fuse along `seq` (the look-ahead sequence if omitted); the MEU is the
// combination of whatever scalars remain, the strategy collects the argmax
// table captured when each decision was deleted.
SolveReport solve(const DecisionProblem& problem,
                  std::optional<DeletionSequence> seq = std::nullopt);

}  // namespace vbs
