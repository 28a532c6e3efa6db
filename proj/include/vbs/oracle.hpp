#pragma once

#include <cstdint>
#include <vector>

#include "vbs/fusion.hpp"
#include "vbs/model.hpp"
#include "vbs/types.hpp"

namespace vbs {

// A full contingent plan: for each decision variable (ascending declaration
// index), a chosen state per configuration of its predecessors, in the
// canonical layout of that predecessor domain.
struct ExplicitStrategy {
  std::vector<std::vector<std::size_t>> choices;

  bool operator==(const ExplicitStrategy&) const = default;
};

// Number of distinct explicit strategies (saturates at 2^64-1 on overflow).
std::uint64_t strategy_space_size(const DecisionProblem& problem);

// All strategies, each exactly once, in a deterministic order: counting up
// with the last decision's table varying fastest and, within a table, the
// last predecessor configuration's choice varying fastest. Throws
// StrategySpaceTooLarge past `cap`.
std::vector<ExplicitStrategy> enumerate_strategies(
    const DecisionProblem& problem, std::uint64_t cap = 1000000);

// Acts the strategy takes when the random variables come out as y
// (a configuration of exactly the random variables).
Configuration induced_decision_config(const DecisionProblem& problem,
                                      const ExplicitStrategy& strategy,
                                      const Configuration& y);

// Sum over all random configurations of joint-potential x joint-utility at
// the induced acts. Factor tables are evaluated directly; no table algebra.
double expected_utility(const DecisionProblem& problem,
                        const ExplicitStrategy& strategy);

struct BruteForceResult {
  double meu = 0.0;
  ExplicitStrategy strategy;  // first maximizer in enumeration order
};

BruteForceResult brute_force_solve(const DecisionProblem& problem,
                                   std::uint64_t cap = 1000000);

// Combine every valuation into one table, then ordered_marginal to the
// empty domain: the MEU without fusion's locality.
double global_solve(const DecisionProblem& problem);

// Expected utility of a fusion strategy: per random configuration, resolve
// decisions by repeatedly applying any table whose decision coordinates are
// all resolved (UnresolvableTable if that stalls), then score the induced
// acts like expected_utility does.
double evaluate_strategy(const DecisionProblem& problem,
                         const Strategy& strategy);

}  // namespace vbs
