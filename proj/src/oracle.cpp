#include "vbs/oracle.hpp"

#include <algorithm>
#include <limits>

#include "vbs/algebra.hpp"
#include "vbs/errors.hpp"

namespace vbs {

namespace {

constexpr std::uint64_t kNoOverflow = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kNoOverflow / a) return kNoOverflow;
  return a * b;
}

// Scores full configurations factor by factor; the product of every table's
// entry at the restricted configuration equals joint-potential x joint-utility
// there, and no table algebra is involved.
struct FactorScorer {
  explicit FactorScorer(const DecisionProblem& problem) : problem(problem) {}

  double score(const std::vector<std::size_t>& full_states) const {
    const std::vector<Variable>& vars = problem.variables();
    double product = 1.0;
    for (const Valuation& f : problem.valuations()) {
      std::size_t idx = 0;
      for (VarIndex v : f.domain)
        idx = idx * vars[v].frame.size() + full_states[v];
      product *= f.values[idx];
    }
    return product;
  }

  const DecisionProblem& problem;
};

// Mixed-radix odometer over every decision's choice table, flattened:
// digits[j] is the chosen state for one predecessor configuration of one
// decision, radices follow frame sizes. Incrementing the last digit first
// makes enumeration "count up" with the final entry fastest.
struct StrategyCounter {
  explicit StrategyCounter(const DecisionProblem& problem) {
    for (VarIndex d : problem.decision_variables()) {
      VarSet pr = predecessors(problem, d);
      std::size_t len = frame_size(problem.variables(), pr);
      table_len.push_back(len);
      std::size_t m = problem.variable(d).frame.size();
      for (std::size_t i = 0; i < len; ++i) radix.push_back(m);
    }
    digits.assign(radix.size(), 0);
  }

  ExplicitStrategy current() const {
    ExplicitStrategy s;
    std::size_t at = 0;
    for (std::size_t len : table_len) {
      s.choices.emplace_back(digits.begin() + at, digits.begin() + at + len);
      at += len;
    }
    return s;
  }

  bool advance() {
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < radix[k]) return true;
      digits[k] = 0;
    }
    return false;  // wrapped: every strategy seen
  }

  std::vector<std::size_t> table_len;
  std::vector<std::size_t> radix;
  std::vector<std::size_t> digits;
};

}  // namespace

std::uint64_t strategy_space_size(const DecisionProblem& problem) {
  std::uint64_t total = 1;
  for (VarIndex d : problem.decision_variables()) {
    std::uint64_t m = problem.variable(d).frame.size();
    std::size_t len = frame_size(problem.variables(), predecessors(problem, d));
    for (std::size_t i = 0; i < len; ++i) total = saturating_mul(total, m);
  }
  return total;
}

std::vector<ExplicitStrategy> enumerate_strategies(
    const DecisionProblem& problem, std::uint64_t cap) {
  std::uint64_t total = strategy_space_size(problem);
  if (total > cap)
    throw StrategySpaceTooLarge("strategy space has " +
                                (total == kNoOverflow
                                     ? std::string("more than 2^64")
                                     : std::to_string(total)) +
                                " elements, cap is " + std::to_string(cap));
  std::vector<ExplicitStrategy> out;
  out.reserve(static_cast<std::size_t>(total));
  StrategyCounter counter(problem);
  do {
    out.push_back(counter.current());
  } while (counter.advance());
  return out;
}

Configuration induced_decision_config(const DecisionProblem& problem,
                                      const ExplicitStrategy& strategy,
                                      const Configuration& y) {
  if (y.domain != problem.random_variables())
    throw Error("expected a configuration of exactly the random variables");
  const VarSet& decisions = problem.decision_variables();
  if (strategy.choices.size() != decisions.size())
    throw Error("strategy has the wrong number of decision tables");
  Configuration acts;
  acts.domain = decisions;
  for (std::size_t j = 0; j < decisions.size(); ++j) {
    VarSet pr = predecessors(problem, decisions[j]);
    Configuration seen = project(y, pr);
    std::size_t idx = flat_index(problem.variables(), pr, seen.states);
    acts.states.push_back(strategy.choices[j][idx]);
  }
  return acts;
}

double expected_utility(const DecisionProblem& problem,
                        const ExplicitStrategy& strategy) {
  const std::vector<Variable>& vars = problem.variables();
  const VarSet& rvars = problem.random_variables();
  const VarSet& dvars = problem.decision_variables();
  if (strategy.choices.size() != dvars.size())
    throw Error("strategy has the wrong number of decision tables");
  FactorScorer scorer(problem);

  std::vector<std::vector<std::size_t>> pr_sets;
  for (VarIndex d : dvars) pr_sets.push_back(predecessors(problem, d));

  std::size_t n_random = frame_size(vars, rvars);
  std::vector<std::size_t> full(vars.size(), 0);
  double total = 0.0;
  for (std::size_t y = 0; y < n_random; ++y) {
    std::vector<std::size_t> ystates = unflatten(vars, rvars, y);
    for (std::size_t k = 0; k < rvars.size(); ++k) full[rvars[k]] = ystates[k];
    for (std::size_t j = 0; j < dvars.size(); ++j) {
      std::vector<std::size_t> seen;
      seen.reserve(pr_sets[j].size());
      for (VarIndex r : pr_sets[j]) seen.push_back(full[r]);
      full[dvars[j]] = strategy.choices[j][flat_index(vars, pr_sets[j], seen)];
    }
    total += scorer.score(full);
  }
  return total;
}

BruteForceResult brute_force_solve(const DecisionProblem& problem,
                                   std::uint64_t cap) {
  std::uint64_t total = strategy_space_size(problem);
  if (total > cap)
    throw StrategySpaceTooLarge("strategy space has " +
                                (total == kNoOverflow
                                     ? std::string("more than 2^64")
                                     : std::to_string(total)) +
                                " elements, cap is " + std::to_string(cap));
  const std::vector<Variable>& vars = problem.variables();
  const VarSet& rvars = problem.random_variables();
  const VarSet& dvars = problem.decision_variables();
  const std::vector<Valuation>& factors = problem.valuations();
  std::size_t n_random = frame_size(vars, rvars);
  std::size_t n_factors = factors.size();

  // Everything the per-strategy loop needs, hoisted to flat arrays: the same
  // sum-of-factor-products expected_utility evaluates, with each factor index
  // split into its random-variable part (a function of y alone) and one
  // stride per decision variable.
  std::vector<std::size_t> factor_base(n_factors * n_random, 0);
  std::vector<std::size_t> dec_stride(n_factors * dvars.size(), 0);
  std::vector<std::size_t> pr_index(n_random * dvars.size(), 0);
  std::vector<std::size_t> full(vars.size(), 0);
  std::vector<VarSet> pr_sets;
  for (VarIndex d : dvars) pr_sets.push_back(predecessors(problem, d));

  for (std::size_t f = 0; f < n_factors; ++f) {
    std::size_t stride = 1;
    for (std::size_t k = factors[f].domain.size(); k-- > 0;) {
      VarIndex v = factors[f].domain[k];
      if (vars[v].kind == VarKind::Decision) {
        std::size_t j = static_cast<std::size_t>(
            std::lower_bound(dvars.begin(), dvars.end(), v) - dvars.begin());
        dec_stride[f * dvars.size() + j] = stride;
      }
      stride *= vars[v].frame.size();
    }
  }
  for (std::size_t y = 0; y < n_random; ++y) {
    std::vector<std::size_t> ystates = unflatten(vars, rvars, y);
    for (std::size_t k = 0; k < rvars.size(); ++k) full[rvars[k]] = ystates[k];
    for (std::size_t f = 0; f < n_factors; ++f) {
      std::size_t idx = 0;
      for (VarIndex v : factors[f].domain)
        idx = idx * vars[v].frame.size() +
              (vars[v].kind == VarKind::Random ? full[v] : 0);
      factor_base[f * n_random + y] = idx;
    }
    for (std::size_t j = 0; j < dvars.size(); ++j) {
      std::vector<std::size_t> seen;
      seen.reserve(pr_sets[j].size());
      for (VarIndex r : pr_sets[j]) seen.push_back(full[r]);
      pr_index[y * dvars.size() + j] = flat_index(vars, pr_sets[j], seen);
    }
  }

  StrategyCounter counter(problem);
  std::vector<std::size_t> table_offset(dvars.size(), 0);
  for (std::size_t j = 1; j < dvars.size(); ++j)
    table_offset[j] = table_offset[j - 1] + counter.table_len[j - 1];

  BruteForceResult best;
  best.meu = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> acts(dvars.size());
  do {
    double eu = 0.0;
    for (std::size_t y = 0; y < n_random; ++y) {
      for (std::size_t j = 0; j < dvars.size(); ++j)
        acts[j] =
            counter.digits[table_offset[j] + pr_index[y * dvars.size() + j]];
      double product = 1.0;
      for (std::size_t f = 0; f < n_factors; ++f) {
        std::size_t idx = factor_base[f * n_random + y];
        for (std::size_t j = 0; j < dvars.size(); ++j)
          idx += acts[j] * dec_stride[f * dvars.size() + j];
        product *= factors[f].values[idx];
      }
      eu += product;
    }
    if (eu > best.meu) {  // strict: ties keep the first in enumeration order
      best.meu = eu;
      best.strategy = counter.current();
    }
  } while (counter.advance());
  return best;
}

double global_solve(const DecisionProblem& problem) {
  OperationCounter scratch;
  Valuation joint =
      combine_many(problem.variables(), problem.valuations(), scratch);
  Valuation meu = ordered_marginal(problem.variables(), problem.closure(),
                                   std::move(joint), {}, scratch);
  return meu.values.front();
}

double evaluate_strategy(const DecisionProblem& problem,
                         const Strategy& strategy) {
  const std::vector<Variable>& vars = problem.variables();
  const VarSet& rvars = problem.random_variables();
  const VarSet& dvars = problem.decision_variables();
  if (strategy.tables.size() != dvars.size())
    throw Error("strategy has the wrong number of decision tables");
  for (std::size_t j = 0; j < dvars.size(); ++j)
    if (strategy.tables[j].decision != dvars[j])
      throw Error("strategy tables must follow declaration order");
  FactorScorer scorer(problem);

  std::size_t n_random = frame_size(vars, rvars);
  std::vector<std::size_t> full(vars.size(), 0);
  std::vector<bool> resolved(vars.size(), false);
  double total = 0.0;
  for (std::size_t y = 0; y < n_random; ++y) {
    std::vector<std::size_t> ystates = unflatten(vars, rvars, y);
    for (std::size_t k = 0; k < rvars.size(); ++k) full[rvars[k]] = ystates[k];
    std::fill(resolved.begin(), resolved.end(), false);
    for (VarIndex r : rvars) resolved[r] = true;

    std::size_t remaining = dvars.size();
    while (remaining > 0) {
      bool progressed = false;
      for (std::size_t j = 0; j < dvars.size(); ++j) {
        if (resolved[dvars[j]]) continue;
        const SolutionTable& t = strategy.tables[j];
        bool ready = true;
        for (VarIndex v : t.domain)
          if (!resolved[v]) {
            ready = false;
            break;
          }
        if (!ready) continue;
        std::vector<std::size_t> states;
        states.reserve(t.domain.size());
        for (VarIndex v : t.domain) states.push_back(full[v]);
        full[dvars[j]] = t.choices[flat_index(vars, t.domain, states)];
        resolved[dvars[j]] = true;
        --remaining;
        progressed = true;
      }
      if (!progressed)
        throw UnresolvableTable(
            "decision tables depend on each other cyclically");
    }
    total += scorer.score(full);
  }
  return total;
}

}  // namespace vbs
