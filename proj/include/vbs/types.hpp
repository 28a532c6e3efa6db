#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vbs {

enum class VarKind { Decision, Random };

// Index of a variable = its declaration position in the problem.
using VarIndex = std::size_t;

// A set of variables, kept sorted ascending by declaration index.
// That order is also the canonical domain order of every table.
using VarSet = std::vector<VarIndex>;

struct Variable {
  std::string id;
  VarKind kind = VarKind::Random;
  std::vector<std::string> frame;  // state labels, frame order
  VarIndex index = 0;              // declaration position

  bool operator==(const Variable&) const = default;
};

// One point of W_g: a state index per domain variable.
struct Configuration {
  VarSet domain;                    // ascending
  std::vector<std::size_t> states;  // aligned with domain

  bool operator==(const Configuration&) const = default;
};

enum class ValuationKind { Utility, Potential };

// Dense table over the frame of `domain`. Canonical layout: row-major
// with the last domain variable varying fastest.
struct Valuation {
  ValuationKind kind = ValuationKind::Utility;
  std::string name;
  VarSet domain;
  std::vector<double> values;

  bool operator==(const Valuation&) const = default;
};

struct OperationCounter {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t divisions = 0;

  bool operator==(const OperationCounter&) const = default;
};

// Argmax table produced when a decision variable is maxed out:
// for every configuration of `domain` (same canonical layout as a
// valuation table), the state index of `decision` attaining the max.
struct SolutionTable {
  VarIndex decision = 0;
  VarSet domain;
  std::vector<std::size_t> choices;

  bool operator==(const SolutionTable&) const = default;
};

struct PrecedenceRelation {
  // (x, y) means x is resolved before y.
  std::vector<std::pair<VarIndex, VarIndex>> arcs;

  bool operator==(const PrecedenceRelation&) const = default;
};

// Transitive closure of a precedence relation over n variables.
class Closure {
 public:
  Closure() = default;
  explicit Closure(std::size_t n) : n_(n), before_(n * n, false) {}

  std::size_t size() const { return n_; }

  bool precedes(VarIndex x, VarIndex y) const { return before_[x * n_ + y]; }
  void set(VarIndex x, VarIndex y) { before_[x * n_ + y] = true; }

  // x and y are ordered one way or the other.
  bool comparable(VarIndex x, VarIndex y) const {
    return precedes(x, y) || precedes(y, x);
  }

  std::vector<std::pair<VarIndex, VarIndex>> pairs() const {
    std::vector<std::pair<VarIndex, VarIndex>> out;
    for (VarIndex x = 0; x < n_; ++x)
      for (VarIndex y = 0; y < n_; ++y)
        if (before_[x * n_ + y]) out.emplace_back(x, y);
    return out;
  }

  bool operator==(const Closure&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> before_;
};

// ---- frame / layout helpers ------------------------------------------------

// Number of configurations of `domain` (1 for the empty domain).
std::size_t frame_size(const std::vector<Variable>& vars, const VarSet& domain);

// Flat index of a configuration in the canonical layout.
std::size_t flat_index(const std::vector<Variable>& vars, const VarSet& domain,
                       const std::vector<std::size_t>& states);

// Inverse of flat_index.
std::vector<std::size_t> unflatten(const std::vector<Variable>& vars,
                                   const VarSet& domain, std::size_t flat);

bool is_sorted_unique(const VarSet& s);

// Is `sub` a subset of `super`? Both sorted ascending.
bool is_subset(const VarSet& sub, const VarSet& super);

VarSet set_union(const VarSet& a, const VarSet& b);
VarSet set_minus(const VarSet& a, const VarSet& b);

// "b g ~t" style rendering of a configuration; "<>" for the empty one.
std::string format_configuration(const std::vector<Variable>& vars,
                                 const Configuration& c);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace vbs
