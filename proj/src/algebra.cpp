#include "vbs/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "vbs/errors.hpp"

namespace vbs {

namespace {

// Position of v in domain, or npos.
std::size_t position_of(const VarSet& domain, VarIndex v) {
  auto it = std::lower_bound(domain.begin(), domain.end(), v);
  if (it == domain.end() || *it != v) return std::string::npos;
  return static_cast<std::size_t>(it - domain.begin());
}

// For each position of `outer`, the flat-index weight the variable carries
// inside `sub`'s table (0 when it is not part of sub). Walking outer's
// configurations digit-by-digit with these weights lands on sub's entry for
// the projected configuration.
std::vector<std::size_t> embedded_strides(const std::vector<Variable>& vars,
                                          const VarSet& outer,
                                          const VarSet& sub) {
  std::vector<std::size_t> sub_strides(sub.size());
  std::size_t s = 1;
  for (std::size_t j = sub.size(); j-- > 0;) {
    sub_strides[j] = s;
    s *= vars[sub[j]].frame.size();
  }
  std::vector<std::size_t> out(outer.size(), 0);
  for (std::size_t k = 0; k < outer.size(); ++k) {
    std::size_t j = position_of(sub, outer[k]);
    if (j != std::string::npos) out[k] = sub_strides[j];
  }
  return out;
}

}  // namespace

Configuration project(const Configuration& x, const VarSet& h) {
  if (!is_subset(h, x.domain))
    throw NotASubset("projection target is not a subset of the domain");
  Configuration out;
  out.domain = h;
  out.states.reserve(h.size());
  for (VarIndex v : h) out.states.push_back(x.states[position_of(x.domain, v)]);
  return out;
}

Valuation combine(const std::vector<Variable>& vars, const Valuation& a,
                  const Valuation& b, OperationCounter& counter) {
  assert(is_sorted_unique(a.domain) && is_sorted_unique(b.domain));
  Valuation out;
  out.kind = (a.kind == ValuationKind::Utility || b.kind == ValuationKind::Utility)
                 ? ValuationKind::Utility
                 : ValuationKind::Potential;
  out.domain = set_union(a.domain, b.domain);
  std::size_t len = frame_size(vars, out.domain);
  out.values.resize(len);
  counter.multiplications += len;

  std::vector<std::size_t> sa = embedded_strides(vars, out.domain, a.domain);
  std::vector<std::size_t> sb = embedded_strides(vars, out.domain, b.domain);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::size_t> digits = unflatten(vars, out.domain, i);
    std::size_t ia = 0, ib = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) {
      ia += digits[k] * sa[k];
      ib += digits[k] * sb[k];
    }
    out.values[i] = a.values[ia] * b.values[ib];
  }
  return out;
}

Valuation combine_many(const std::vector<Variable>& vars,
                       std::vector<Valuation> items,
                       OperationCounter& counter) {
  if (items.empty()) throw Error("combine_many needs at least one valuation");
  while (items.size() > 1) {
    std::size_t best_i = 0, best_j = 1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = i + 1; j < items.size(); ++j) {
        std::size_t cost =
            frame_size(vars, set_union(items[i].domain, items[j].domain));
        if (cost < best) {  // strict: ties keep the smallest (i, j)
          best = cost;
          best_i = i;
          best_j = j;
        }
      }
    items[best_i] = combine(vars, items[best_i], items[best_j], counter);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(best_j));
  }
  return std::move(items.front());
}

Valuation marginalize_random(const std::vector<Variable>& vars,
                             const Valuation& a, VarIndex r,
                             OperationCounter& counter) {
  std::size_t pos = position_of(a.domain, r);
  if (pos == std::string::npos)
    throw VariableNotInDomain("variable " + vars[r].id +
                              " is not in the valuation's domain");
  Valuation out;
  out.kind = a.kind;
  out.domain = set_minus(a.domain, VarSet{r});
  std::size_t len = frame_size(vars, out.domain);
  std::size_t m = vars[r].frame.size();
  out.values.assign(len, 0.0);
  counter.additions += len * (m - 1);

  std::vector<std::size_t> strides = embedded_strides(vars, a.domain, out.domain);
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    std::vector<std::size_t> digits = unflatten(vars, a.domain, i);
    std::size_t io = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) io += digits[k] * strides[k];
    if (digits[pos] == 0)
      out.values[io] = a.values[i];
    else
      out.values[io] += a.values[i];
  }
  return out;
}

std::pair<Valuation, SolutionTable> marginalize_decision(
    const std::vector<Variable>& vars, const Valuation& a, VarIndex d,
    OperationCounter& counter) {
  if (a.kind != ValuationKind::Utility)
    throw NotAUtilityValuation("cannot max a potential over " + vars[d].id);
  std::size_t pos = position_of(a.domain, d);
  if (pos == std::string::npos)
    throw VariableNotInDomain("variable " + vars[d].id +
                              " is not in the valuation's domain");
  Valuation out;
  out.kind = ValuationKind::Utility;
  out.domain = set_minus(a.domain, VarSet{d});
  std::size_t len = frame_size(vars, out.domain);
  std::size_t m = vars[d].frame.size();
  out.values.resize(len);
  counter.comparisons += len * (m - 1);

  SolutionTable table;
  table.decision = d;
  table.domain = out.domain;
  table.choices.resize(len);

  std::vector<std::size_t> strides = embedded_strides(vars, a.domain, out.domain);
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    std::vector<std::size_t> digits = unflatten(vars, a.domain, i);
    std::size_t io = 0;
    for (std::size_t k = 0; k < digits.size(); ++k) io += digits[k] * strides[k];
    if (digits[pos] == 0) {
      out.values[io] = a.values[i];
      table.choices[io] = 0;
    } else if (a.values[i] > out.values[io]) {  // ties keep the earliest state
      out.values[io] = a.values[i];
      table.choices[io] = digits[pos];
    }
  }
  return {std::move(out), std::move(table)};
}

Valuation ordered_marginal(const std::vector<Variable>& vars,
                           const Closure& closure, Valuation a, const VarSet& g,
                           OperationCounter& counter) {
  if (!is_subset(g, a.domain))
    throw NotASubset("marginal target is not a subset of the domain");
  VarSet pending = set_minus(a.domain, g);
  while (!pending.empty()) {
    // minimal element: precedes nothing still pending (lowest index wins ties,
    // which ascending iteration gives us for free)
    VarIndex next = pending.front();
    for (VarIndex x : pending) {
      bool minimal = true;
      for (VarIndex z : pending)
        if (z != x && closure.precedes(x, z)) {
          minimal = false;
          break;
        }
      if (minimal) {
        next = x;
        break;
      }
    }
    if (vars[next].kind == VarKind::Decision)
      a = marginalize_decision(vars, a, next, counter).first;
    else
      a = marginalize_random(vars, a, next, counter);
    pending.erase(std::find(pending.begin(), pending.end(), next));
  }
  return a;
}

}  // namespace vbs
