#include "vbs/types.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>

namespace vbs {

std::size_t frame_size(const std::vector<Variable>& vars, const VarSet& domain) {
  std::size_t n = 1;
  for (VarIndex v : domain) n *= vars[v].frame.size();
  return n;
}

std::size_t flat_index(const std::vector<Variable>& vars, const VarSet& domain,
                       const std::vector<std::size_t>& states) {
  assert(domain.size() == states.size());
  std::size_t idx = 0;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    assert(states[k] < vars[domain[k]].frame.size());
    idx = idx * vars[domain[k]].frame.size() + states[k];
  }
  return idx;
}

std::vector<std::size_t> unflatten(const std::vector<Variable>& vars,
                                   const VarSet& domain, std::size_t flat) {
  std::vector<std::size_t> states(domain.size());
  for (std::size_t k = domain.size(); k-- > 0;) {
    std::size_t m = vars[domain[k]].frame.size();
    states[k] = flat % m;
    flat /= m;
  }
  return states;
}

bool is_sorted_unique(const VarSet& s) {
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k - 1] >= s[k]) return false;
  return true;
}

bool is_subset(const VarSet& sub, const VarSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  VarSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VarSet set_minus(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::string format_configuration(const std::vector<Variable>& vars,
                                 const Configuration& c) {
  if (c.domain.empty()) return "<>";
  std::string out;
  for (std::size_t k = 0; k < c.domain.size(); ++k) {
    if (k) out += ' ';
    out += vars[c.domain[k]].frame[c.states[k]];
  }
  return out;
}

std::string format_double(double v) {
  // shortest form whose reparse is bit-identical
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace vbs
