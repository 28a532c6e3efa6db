#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "vbs/io.hpp"
#include "vbs/types.hpp"

inline vbs::DecisionProblem load_fixture(const std::string& name,
                                         bool well_defined = true) {
  return vbs::load_model(std::string(VBS_FIXTURE_DIR) + "/" + name,
                         {.check_well_defined = well_defined});
}

inline bool near(double a, double b, double tol = 1e-9) {
  return std::fabs(a - b) <= tol;
}

inline vbs::Valuation make_val(vbs::ValuationKind kind, vbs::VarSet domain,
                               std::vector<double> values) {
  vbs::Valuation v;
  v.kind = kind;
  v.domain = std::move(domain);
  v.values = std::move(values);
  return v;
}

// n binary variables named A, B, C, ... with the given kinds
inline std::vector<vbs::Variable> binary_vars(
    const std::vector<vbs::VarKind>& kinds) {
  std::vector<vbs::Variable> out;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    vbs::Variable v;
    v.id = std::string(1, static_cast<char>('A' + i));
    v.kind = kinds[i];
    v.frame = {"y", "n"};
    v.index = i;
    out.push_back(std::move(v));
  }
  return out;
}
