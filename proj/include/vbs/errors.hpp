#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "vbs/types.hpp"

namespace vbs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Semantic problems with a model (bad tables, broken invariants, ...).
struct ModelError : Error {
  using Error::Error;
};

struct UnknownVariable : ModelError {
  using ModelError::ModelError;
};

struct CyclicPrecedence : ModelError {
  using ModelError::ModelError;
};

struct PerfectRecallViolation : ModelError {
  PerfectRecallViolation(const std::string& msg, VarIndex decision,
                         VarIndex random)
      : ModelError(msg), decision(decision), random(random) {}
  VarIndex decision;
  VarIndex random;
};

struct NotWellDefined : ModelError {
  NotWellDefined(const std::string& msg, Configuration config, double sum)
      : ModelError(msg), config(std::move(config)), sum(sum) {}
  Configuration config;  // offending configuration of the decision part
  double sum;
};

// Algebra-level misuse.
struct NotASubset : Error {
  using Error::Error;
};

struct VariableNotInDomain : Error {
  using Error::Error;
};

struct NotAUtilityValuation : Error {
  using Error::Error;
};

struct DecisionUnderPotentialOnly : Error {
  using Error::Error;
};

struct InvalidDeletionSequence : Error {
  using Error::Error;
};

struct StrategySpaceTooLarge : Error {
  using Error::Error;
};

struct UnresolvableTable : Error {
  using Error::Error;
};

// Syntax / name-resolution problems in the text format.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  std::size_t line;
};

}  // namespace vbs
