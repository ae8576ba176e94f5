#pragma once

#include <stdexcept>
#include <string>

namespace g2daha {

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct SubstitutionPole : std::runtime_error {
  explicit SubstitutionPole(const std::string& what) : std::runtime_error(what) {}
};

struct ShiftedVariableBinding : std::runtime_error {
  explicit ShiftedVariableBinding(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownGenerator : std::runtime_error {
  explicit UnknownGenerator(const std::string& what) : std::runtime_error(what) {}
};

struct NoEvenExpansion : std::runtime_error {
  explicit NoEvenExpansion(const std::string& what) : std::runtime_error(what) {}
};

struct UnluckyEvaluation : std::runtime_error {
  explicit UnluckyEvaluation(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateParameters : std::runtime_error {
  explicit DegenerateParameters(const std::string& what) : std::runtime_error(what) {}
};

struct BadInput : std::runtime_error {
  explicit BadInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace g2daha
