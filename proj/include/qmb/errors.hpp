#pragma once

#include <stdexcept>
#include <string>

namespace qmb {

struct NonSquareEvaluation : std::domain_error {
  using std::domain_error::domain_error;
};

struct SpectrumMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TypeMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct UnsupportedElement : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Bad (m, n), index out of range, bad q, ...
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Source vector outside the range where a truncated operator is exact.
struct ValidityError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

}  // namespace qmb
