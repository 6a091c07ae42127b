#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace harmcurv {

// Malformed input or a precondition the caller could have checked.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The numerics could not deliver a trustworthy answer.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericError {
 public:
  ConvergenceError(const std::string& what, std::complex<double> best_iterate,
                   double residual)
      : NumericError(what), best_iterate_(best_iterate), residual_(residual) {}

  std::complex<double> best_iterate() const { return best_iterate_; }
  double residual() const { return residual_; }

 private:
  std::complex<double> best_iterate_;
  double residual_;
};

// A topology query whose answer changed when the grid was refined.
class ResolutionError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace harmcurv
