#pragma once

#include <stdexcept>
#include <string>

namespace suprec {

// Invalid parameter values (k > p, nonpositive beta_min where a bound
// formula degenerates, gamma outside (0,1], ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine failed to reach its target accuracy.  Carries the
// error estimate that was actually achieved.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

// A request would exceed a configured enumeration cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace suprec
