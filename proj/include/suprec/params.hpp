#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "suprec/errors.hpp"

namespace suprec {

// Default cap on the number of k-subsets any exhaustive routine is willing
// to touch.  Larger requests fail loudly (CapacityError) instead of
// silently sampling.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Problem parameterization (n, p, k, beta_min, gamma).  The noise variance
// is pinned to 1; any other value is rejected rather than rescaled.
//
// beta_min = 0 is admitted at the type level so that chance-level decoding
// experiments can be expressed; every bound evaluation requires
// beta_min > 0 and throws DomainError otherwise.
struct ProblemParams {
  int n = 1;                // number of measurements
  int p = 1;                // signal dimension
  int k = 1;                // signal sparsity
  double beta_min = 1.0;    // minimum nonzero magnitude
  double gamma = 1.0;       // measurement sparsity, fraction of nonzeros per row
  double noise_var = 1.0;   // fixed at 1

  double beta_min_sq() const { return beta_min * beta_min; }

  static ProblemParams make(int n, int p, int k, double beta_min,
                            double gamma = 1.0, double noise_var = 1.0);
};

// Throws DomainError when any field invariant is violated.
void validate(const ProblemParams& params);

// ln C(p, k) in nats, via log-gamma.  Accurate to ~1e-12 relative for
// p up to 1e6.  Throws DomainError for k < 0, p < 0 or k > p.
double log_choose(int p, int k);

// R = ln C(p,k) / n, nats of support uncertainty per measurement.
double rate(int n, int p, int k);

// Exact C(p,k) when it does not exceed `cap`, nullopt otherwise.
std::optional<std::uint64_t> binomial_count_within(int p, int k,
                                                   std::uint64_t cap);

// A k-subset of {0..p-1}, indices strictly increasing.
struct SupportSet {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }
  bool operator==(const SupportSet& other) const = default;
};

// Validates and normalizes (sorts) a support set for dimension p.
SupportSet make_support(std::vector<int> indices, int p);

// All k-subsets of {0..p-1} in lexicographic order.  Throws CapacityError
// naming C(p,k) when the count exceeds `cap`.
std::vector<SupportSet> enumerate_supports(
    int p, int k, std::uint64_t cap = kDefaultEnumerationCap);

// Streaming variant of enumerate_supports: invokes fn on each subset in
// lexicographic order without materializing the list.  The vector passed
// to fn is only valid during the call.
void for_each_support(int p, int k, const std::function<void(const std::vector<int>&)>& fn,
                      std::uint64_t cap = kDefaultEnumerationCap);

// A k-sparse signal in dimension p, stored as index -> value.
struct SparseSignal {
  int dimension = 0;
  std::map<int, double> entries;

  // Membership in the class C(beta_min): every nonzero has |value| >= beta_min.
  bool in_class(double beta_min) const;
};

// Signal equal to beta_min on every support index and zero elsewhere.
// Requires beta_min > 0 so the result is a genuine k-sparse class member.
SparseSignal make_constant_signal(const SupportSet& support, double beta_min,
                                  int p);

// n noisy (or noiseless) linear measurements.
struct ObservationVector {
  std::vector<double> values;
  bool noise_realized = false;
};

}  // namespace suprec
