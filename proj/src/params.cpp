#include "suprec/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace suprec {

ProblemParams ProblemParams::make(int n, int p, int k, double beta_min,
                                  double gamma, double noise_var) {
  ProblemParams params{n, p, k, beta_min, gamma, noise_var};
  validate(params);
  return params;
}

void validate(const ProblemParams& params) {
  if (params.n < 1) throw DomainError("n must be a positive integer");
  if (params.p < 1) throw DomainError("p must be a positive integer");
  if (params.k < 1 || params.k > params.p)
    throw DomainError("k must satisfy 1 <= k <= p");
  if (!(params.beta_min >= 0.0) || !std::isfinite(params.beta_min))
    throw DomainError("beta_min must be a finite nonnegative real");
  if (!(params.gamma > 0.0) || !(params.gamma <= 1.0))
    throw DomainError("gamma must lie in (0, 1]");
  if (params.noise_var != 1.0)
    throw DomainError("noise variance is fixed at 1 exactly");
}

double log_choose(int p, int k) {
  if (p < 0 || k < 0) throw DomainError("log_choose: negative argument");
  if (k > p) throw DomainError("log_choose: k exceeds p");
  if (k == 0 || k == p) return 0.0;
  const int m = std::min(k, p - k);
  // The three-lgamma form cancels catastrophically when m << p (the result
  // is tiny against lgamma(p+1)); summing ln((p-m+i)/i) keeps the relative
  // error at the 1e-15 level.  For large m the lgamma route is accurate.
  if (m <= 65536) {
    double sum = 0.0;
    for (int i = 1; i <= m; ++i)
      sum += std::log(static_cast<double>(p - m + i)) -
             std::log(static_cast<double>(i));
    return sum;
  }
  return std::lgamma(static_cast<double>(p) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(p - k) + 1.0);
}

double rate(int n, int p, int k) {
  if (n < 1) throw DomainError("rate: n must be positive");
  return log_choose(p, k) / static_cast<double>(n);
}

std::optional<std::uint64_t> binomial_count_within(int p, int k,
                                                   std::uint64_t cap) {
  if (p < 0 || k < 0 || k > p)
    throw DomainError("binomial_count_within: invalid (p, k)");
  k = std::min(k, p - k);
  // Partial product after step i equals C(p-k+i, i), which is nondecreasing
  // in i, so exceeding the cap early is conclusive.
  unsigned __int128 count = 1;
  for (int i = 1; i <= k; ++i) {
    count = count * static_cast<unsigned>(p - k + i) / static_cast<unsigned>(i);
    if (count > cap) return std::nullopt;
  }
  return static_cast<std::uint64_t>(count);
}

namespace {

std::string describe_count(int p, int k) {
  char buf[64];
  double lc = log_choose(p, k);
  if (lc < 43.0) {  // fits in a 64-bit integer comfortably
    auto exact = binomial_count_within(p, k, UINT64_MAX / 2);
    std::snprintf(buf, sizeof(buf), "%llu",
                  static_cast<unsigned long long>(*exact));
  } else {
    std::snprintf(buf, sizeof(buf), "exp(%.6g) ~ %.4g", lc, std::exp(lc));
  }
  return buf;
}

}  // namespace

void for_each_support(int p, int k,
                      const std::function<void(const std::vector<int>&)>& fn,
                      std::uint64_t cap) {
  if (p < 0 || k < 0 || k > p)
    throw DomainError("for_each_support: invalid (p, k)");
  if (!binomial_count_within(p, k, cap))
    throw CapacityError("subset enumeration cap exceeded: C(" +
                        std::to_string(p) + "," + std::to_string(k) + ") = " +
                        describe_count(p, k) + " > cap " + std::to_string(cap));
  if (k == 0) {
    fn({});
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    // Advance to the next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && idx[i] == p - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<SupportSet> enumerate_supports(int p, int k, std::uint64_t cap) {
  std::vector<SupportSet> out;
  if (auto count = binomial_count_within(p, k, cap))
    out.reserve(static_cast<std::size_t>(*count));
  for_each_support(
      p, k, [&out](const std::vector<int>& idx) { out.push_back({idx}); },
      cap);
  return out;
}

SupportSet make_support(std::vector<int> indices, int p) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw DomainError("support indices must be distinct");
  if (!indices.empty() && (indices.front() < 0 || indices.back() >= p))
    throw DomainError("support index out of range [0, p)");
  return SupportSet{std::move(indices)};
}

bool SparseSignal::in_class(double beta_min) const {
  for (const auto& [idx, value] : entries)
    if (value != 0.0 && std::abs(value) < beta_min) return false;
  return true;
}

SparseSignal make_constant_signal(const SupportSet& support, double beta_min,
                                  int p) {
  if (!(beta_min > 0.0))
    throw DomainError("make_constant_signal: beta_min must be positive");
  if (!support.indices.empty() && support.indices.back() >= p)
    throw DomainError("make_constant_signal: support exceeds dimension");
  SparseSignal signal;
  signal.dimension = p;
  for (int idx : support.indices) signal.entries[idx] = beta_min;
  return signal;
}

}  // namespace suprec
