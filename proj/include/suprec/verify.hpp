#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace suprec {

// One verification check: `value` must lie in [lower, upper] (one-sided
// when a bound is absent).
struct LemmaCheckRow {
  std::string scope;
  std::string check;
  std::string params;
  double value = 0.0;
  std::optional<double> lower;
  std::optional<double> upper;
  bool pass = false;
};

// Known scopes: lemma1 lemma2 lemma3 lemma4 lemma5 lemma6 appendixE.
std::vector<std::string> all_lemma_scopes();

// Runs the desk-scale oracle suite for the requested scopes with
// deterministic row order.  Throws DomainError on an unknown scope name.
std::vector<LemmaCheckRow> verify_lemmas(const std::vector<std::string>& scopes,
                                         std::uint64_t seed, int threads = 0);

}  // namespace suprec
