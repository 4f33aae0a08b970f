#pragma once

#include "mfal/qseries.hpp"

#include <random>
#include <vector>

namespace mfal::testing {

/// Random series with small integer coefficients on the lattice (1/denom)Z,
/// valuation `lo` (in lattice units) and truncation `trunc`.
inline QSeries random_series(std::mt19937& rng, std::int64_t denom, std::int64_t lo, const Rational& trunc,
                             bool unit_leading = false) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<std::pair<Rational, Rational>> terms;
  for (std::int64_t k = lo;; ++k) {
    const Rational e(k, denom);
    if (e >= trunc) break;
    int c = coeff(rng);
    if (k == lo && (unit_leading || c == 0)) c = unit_leading ? 1 : 3;
    terms.emplace_back(e, Rational(c, 1 + (k % 3 == 0 ? 1 : 0)));
  }
  return QSeries::from_terms(terms, trunc);
}

/// Plain integer convolution of coefficient vectors, truncated to n entries.
inline std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n) {
  std::vector<Integer> out(n, Integer(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace mfal::testing
