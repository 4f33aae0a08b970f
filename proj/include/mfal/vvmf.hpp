#pragma once

#include "mfal/liealg.hpp"
#include "mfal/modforms.hpp"
#include "mfal/quasimodular.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace mfal {

/// exp(tau E) exp(y F) with y = 2 pi i E2 / 12, acting on Sym^n.
struct PhiOperator {
  int n = 0;
  QuasiMatrix matrix;
  /// H-eigenvalue k of each column; the column carries a dtau^(k/2) factor.
  std::vector<int> column_weights;
};

PhiOperator phi(int n);

/// Image of a 2x2 matrix under Sym^n in the basis of sym_rep.
template <class Scalar>
Mat<Scalar> sym_power(const Mat<Scalar>& g, int n) {
  Mat<Scalar> out = zeros<Scalar>(n + 1, n + 1);
  for (int a = n; a >= 0; --a) {
    // (g11 x + g21 y)^a (g12 x + g22 y)^(n-a), indexed by x-degree.
    std::vector<Scalar> poly(static_cast<std::size_t>(n + 1), Scalar(0));
    poly[0] = Scalar(1);
    int degree = 0;
    const auto multiply = [&](const Scalar& cx, const Scalar& cy) {
      for (int b = degree + 1; b >= 0; --b) {
        Scalar next = Scalar(0);
        if (b <= degree) next = next + cy * poly[static_cast<std::size_t>(b)];
        if (b > 0) next = next + cx * poly[static_cast<std::size_t>(b - 1)];
        poly[static_cast<std::size_t>(b)] = next;
      }
      ++degree;
    };
    for (int i = 0; i < a; ++i) multiply(g(0, 0), g(1, 0));
    for (int i = a; i < n; ++i) multiply(g(0, 1), g(1, 1));
    for (int b = 0; b <= n; ++b)
      out(n - b, n - a) = poly[static_cast<std::size_t>(b)] *
                          lift<Scalar>(Rational(binomial64(n, a), binomial64(n, b)));
  }
  return out;
}

bool check_T_equivariance(int n);
/// Max entry of |Phi(-1/tau) diag(tau^-k) - rho(S) Phi(tau)|.
double check_S_equivariance(int n, std::complex<double> tau, int order);

/// Numerator Laurent polynomial over prod (1 - t^d).
struct HilbertSeries {
  std::map<int, std::int64_t> numerator;
  std::vector<int> denominator_degrees;

  std::int64_t coefficient(int k) const;
  /// (k, dim) for k from the lowest numerator exponent up to k_max.
  std::vector<std::pair<int, std::int64_t>> coefficients(int k_max) const;
};

/// Gamma(1) and Gamma(2) only.
HilbertSeries hilbert_vvmf(int n, Group group);

}  // namespace mfal
