#include <doctest.h>

#include "mfal/error.hpp"
#include "mfal/vvmf.hpp"

using namespace mfal;

namespace {

std::int64_t monomial_count(int weight, int d1, int d2) {
  if (weight < 0) return 0;
  std::int64_t count = 0;
  for (int a = 0; a * d1 <= weight; ++a)
    if ((weight - a * d1) % d2 == 0) ++count;
  return count;
}

bool same(const QuasiMatrix& a, const QuasiMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace

TEST_CASE("phi matrices") {
  const PhiOperator p0 = phi(0);
  CHECK(p0.matrix.rows() == 1);
  CHECK(p0.matrix(0, 0) == QuasiPoly(1));

  const PhiOperator p1 = phi(1);
  const QuasiPoly tau = QuasiPoly::tau();
  const QuasiPoly y = QuasiPoly::P() * QuasiPoly::s(-1) * Rational(1, 12);
  CHECK(p1.matrix(0, 0) == tau * y + 1);
  CHECK(p1.matrix(0, 1) == tau);
  CHECK(p1.matrix(1, 0) == y);
  CHECK(p1.matrix(1, 1) == QuasiPoly(1));
  CHECK(p1.column_weights == std::vector<int>{1, -1});

  const PhiOperator p2 = phi(2);
  CHECK(p2.matrix(0, 2) == tau * tau);
  CHECK(p2.matrix(1, 2) == tau);
  CHECK(p2.matrix(2, 2) == QuasiPoly(1));
  for (int n = 0; n <= 6; ++n) {
    const PhiOperator p = phi(n);
    CHECK(qp_det(p.matrix) == QuasiPoly(1));
    for (int i = 0; i <= n; ++i) CHECK(p.matrix(i, n) == pow(tau, static_cast<unsigned>(n - i)));
  }
}

TEST_CASE("functoriality under Sym^n") {
  const PhiOperator p1 = phi(1);
  for (int n = 0; n <= 4; ++n) CHECK(same(sym_power<QuasiPoly>(p1.matrix, n), phi(n).matrix));
  RatMat g(2, 2), h(2, 2);
  g << 2, 3, 1, 2;
  h << 1, -1, 4, -3;
  for (int n = 0; n <= 5; ++n) {
    CHECK(equal<Rational>(RatMat(sym_power<Rational>(g, n) * sym_power<Rational>(h, n)), sym_power<Rational>(RatMat(g * h), n)));
    // The derivative of the group action is the sym_rep Lie algebra action.
    RatMat e(2, 2);
    e << 1, 1, 0, 1;
    const RatMat image = sym_power<Rational>(e, n);
    RatMat expected = identity<Rational>(n + 1);
    const SymRep rep = sym_rep(n);
    RatMat term = identity<Rational>(n + 1);
    for (int k = 1; k <= n; ++k) {
      term = (term * rep.E).eval() / Rational(k);
      expected += term;
    }
    CHECK(equal<Rational>(image, expected));
  }
}

TEST_CASE("modular equivariance") {
  for (int n = 0; n <= 4; ++n) CHECK(check_T_equivariance(n));
  for (int n = 0; n <= 4; ++n) {
    CHECK(check_S_equivariance(n, {0.0, 1.0}, 64) < 1e-8);
    CHECK(check_S_equivariance(n, {0.3, 1.1}, 64) < 1e-8);
  }
}

TEST_CASE("Hilbert series") {
  const HilbertSeries h0 = hilbert_vvmf(0, Group::Gamma1);
  const std::vector<std::int64_t> expected = {1, 0, 1, 1, 1, 1, 2};
  for (int i = 0; i < 7; ++i) CHECK(h0.coefficient(2 * i) == expected[static_cast<std::size_t>(i)]);

  for (int n = 0; n <= 4; ++n) {
    const HilbertSeries h = hilbert_vvmf(n, Group::Gamma1);
    for (int k = -n; k <= 40; ++k) {
      std::int64_t oracle = 0;
      for (int e = -n; e <= n; e += 2) oracle += monomial_count(k - e, 4, 6);
      CHECK(h.coefficient(k) == oracle);
    }
    const HilbertSeries h2 = hilbert_vvmf(n, Group::Gamma2);
    for (int k = -n; k <= 40; ++k) {
      std::int64_t oracle = 0;
      for (int e = -n; e <= n; e += 2) oracle += monomial_count(k - e, 2, 2);
      CHECK(h2.coefficient(k) == oracle);
    }
  }
  const HilbertSeries h2 = hilbert_vvmf(2, Group::Gamma1);
  CHECK(h2.coefficient(0) == 1);
  CHECK(h2.coefficient(-2) == 1);
  const auto dims = h2.coefficients(12);
  CHECK(dims.front().first == -2);
  CHECK(dims.back().first == 12);
  CHECK(hilbert_vvmf(1, Group::Gamma1).coefficient(-1) == 1);
  CHECK_THROWS_AS(hilbert_vvmf(1, Group::Gamma3), Error);
}
