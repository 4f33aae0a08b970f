#pragma once

#include "mfal/matrix.hpp"
#include "mfal/qseries.hpp"

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <utility>

namespace mfal {

/// Exponents of tau, P (= E2), Q (= E4), R (= E6) and s (= 1/(2 pi i)).
struct QuasiExponents {
  int tau = 0, p = 0, q = 0, r = 0, s = 0;
  auto operator<=>(const QuasiExponents&) const = default;
};

/// Polynomial over Q in tau, P, Q, R and the unit s.
class QuasiPoly {
 public:
  QuasiPoly() = default;
  QuasiPoly(int c);  // NOLINT: integer literals are ring constants
  QuasiPoly(const Rational& c);  // NOLINT

  static QuasiPoly monomial(const Rational& c, QuasiExponents e);
  static QuasiPoly tau() { return monomial(1, {1, 0, 0, 0, 0}); }
  static QuasiPoly P() { return monomial(1, {0, 1, 0, 0, 0}); }
  static QuasiPoly Q() { return monomial(1, {0, 0, 1, 0, 0}); }
  static QuasiPoly R() { return monomial(1, {0, 0, 0, 1, 0}); }
  static QuasiPoly s(int power = 1) { return monomial(1, {0, 0, 0, 0, power}); }
  /// pi^2 = -1 / (4 s^2).
  static QuasiPoly pi_squared() { return monomial(Rational(-1, 4), {0, 0, 0, 0, -2}); }

  const std::map<QuasiExponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Single term c s^k, the units of the ring.
  bool is_unit() const;

  QuasiPoly operator-() const;
  QuasiPoly& operator+=(const QuasiPoly& o);
  QuasiPoly& operator-=(const QuasiPoly& o);
  QuasiPoly& operator*=(const QuasiPoly& o);
  friend QuasiPoly operator+(QuasiPoly a, const QuasiPoly& b) { return a += b; }
  friend QuasiPoly operator-(QuasiPoly a, const QuasiPoly& b) { return a -= b; }
  friend QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b);
  /// Division by a unit c s^k only.
  friend QuasiPoly operator/(const QuasiPoly& a, const QuasiPoly& b);
  friend bool operator==(const QuasiPoly& a, const QuasiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const QuasiExponents& e, const Rational& c);
  std::map<QuasiExponents, Rational> terms_;
};

QuasiPoly pow(const QuasiPoly& a, unsigned n);
/// (1/2 pi i) d/dtau under the Ramanujan relations.
QuasiPoly d_tau(const QuasiPoly& a);
/// d_tau(a) - (k/12) P a.
QuasiPoly serre_D(int k, const QuasiPoly& a);
/// tau -> tau + 1.
QuasiPoly shift_tau_qp(const QuasiPoly& a);

std::complex<double> substitute_numeric(const QuasiPoly& a, std::complex<double> tau, int order);

/// Coefficient series keyed by (tau-degree, s-degree).
using TauSeries = std::map<std::pair<int, int>, QSeries>;
TauSeries substitute_series(const QuasiPoly& a, int order);

std::string to_text(const QuasiPoly& a);

using QuasiMatrix = Mat<QuasiPoly>;

QuasiMatrix d_tau(const QuasiMatrix& m);
QuasiMatrix serre_D(int k, const QuasiMatrix& m);
QuasiMatrix shift_tau_qp(const QuasiMatrix& m);
QuasiPoly qp_det(const QuasiMatrix& m);
/// Needs a unit determinant.
QuasiMatrix qp_inverse(const QuasiMatrix& m);
Mat<std::complex<double>> substitute_numeric(const QuasiMatrix& m, std::complex<double> tau, int order);
QuasiMatrix to_quasi(const RatMat& m);

}  // namespace mfal

namespace Eigen {
template <>
struct NumTraits<mfal::QuasiPoly> : GenericNumTraits<mfal::QuasiPoly> {
  using Real = mfal::QuasiPoly;
  using NonInteger = mfal::QuasiPoly;
  using Nested = mfal::QuasiPoly;
  using Literal = mfal::QuasiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 200
  };
};
}  // namespace Eigen
