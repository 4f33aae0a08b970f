#pragma once

#include "mfal/polynomial.hpp"
#include "mfal/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace mfal {

/// n-th cyclotomic polynomial over Q.
Poly<Rational> cyclotomic_polynomial(int n);

/// Element of Q(zeta_n), stored as a polynomial in zeta_n of degree below phi(n).
/// Rationals live in Q(zeta_1) and combine with any field.
class CycloNumber {
 public:
  CycloNumber() = default;
  CycloNumber(int c) : CycloNumber(Rational(c)) {}  // NOLINT
  CycloNumber(const Rational& c);                   // NOLINT

  /// zeta_n^power.
  static CycloNumber zeta(int n, int power = 1);

  int field() const noexcept { return n_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_rational() const noexcept { return coeffs_.size() <= 1; }
  Rational rational_value() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b);
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  CycloNumber inverse() const;
  std::string to_string() const;

 private:
  CycloNumber(int n, std::vector<Rational> coeffs);
  static int common_field(const CycloNumber& a, const CycloNumber& b);
  void trim();

  int n_ = 1;
  std::vector<Rational> coeffs_;
};

}  // namespace mfal

namespace Eigen {
template <>
struct NumTraits<mfal::CycloNumber> : GenericNumTraits<mfal::CycloNumber> {
  using Real = mfal::CycloNumber;
  using NonInteger = mfal::CycloNumber;
  using Nested = mfal::CycloNumber;
  using Literal = mfal::CycloNumber;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 32
  };
};
}  // namespace Eigen
