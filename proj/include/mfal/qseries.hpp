#pragma once

#include "mfal/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mfal {

/// Default exponent bound for every construction; MFAL_ORDER overrides it.
int default_order();

/// A truncated expansion sum_e c_e q^e, q = exp(2 pi i tau), exact in both
/// exponents and coefficients. Terms at exponents >= trunc() are unknown.
class QSeries {
 public:
  struct Term {
    std::int64_t num;  ///< exponent is num / denom()
    Rational coeff;
  };

  /// The zero series known below `trunc`.
  explicit QSeries(Rational trunc = Rational(default_order()));

  static QSeries constant(const Rational& c, const Rational& trunc);
  static QSeries monomial(const Rational& c, const Rational& exponent, const Rational& trunc);
  /// Terms given as (exponent, coefficient); exponents >= trunc are dropped.
  static QSeries from_terms(const std::vector<std::pair<Rational, Rational>>& terms,
                            const Rational& trunc);

  std::int64_t denom() const noexcept { return denom_; }
  const Rational& trunc() const noexcept { return trunc_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational exponent(const Term& t) const { return Rational(t.num, denom_); }
  /// Least stored exponent; trunc() for the zero series.
  Rational valuation() const;
  Rational leading_coeff() const;
  /// Coefficient at `e`; throws InvalidArgument when e >= trunc().
  Rational coeff(const Rational& e) const;
  std::vector<std::pair<Rational, Rational>> items() const;

  QSeries truncated(const Rational& trunc) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator/=(const QSeries& other);
  QSeries& operator*=(const Rational& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator+(const QSeries& a, const Rational& c);
  friend QSeries operator-(const QSeries& a, const Rational& c) { return a + Rational(-c); }
  friend QSeries operator+(const Rational& c, const QSeries& a) { return a + c; }
  friend QSeries operator-(const Rational& c, const QSeries& a) { return (-a) + c; }

  /// Structural equality: same terms and same truncation.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  friend class QSeriesBuilder;
  void normalize();

  std::int64_t denom_ = 1;
  Rational trunc_;
  std::vector<Term> terms_;
};

QSeries inverse(const QSeries& a);
QSeries pow(const QSeries& a, long n);
/// tau -> m tau.
QSeries rescale_tau(const QSeries& a, const Rational& m);
/// tau -> tau + 1; needs every exponent denominator to divide 2.
QSeries shift_tau(const QSeries& a);
/// q d/dq.
QSeries q_derive(const QSeries& a);

std::complex<double> eval_numeric(const QSeries& a, std::complex<double> tau);
/// |q|^T at tau, a bound on the size of the first unknown term per unit coefficient.
double tail_bound(const QSeries& a, std::complex<double> tau);

/// Outcome of comparing two truncated series on their shared valid range.
struct Agreement {
  bool holds = false;
  Rational certified_to;          ///< exponents below this were compared
  std::optional<Rational> mismatch_at;
  std::string detail;
  explicit operator bool() const noexcept { return holds; }
};

/// Compares below min(T_a, T_b). Agreement needs a window of at least
/// `min_terms` units of q between the lowest exponent and that bound.
Agreement agree(const QSeries& a, const QSeries& b, int min_terms = 16);

std::string to_text(const QSeries& a, const std::string& var = "q");

}  // namespace mfal
