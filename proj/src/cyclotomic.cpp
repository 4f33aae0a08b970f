#include "mfal/cyclotomic.hpp"

#include "mfal/error.hpp"
#include "mfal/matrix.hpp"

#include <map>
#include <mutex>

namespace mfal {

Poly<Rational> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, Poly<Rational>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly<Rational> p = Poly<Rational>::monomial(1, n) - Poly<Rational>(1);
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divmod(p, cyclotomic_polynomial(d)).first;
  std::lock_guard lock(mutex);
  return cache.emplace(n, p).first->second;
}

CycloNumber::CycloNumber(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

CycloNumber::CycloNumber(int n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) { trim(); }

void CycloNumber::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CycloNumber CycloNumber::zeta(int n, int power) {
  const Poly<Rational> reduced = divmod(Poly<Rational>::monomial(1, ((power % n) + n) % n), cyclotomic_polynomial(n)).second;
  return CycloNumber(n, reduced.coeffs());
}

Rational CycloNumber::rational_value() const {
  if (!is_rational()) throw Error(Errc::InvalidArgument, "not a rational number: " + to_string());
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

int CycloNumber::common_field(const CycloNumber& a, const CycloNumber& b) {
  if (a.is_rational()) return b.n_;
  if (b.is_rational() || a.n_ == b.n_) return a.n_;
  throw Error(Errc::InvalidArgument, "mixed cyclotomic fields");
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  n_ = common_field(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  const int n = CycloNumber::common_field(a, b);
  if (a.is_zero() || b.is_zero()) return CycloNumber();
  if (a.is_rational() || b.is_rational()) {
    const Rational& scale = a.is_rational() ? a.coeffs_[0] : b.coeffs_[0];
    CycloNumber out = a.is_rational() ? b : a;
    for (Rational& c : out.coeffs_) c *= scale;
    out.n_ = n;
    return out;
  }
  Poly<Rational> pa, pb;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) pa += Poly<Rational>::monomial(a.coeffs_[i], static_cast<int>(i));
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) pb += Poly<Rational>::monomial(b.coeffs_[i], static_cast<int>(i));
  return CycloNumber(n, divmod(pa * pb, cyclotomic_polynomial(n)).second.coeffs());
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw Error(Errc::InvalidArgument, "division by zero in a cyclotomic field");
  if (is_rational()) return CycloNumber(Rational(1) / coeffs_[0]);
  // Solve (this * x) = 1 through the multiplication matrix.
  const int dim = cyclotomic_polynomial(n_).degree();
  RatMat mult = zeros<Rational>(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const CycloNumber column = *this * zeta(n_, j);
    for (std::size_t i = 0; i < column.coeffs_.size(); ++i) mult(static_cast<Eigen::Index>(i), j) = column.coeffs_[i];
  }
  RatVec one = RatVec::Zero(dim);
  one(0) = 1;
  const auto x = solve<Rational>(mult, one);
  std::vector<Rational> coeffs(x->data(), x->data() + x->size());
  return CycloNumber(n_, std::move(coeffs));
}

CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.is_rational() && b.is_rational()) return a.coeffs_ == b.coeffs_;
  return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
}

std::string CycloNumber::to_string() const {
  Poly<Rational> p;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p += Poly<Rational>::monomial(coeffs_[i], static_cast<int>(i));
  return to_text(p, "z" + std::to_string(n_), [](const Rational& c) { return mfal::to_string(c); });
}

}  // namespace mfal
