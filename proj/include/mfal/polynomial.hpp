#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mfal {

/// Dense univariate polynomial, coefficients stored from degree 0 up.
template <class C>
class Poly {
 public:
  Poly() = default;
  Poly(C c) {  // NOLINT: constants embed into the ring
    if (!(c == C(0))) coeffs_.push_back(std::move(c));
  }
  Poly(int c) : Poly(C(c)) {}  // NOLINT

  static Poly monomial(C c, int degree) {
    Poly p;
    if (c == C(0)) return p;
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, C(0));
    p.coeffs_.back() = std::move(c);
    return p;
  }
  static Poly x() { return monomial(C(1), 1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const noexcept { return coeffs_; }
  C coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : C(0); }
  const C& leading() const { return coeffs_.back(); }

  C eval(const C& at) const {
    C out(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * at + *it;
    return out;
  }

  Poly derivative() const {
    Poly p;
    for (int i = 1; i <= degree(); ++i) p.coeffs_.push_back(coeffs_[static_cast<std::size_t>(i)] * C(i));
    p.trim();
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    for (C& c : p.coeffs_) c = -c;
    return p;
  }
  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] = p.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    p.trim();
    return p;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder by a polynomial with invertible leading coefficient.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    Poly quotient, remainder = a;
    if (b.is_zero()) return {quotient, remainder};
    const C lead_inv = C(1) / b.leading();
    while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
      const Poly term = monomial(remainder.leading() * lead_inv, remainder.degree() - b.degree());
      quotient += term;
      remainder -= term * b;
    }
    return {quotient, remainder};
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
  }
  std::vector<C> coeffs_;
};

template <class C>
Poly<C> pow(const Poly<C>& p, unsigned n) {
  Poly<C> out(1), base = p;
  while (n > 0) {
    if (n & 1u) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

/// Renders with `var` and a caller-supplied coefficient printer.
template <class C, class Printer>
std::string to_text(const Poly<C>& p, const std::string& var, Printer print) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const C c = p.coeff(i);
    if (c == C(0)) continue;
    std::string body = print(c);
    const bool unit = body == "1" || body == "-1";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (i == 0) term = body;
    else if (unit) term = (body == "-1" ? "-" : "") + mono;
    else term = (body.find_first_of("+ ") != std::string::npos ? "(" + body + ")" : body) + " " + mono;
    if (out.empty()) out = term;
    else if (term.starts_with('-')) out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

}  // namespace mfal
