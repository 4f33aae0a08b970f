#include "mfal/quasimodular.hpp"

#include "mfal/error.hpp"
#include "mfal/modforms.hpp"

#include <numbers>
#include <sstream>

namespace mfal {

QuasiPoly::QuasiPoly(int c) : QuasiPoly(Rational(c)) {}

QuasiPoly::QuasiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(QuasiExponents{}, c);
}

QuasiPoly QuasiPoly::monomial(const Rational& c, QuasiExponents e) {
  if (e.tau < 0 || e.p < 0 || e.q < 0 || e.r < 0)
    throw Error(Errc::InvalidArgument, "only s may carry a negative exponent");
  QuasiPoly out;
  out.add_term(e, c);
  return out;
}

bool QuasiPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return e.tau == 0 && e.p == 0 && e.q == 0 && e.r == 0;
}

void QuasiPoly::add_term(const QuasiExponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QuasiPoly QuasiPoly::operator-() const {
  QuasiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QuasiPoly& QuasiPoly::operator+=(const QuasiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QuasiPoly& QuasiPoly::operator-=(const QuasiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b) {
  QuasiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea.tau + eb.tau, ea.p + eb.p, ea.q + eb.q, ea.r + eb.r, ea.s + eb.s}, ca * cb);
  return out;
}

QuasiPoly& QuasiPoly::operator*=(const QuasiPoly& o) { return *this = *this * o; }

QuasiPoly operator/(const QuasiPoly& a, const QuasiPoly& b) {
  if (!b.is_unit()) throw Error(Errc::NotInvertible, "divisor " + to_text(b) + " is not a unit");
  const auto& [e, c] = *b.terms_.begin();
  return a * QuasiPoly::monomial(Rational(1) / c, {0, 0, 0, 0, -e.s});
}

QuasiPoly pow(const QuasiPoly& a, unsigned n) {
  QuasiPoly out(1);
  for (unsigned i = 0; i < n; ++i) out *= a;
  return out;
}

QuasiPoly d_tau(const QuasiPoly& a) {
  // D(tau) = s, D(P) = (P^2 - Q)/12, D(Q) = (PQ - R)/3, D(R) = (PR - Q^2)/2, D(s) = 0
  const QuasiPoly d_generator[4] = {
      QuasiPoly::s(),
      Rational(1, 12) * (QuasiPoly::P() * QuasiPoly::P() - QuasiPoly::Q()),
      Rational(1, 3) * (QuasiPoly::P() * QuasiPoly::Q() - QuasiPoly::R()),
      Rational(1, 2) * (QuasiPoly::P() * QuasiPoly::R() - QuasiPoly::Q() * QuasiPoly::Q()),
  };
  QuasiPoly out;
  for (const auto& [e, c] : a.terms()) {
    const int degrees[4] = {e.tau, e.p, e.q, e.r};
    for (int g = 0; g < 4; ++g) {
      if (degrees[g] == 0) continue;
      QuasiExponents lowered = e;
      int* slot[4] = {&lowered.tau, &lowered.p, &lowered.q, &lowered.r};
      *slot[g] -= 1;
      out += QuasiPoly::monomial(c * degrees[g], lowered) * d_generator[g];
    }
  }
  return out;
}

QuasiPoly serre_D(int k, const QuasiPoly& a) {
  return d_tau(a) - Rational(k, 12) * QuasiPoly::P() * a;
}

QuasiPoly shift_tau_qp(const QuasiPoly& a) {
  QuasiPoly out;
  for (const auto& [e, c] : a.terms()) {
    for (int i = 0; i <= e.tau; ++i) {
      QuasiExponents shifted = e;
      shifted.tau = i;
      out += QuasiPoly::monomial(c * binomial64(e.tau, i), shifted);
    }
  }
  return out;
}

std::complex<double> substitute_numeric(const QuasiPoly& a, std::complex<double> tau, int order) {
  if (!(tau.imag() > 0)) throw Error(Errc::NotConvergent, "Im(tau) must be positive");
  const std::complex<double> e2 = eval_numeric(named_form("E2", order)->series, tau);
  const std::complex<double> e4 = eval_numeric(named_form("E4", order)->series, tau);
  const std::complex<double> e6 = eval_numeric(named_form("E6", order)->series, tau);
  const std::complex<double> s = 1.0 / std::complex<double>(0.0, 2.0 * std::numbers::pi);
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : a.terms())
    sum += to_double(c) * std::pow(tau, e.tau) * std::pow(e2, e.p) * std::pow(e4, e.q) * std::pow(e6, e.r) *
           std::pow(s, e.s);
  return sum;
}

TauSeries substitute_series(const QuasiPoly& a, int order) {
  const QSeries& e2 = named_form("E2", order)->series;
  const QSeries& e4 = named_form("E4", order)->series;
  const QSeries& e6 = named_form("E6", order)->series;
  TauSeries out;
  for (const auto& [e, c] : a.terms()) {
    const QSeries term = c * (pow(e2, e.p) * pow(e4, e.q) * pow(e6, e.r));
    const auto key = std::make_pair(e.tau, e.s);
    auto it = out.find(key);
    if (it == out.end())
      out.emplace(key, term);
    else
      it->second += term;
  }
  return out;
}

std::string to_text(const QuasiPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto factor = [&](std::ostringstream& o, const char* name, int power) {
    if (power == 0) return;
    o << " " << name;
    if (power != 1) o << "^" << power;
  };
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::ostringstream body;
    factor(body, "τ", e.tau);
    factor(body, "E2", e.p);
    factor(body, "E4", e.q);
    factor(body, "E6", e.r);
    if (e.s != 0) {
      body << " (2πi)";
      if (e.s != -1) body << "^" << -e.s;
    }
    const std::string rest = body.str();
    const Rational mag = abs(c);
    if (mag != 1 || rest.empty())
      os << to_string(mag) << rest;
    else
      os << rest.substr(1);
  }
  return os.str();
}

QuasiMatrix d_tau(const QuasiMatrix& m) {
  return map_entries<QuasiPoly>(m, [](const QuasiPoly& x) { return d_tau(x); });
}

QuasiMatrix serre_D(int k, const QuasiMatrix& m) {
  return map_entries<QuasiPoly>(m, [k](const QuasiPoly& x) { return serre_D(k, x); });
}

QuasiMatrix shift_tau_qp(const QuasiMatrix& m) {
  return map_entries<QuasiPoly>(m, [](const QuasiPoly& x) { return shift_tau_qp(x); });
}

QuasiPoly qp_det(const QuasiMatrix& m) { return ring_determinant<QuasiPoly>(m); }

QuasiMatrix qp_inverse(const QuasiMatrix& m) {
  const QuasiPoly det = qp_det(m);
  if (!det.is_unit()) throw Error(Errc::NotInvertible, "determinant " + to_text(det) + " is not a unit");
  const QuasiMatrix adj = adjugate<QuasiPoly>(m);
  return map_entries<QuasiPoly>(adj, [&](const QuasiPoly& x) { return x / det; });
}

Mat<std::complex<double>> substitute_numeric(const QuasiMatrix& m, std::complex<double> tau, int order) {
  return map_entries<std::complex<double>>(m, [&](const QuasiPoly& x) { return substitute_numeric(x, tau, order); });
}

QuasiMatrix to_quasi(const RatMat& m) {
  return map_entries<QuasiPoly>(m, [](const Rational& x) { return QuasiPoly(x); });
}

}  // namespace mfal
