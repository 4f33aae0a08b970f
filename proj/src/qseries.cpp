#include "mfal/qseries.hpp"

#include "mfal/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace mfal {

int default_order() {
  if (const char* env = std::getenv("MFAL_ORDER")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1 && value <= 100000) return static_cast<int>(value);
  }
  return 64;
}

namespace {

std::int64_t ceil_times(const Rational& t, std::int64_t d) {
  // smallest integer k with k >= t * d
  return to_int64(numerator_of(ceil(t * d)));
}

}  // namespace

class QSeriesBuilder {
 public:
  /// Collects exponent numerators over a fixed denominator.
  QSeriesBuilder(std::int64_t denom, Rational trunc) : denom_(denom), trunc_(std::move(trunc)) {}

  void add(std::int64_t num, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = acc_.try_emplace(num, c);
    if (!inserted) it->second += c;
  }

  QSeries finish() {
    QSeries out(trunc_);
    out.denom_ = denom_;
    out.terms_.reserve(acc_.size());
    for (auto& [num, c] : acc_) out.terms_.push_back({num, std::move(c)});
    out.normalize();
    return out;
  }

 private:
  std::int64_t denom_;
  Rational trunc_;
  std::map<std::int64_t, Rational> acc_;
};

QSeries::QSeries(Rational trunc) : trunc_(std::move(trunc)) {}

void QSeries::normalize() {
  std::erase_if(terms_, [&](const Term& t) {
    return t.coeff == 0 || Rational(t.num, denom_) >= trunc_;
  });
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.num < b.num; });
  std::int64_t g = denom_;
  for (const auto& t : terms_) g = std::gcd(g, t.num);
  if (terms_.empty()) g = denom_;
  if (g > 1) {
    for (auto& t : terms_) t.num /= g;
    denom_ /= g;
  }
}

QSeries QSeries::constant(const Rational& c, const Rational& trunc) {
  return monomial(c, Rational(0), trunc);
}

QSeries QSeries::monomial(const Rational& c, const Rational& exponent, const Rational& trunc) {
  QSeries out(trunc);
  const std::int64_t d = to_int64(denominator_of(exponent));
  out.denom_ = d;
  if (c != 0 && exponent < trunc) out.terms_.push_back({to_int64(numerator_of(exponent)), c});
  out.normalize();
  return out;
}

QSeries QSeries::from_terms(const std::vector<std::pair<Rational, Rational>>& terms,
                            const Rational& trunc) {
  std::int64_t d = 1;
  for (const auto& [e, c] : terms) d = lcm64(d, to_int64(denominator_of(e)));
  QSeriesBuilder builder(d, trunc);
  for (const auto& [e, c] : terms) {
    if (e >= trunc) continue;
    builder.add(to_int64(numerator_of(e * d)), c);
  }
  return builder.finish();
}

Rational QSeries::valuation() const {
  return terms_.empty() ? trunc_ : Rational(terms_.front().num, denom_);
}

Rational QSeries::leading_coeff() const {
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

Rational QSeries::coeff(const Rational& e) const {
  if (e >= trunc_) throw Error(Errc::InvalidArgument, "coefficient at q^" + to_string(e) + " is beyond truncation");
  const Rational scaled = e * denom_;
  if (denominator_of(scaled) != 1) return 0;
  const std::int64_t num = to_int64(numerator_of(scaled));
  auto it = std::lower_bound(terms_.begin(), terms_.end(), num,
                             [](const Term& t, std::int64_t n) { return t.num < n; });
  return (it != terms_.end() && it->num == num) ? it->coeff : Rational(0);
}

std::vector<std::pair<Rational, Rational>> QSeries::items() const {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(exponent(t), t.coeff);
  return out;
}

QSeries QSeries::truncated(const Rational& trunc) const {
  QSeries out = *this;
  out.trunc_ = std::min(trunc, trunc_);
  out.normalize();
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

QSeries combine(const QSeries& a, const QSeries& b, int sign) {
  const std::int64_t d = lcm64(a.denom(), b.denom());
  const std::int64_t sa = d / a.denom(), sb = d / b.denom();
  QSeriesBuilder builder(d, std::min(a.trunc(), b.trunc()));
  for (const auto& t : a.terms()) builder.add(t.num * sa, t.coeff);
  for (const auto& t : b.terms()) builder.add(t.num * sb, sign > 0 ? t.coeff : Rational(-t.coeff));
  return builder.finish();
}

}  // namespace

QSeries& QSeries::operator+=(const QSeries& other) { return *this = combine(*this, other, +1); }
QSeries& QSeries::operator-=(const QSeries& other) { return *this = combine(*this, other, -1); }

QSeries& QSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    denom_ = 1;
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

QSeries operator+(const QSeries& a, const Rational& c) {
  return a + QSeries::constant(c, a.trunc());
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const Rational trunc = std::min(a.trunc() + b.valuation(), b.trunc() + a.valuation());
  const std::int64_t d = lcm64(a.denom(), b.denom());
  const std::int64_t sa = d / a.denom(), sb = d / b.denom();
  QSeriesBuilder builder(d, trunc);
  if (a.is_zero() || b.is_zero()) return builder.finish();

  const std::int64_t bound = ceil_times(trunc, d);  // keep k < bound
  const std::int64_t lo = a.terms().front().num * sa + b.terms().front().num * sb;
  if (bound <= lo) return builder.finish();

  const auto span = static_cast<std::size_t>(bound - lo);
  std::vector<int> slot;
  std::vector<Rational> acc;
  std::vector<std::int64_t> where;
  const bool dense = span <= (std::size_t{1} << 22);
  std::map<std::int64_t, Rational> sparse;
  if (dense) slot.assign(span, -1);

  for (const auto& ta : a.terms()) {
    const std::int64_t ka = ta.num * sa;
    for (const auto& tb : b.terms()) {
      const std::int64_t k = ka + tb.num * sb;
      if (k >= bound) break;
      if (dense) {
        int& s = slot[static_cast<std::size_t>(k - lo)];
        if (s < 0) {
          s = static_cast<int>(acc.size());
          acc.push_back(ta.coeff * tb.coeff);
          where.push_back(k);
        } else {
          acc[static_cast<std::size_t>(s)] += ta.coeff * tb.coeff;
        }
      } else {
        sparse[k] += ta.coeff * tb.coeff;
      }
    }
  }
  if (dense)
    for (std::size_t i = 0; i < acc.size(); ++i) builder.add(where[i], acc[i]);
  else
    for (auto& [k, c] : sparse) builder.add(k, c);
  return builder.finish();
}

QSeries& QSeries::operator*=(const QSeries& other) { return *this = *this * other; }

QSeries inverse(const QSeries& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroSeries, "divisor has no terms below its truncation");
  const auto terms = b.terms();
  const std::int64_t d = b.denom();
  const std::int64_t k0 = terms.front().num;
  const Rational v = b.valuation();
  const Rational rel_trunc = b.trunc() - v;

  std::int64_t step = 0;
  for (const auto& t : terms) step = std::gcd(step, t.num - k0);
  if (step == 0) step = d;

  // u = sum_i u_i x^{m_i} with x = q^{step/d}; invert u as a power series in x.
  std::vector<std::pair<std::int64_t, const Rational*>> u;
  for (const auto& t : terms) u.emplace_back((t.num - k0) / step, &t.coeff);
  const std::int64_t count = ceil_times(rel_trunc, d) / step + 1;
  const Rational inv_c0 = Rational(1) / *u.front().second;

  std::vector<Rational> w;
  std::vector<std::int64_t> nonzero;
  w.reserve(static_cast<std::size_t>(count));
  QSeriesBuilder builder(d, b.trunc() - 2 * v);
  for (std::int64_t m = 0; m < count; ++m) {
    if (Rational(m * step, d) >= rel_trunc) break;
    Rational sum = 0;
    if (m == 0) {
      sum = inv_c0;
    } else {
      for (std::size_t i = 1; i < u.size() && u[i].first <= m; ++i) {
        const Rational& prev = w[static_cast<std::size_t>(m - u[i].first)];
        if (prev != 0) sum += *u[i].second * prev;
      }
      sum *= -inv_c0;
    }
    if (sum != 0) builder.add(-k0 + m * step, sum);
    w.push_back(std::move(sum));
  }
  return builder.finish();
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * inverse(b); }

QSeries& QSeries::operator/=(const QSeries& other) { return *this = *this / other; }

bool operator==(const QSeries& a, const QSeries& b) {
  if (a.trunc_ != b.trunc_ || a.denom_ != b.denom_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].num != b.terms_[i].num || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

QSeries pow(const QSeries& a, long n) {
  if (n < 0) return pow(inverse(a), -n);
  QSeries result = QSeries::constant(1, a.trunc());
  if (n == 0) return result;
  QSeries base = a;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

QSeries rescale_tau(const QSeries& a, const Rational& m) {
  if (m <= 0) throw Error(Errc::InvalidArgument, "rescale factor must be positive");
  std::vector<std::pair<Rational, Rational>> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.emplace_back(a.exponent(t) * m, t.coeff);
  return QSeries::from_terms(terms, a.trunc() * m);
}

QSeries shift_tau(const QSeries& a) {
  if (2 % a.denom() != 0)
    throw Error(Errc::NeedsCyclotomic, "exponent denominator " + std::to_string(a.denom()) + " exceeds 2");
  std::vector<std::pair<Rational, Rational>> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    const std::int64_t twice = 2 * t.num / a.denom();
    terms.emplace_back(a.exponent(t), (twice % 2 == 0) ? t.coeff : Rational(-t.coeff));
  }
  return QSeries::from_terms(terms, a.trunc());
}

QSeries q_derive(const QSeries& a) {
  std::vector<std::pair<Rational, Rational>> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.emplace_back(a.exponent(t), a.exponent(t) * t.coeff);
  return QSeries::from_terms(terms, a.trunc());
}

std::complex<double> eval_numeric(const QSeries& a, std::complex<double> tau) {
  if (!(tau.imag() > 0)) throw Error(Errc::NotConvergent, "Im(tau) must be positive");
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  std::complex<double> sum = 0.0;
  for (const auto& t : a.terms()) {
    const double e = static_cast<double>(t.num) / static_cast<double>(a.denom());
    sum += to_double(t.coeff) * std::exp(two_pi_i * e * tau);
  }
  return sum;
}

double tail_bound(const QSeries& a, std::complex<double> tau) {
  if (!(tau.imag() > 0)) throw Error(Errc::NotConvergent, "Im(tau) must be positive");
  return std::exp(-2.0 * std::numbers::pi * tau.imag() * to_double(a.trunc()));
}

Agreement agree(const QSeries& a, const QSeries& b, int min_terms) {
  Agreement out;
  out.certified_to = std::min(a.trunc(), b.trunc());
  Rational lo = out.certified_to;
  if (!a.is_zero()) lo = std::min(lo, a.valuation());
  if (!b.is_zero()) lo = std::min(lo, b.valuation());
  if (a.is_zero() && b.is_zero()) lo = std::min(Rational(0), lo);
  if (out.certified_to - lo < min_terms) {
    out.detail = "shared window below q^" + to_string(out.certified_to) + " is shorter than " +
                 std::to_string(min_terms) + " terms";
    return out;
  }
  const QSeries diff = a - b;
  if (!diff.is_zero()) {
    out.mismatch_at = diff.valuation();
    out.detail = "first mismatch at q^" + to_string(diff.valuation());
    return out;
  }
  out.holds = true;
  out.detail = "exact below q^" + to_string(out.certified_to);
  return out;
}

std::string to_text(const QSeries& a, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms()) {
    const Rational e = a.exponent(t);
    Rational c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = (c == 1);
    if (e == 0) {
      os << to_string(c);
    } else {
      if (!unit) os << to_string(c) << " ";
      os << var;
      if (e != 1) {
        const std::string es = to_string(e);
        os << "^" << (denominator_of(e) == 1 ? es : "(" + es + ")");
      }
    }
    first = false;
  }
  const std::string ts = to_string(a.trunc());
  os << (first ? "" : " + ") << "O(" << var << "^" << (denominator_of(a.trunc()) == 1 ? ts : "(" + ts + ")") << ")";
  return os.str();
}

}  // namespace mfal
