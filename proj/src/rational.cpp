#include "mfal/rational.hpp"

#include "mfal/error.hpp"

#include <cmath>
#include <numeric>

namespace mfal {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case Errc::NeedsCyclotomic: return "NeedsCyclotomic";
    case Errc::NotConvergent: return "NotConvergent";
    case Errc::OddWeight: return "OddWeight";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NoRationalTriple: return "NoRationalTriple";
    case Errc::OddLabel: return "OddLabel";
    case Errc::OddGrading: return "OddGrading";
    case Errc::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case Errc::UnknownForm: return "UnknownForm";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

std::string to_fraction_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return to_fraction_string(r);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string v) {
    const auto b = v.find_first_not_of(" \t");
    const auto e = v.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  s = strip(s);
  if (s.empty()) throw Error(Errc::InvalidArgument, "empty rational");
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(strip(s.substr(0, slash)));
    Integer den(strip(s.substr(slash + 1)));
    if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(Errc::InvalidArgument, "malformed rational '" + s + "'");
  }
}

std::int64_t to_int64(const Integer& z) {
  if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN))
    throw Error(Errc::InvalidArgument, "integer out of 64-bit range");
  return z.convert_to<std::int64_t>();
}

std::int64_t to_int64(const Rational& r) {
  if (denominator_of(r) != 1) throw Error(Errc::InvalidArgument, "expected an integer, got " + to_string(r));
  return to_int64(numerator_of(r));
}

Rational floor(const Rational& r) {
  Integer n = numerator_of(r), d = denominator_of(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return Rational(q);
}

Rational ceil(const Rational& r) { return -floor(-r); }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t binomial64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

Integer factorial(int n) {
  Integer result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace mfal
