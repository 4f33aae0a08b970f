#include "mfal/modforms.hpp"

#include "mfal/error.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace mfal {

std::string group_name(Group g) {
  switch (g) {
    case Group::Gamma1: return "Gamma(1)";
    case Group::Gamma2: return "Gamma(2)";
    case Group::Gamma3: return "Gamma(3)";
    case Group::Gamma4: return "Gamma(4)";
    case Group::Gamma5: return "Gamma(5)";
  }
  return "?";
}

Group parse_group(const std::string& name) {
  for (Group g : {Group::Gamma1, Group::Gamma2, Group::Gamma3, Group::Gamma4, Group::Gamma5}) {
    const std::string full = group_name(g);
    std::string compact = full;
    std::erase(compact, '(');
    std::erase(compact, ')');
    if (name == full || name == compact) return g;
  }
  throw Error(Errc::InvalidArgument, "unknown group: " + name);
}

Rational bernoulli(int k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "Bernoulli index must be nonnegative");
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational sum = 0;
    Integer binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      sum += Rational(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -sum / (m + 1);
  }
  return b[static_cast<std::size_t>(k)];
}

namespace {

/// prod_{k >= 0} (1 - q^{start + k step}) below `trunc`, start > 0.
QSeries pochhammer(const Rational& start, const Rational& step, const Rational& trunc) {
  QSeries result = QSeries::constant(1, trunc);
  for (Rational e = start; e < trunc; e += step)
    result = result * (QSeries::constant(1, trunc) - QSeries::monomial(1, e, trunc));
  return result;
}

/// prod_{n >= 1} (1 - q^n) below `trunc`.
QSeries euler_unit(const Rational& trunc) { return pochhammer(1, 1, trunc); }

/// q^e a, keeping a's relative precision.
QSeries times_monomial(const QSeries& a, const Rational& e) {
  return a * QSeries::monomial(1, e, e + (a.trunc() - a.valuation()) + 1);
}

/// Delta / q below `trunc`.
QSeries delta_unit(const Rational& trunc) { return pow(euler_unit(trunc), 24); }

int as_order(const Rational& t) { return static_cast<int>(to_int64(numerator_of(ceil(t)))); }

}  // namespace

NamedForm eisenstein(int k, int order) {
  if (k < 2 || k % 2 != 0) throw Error(Errc::InvalidArgument, "Eisenstein weight must be even and >= 2");
  const Rational factor = Rational(-2 * k) / bernoulli(k);
  std::vector<std::pair<Rational, Rational>> terms{{Rational(0), Rational(1)}};
  for (int n = 1; n < order; ++n) {
    Integer sigma = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) sigma += boost::multiprecision::pow(Integer(d), static_cast<unsigned>(k - 1));
    terms.emplace_back(Rational(n), factor * Rational(sigma));
  }
  return {"E" + std::to_string(k), Rational(k), Group::Gamma1, QSeries::from_terms(terms, order)};
}

NamedForm discriminant(int order) {
  const QSeries e4 = eisenstein(4, order).series, e6 = eisenstein(6, order).series;
  return {"Delta", 12, Group::Gamma1, (pow(e4, 3) - pow(e6, 2)) * Rational(1, 1728)};
}

QSeries discriminant_eta_product(int order) {
  return times_monomial(delta_unit(Rational(order - 1)), 1);
}

NamedForm j_invariant(int order) {
  const QSeries e4 = eisenstein(4, order + 2).series;
  const QSeries delta = discriminant_eta_product(order + 2);
  return {"j", 0, Group::Gamma1, (pow(e4, 3) / delta).truncated(order)};
}

NamedForm j_minus_1728(int order) {
  const QSeries e6 = eisenstein(6, order + 2).series;
  const QSeries delta = discriminant_eta_product(order + 2);
  return {"j1728", 0, Group::Gamma1, (pow(e6, 2) / delta).truncated(order)};
}

NamedForm theta(int index, int order) {
  if (index < 2 || index > 4) throw Error(Errc::InvalidArgument, "theta index must be 2, 3 or 4");
  std::vector<std::pair<Rational, Rational>> terms;
  if (index == 2) {
    for (int n = 0;; ++n) {
      const Rational e((2 * n + 1) * (2 * n + 1), 8);
      if (e >= order) break;
      terms.emplace_back(e, 2);
    }
  } else {
    terms.emplace_back(0, 1);
    for (int n = 1;; ++n) {
      const Rational e(n * n, 2);
      if (e >= order) break;
      terms.emplace_back(e, (index == 4 && n % 2 == 1) ? -2 : 2);
    }
  }
  return {"theta" + std::to_string(index), Rational(1, 2), Group::Gamma2, QSeries::from_terms(terms, order)};
}

NamedForm dedekind_eta(int order) {
  return {"eta", Rational(1, 2), Group::Gamma1, eta_quotient({{Rational(1), 1}}, order)};
}

QSeries eta_quotient(const std::vector<EtaFactor>& factors, int order) {
  Rational lead = 0;
  for (const auto& f : factors) {
    if (f.scale <= 0) throw Error(Errc::InvalidArgument, "eta scale must be positive");
    lead += f.scale * f.exponent / 24;
  }
  const Rational unit_trunc = Rational(order) - lead;
  QSeries unit = QSeries::constant(1, unit_trunc);
  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    const QSeries base = pochhammer(f.scale, f.scale, unit_trunc);
    unit = unit * pow(base, f.exponent);
  }
  return times_monomial(unit, lead);
}

NamedForm klein_form(const Rational& r1, int scale, int order) {
  if (r1 <= 0 || r1 >= 1) throw Error(Errc::InvalidArgument, "klein_form needs 0 < r1 < 1");
  if (scale <= 0) throw Error(Errc::InvalidArgument, "klein_form scale must be positive");
  const Rational s(scale);
  const Rational lead = r1 * s * (r1 - 1) / 2;
  const Rational unit_trunc = Rational(order) - lead;
  QSeries unit = pochhammer(r1 * s, s, unit_trunc) * pochhammer((1 - r1) * s, s, unit_trunc) /
                 pow(pochhammer(s, s, unit_trunc), 2);
  Group group = Group::Gamma1;
  switch (to_int64(denominator_of(r1))) {
    case 2: group = Group::Gamma2; break;
    case 3: group = Group::Gamma3; break;
    case 4: group = Group::Gamma4; break;
    case 5: group = Group::Gamma5; break;
    default: throw Error(Errc::Unsupported, "Klein form levels beyond 5 are not housed");
  }
  return {"klein(" + to_string(r1) + ",0)(" + std::to_string(scale) + "tau)", -1, group,
          times_monomial(unit, lead).truncated(order)};
}

NamedForm gamma5_form_f(int order) {
  const Rational klein_lead = Rational(1, 5) * 5 * (Rational(1, 5) - 1) / 2;
  const Rational lead = Rational(15 * 5, 24) + 5 * klein_lead - Rational(3, 24);
  const int inner = as_order(Rational(order) - lead) + 1;
  const QSeries eta_part = eta_quotient({{Rational(5), 15}, {Rational(1), -3}}, inner + 4);
  const QSeries klein = klein_form(Rational(1, 5), 5, inner + 4).series;
  return {"f_gamma5", 1, Group::Gamma5, (eta_part * pow(klein, 5)).truncated(order)};
}

Gamma2Generators gamma2_generators(int order) {
  const QSeries e2 = eisenstein(2, 2 * order).series;
  const QSeries f2_wide = rescale_tau(e2, 2) * Rational(2) - e2;
  Gamma2Generators g;
  g.F2 = f2_wide.truncated(order);
  g.H2 = rescale_tau(f2_wide, Rational(1, 2)).truncated(order);
  g.theta2_4 = pow(theta(2, order).series, 4);
  g.theta3_4 = pow(theta(3, order).series, 4);
  g.theta4_4 = pow(theta(4, order).series, 4);
  return g;
}

NamedForm lambda_invariant(int order) {
  const QSeries t2 = theta(2, order).series, t3 = theta(3, order).series;
  return {"lambda", 0, Group::Gamma2, pow(t2, 4) / pow(t3, 4)};
}

NamedForm mu_gamma4(int order) {
  const QSeries t2 = theta(2, order).series, t3 = theta(3, order).series, t4 = theta(4, order).series;
  return {"mu", 0, Group::Gamma4, pow(t4, 2) / (pow(t2, 2) + pow(t3, 2))};
}

Gamma3Generators gamma3_generators(int order) {
  const int bound = static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(order)))) + 2;
  std::map<int, Rational> phi1, phi2;
  for (int x = -bound; x <= bound; ++x)
    for (int y = -bound; y <= bound; ++y) {
      const int form = x * x - x * y + y * y;
      if (form < order) phi1[form] += 1;
      const int shifted = form + x - y;
      if (Rational(shifted) + Rational(1, 3) < order) phi2[shifted] += 1;
    }
  std::vector<std::pair<Rational, Rational>> t1, t2;
  for (const auto& [e, c] : phi1) t1.emplace_back(Rational(e), c);
  for (const auto& [e, c] : phi2) t2.emplace_back(Rational(e) + Rational(1, 3), c);
  return {QSeries::from_terms(t1, order), QSeries::from_terms(t2, order)};
}

DukeJenkinsExponents duke_jenkins_exponents(int k) {
  if (k % 2 != 0) throw Error(Errc::OddWeight, "weight " + std::to_string(k) + " is odd");
  const int residue = ((k % 12) + 12) % 12;
  DukeJenkinsExponents out;
  switch (residue) {
    case 0: out = {0, 0, 0, 0}; break;
    case 2: out = {0, 2, 1, 14}; break;
    case 4: out = {0, 1, 0, 4}; break;
    case 6: out = {0, 0, 1, 6}; break;
    case 8: out = {0, 2, 0, 8}; break;
    case 10: out = {0, 1, 1, 10}; break;
  }
  out.ell = (k - out.s) / 12;
  return out;
}

NamedForm duke_jenkins(int k, int order) {
  const auto ex = duke_jenkins_exponents(k);
  const Rational unit_trunc = Rational(order - ex.ell);
  const int inner = as_order(unit_trunc);
  QSeries unit = pow(delta_unit(unit_trunc), ex.ell);
  if (ex.n4) unit = unit * pow(eisenstein(4, inner).series, ex.n4);
  if (ex.n6) unit = unit * pow(eisenstein(6, inner).series, ex.n6);
  return {"F_" + std::to_string(k), k, Group::Gamma1, times_monomial(unit, ex.ell).truncated(order)};
}

QSeries serre_derivative(int k, const QSeries& f) {
  if (f.is_zero()) return f;
  const int inner = std::max(1, as_order(f.trunc() - f.valuation()));
  const QSeries e2 = eisenstein(2, inner).series;
  return q_derive(f) - Rational(k, 12) * (e2 * f);
}

namespace {

/// E4 E6 / Delta below `trunc`.
QSeries e4e6_over_delta(const Rational& trunc) {
  const int inner = as_order(trunc) + 2;
  const QSeries num = eisenstein(4, inner).series * eisenstein(6, inner).series;
  return (num / discriminant_eta_product(inner + 1)).truncated(trunc);
}

}  // namespace

QSeries delta_derivation(const QSeries& f) {
  const QSeries df = q_derive(f);
  const Rational v = df.is_zero() ? f.trunc() : df.valuation();
  return e4e6_over_delta(f.trunc() - v + 1) * df;
}

QSeries delta_prefactor(int order) {
  return times_monomial(e4e6_over_delta(Rational(order - 1)), 1);
}

Agreement check_discriminant_routes(int order) {
  return agree(discriminant(order).series, discriminant_eta_product(order));
}

Agreement check_j_minus_1728(int order) {
  return agree(j_invariant(order).series - Rational(1728), j_minus_1728(order).series);
}

std::vector<Agreement> check_ramanujan(int order) {
  const QSeries e2 = eisenstein(2, order).series, e4 = eisenstein(4, order).series,
                e6 = eisenstein(6, order).series;
  return {agree(serre_derivative(1, e2), Rational(-1, 12) * e4),
          agree(serre_derivative(4, e4), Rational(-1, 3) * e6),
          agree(serre_derivative(6, e6), Rational(-1, 2) * pow(e4, 2))};
}

Agreement check_serre_discriminant(int order) {
  return agree(serre_derivative(12, discriminant(order).series), QSeries(order));
}

Agreement check_delta_of_j(int order) {
  const QSeries j = j_invariant(order + 2).series;
  return agree(delta_derivation(j), -(j * (j - Rational(1728))));
}

std::vector<Agreement> check_eisenstein_powers(int order) {
  const QSeries e4 = eisenstein(4, order).series, e6 = eisenstein(6, order).series;
  return {agree(eisenstein(8, order).series, pow(e4, 2)),
          agree(eisenstein(10, order).series, e4 * e6),
          agree(eisenstein(14, order).series, pow(e4, 2) * e6)};
}

Agreement check_jacobi_theta(int order) {
  const auto g = gamma2_generators(order);
  return agree(g.theta2_4 + g.theta4_4, g.theta3_4);
}

Agreement check_theta_product(int order) {
  const QSeries t2 = theta(2, order).series, t3 = theta(3, order).series, t4 = theta(4, order).series;
  return agree(pow(t2, 8) * pow(t3, 8) * pow(t4, 8), Rational(256) * discriminant_eta_product(order));
}

std::vector<Agreement> check_gamma2_combinations(int order) {
  const auto g = gamma2_generators(order);
  return {agree(g.theta2_4, Rational(-2, 3) * g.F2 + Rational(2, 3) * g.H2),
          agree(g.theta3_4, Rational(2, 3) * g.F2 + Rational(1, 3) * g.H2),
          agree(g.theta4_4, Rational(4, 3) * g.F2 - Rational(1, 3) * g.H2)};
}

Agreement check_j_from_lambda(int order) {
  const QSeries lambda = lambda_invariant(order + 2).series;
  const QSeries j = j_invariant(order + 2).series;
  const QSeries lhs = j * (pow(lambda, 2) * pow(lambda - Rational(1), 2));
  const QSeries rhs = Rational(256) * pow(pow(lambda, 2) - lambda + Rational(1), 3);
  return agree(lhs, rhs);
}

Agreement check_lambda_shift(int order) {
  const QSeries lambda = lambda_invariant(order).series;
  return agree(shift_tau(lambda), lambda / (lambda - Rational(1)));
}

std::vector<Agreement> check_rel3(int order) {
  const auto g = gamma3_generators(order);
  const QSeries u = g.phi1, v = g.phi2;
  const QSeries v3 = pow(v, 3), u3 = pow(u, 3);
  return {agree(eisenstein(4, order).series, pow(u, 4) + Rational(8) * u * v3),
          agree(eisenstein(6, order).series,
                pow(u, 6) - Rational(20) * u3 * v3 - Rational(8) * pow(v, 6))};
}

Agreement check_ferapontov(int order) {
  const QSeries g = gamma3_generators(order).phi1;
  const QSeries g1 = q_derive(g), g2 = q_derive(g1), g3 = q_derive(g2), g4 = q_derive(g3);
  const QSeries lhs = g4 * (g * g * g2 - Rational(2) * g * g1 * g1) -
                      Rational(9) * g1 * g1 * g2 * g2 + Rational(2) * g * g1 * g2 * g3 +
                      Rational(8) * g1 * g1 * g1 * g3 - g * g * g3 * g3;
  return agree(lhs, QSeries(lhs.trunc()));
}

namespace {

NamedForm build_named(const std::string& id, int order) {
  if (id.size() >= 2 && id[0] == 'E' && id.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int k = std::stoi(id.substr(1));
    if (k >= 2 && k % 2 == 0 && k <= 200) return eisenstein(k, order);
  }
  if (id == "Delta") return discriminant(order);
  if (id == "j") return j_invariant(order);
  if (id == "j1728") return j_minus_1728(order);
  if (id == "theta2") return theta(2, order);
  if (id == "theta3") return theta(3, order);
  if (id == "theta4") return theta(4, order);
  if (id == "lambda") return lambda_invariant(order);
  if (id == "mu") return mu_gamma4(order);
  if (id == "phi1") return {"phi1", 1, Group::Gamma3, gamma3_generators(order).phi1};
  if (id == "phi2") return {"phi2", 1, Group::Gamma3, gamma3_generators(order).phi2};
  if (id == "F2") return {"F2", 2, Group::Gamma2, gamma2_generators(order).F2};
  if (id == "H2") return {"H2", 2, Group::Gamma2, gamma2_generators(order).H2};
  if (id == "eta") return dedekind_eta(order);
  if (id == "f_gamma5") return gamma5_form_f(order);
  if (id.rfind("F_k:", 0) == 0) {
    const std::string arg = id.substr(4);
    const auto digits = arg.find_first_not_of("0123456789", arg.starts_with('-') ? 1 : 0);
    if (!arg.empty() && arg != "-" && digits == std::string::npos && arg.size() < 6)
      return duke_jenkins(std::stoi(arg), order);
  }
  throw Error(Errc::UnknownForm, "no form named '" + id + "'");
}

}  // namespace

std::shared_ptr<const NamedForm> named_form(const std::string& id, int order) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const NamedForm>> cache;
  const auto key = std::make_pair(id, order);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto form = std::make_shared<const NamedForm>(build_named(id, order));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(form)).first->second;
}

std::vector<std::string> named_form_ids() {
  return {"E2", "E4", "E6", "Delta", "j", "j1728", "theta2", "theta3", "theta4", "lambda", "mu",
          "phi1", "phi2", "F2", "H2", "eta", "f_gamma5", "F_k:<k>"};
}

}  // namespace mfal
