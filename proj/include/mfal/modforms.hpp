#pragma once

#include "mfal/qseries.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mfal {

enum class Group { Gamma1, Gamma2, Gamma3, Gamma4, Gamma5 };
std::string group_name(Group g);
/// Accepts "Gamma1" or "Gamma(1)" style names.
Group parse_group(const std::string& name);

struct NamedForm {
  std::string name;
  Rational weight;
  Group group = Group::Gamma1;
  QSeries series;
};

Rational bernoulli(int k);

NamedForm eisenstein(int k, int order);
/// (E4^3 - E6^2) / 1728.
NamedForm discriminant(int order);
/// q prod (1 - q^n)^24, the second route to the discriminant.
QSeries discriminant_eta_product(int order);
NamedForm j_invariant(int order);
NamedForm j_minus_1728(int order);

NamedForm theta(int index, int order);

struct EtaFactor {
  Rational scale;  ///< eta(scale * tau)
  int exponent;
};
NamedForm dedekind_eta(int order);
QSeries eta_quotient(const std::vector<EtaFactor>& factors, int order);

/// Klein form k_{r1,0}(scale * tau), 0 < r1 < 1.
NamedForm klein_form(const Rational& r1, int scale, int order);
/// eta(5 tau)^15 k_{1/5,0}(5 tau)^5 / eta(tau)^3.
NamedForm gamma5_form_f(int order);

struct Gamma2Generators {
  QSeries F2, H2, theta2_4, theta3_4, theta4_4;
};
Gamma2Generators gamma2_generators(int order);
NamedForm lambda_invariant(int order);
NamedForm mu_gamma4(int order);

struct Gamma3Generators {
  QSeries phi1, phi2;
};
Gamma3Generators gamma3_generators(int order);

struct DukeJenkinsExponents {
  int ell = 0, n4 = 0, n6 = 0, s = 0;
};
/// Residue data of weight k: k = 12 ell + 4 n4 + 6 n6.
DukeJenkinsExponents duke_jenkins_exponents(int k);
/// Delta^ell E4^n4 E6^n6.
NamedForm duke_jenkins(int k, int order);

/// q d/dq f - (k/12) E2 f.
QSeries serre_derivative(int k, const QSeries& f);
/// (E4 E6 / Delta) q d/dq f.
QSeries delta_derivation(const QSeries& f);
/// q E4 E6 / Delta, the coefficient of d/dq in delta.
QSeries delta_prefactor(int order);

/// Identity checks. Each builds its inputs with enough headroom that the
/// comparison window reaches `order`.
Agreement check_discriminant_routes(int order);
Agreement check_j_minus_1728(int order);
std::vector<Agreement> check_ramanujan(int order);
Agreement check_serre_discriminant(int order);
Agreement check_delta_of_j(int order);
std::vector<Agreement> check_eisenstein_powers(int order);
Agreement check_jacobi_theta(int order);
Agreement check_theta_product(int order);
std::vector<Agreement> check_gamma2_combinations(int order);
Agreement check_j_from_lambda(int order);
Agreement check_lambda_shift(int order);
std::vector<Agreement> check_rel3(int order);
Agreement check_ferapontov(int order);

/// Lookup by id: E<k>, Delta, j, j1728, theta2..4, lambda, mu, phi1, phi2,
/// F2, H2, eta, f_gamma5, F_k:<k>. Results are memoized per (id, order);
/// concurrent readers are safe.
std::shared_ptr<const NamedForm> named_form(const std::string& id, int order);
std::vector<std::string> named_form_ids();

}  // namespace mfal
