#include "mfal/suite.hpp"

#include "mfal/alia.hpp"
#include "mfal/error.hpp"
#include "mfal/loopext.hpp"
#include "mfal/modforms.hpp"
#include "mfal/vvmf.hpp"

#include <algorithm>
#include <chrono>
#include <complex>
#include <functional>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

namespace mfal {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
  int order = 0;
};

using CheckFn = std::function<Outcome(int order, double tolerance)>;

struct Check {
  std::string id;
  CheckFn run;
};

int certified(const Agreement& a) { return static_cast<int>(to_int64(floor(a.certified_to))); }

Outcome from_agreement(const Agreement& a) {
  return {a.holds, a.holds ? "exact" : a.detail, certified(a)};
}

Outcome from_agreements(const std::vector<Agreement>& list) {
  Outcome out{true, "exact", 0};
  int lowest = -1;
  for (const Agreement& a : list) {
    if (!a.holds) {
      out.passed = false;
      out.detail = a.detail;
    }
    lowest = lowest < 0 ? certified(a) : std::min(lowest, certified(a));
  }
  out.order = std::max(lowest, 0);
  return out;
}

Outcome boolean(bool holds, const std::string& what) { return {holds, holds ? what : "failed: " + what, 0}; }

std::string format_residual(double r) {
  std::ostringstream s;
  s << "max residual " << r;
  return s.str();
}

const std::complex<double> sample_points[] = {{0.0, 1.0}, {0.3, 1.1}};

std::vector<Check> core_checks() {
  std::vector<Check> out;
  out.push_back({"core.j_expansion", [](int order, double) {
                   const QSeries j = named_form("j", order)->series;
                   const bool holds = j.coeff(-1) == 1 && j.coeff(0) == 744 && j.coeff(1) == 196884 &&
                                      j.coeff(2) == 21493760;
                   return Outcome{holds, holds ? "q^-1 + 744 + 196884 q + 21493760 q^2" : "coefficient mismatch", order};
                 }});
  out.push_back({"core.discriminant_routes", [](int order, double) { return from_agreement(check_discriminant_routes(order)); }});
  out.push_back({"core.j_minus_1728", [](int order, double) { return from_agreement(check_j_minus_1728(order)); }});
  out.push_back({"core.ramanujan", [](int order, double) { return from_agreements(check_ramanujan(order)); }});
  out.push_back({"core.serre_discriminant", [](int order, double) { return from_agreement(check_serre_discriminant(order)); }});
  out.push_back({"core.eisenstein_powers", [](int order, double) { return from_agreements(check_eisenstein_powers(order)); }});
  out.push_back({"core.delta_derivation", [](int order, double) {
                   const QSeries pre = delta_prefactor(order);
                   const long long expected[] = {1, -240, -141444, -8529280, -238758390};
                   bool holds = true;
                   for (int n = 0; n < 5; ++n) holds = holds && pre.coeff(n) == Rational(expected[n]);
                   if (!holds) return Outcome{false, "prefactor coefficients differ", order};
                   return from_agreement(check_delta_of_j(order));
                 }});
  out.push_back({"core.delta_leibniz", [](int order, double) {
                   const QSeries f = named_form("E4", order)->series, g = named_form("j", order)->series;
                   return from_agreement(agree(delta_derivation(f * g), delta_derivation(f) * g + f * delta_derivation(g)));
                 }});
  out.push_back({"core.residue_table", [](int, double) {
                   bool holds = true;
                   for (int k = -24; k <= 24; k += 2) {
                     const DukeJenkinsExponents e = duke_jenkins_exponents(k);
                     holds = holds && 12 * e.ell + 4 * e.n4 + 6 * e.n6 == k && e.n4 == n4_residue(k) && e.n6 == n6_residue(k);
                   }
                   return boolean(holds, "residue table for even k in [-24, 24]");
                 }});
  out.push_back({"core.eisenstein_S", [](int order, double tol) {
                   double worst = 0;
                   const std::complex<double> two_pi_i(0, 2 * std::numbers::pi);
                   for (const auto tau : sample_points) {
                     for (int k : {4, 6}) {
                       const QSeries& e = named_form("E" + std::to_string(k), order)->series;
                       worst = std::max(worst, std::abs(eval_numeric(e, -1.0 / tau) - std::pow(tau, k) * eval_numeric(e, tau)));
                     }
                     const QSeries& e2 = named_form("E2", order)->series;
                     const auto anomaly = eval_numeric(e2, -1.0 / tau) - tau * tau * eval_numeric(e2, tau);
                     worst = std::max(worst, std::abs(anomaly - 12.0 * tau / two_pi_i));
                   }
                   return Outcome{worst < tol, format_residual(worst), order};
                 }});
  out.push_back({"core.sl2_triple", [](int, double) {
                   const Sl2Explicit s = sl2_explicit();
                   return boolean(s.holds(), "triple relations, conjugation, T case and ad matrix");
                 }});
  out.push_back({"core.phi_T", [](int, double) {
                   bool holds = true;
                   for (int n = 1; n <= 4; ++n) holds = holds && check_T_equivariance(n);
                   return boolean(holds, "T-equivariance for n <= 4");
                 }});
  out.push_back({"core.phi_S", [](int order, double tol) {
                   double worst = 0;
                   for (int n = 1; n <= 4; ++n)
                     for (const auto tau : sample_points) worst = std::max(worst, check_S_equivariance(n, tau, order));
                   return Outcome{worst < tol, format_residual(worst), order};
                 }});
  out.push_back({"core.hilbert", [](int, double) {
                   const auto count = [](int weight, int d1, int d2) {
                     std::int64_t c = 0;
                     if (weight < 0) return c;
                     for (int a = 0; a * d1 <= weight; ++a)
                       if ((weight - a * d1) % d2 == 0) ++c;
                     return c;
                   };
                   bool holds = true;
                   for (int n = 0; n <= 4; ++n) {
                     const HilbertSeries h1 = hilbert_vvmf(n, Group::Gamma1), h2 = hilbert_vvmf(n, Group::Gamma2);
                     for (int k = -n; k <= 40; ++k) {
                       std::int64_t c1 = 0, c2 = 0;
                       for (int e = -n; e <= n; e += 2) {
                         c1 += count(k - e, 4, 6);
                         c2 += count(k - e, 2, 2);
                       }
                       holds = holds && h1.coefficient(k) == c1 && h2.coefficient(k) == c2;
                     }
                   }
                   return boolean(holds, "Hilbert series against monomial counts, n <= 4, k <= 40");
                 }});
  return out;
}

std::vector<Check> theta_checks() {
  std::vector<Check> out;
  out.push_back({"theta.jacobi", [](int order, double) { return from_agreement(check_jacobi_theta(order)); }});
  out.push_back({"theta.product", [](int order, double) { return from_agreement(check_theta_product(order)); }});
  out.push_back({"theta.gamma2_combinations", [](int order, double) { return from_agreements(check_gamma2_combinations(order)); }});
  out.push_back({"theta.j_from_lambda", [](int order, double) { return from_agreement(check_j_from_lambda(order)); }});
  out.push_back({"theta.lambda_shift", [](int order, double) { return from_agreement(check_lambda_shift(order)); }});
  out.push_back({"theta.mu_cusp", [](int order, double) {
                   const QSeries& mu = named_form("mu", order)->series;
                   return Outcome{mu.coeff(0) == 1, "constant term " + to_string(mu.coeff(0)), order};
                 }});
  return out;
}

std::vector<Check> gamma_checks() {
  std::vector<Check> out;
  out.push_back({"gamma.rel3", [](int order, double) { return from_agreements(check_rel3(order)); }});
  out.push_back({"gamma.ferapontov", [](int order, double) { return from_agreement(check_ferapontov(order)); }});
  for (const Group g : {Group::Gamma2, Group::Gamma3, Group::Gamma4, Group::Gamma5}) {
    out.push_back({"gamma.weight_zero." + group_name(g), [g](int order, double) {
                     const WeightZeroIso w = weight_zero_iso_check(g, order);
                     return Outcome{w.holds(), w.form + " weight " + to_string(w.weight) + ", " + w.coefficient_ring + " over " + w.pole_set,
                                    certified(w.inverse)};
                   }});
  }
  out.push_back({"gamma.levi", [](int, double) {
                   const LeviDimensions a1 = levi_dimensions(RootType::A1, "principal");
                   bool holds = a1.radical == 1 && a1.levi == 0;
                   for (const RootType type : {RootType::A2, RootType::B2, RootType::G2}) {
                     const LeviDimensions zero = levi_dimensions(type, "zero");
                     holds = holds && zero.radical == 0 && zero.levi == chevalley(type).algebra.dim();
                   }
                   return boolean(holds, "A1 principal radical 1, zero orbits semisimple");
                 }});
  return out;
}

std::vector<Check> alia_checks() {
  std::vector<Check> out;
  for (const auto& [type, orbit] : table_orbits()) {
    const std::string tag = root_type_name(type) + "." + orbit;
    const RootType t = type;
    const std::string o = orbit;
    out.push_back({"alia." + tag + ".cocycle", [t, o](int, double) {
                     const AliaTable table = alia_table(t, o);
                     const RootSystemData& rs = table.chevalley().roots;
                     bool holds = true;
                     for (const auto* map : {&table.cocycle().w4, &table.cocycle().w6}) {
                       const auto w = [&](int a, int b) {
                         const auto it = map->find({a, b});
                         return it == map->end() ? 0 : it->second;
                       };
                       for (const auto& [key, value] : *map)
                         holds = holds && (value == 0 || value == 1) && w(key.second, key.first) == value;
                       for (int a = 0; a < rs.size(); ++a)
                         for (int b = 0; b < rs.size(); ++b)
                           for (int c = 0; c < rs.size(); ++c) {
                             const int ab = rs.sum_index(a, b), bc = rs.sum_index(b, c);
                             if (ab < 0 || bc < 0 || rs.sum_index(ab, c) < 0) continue;
                             holds = holds && w(a, b) + w(ab, c) == w(b, c) + w(a, bc);
                           }
                     }
                     return boolean(holds, "symmetric {0,1}-valued 2-cocycles");
                   }});
    out.push_back({"alia." + tag + ".jacobi", [t, o](int, double) {
                     return boolean(alia_table(t, o).jacobi_holds(), "Jacobi identity over Q[j]");
                   }});
    out.push_back({"alia." + tag + ".oracle", [t, o](int order, double) {
                     const auto checks = scalar_oracle(alia_table(t, o), order);
                     std::vector<Agreement> list;
                     for (const OracleCheck& c : checks) list.push_back(c.agreement);
                     Outcome r = from_agreements(list);
                     if (r.passed) r.detail = std::to_string(checks.size()) + " root pairs agree with the scalar forms";
                     return r;
                   }});
  }
  out.push_back({"alia.A1.contraction", [](int, double) {
                   const AliaTable t = alia_table(RootType::A1, "principal");
                   const PolyJ j = PolyJ::x();
                   const auto& ef = t.bracket_basis(1, 2);
                   bool holds = ef.size() == 1 && ef[0].first == 0 && ef[0].second == j * (j - PolyJ(1728));
                   for (int jv : {0, 1728}) {
                     const LieAlgebra special = t.specialize(jv);
                     const auto series = derived_series(special);
                     holds = holds && special.bracket_basis(1, 2).empty() && series.back() == 0 && series.size() <= 4;
                   }
                   return boolean(holds, "[e,f] = j(j-1728)h, solvable at j = 0, 1728");
                 }});
  return out;
}

std::vector<Check> loop_checks() {
  std::vector<Check> out;
  out.push_back({"loop.monomial_cocycle", [](int, double) {
                   return boolean(loop_monomial_check(RootType::A1, 6) && loop_monomial_check(RootType::A2, 6),
                                  "m K(x,y) delta_{m+n,0} for |m|,|n| <= 6 on A1, A2");
                 }});
  for (const std::string name : {"dihedral", "tetrahedral", "octahedral", "icosahedral"}) {
    out.push_back({"loop.cocycle_identity." + name, [name](int, double) {
                     const CocycleIdentityReport r = cocycle_identity_check(name, 100, 20240601);
                     return Outcome{r.failures == 0,
                                    std::to_string(r.samples - r.failures) + "/" + std::to_string(r.samples) + " sampled triples", 0};
                   }});
  }
  out.push_back({"loop.dihedral_rank", [](int, double) {
                   const int r = cocycle_rank("dihedral", 12, 5);
                   return Outcome{r == 2, "rank " + std::to_string(r), 0};
                 }});
  out.push_back({"loop.residue_theorem", [](int, double) {
                   std::mt19937 rng(17);
                   const ChevalleyStructure sl2 = chevalley(RootType::A1);
                   bool holds = true;
                   for (const std::string& name : pole_set_names()) {
                     const auto set = pole_set(name);
                     for (int trial = 0; trial < 5; ++trial) {
                       const RatFunc f = sample_loop_term(sl2.algebra, set, rng).f;
                       const RatFunc df = f.derivative();
                       CycloNumber total = f.residue_at_infinity();
                       for (int p = 0; p < static_cast<int>(set->points.size()); ++p) {
                         total += f.residue(p);
                         holds = holds && df.residue(p).is_zero();
                       }
                       holds = holds && total.is_zero();
                     }
                   }
                   return boolean(holds, "residues sum to zero and derivatives are residue free");
                 }});
  out.push_back({"loop.onsager", [](int, double) {
                   const OnsagerReport r = onsager_roan(10);
                   return boolean(r.relations && r.fixed_points && r.triple, "Onsager relations for indices <= 10 and the sl2 triple");
                 }});
  out.push_back({"loop.dolan_grady", [](int, double) {
                   const DolanGradyReport r = dolan_grady_check();
                   return boolean(r.relation_b0 && r.relation_b1, "Dolan-Grady relations over Q[j]");
                 }});
  out.push_back({"loop.evaluation", [](int, double) {
                   std::mt19937 rng(23);
                   const ChevalleyStructure sl2 = chevalley(RootType::A1);
                   const auto set = pole_set("octahedral");
                   const std::vector<CycloNumber> points = {CycloNumber(2), CycloNumber(1) + CycloNumber::zeta(4)};
                   const std::vector<SymRep> reps = {sym_rep(1), sym_rep(2)};
                   bool holds = true;
                   for (int trial = 0; trial < 5; ++trial)
                     holds = holds && evaluation_homomorphism(points, reps, sample_loop_term(sl2.algebra, set, rng),
                                                              sample_loop_term(sl2.algebra, set, rng));
                   return boolean(holds, "evaluation at two points is a homomorphism");
                 }});
  return out;
}

std::vector<Check> checks_of(const std::string& suite) {
  if (suite == "core") return core_checks();
  if (suite == "theta") return theta_checks();
  if (suite == "gamma") return gamma_checks();
  if (suite == "alia") return alia_checks();
  if (suite == "loop") return loop_checks();
  if (suite == "all") {
    std::vector<Check> all;
    for (auto part : {core_checks(), theta_checks(), gamma_checks(), alia_checks(), loop_checks()})
      all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    return all;
  }
  throw Error(Errc::InvalidArgument, "unknown suite: " + suite);
}

CheckResult run_one(const Check& check, int order, double tolerance) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  result.id = check.id;
  try {
    const Outcome o = check.run(order, tolerance);
    result.passed = o.passed;
    result.detail = o.detail;
    result.order = o.order;
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = e.what();
  }
  result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names() { return {"core", "theta", "gamma", "alia", "loop", "all"}; }

SuiteReport run_suite(const std::string& suite, int order, double tolerance) {
  const std::vector<Check> checks = checks_of(suite);
  std::vector<std::future<CheckResult>> pending;
  pending.reserve(checks.size());
  for (const Check& c : checks)
    pending.push_back(std::async(std::launch::async, [&c, order, tolerance] { return run_one(c, order, tolerance); }));
  SuiteReport report;
  report.suite = suite;
  report.order = order;
  for (auto& f : pending) report.checks.push_back(f.get());
  std::sort(report.checks.begin(), report.checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace mfal
