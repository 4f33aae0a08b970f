#include <doctest.h>

#include "mfal/error.hpp"
#include "mfal/loopext.hpp"

#include <random>

using namespace mfal;

namespace {

CycloPoly t() { return CycloPoly::x(); }

RatFunc random_function(const std::shared_ptr<const PoleSet>& set, std::mt19937& rng) {
  const ChevalleyStructure sl2 = chevalley(RootType::A1);
  return sample_loop_term(sl2.algebra, set, rng).f;
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const CycloNumber z5 = CycloNumber::zeta(5);
  CycloNumber power(1);
  for (int k = 0; k < 5; ++k) power *= z5;
  CHECK(power == CycloNumber(1));
  CHECK(CycloNumber(1) + z5 + CycloNumber::zeta(5, 2) + CycloNumber::zeta(5, 3) + CycloNumber::zeta(5, 4) == CycloNumber(0));
  const CycloNumber i = CycloNumber::zeta(4);
  CHECK(i * i == CycloNumber(-1));
  const CycloNumber w = CycloNumber::zeta(3);
  CHECK(w * w + w + CycloNumber(1) == CycloNumber(0));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    CycloNumber a, b, c;
    for (int k = 0; k < 4; ++k) {
      a += CycloNumber(coeff(rng)) * CycloNumber::zeta(5, k);
      b += CycloNumber(coeff(rng)) * CycloNumber::zeta(5, k);
      c += CycloNumber(coeff(rng)) * CycloNumber::zeta(5, k);
    }
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == CycloNumber(1));
  }
  CHECK_THROWS_AS((void)(CycloNumber::zeta(3) + CycloNumber::zeta(5)), Error);
}

TEST_CASE("pole sets are the polyhedral vertex orbits") {
  // Roots of the invariant forms t(t^10 + 11 t^5 - 1), t(t^4 - 1), t^3 - 1.
  const auto ico = pole_set("icosahedral");
  REQUIRE(ico->points.size() == 11);
  const CycloPoly klein = t() * (pow(t(), 10) + CycloPoly(11) * pow(t(), 5) - CycloPoly(1));
  for (const auto& p : ico->points) CHECK(klein.eval(p).is_zero());
  for (std::size_t a = 0; a < ico->points.size(); ++a)
    for (std::size_t b = a + 1; b < ico->points.size(); ++b) CHECK(!(ico->points[a] == ico->points[b]));

  const auto oct = pole_set("octahedral");
  REQUIRE(oct->points.size() == 5);
  for (const auto& p : oct->points) CHECK((t() * (pow(t(), 4) - CycloPoly(1))).eval(p).is_zero());

  const auto tet = pole_set("tetrahedral");
  REQUIRE(tet->points.size() == 3);
  for (const auto& p : tet->points) CHECK((pow(t(), 3) - CycloPoly(1)).eval(p).is_zero());

  CHECK(pole_set("dihedral")->points.size() == 2);
  CHECK(pole_set("loop")->points.size() == 1);
  CHECK_THROWS_AS(pole_set("cubic"), Error);
}

TEST_CASE("residues") {
  const auto loop = pole_set("loop");
  CHECK(RatFunc::power_of_t(loop, -1).residue(0) == CycloNumber(1));
  CHECK(RatFunc::power_of_t(loop, -1).residue_at_infinity() == CycloNumber(-1));
  CHECK(RatFunc::power_of_t(loop, -3).residue(0) == CycloNumber(0));
  CHECK(RatFunc::power_of_t(loop, 2).residue(0) == CycloNumber(0));

  const auto dih = pole_set("dihedral");
  CHECK(RatFunc::pole(dih, 1, 2).residue(1) == CycloNumber(0));
  // 1/(t (t-1)) has residues -1 at 0 and 1 at 1.
  const RatFunc both = RatFunc::pole(dih, 0, 1) * RatFunc::pole(dih, 1, 1);
  CHECK(both.residue(0) == CycloNumber(-1));
  CHECK(both.residue(1) == CycloNumber(1));
  CHECK(both.residue_at_infinity() == CycloNumber(0));
  // t^2/(t-1)^3 = 1/(t-1) + 2/(t-1)^2 + 1/(t-1)^3.
  const RatFunc cubic = RatFunc::polynomial(dih, pow(t(), 2)) * RatFunc::pole(dih, 1, 3);
  CHECK(cubic.residue(1) == CycloNumber(1));

  // 1/((t-a)(t-b)) at a is 1/(a-b), for a, b vertices of the octahedron.
  const auto oct = pole_set("octahedral");
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      if (a == b) continue;
      const RatFunc f = RatFunc::pole(oct, a, 1) * RatFunc::pole(oct, b, 1);
      CHECK(f.residue(a) == (oct->points[a] - oct->points[b]).inverse());
    }
}

TEST_CASE("rational function algebra") {
  const auto oct = pole_set("octahedral");
  const RatFunc inv_i = RatFunc::pole(oct, 3, 1);
  const RatFunc t_minus_i = RatFunc::polynomial(oct, t() - CycloPoly(CycloNumber::zeta(4)));
  const RatFunc one = inv_i * t_minus_i;
  CHECK(one == RatFunc::polynomial(oct, CycloPoly(1)));
  CHECK(one.multiplicities()[3] == 0);
  CHECK((inv_i - inv_i).is_zero());
  // d/dt 1/(t-p)^2 = -2/(t-p)^3.
  CHECK(RatFunc::pole(oct, 4, 2).derivative() == RatFunc::pole(oct, 4, 3, CycloNumber(-2)));
  CHECK(inv_i.eval(CycloNumber(0)) == CycloNumber::zeta(4));
  CHECK_THROWS_AS((void)inv_i.eval(CycloNumber::zeta(4)), Error);
}

TEST_CASE("residue of a derivative vanishes and residues sum to zero") {
  std::mt19937 rng(11);
  for (const std::string name : {"dihedral", "tetrahedral", "octahedral", "icosahedral"}) {
    const auto set = pole_set(name);
    for (int trial = 0; trial < 10; ++trial) {
      const RatFunc f = random_function(set, rng), g = random_function(set, rng);
      const RatFunc h = f * g;
      const RatFunc dh = h.derivative();
      CycloNumber total = h.residue_at_infinity();
      for (int p = 0; p < static_cast<int>(set->points.size()); ++p) {
        CHECK(dh.residue(p).is_zero());
        total += h.residue(p);
      }
      CHECK(dh.residue_at_infinity().is_zero());
      CHECK(total.is_zero());
      // Leibniz.
      CHECK(h.derivative() == f.derivative() * g + f * g.derivative());
    }
  }
}

TEST_CASE("loop cocycle on monomials") {
  CHECK(loop_monomial_check(RootType::A1, 6));
  CHECK(loop_monomial_check(RootType::A2, 6));

  const ChevalleyStructure sl2 = chevalley(RootType::A1);
  const RatMat killing = sl2.algebra.killing_form();
  const auto loop = pole_set("loop");
  const LoopTerm e_plus{sl2.algebra.basis_vector(1), RatFunc::power_of_t(loop, 3)};
  const LoopTerm f_minus{sl2.algebra.basis_vector(2), RatFunc::power_of_t(loop, -3)};
  // K(E, F) = 4 in the adjoint form.
  CHECK(loop_cocycle(killing, e_plus, f_minus, 0) == CycloNumber(12));
  CHECK(loop_cocycle(killing, f_minus, e_plus, 0) == CycloNumber(-12));
}

TEST_CASE("loop cocycle identity on polyhedral sets") {
  for (const std::string name : {"loop", "dihedral", "tetrahedral", "octahedral", "icosahedral"}) {
    CAPTURE(name);
    const CocycleIdentityReport report = cocycle_identity_check(name, name == "icosahedral" ? 30 : 50, 2024);
    CHECK(report.failures == 0);
    CHECK(report.samples > 0);
  }
}

TEST_CASE("cocycle rank") {
  CHECK(cocycle_rank("loop", 10, 3) == 1);
  CHECK(cocycle_rank("dihedral", 12, 3) == 2);
  CHECK(cocycle_rank("tetrahedral", 16, 3) == 3);
}

TEST_CASE("Onsager relations under the Roan map") {
  const OnsagerReport report = onsager_roan(10);
  CHECK(report.relations);
  CHECK(report.fixed_points);
  CHECK(report.triple);
  CHECK_FALSE(report.literal_hauptmodul);

  CHECK(laurent_bracket(roan_A(2), roan_A(-1)) == roan_G(3));
  CHECK(roan_G(0) == LaurentElement());
  CHECK(roan_G(-2) == Rational(-1) * roan_G(2));
}

TEST_CASE("Dolan-Grady relations") {
  const DolanGradyReport report = dolan_grady_check();
  CHECK(report.relation_b1);
  CHECK(report.relation_b0);
  CHECK(report.bracket_degree <= 2);
}

TEST_CASE("evaluation representations") {
  const ChevalleyStructure sl2 = chevalley(RootType::A1);
  const auto loop = pole_set("loop");
  const SymRep fundamental = sym_rep(1);
  const LoopTerm e_sq{sl2.algebra.basis_vector(1), RatFunc::power_of_t(loop, 2)};
  const Mat<CycloNumber> single = evaluate({CycloNumber(3)}, {fundamental}, e_sq);
  const Mat<CycloNumber> expected =
      map_entries<CycloNumber>(RatMat(fundamental.E * Rational(9)), [](const Rational& r) { return CycloNumber(r); });
  CHECK(equal<CycloNumber>(single, expected));

  std::mt19937 rng(5);
  const auto oct = pole_set("octahedral");
  const std::vector<CycloNumber> points = {CycloNumber(2), CycloNumber(1) + CycloNumber::zeta(4)};
  const std::vector<SymRep> reps = {sym_rep(1), sym_rep(2)};
  for (int trial = 0; trial < 5; ++trial) {
    const LoopTerm a = sample_loop_term(sl2.algebra, oct, rng), b = sample_loop_term(sl2.algebra, oct, rng);
    CHECK(evaluation_homomorphism(points, reps, a, b));
  }
  const LoopTerm a = sample_loop_term(sl2.algebra, oct, rng);
  CHECK_THROWS_AS((void)evaluate({CycloNumber(1)}, {fundamental}, a), Error);
}
