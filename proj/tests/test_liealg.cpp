#include <doctest.h>

#include "mfal/liealg.hpp"
#include "mfal/quasimodular.hpp"

#include <cstdlib>
#include <random>
#include <set>

using namespace mfal;

namespace {

/// Rebuilds the algebra with arbitrary signs on the root-root brackets.
LieAlgebra with_signs(const ChevalleyStructure& g, const std::vector<std::pair<int, int>>& pairs, unsigned mask) {
  LieAlgebra alg(g.algebra.labels());
  const int rank = g.rank();
  for (int i = 0; i < g.algebra.dim(); ++i)
    for (int j = i + 1; j < g.algebra.dim(); ++j)
      if (i < rank || g.roots.negative(i - rank) == j - rank) alg.set_bracket(i, j, g.algebra.bracket_basis(i, j));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [a, b] = pairs[p];
    const int c = g.roots.sum_index(a, b);
    const int magnitude = g.string_below(a, b) + 1;
    const int sign = (mask >> p) & 1u ? -1 : 1;
    alg.set_bracket(g.root_basis(a), g.root_basis(b), {{g.root_basis(c), Rational(sign * magnitude)}});
  }
  return alg;
}

void brute_force_signs(RootType type) {
  const ChevalleyStructure g = chevalley(type);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < g.roots.size(); ++a)
    for (int b = a + 1; b < g.roots.size(); ++b)
      if (g.roots.sum_index(a, b) >= 0) pairs.emplace_back(a, b);
  int consistent = 0, normalized = 0;
  unsigned ours = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (g.epsilon(pairs[p].first, pairs[p].second) < 0) ours |= 1u << p;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    const LieAlgebra alg = with_signs(g, pairs, mask);
    if (!alg.jacobi_holds()) continue;
    ++consistent;
    bool symmetric = true;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t q = 0; q < pairs.size(); ++q)
        if (pairs[q].first == g.roots.negative(pairs[p].first) && pairs[q].second == g.roots.negative(pairs[p].second))
          symmetric &= (((mask >> p) ^ (mask >> q)) & 1u) == 1u;
    // Extraspecial pairs: the first simple-root pairs of each positive sum.
    bool extraspecial_positive = true;
    for (int xi = 0; xi < g.roots.num_positive; ++xi) {
      for (int r = 0; r < g.roots.num_positive; ++r) {
        const int s = g.roots.sum_index(xi, g.roots.negative(r));
        if (s < 0 || !g.roots.is_positive(s)) continue;
        for (std::size_t p = 0; p < pairs.size(); ++p)
          if (pairs[p] == std::make_pair(std::min(r, s), std::max(r, s)) && ((mask >> p) & 1u)) extraspecial_positive = false;
        break;
      }
    }
    if (symmetric && extraspecial_positive) {
      ++normalized;
      CHECK(mask == ours);
    }
  }
  CHECK(consistent > 1);
  CHECK(normalized == 1);
}

}  // namespace

TEST_CASE("root systems") {
  const std::vector<std::pair<RootType, int>> sizes = {
      {RootType::A1, 2}, {RootType::A2, 6}, {RootType::B2, 8}, {RootType::G2, 12}};
  for (const auto& [type, count] : sizes) {
    const RootSystemData rs = root_system(type);
    CHECK(rs.size() == count);
    for (int i = 0; i < rs.size(); ++i) {
      CHECK(rs.index_of({-rs.roots[i][0], -rs.roots[i][1]}) == rs.negative(i));
      // Closed under simple reflections.
      for (int s = 0; s < rs.rank; ++s) {
        Root simple{0, 0};
        simple[s] = 1;
        const Rational c = 2 * rs.inner(rs.roots[i], simple) / rs.inner(simple, simple);
        Root reflected = rs.roots[i];
        reflected[s] -= static_cast<int>(to_int64(c));
        CHECK(rs.index_of(reflected) >= 0);
      }
    }
  }
  CHECK_THROWS_AS(parse_root_type("E8"), Error);
}

TEST_CASE("Chevalley structure constants") {
  for (RootType type : {RootType::A1, RootType::A2, RootType::B2, RootType::G2}) {
    const ChevalleyStructure g = chevalley(type);
    CHECK(g.algebra.jacobi_holds());
    for (const auto& [key, value] : g.eps) {
      const auto [a, b] = key;
      CHECK(std::abs(value) == g.string_below(a, b) + 1);
      CHECK(g.epsilon(b, a) == -value);
      CHECK(g.epsilon(g.roots.negative(a), g.roots.negative(b)) == -value);
    }
  }
  const ChevalleyStructure a2 = chevalley(RootType::A2);
  for (const auto& [key, value] : a2.eps) CHECK(std::abs(value) == 1);
  const ChevalleyStructure g2 = chevalley(RootType::G2);
  std::set<int> magnitudes;
  for (const auto& [key, value] : g2.eps) magnitudes.insert(std::abs(value));
  CHECK(magnitudes == std::set<int>{1, 2, 3});
}

TEST_CASE("signs agree with a brute-force Jacobi search") {
  brute_force_signs(RootType::A2);
  brute_force_signs(RootType::B2);
}

TEST_CASE("Killing form") {
  const ChevalleyStructure a1 = chevalley(RootType::A1);
  CHECK(a1.algebra.killing(a1.algebra.basis_vector(0), a1.algebra.basis_vector(0)) == 8);
  CHECK(a1.algebra.killing_form()(1, 2) == 4);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (RootType type : {RootType::B2, RootType::G2}) {
    const ChevalleyStructure g = chevalley(type);
    const RatMat k = g.algebra.killing_form();
    CHECK(rank<Rational>(k) == g.algebra.dim());
    for (int trial = 0; trial < 5; ++trial) {
      RatVec x(g.algebra.dim()), y(g.algebra.dim()), z(g.algebra.dim());
      for (int i = 0; i < g.algebra.dim(); ++i) {
        x(i) = coeff(rng);
        y(i) = coeff(rng);
        z(i) = coeff(rng);
      }
      const RatVec xy = g.algebra.bracket(x, y), yz = g.algebra.bracket(y, z);
      CHECK(Rational(xy.transpose() * k * z) == Rational(x.transpose() * k * yz));
    }
  }
}

TEST_CASE("graded triples") {
  const ChevalleyStructure a2 = chevalley(RootType::A2);
  const GradedTriple t = graded_triple(a2, "principal");
  CHECK(t.grading[a2.roots.index_of({1, 0})] == 2);
  CHECK(t.grading[a2.roots.index_of({0, 1})] == 2);
  CHECK(t.grading[a2.roots.index_of({1, 1})] == 4);

  const ChevalleyStructure b2 = chevalley(RootType::B2);
  const GradedTriple sub = graded_triple(b2, "subregular");
  CHECK(sub.grading[b2.roots.index_of({1, 0})] == 0);
  CHECK(sub.grading[b2.roots.index_of({0, 1})] == 2);
  CHECK(sub.grading[b2.roots.index_of({1, 1})] == 2);
  CHECK(sub.grading[b2.roots.index_of({2, 1})] == 2);

  const ChevalleyStructure a1 = chevalley(RootType::A1);
  const GradedTriple sl2 = graded_triple(a1, "principal");
  CHECK(sl2.grading == std::vector<int>{2, -2});
  CHECK(sl2.H(0) == 1);

  for (const auto& [type, orbit] : table_orbits()) {
    const ChevalleyStructure g = chevalley(type);
    const GradedTriple tr = graded_triple(g, orbit, true);
    const LieAlgebra& alg = g.algebra;
    CHECK(is_zero<Rational>(RatVec(alg.bracket(tr.H, tr.E) - 2 * tr.E)));
    CHECK(is_zero<Rational>(RatVec(alg.bracket(tr.H, tr.F) + 2 * tr.F)));
    CHECK(is_zero<Rational>(RatVec(alg.bracket(tr.E, tr.F) - tr.H)));
    for (int a = 0; a < g.roots.size(); ++a) {
      CHECK(tr.grading[a] == -tr.grading[g.roots.negative(a)]);
      for (int b = 0; b < g.roots.size(); ++b)
        if (const int c = g.roots.sum_index(a, b); c >= 0) CHECK(tr.grading[c] == tr.grading[a] + tr.grading[b]);
      // alpha(H) equals the grade.
      RatVec root_vec = alg.basis_vector(g.root_basis(a));
      CHECK(alg.bracket(tr.H, root_vec)(g.root_basis(a)) == tr.grading[a]);
    }
  }
  CHECK_THROWS_AS(graded_triple(a2, "subregular", true), Error);
  CHECK(parse_type_orbit("G2:principal").first == RootType::G2);
  CHECK_THROWS_AS(parse_type_orbit("G2"), Error);
}

TEST_CASE("symmetric power representations") {
  const SymRep one = sym_rep(1);
  CHECK(one.H(0, 0) == 1);
  CHECK(one.H(1, 1) == -1);
  CHECK(one.E(0, 1) == 1);
  CHECK(one.F(1, 0) == 1);
  for (int n = 0; n <= 8; ++n) {
    const SymRep r = sym_rep(n);
    CHECK(equal<Rational>(commutator<Rational>(r.H, r.E), RatMat(2 * r.E)));
    CHECK(equal<Rational>(commutator<Rational>(r.H, r.F), RatMat(-2 * r.F)));
    CHECK(equal<Rational>(commutator<Rational>(r.E, r.F), r.H));
    RatMat power = identity<Rational>(n + 1);
    for (int k = 0; k < n; ++k) power = (power * r.E).eval();
    if (n > 0) CHECK_FALSE(is_zero<Rational>(power));
    CHECK(is_zero<Rational>(RatMat(power * r.E)));
  }
  const QuasiMatrix ex = exp_nilpotent(one.E, QuasiPoly::tau());
  CHECK(ex(0, 0) == QuasiPoly(1));
  CHECK(ex(0, 1) == QuasiPoly::tau());
  CHECK(ex(1, 0) == QuasiPoly(0));
  CHECK(ex(1, 1) == QuasiPoly(1));
  CHECK_THROWS_AS(exp_nilpotent(one.H, QuasiPoly::tau()), Error);
}
