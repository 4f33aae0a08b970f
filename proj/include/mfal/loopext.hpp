#pragma once

#include "mfal/alia.hpp"
#include "mfal/cyclotomic.hpp"
#include "mfal/liealg.hpp"

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace mfal {

/// Finite poles of a polyhedral configuration; infinity is always admissible.
struct PoleSet {
  std::string name;
  int field = 1;  ///< points lie in Q(zeta_field)
  std::vector<CycloNumber> points;
};

/// "loop", "dihedral", "tetrahedral", "octahedral" or "icosahedral".
std::shared_ptr<const PoleSet> pole_set(const std::string& name);
std::vector<std::string> pole_set_names();

using CycloPoly = Poly<CycloNumber>;

/// numerator / prod (t - p_i)^m_i over the points of a pole set.
class RatFunc {
 public:
  explicit RatFunc(std::shared_ptr<const PoleSet> set);

  static RatFunc polynomial(std::shared_ptr<const PoleSet> set, CycloPoly p);
  /// c (t - p_point)^(-order).
  static RatFunc pole(std::shared_ptr<const PoleSet> set, int point, int order, const CycloNumber& c = 1);
  /// t^power with power of either sign; needs 0 in the pole set for power < 0.
  static RatFunc power_of_t(std::shared_ptr<const PoleSet> set, int power);

  const PoleSet& poles() const noexcept { return *set_; }
  const std::shared_ptr<const PoleSet>& pole_set_ptr() const noexcept { return set_; }
  const CycloPoly& numerator() const noexcept { return num_; }
  const std::vector<int>& multiplicities() const noexcept { return mult_; }
  CycloPoly denominator() const;
  bool is_zero() const noexcept { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc derivative() const;
  /// Throws PoleAtEvaluationPoint at a pole.
  CycloNumber eval(const CycloNumber& at) const;
  CycloNumber residue(int point) const;
  /// Computed from the expansion at infinity, independently of the finite residues.
  CycloNumber residue_at_infinity() const;

 private:
  void reduce();

  std::shared_ptr<const PoleSet> set_;
  CycloPoly num_;
  std::vector<int> mult_;
};

/// x (x) f in g (x) O(S).
struct LoopTerm {
  RatVec x;
  RatFunc f;
};

LoopTerm loop_bracket(const LieAlgebra& g, const LoopTerm& a, const LoopTerm& b);
/// K(x, y) res_point(f' g) with `killing` the Gram matrix of K; point -1 is infinity.
CycloNumber loop_cocycle(const RatMat& killing, const LoopTerm& a, const LoopTerm& b, int point);

/// w(x z^m, y z^n) = m K(x, y) delta_{m+n,0} for |m|, |n| <= bound over basis pairs.
bool loop_monomial_check(RootType type, int bound);

struct CocycleIdentityReport {
  std::string pole_set;
  int samples = 0;
  int failures = 0;
  bool holds() const { return samples > 0 && failures == 0; }
};

/// Cyclic sum w([a,b],c) + ... = 0 at every point of S and at infinity, plus antisymmetry.
CocycleIdentityReport cocycle_identity_check(const std::string& pole_set_name, int samples, unsigned seed);

/// Rank of the residue cocycles at the finite points on sampled pairs.
int cocycle_rank(const std::string& pole_set_name, int samples, unsigned seed);

/// Random sl2 (x) O(S) element with small coefficients.
LoopTerm sample_loop_term(const LieAlgebra& g, const std::shared_ptr<const PoleSet>& set, std::mt19937& rng);

/// Laurent polynomials with 2x2 rational matrix coefficients.
class LaurentElement {
 public:
  LaurentElement() = default;
  static LaurentElement monomial(const RatMat& m, int power);

  const std::map<int, RatMat>& terms() const noexcept { return terms_; }
  LaurentElement& operator+=(const LaurentElement& o);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(const LaurentElement& a, const LaurentElement& b);
  friend LaurentElement operator*(const Rational& c, const LaurentElement& a);
  /// Product with a scalar Laurent polynomial given as power -> coefficient.
  friend LaurentElement operator*(const std::map<int, Rational>& p, const LaurentElement& a);
  friend bool operator==(const LaurentElement& a, const LaurentElement& b) { return a.terms_ == b.terms_; }

 private:
  void trim();
  std::map<int, RatMat> terms_;
};

LaurentElement laurent_bracket(const LaurentElement& a, const LaurentElement& b);
/// Image of A_k.
LaurentElement roan_A(int k);
/// Image of G_m with G_-m = -G_m and G_0 = 0.
LaurentElement roan_G(int m);

using LaurentScalar = std::map<int, Rational>;
LaurentScalar laurent_mul(const LaurentScalar& a, const LaurentScalar& b);

struct OnsagerReport {
  int bound = 0;
  bool relations = false;     ///< all three defining relations
  bool fixed_points = false;  ///< images are fixed by the involution
  bool triple = false;        ///< [h,e]=2e, [h,f]=-2f, [e,f]=j(j-1)h with j=(z+2+1/z)/4
  bool literal_hauptmodul = false;  ///< the same with (z^2+2+z^-2)/4
  bool holds() const { return relations && fixed_points && triple; }
};

OnsagerReport onsager_roan(int bound = 10);

struct DolanGradyReport {
  bool relation_b1 = false;  ///< [B1,[B1,[B1,B0]]] = 4 [B1,B0]
  bool relation_b0 = false;  ///< [B0,[B0,[B0,B1]]] = 4 [B0,B1]
  int bracket_degree = 0;    ///< degree in j of [B1,B0]
  bool holds() const { return relation_b1 && relation_b0; }
};

DolanGradyReport dolan_grady_check();

/// Kronecker-sum action of x (x) f at the points through sl2 representations.
Mat<CycloNumber> evaluate(const std::vector<CycloNumber>& points, const std::vector<SymRep>& reps, const LoopTerm& a);
/// ev([a,b]) == [ev(a), ev(b)] for elements of sl2 (x) O(S).
bool evaluation_homomorphism(const std::vector<CycloNumber>& points, const std::vector<SymRep>& reps,
                             const LoopTerm& a, const LoopTerm& b);

}  // namespace mfal
