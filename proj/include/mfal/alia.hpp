#pragma once

#include "mfal/liealg.hpp"
#include "mfal/modforms.hpp"
#include "mfal/polynomial.hpp"
#include "mfal/quasimodular.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mfal {

/// Polynomials in the j-invariant.
using PolyJ = Poly<Rational>;

/// Exponents of E4 and E6 in F_k.
int n4_residue(int k);
int n6_residue(int k);

/// Symmetric {0,1}-valued cocycles on root pairs with sum in R or 0.
struct CocyclePair {
  std::map<std::pair<int, int>, int> w4, w6;
  int omega4(int a, int b) const;
  int omega6(int a, int b) const;
};

CocyclePair cocycles(const ChevalleyStructure& g, const GradedTriple& triple);

/// One nonzero root-vector bracket of the table.
struct AliaBracket {
  int x = 0, y = 0;  ///< basis indices
  int eps = 0;       ///< structure constant of the underlying algebra; 0 on the Cartan bracket
  int w4 = 0, w6 = 0;
  int target = -1;   ///< basis index, or -1 for the Cartan combination
};

class AliaTable {
 public:
  using Entry = std::vector<std::pair<int, PolyJ>>;

  AliaTable(ChevalleyStructure g, GradedTriple triple);

  const ChevalleyStructure& chevalley() const noexcept { return g_; }
  const GradedTriple& triple() const noexcept { return triple_; }
  const CocyclePair& cocycle() const noexcept { return cocycle_; }
  int dim() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  int basis_of_root(int root_index) const { return g_.root_basis(root_index); }

  const Entry& bracket_basis(int i, int j) const { return table_[static_cast<std::size_t>(i * dim() + j)]; }
  std::vector<PolyJ> bracket(const std::vector<PolyJ>& x, const std::vector<PolyJ>& y) const;
  bool jacobi_holds() const;
  /// The Lie algebra over Q obtained by evaluating at j.
  LieAlgebra specialize(const Rational& j) const;
  std::vector<AliaBracket> root_brackets() const;

 private:
  ChevalleyStructure g_;
  GradedTriple triple_;
  CocyclePair cocycle_;
  std::vector<std::string> labels_;
  std::vector<Entry> table_;
};

AliaTable alia_table(RootType type, const std::string& orbit);

/// j^w4 (j - 1728)^w6.
PolyJ cocycle_factor(int w4, int w6);

struct OracleCheck {
  int a = 0, b = 0;  ///< root indices
  int w4 = 0, w6 = 0;
  Agreement agreement;
};

/// F_{-k(a)} F_{-k(b)} / F_{-k(a+b)} against j^w4 (j-1728)^w6 for every root pair.
std::vector<OracleCheck> scalar_oracle(const AliaTable& table, int order);

struct Sl2Explicit {
  QuasiMatrix a_minus2, a0, a2, h, e, f;
  /// Rows give ad(a0) on (a_-2, a0, a2) in that basis.
  QuasiMatrix ad_a0;
  bool triple_relations = false;
  bool conjugation = false;
  bool t_case = false;
  bool ad_matrix = false;
  bool holds() const { return triple_relations && conjugation && t_case && ad_matrix; }
};

Sl2Explicit sl2_explicit();

struct LeviDimensions {
  int radical = 0;
  int levi = 0;
};

/// Dimension bookkeeping for the Gamma(1) algebra of holomorphic forms.
LeviDimensions levi_dimensions(RootType type, const std::string& orbit);
LeviDimensions levi_dimensions(const ChevalleyStructure& g, const GradedTriple& triple);

struct WeightZeroIso {
  Group group = Group::Gamma2;
  std::string form;
  Rational weight;
  Rational leading_exponent;
  Rational leading_coeff;
  Agreement inverse;  ///< form * inverse(form) == 1
  std::string coefficient_ring;
  std::string pole_set;
  bool holds() const { return leading_coeff != 0 && inverse.holds; }
};

WeightZeroIso weight_zero_iso_check(Group group, int order);

}  // namespace mfal
