#pragma once

#include "mfal/error.hpp"
#include "mfal/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mfal {

enum class RootType { A1, A2, B2, G2 };
RootType parse_root_type(const std::string& name);
std::string root_type_name(RootType t);

/// Coordinates in the basis of simple roots; the second entry is 0 for A1.
using Root = std::array<int, 2>;

struct RootSystemData {
  RootType type = RootType::A1;
  int rank = 1;
  /// Positive roots by height, then their negatives in the same order.
  std::vector<Root> roots;
  int num_positive = 0;
  /// cartan(i, j) = alpha_j(H_i).
  Eigen::MatrixXi cartan;
  /// Gram matrix of the simple roots.
  RatMat form;

  int size() const { return static_cast<int>(roots.size()); }
  bool is_positive(int i) const { return i < num_positive; }
  /// Index of a root, or -1.
  int index_of(const Root& r) const;
  int negative(int i) const { return i < num_positive ? i + num_positive : i - num_positive; }
  /// Index of roots[a] + roots[b], or -1 when the sum is not a root.
  int sum_index(int a, int b) const;
  Rational inner(const Root& a, const Root& b) const;
  int height(int i) const;
  std::string label(int i) const;
};

RootSystemData root_system(RootType type);

/// Structure constants over Q on a fixed basis.
class LieAlgebra {
 public:
  using Sparse = std::vector<std::pair<int, Rational>>;

  LieAlgebra() = default;
  LieAlgebra(std::vector<std::string> labels);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Sets [b_i, b_j] and [b_j, b_i] = -[b_i, b_j].
  void set_bracket(int i, int j, Sparse value);
  const Sparse& bracket_basis(int i, int j) const { return table_[static_cast<std::size_t>(i * dim() + j)]; }

  RatVec basis_vector(int i) const;
  RatVec bracket(const RatVec& x, const RatVec& y) const;
  RatMat ad(const RatVec& x) const;
  RatMat killing_form() const;
  Rational killing(const RatVec& x, const RatVec& y) const;
  /// Checks the Jacobi identity on every basis triple.
  bool jacobi_holds() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Sparse> table_;
};

/// Column basis of the span of the columns of `vectors`.
RatMat column_span(const RatMat& vectors);
/// Column basis of [A, B] for subspaces given by column bases.
RatMat bracket_span(const LieAlgebra& g, const RatMat& a, const RatMat& b);
/// Column basis of the center of the subalgebra spanned by `sub`.
RatMat center_of(const LieAlgebra& g, const RatMat& sub);
/// dim g, dim [g,g], ... ending at the first repeated value.
std::vector<int> derived_series(const LieAlgebra& g);

struct ChevalleyStructure {
  RootSystemData roots;
  LieAlgebra algebra;
  /// eps(a, b) for root indices with roots[a] + roots[b] a root.
  std::map<std::pair<int, int>, int> eps;
  /// Coefficients of H_alpha = [A_alpha, A_-alpha] in the H_i basis.
  std::vector<RatVec> coroot;

  int rank() const { return roots.rank; }
  int root_basis(int root_index) const { return roots.rank + root_index; }
  int epsilon(int a, int b) const;
  /// Length of the a-string through b below b: max p with b - p a a root.
  int string_below(int a, int b) const;
};

ChevalleyStructure chevalley(RootType type);

struct GradedTriple {
  RootType type = RootType::A1;
  std::string orbit;
  std::vector<int> labels;
  std::vector<int> grading;  ///< k(alpha) per root index
  RatVec H, E, F;            ///< in the Chevalley basis
};

/// Dynkin labels of a named orbit: "principal", "subregular" or "zero".
std::vector<int> orbit_labels(RootType type, const std::string& orbit);
GradedTriple graded_triple(const ChevalleyStructure& g, const std::string& orbit, bool require_even = false);
GradedTriple graded_triple(const ChevalleyStructure& g, const std::vector<int>& labels, bool require_even = false);
/// "A2:principal" style addressing.
std::pair<RootType, std::string> parse_type_orbit(const std::string& spec);
/// The type/orbit pairs of the cocycle tables, plus A1.
std::vector<std::pair<RootType, std::string>> table_orbits();

struct SymRep {
  int n = 0;
  RatMat H, E, F;
};

/// Basis v_a = C(n, a) x^a y^(n-a), a = n, ..., 0, with E = x d/dy and F = y d/dx.
SymRep sym_rep(int n);

/// sum_k (t m)^k / k! for nilpotent m.
template <class Scalar>
Mat<Scalar> exp_nilpotent(const RatMat& m, const Scalar& t) {
  const Eigen::Index n = m.rows();
  RatMat power = identity<Rational>(n);
  Mat<Scalar> out = zeros<Scalar>(n, n);
  Scalar t_power = Scalar(1);
  Rational inv_factorial = 1;
  for (Eigen::Index k = 0; k <= n; ++k) {
    if (is_zero<Rational>(power)) return out;
    if (k == n) break;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (power(i, j) != 0) out(i, j) = out(i, j) + t_power * lift<Scalar>(power(i, j) * inv_factorial);
    power = (power * m).eval();
    t_power = t_power * t;
    inv_factorial /= (k + 1);
  }
  throw Error(Errc::NotNilpotent, "matrix is not nilpotent");
}

}  // namespace mfal
