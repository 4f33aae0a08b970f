#pragma once

#include "mfal/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace mfal {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMat = Mat<Rational>;
using RatVec = Vec<Rational>;

template <class Scalar>
Mat<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Mat<Scalar>::Constant(rows, cols, Scalar(0));
}

template <class Scalar>
Mat<Scalar> identity(Eigen::Index n) {
  Mat<Scalar> m = zeros<Scalar>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <class Scalar>
Mat<Scalar> commutator(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  return a * b - b * a;
}

template <class Scalar>
bool is_zero(const Mat<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == Scalar(0))) return false;
  return true;
}

template <class Scalar>
bool equal(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && is_zero<Scalar>(a - b);
}

/// Entrywise conversion through a callable.
template <class To, class From, class F>
Mat<To> map_entries(const Mat<From>& m, F&& f) {
  Mat<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

/// Division-free determinant by expansion over column subsets; for small
/// matrices over commutative rings.
template <class Scalar>
Scalar ring_determinant(const Mat<Scalar>& m) {
  const auto n = static_cast<int>(m.rows());
  if (n == 0) return Scalar(1);
  std::vector<Scalar> dp(std::size_t{1} << n, Scalar(0));
  std::vector<bool> live(dp.size(), false);
  dp[0] = Scalar(1);
  live[0] = true;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (!live[mask]) continue;
    const int row = __builtin_popcountll(mask);
    if (row == n) continue;
    for (int col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      if (m(row, col) == Scalar(0)) continue;
      const int above = __builtin_popcountll(mask >> (col + 1));
      const Scalar term = dp[mask] * m(row, col);
      const std::size_t next = mask | (std::size_t{1} << col);
      dp[next] = (above % 2 == 0) ? Scalar(dp[next] + term) : Scalar(dp[next] - term);
      live[next] = true;
    }
  }
  return dp.back();
}

template <class Scalar>
Mat<Scalar> minor_matrix(const Mat<Scalar>& m, Eigen::Index skip_row, Eigen::Index skip_col) {
  Mat<Scalar> out(m.rows() - 1, m.cols() - 1);
  for (Eigen::Index i = 0, r = 0; i < m.rows(); ++i) {
    if (i == skip_row) continue;
    for (Eigen::Index j = 0, c = 0; j < m.cols(); ++j) {
      if (j == skip_col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

template <class Scalar>
Mat<Scalar> adjugate(const Mat<Scalar>& m) {
  const Eigen::Index n = m.rows();
  Mat<Scalar> out(n, n);
  if (n == 1) {
    out(0, 0) = Scalar(1);
    return out;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Scalar cof = ring_determinant<Scalar>(minor_matrix<Scalar>(m, j, i));
      out(i, j) = ((i + j) % 2 == 0) ? cof : Scalar(-cof);
    }
  return out;
}

template <class Scalar>
Mat<Scalar> kron(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Reduced row echelon form over a field; returns pivot columns.
template <class Field>
std::vector<Eigen::Index> row_reduce(Mat<Field>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (!(m(i, col) == Field(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(row));
    const Field inv = Field(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == Field(0)) continue;
      const Field factor = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Field>
Eigen::Index rank(Mat<Field> m) {
  return static_cast<Eigen::Index>(row_reduce<Field>(m).size());
}

template <class Field>
Field field_determinant(Mat<Field> m) {
  const Eigen::Index n = m.rows();
  Field det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (!(m(i, col) == Field(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Field(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det = det * m(col, col);
    const Field inv = Field(1) / m(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (m(i, col) == Field(0)) continue;
      const Field factor = m(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) m(i, j) = m(i, j) - factor * m(col, j);
    }
  }
  return det;
}

/// Some solution x of a x = b, if one exists.
template <class Field>
std::optional<Vec<Field>> solve(const Mat<Field>& a, const Vec<Field>& b) {
  Mat<Field> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto pivots = row_reduce<Field>(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec<Field> x = Vec<Field>::Constant(a.cols(), Field(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  return x;
}

/// Columns spanning the kernel of m.
template <class Field>
Mat<Field> nullspace(Mat<Field> m) {
  const auto pivots = row_reduce<Field>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  Mat<Field> basis = zeros<Field>(m.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], static_cast<Eigen::Index>(k)) = Field(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<Eigen::Index>(k)) = -m(static_cast<Eigen::Index>(r), free[k]);
  }
  return basis;
}


/// Embeds an exact rational into a scalar type.
template <class Scalar>
Scalar lift(const Rational& r) {
  return Scalar(r);
}

template <>
inline std::complex<double> lift<std::complex<double>>(const Rational& r) {
  return {to_double(r), 0.0};
}

template <>
inline double lift<double>(const Rational& r) {
  return to_double(r);
}

}  // namespace mfal
