#include "mfal/vvmf.hpp"

#include "mfal/error.hpp"

#include <algorithm>
#include <cmath>

namespace mfal {

PhiOperator phi(int n) {
  const SymRep rep = sym_rep(n);
  const QuasiPoly y = QuasiPoly::P() * QuasiPoly::s(-1) * Rational(1, 12);
  PhiOperator out;
  out.n = n;
  out.matrix = exp_nilpotent(rep.E, QuasiPoly::tau()) * exp_nilpotent(rep.F, y);
  for (int i = 0; i <= n; ++i) out.column_weights.push_back(n - 2 * i);
  return out;
}

bool check_T_equivariance(int n) {
  const PhiOperator p = phi(n);
  RatMat t(2, 2);
  t << 1, 1, 0, 1;
  const QuasiMatrix lhs = shift_tau_qp(p.matrix);
  const QuasiMatrix rhs = to_quasi(sym_power<Rational>(t, n)) * p.matrix;
  for (Eigen::Index i = 0; i < lhs.rows(); ++i)
    for (Eigen::Index j = 0; j < lhs.cols(); ++j)
      if (!(lhs(i, j) == rhs(i, j))) return false;
  return true;
}

double check_S_equivariance(int n, std::complex<double> tau, int order) {
  const PhiOperator p = phi(n);
  Mat<std::complex<double>> lhs = substitute_numeric(p.matrix, -1.0 / tau, order);
  const Mat<std::complex<double>> at_tau = substitute_numeric(p.matrix, tau, order);
  for (int j = 0; j <= n; ++j) lhs.col(j) *= std::pow(tau, -p.column_weights[static_cast<std::size_t>(j)]);
  Mat<std::complex<double>> s(2, 2);
  s << 0.0, -1.0, 1.0, 0.0;
  const Mat<std::complex<double>> rhs = sym_power(s, n) * at_tau;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

std::int64_t HilbertSeries::coefficient(int k) const {
  // Coefficients of 1 / prod (1 - t^d) by repeated prefix sums.
  std::int64_t total = 0;
  for (const auto& [e, c] : numerator) {
    const int m = k - e;
    if (m < 0) continue;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(m) + 1, 0);
    counts[0] = 1;
    for (int d : denominator_degrees)
      for (int i = d; i <= m; ++i) counts[static_cast<std::size_t>(i)] += counts[static_cast<std::size_t>(i - d)];
    total += c * counts[static_cast<std::size_t>(m)];
  }
  return total;
}

std::vector<std::pair<int, std::int64_t>> HilbertSeries::coefficients(int k_max) const {
  std::vector<std::pair<int, std::int64_t>> out;
  if (numerator.empty()) return out;
  for (int k = numerator.begin()->first; k <= k_max; ++k) out.emplace_back(k, coefficient(k));
  return out;
}

HilbertSeries hilbert_vvmf(int n, Group group) {
  if (n < 0) throw Error(Errc::InvalidArgument, "n must be nonnegative");
  HilbertSeries h;
  for (int e = -n; e <= n; e += 2) h.numerator[e] = 1;
  switch (group) {
    case Group::Gamma1: h.denominator_degrees = {4, 6}; break;
    case Group::Gamma2: h.denominator_degrees = {2, 2}; break;
    default: throw Error(Errc::Unsupported, "no Hilbert series for " + group_name(group));
  }
  return h;
}

}  // namespace mfal
