#include "mfal/alia.hpp"

#include "mfal/error.hpp"
#include "mfal/vvmf.hpp"

#include <map>
#include <tuple>

namespace mfal {

int n4_residue(int k) { return duke_jenkins_exponents(k).n4; }
int n6_residue(int k) { return duke_jenkins_exponents(k).n6; }

int CocyclePair::omega4(int a, int b) const {
  const auto it = w4.find({a, b});
  return it == w4.end() ? 0 : it->second;
}

int CocyclePair::omega6(int a, int b) const {
  const auto it = w6.find({a, b});
  return it == w6.end() ? 0 : it->second;
}

namespace {

int coboundary(int (*residue)(int), int divisor, int ka, int kb) {
  const int total = residue(-ka) - residue(-ka - kb) + residue(-kb);
  if (total % divisor != 0 || total / divisor < 0 || total / divisor > 1)
    throw Error(Errc::InvalidArgument, "cocycle value outside {0,1}");
  return total / divisor;
}

}  // namespace

CocyclePair cocycles(const ChevalleyStructure& g, const GradedTriple& triple) {
  for (int k : triple.grading)
    if (k % 2 != 0) throw Error(Errc::OddGrading, "grading takes odd values");
  const RootSystemData& rs = g.roots;
  CocyclePair out;
  for (int a = 0; a < rs.size(); ++a)
    for (int b = 0; b < rs.size(); ++b) {
      if (b != rs.negative(a) && rs.sum_index(a, b) < 0) continue;
      const int ka = triple.grading[static_cast<std::size_t>(a)];
      const int kb = triple.grading[static_cast<std::size_t>(b)];
      if (const int v = coboundary(n4_residue, 3, ka, kb)) out.w4[{a, b}] = v;
      if (const int v = coboundary(n6_residue, 2, ka, kb)) out.w6[{a, b}] = v;
    }
  return out;
}

PolyJ cocycle_factor(int w4, int w6) {
  return pow(PolyJ::x(), static_cast<unsigned>(w4)) * pow(PolyJ::x() - PolyJ(1728), static_cast<unsigned>(w6));
}

AliaTable::AliaTable(ChevalleyStructure g, GradedTriple triple)
    : g_(std::move(g)), triple_(std::move(triple)), cocycle_(cocycles(g_, triple_)) {
  const RootSystemData& rs = g_.roots;
  const int rank = rs.rank;
  if (rs.type == RootType::A1) {
    labels_ = {"h", "e", "f"};
  } else {
    for (int i = 0; i < rank; ++i) labels_.push_back("h" + std::to_string(i + 1));
    for (int a = 0; a < rs.size(); ++a) labels_.push_back("a" + rs.label(a));
  }
  table_.assign(static_cast<std::size_t>(dim() * dim()), {});
  const auto set = [&](int i, int j, Entry value) {
    Entry negated = value;
    for (auto& [k, c] : negated) c = -c;
    table_[static_cast<std::size_t>(i * dim() + j)] = std::move(value);
    table_[static_cast<std::size_t>(j * dim() + i)] = std::move(negated);
  };
  for (int i = 0; i < rank; ++i)
    for (int a = 0; a < rs.size(); ++a)
      for (const auto& [k, c] : g_.algebra.bracket_basis(i, g_.root_basis(a))) set(i, g_.root_basis(a), {{k, PolyJ(c)}});
  for (int a = 0; a < rs.size(); ++a)
    for (int b = a + 1; b < rs.size(); ++b) {
      const PolyJ factor = cocycle_factor(cocycle_.omega4(a, b), cocycle_.omega6(a, b));
      Entry entry;
      for (const auto& [k, c] : g_.algebra.bracket_basis(g_.root_basis(a), g_.root_basis(b)))
        entry.emplace_back(k, factor * PolyJ(c));
      if (!entry.empty()) set(g_.root_basis(a), g_.root_basis(b), std::move(entry));
    }
}

std::vector<PolyJ> AliaTable::bracket(const std::vector<PolyJ>& x, const std::vector<PolyJ>& y) const {
  std::vector<PolyJ> out(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      const PolyJ c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (const auto& [k, v] : bracket_basis(i, j)) out[static_cast<std::size_t>(k)] += c * v;
    }
  }
  return out;
}

bool AliaTable::jacobi_holds() const {
  const auto unit = [&](int i) {
    std::vector<PolyJ> v(static_cast<std::size_t>(dim()));
    v[static_cast<std::size_t>(i)] = PolyJ(1);
    return v;
  };
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      for (int k = j + 1; k < dim(); ++k) {
        const auto x = unit(i), y = unit(j), z = unit(k);
        const auto a = bracket(x, bracket(y, z)), b = bracket(y, bracket(z, x)), c = bracket(z, bracket(x, y));
        for (int m = 0; m < dim(); ++m) {
          const auto idx = static_cast<std::size_t>(m);
          if (!(a[idx] + b[idx] + c[idx]).is_zero()) return false;
        }
      }
  return true;
}

LieAlgebra AliaTable::specialize(const Rational& j) const {
  LieAlgebra out(labels_);
  for (int i = 0; i < dim(); ++i)
    for (int k = i + 1; k < dim(); ++k) {
      LieAlgebra::Sparse entry;
      for (const auto& [t, c] : bracket_basis(i, k))
        if (const Rational v = c.eval(j); v != 0) entry.emplace_back(t, v);
      if (!entry.empty()) out.set_bracket(i, k, std::move(entry));
    }
  return out;
}

std::vector<AliaBracket> AliaTable::root_brackets() const {
  const RootSystemData& rs = g_.roots;
  std::vector<AliaBracket> out;
  for (int a = 0; a < rs.size(); ++a)
    for (int b = a + 1; b < rs.size(); ++b) {
      AliaBracket br;
      br.x = g_.root_basis(a);
      br.y = g_.root_basis(b);
      br.w4 = cocycle_.omega4(a, b);
      br.w6 = cocycle_.omega6(a, b);
      if (b == rs.negative(a)) {
        br.target = -1;
      } else if (const int c = rs.sum_index(a, b); c >= 0) {
        br.eps = g_.epsilon(a, b);
        br.target = g_.root_basis(c);
      } else {
        continue;
      }
      out.push_back(br);
    }
  return out;
}

AliaTable alia_table(RootType type, const std::string& orbit) {
  ChevalleyStructure g = chevalley(type);
  GradedTriple triple = graded_triple(g, orbit, true);
  return AliaTable(std::move(g), std::move(triple));
}

std::vector<OracleCheck> scalar_oracle(const AliaTable& table, int order) {
  const int inner = order + 24;
  const auto f_series = [&](int k) -> const QSeries& { return named_form("F_k:" + std::to_string(k), inner)->series; };
  const QSeries& j = named_form("j", inner)->series;
  const QSeries& j1728 = named_form("j1728", inner)->series;
  std::map<std::tuple<int, int, int, int>, Agreement> cache;

  const RootSystemData& rs = table.chevalley().roots;
  const auto& grading = table.triple().grading;
  std::vector<OracleCheck> out;
  for (int a = 0; a < rs.size(); ++a)
    for (int b = a + 1; b < rs.size(); ++b) {
      if (b != rs.negative(a) && rs.sum_index(a, b) < 0) continue;
      OracleCheck check;
      check.a = a;
      check.b = b;
      check.w4 = table.cocycle().omega4(a, b);
      check.w6 = table.cocycle().omega6(a, b);
      const int ka = grading[static_cast<std::size_t>(a)], kb = grading[static_cast<std::size_t>(b)];
      const auto key = std::make_tuple(std::min(ka, kb), std::max(ka, kb), check.w4, check.w6);
      if (auto it = cache.find(key); it != cache.end()) {
        check.agreement = it->second;
      } else {
        const QSeries lhs = f_series(-ka) * f_series(-kb) / f_series(-ka - kb);
        QSeries rhs = QSeries::constant(1, Rational(inner));
        if (check.w4) rhs = rhs * j;
        if (check.w6) rhs = rhs * j1728;
        check.agreement = agree(lhs, rhs);
        cache.emplace(key, check.agreement);
      }
      out.push_back(check);
    }
  return out;
}

namespace {

QuasiMatrix scaled(const QuasiMatrix& m, const QuasiPoly& c) {
  return map_entries<QuasiPoly>(m, [&](const QuasiPoly& x) { return c * x; });
}

bool same(const QuasiMatrix& a, const QuasiMatrix& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

QuasiMatrix commutator_qp(const QuasiMatrix& a, const QuasiMatrix& b) {
  const QuasiMatrix ab = a * b, ba = b * a;
  return ab - ba;
}

}  // namespace

Sl2Explicit sl2_explicit() {
  const QuasiPoly tau = QuasiPoly::tau();
  const QuasiPoly s = QuasiPoly::s();
  const QuasiPoly pi2 = QuasiPoly::pi_squared();
  Sl2Explicit out;
  out.a_minus2 = QuasiMatrix(2, 2);
  out.a_minus2 << tau, -(tau * tau), QuasiPoly(1), -tau;
  out.a0 = serre_D(-2, out.a_minus2);
  out.a2 = serre_D(0, out.a0);
  out.f = out.a_minus2;
  out.h = scaled(out.a0, QuasiPoly::s(-1));
  out.e = scaled(out.a_minus2, pi2 * QuasiPoly::Q() * Rational(1, 36)) + scaled(out.a2, pi2 * 2);

  out.triple_relations = same(commutator_qp(out.h, out.e), scaled(out.e, 2)) &&
                         same(commutator_qp(out.h, out.f), scaled(out.f, -2)) &&
                         same(commutator_qp(out.e, out.f), out.h);

  const SymRep rep = sym_rep(1);
  const QuasiMatrix p = phi(1).matrix;
  const QuasiMatrix p_inv = qp_inverse(p);
  out.conjugation = same(QuasiMatrix(p * to_quasi(rep.H) * p_inv), out.h) &&
                    same(QuasiMatrix(p * to_quasi(rep.E) * p_inv), out.e) &&
                    same(QuasiMatrix(p * to_quasi(rep.F) * p_inv), out.f);

  RatMat t(2, 2), t_inv(2, 2);
  t << 1, 1, 0, 1;
  t_inv << 1, -1, 0, 1;
  out.t_case = same(shift_tau_qp(out.a_minus2), QuasiMatrix(to_quasi(t) * out.a_minus2 * to_quasi(t_inv)));

  out.ad_a0 = QuasiMatrix::Constant(3, 3, QuasiPoly(0));
  out.ad_a0(0, 0) = s * -2;
  out.ad_a0(2, 0) = s * QuasiPoly::Q() * Rational(1, 18);
  out.ad_a0(2, 2) = s * 2;
  const std::vector<QuasiMatrix> basis = {out.a_minus2, out.a0, out.a2};
  out.ad_matrix = true;
  for (std::size_t row = 0; row < 3; ++row) {
    QuasiMatrix expected = QuasiMatrix::Constant(2, 2, QuasiPoly(0));
    for (std::size_t col = 0; col < 3; ++col)
      expected += scaled(basis[col], out.ad_a0(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)));
    out.ad_matrix = out.ad_matrix && same(commutator_qp(out.a0, basis[row]), expected);
  }
  return out;
}

LeviDimensions levi_dimensions(RootType type, const std::string& orbit) {
  const ChevalleyStructure g = chevalley(type);
  return levi_dimensions(g, graded_triple(g, orbit, true));
}

LeviDimensions levi_dimensions(const ChevalleyStructure& g, const GradedTriple& triple) {
  for (int k : triple.grading)
    if (k % 2 != 0) throw Error(Errc::OddGrading, "grading takes odd values");
  const RootSystemData& rs = g.roots;
  std::vector<int> zero_part;
  for (int i = 0; i < rs.rank; ++i) zero_part.push_back(i);
  std::map<int, int> graded_dims;
  for (int a = 0; a < rs.size(); ++a) {
    const int k = triple.grading[static_cast<std::size_t>(a)];
    if (k == 0) zero_part.push_back(g.root_basis(a));
    else ++graded_dims[k];
  }
  RatMat g0 = zeros<Rational>(g.algebra.dim(), static_cast<Eigen::Index>(zero_part.size()));
  for (std::size_t c = 0; c < zero_part.size(); ++c) g0(zero_part[c], static_cast<Eigen::Index>(c)) = 1;

  LeviDimensions out;
  out.levi = static_cast<int>(bracket_span(g.algebra, g0, g0).cols());
  out.radical = static_cast<int>(center_of(g.algebra, g0).cols());
  const HilbertSeries forms = hilbert_vvmf(0, Group::Gamma1);
  for (const auto& [k, dim] : graded_dims)
    if (k < 0) out.radical += dim * static_cast<int>(forms.coefficient(-k));
  return out;
}

WeightZeroIso weight_zero_iso_check(Group group, int order) {
  WeightZeroIso out;
  out.group = group;
  QSeries form;
  switch (group) {
    case Group::Gamma2:
      out.form = "theta3^4";
      out.weight = 2;
      form = pow(named_form("theta3", order)->series, 4);
      out.coefficient_ring = "C[lambda, lambda^-1, (lambda-1)^-1]";
      out.pole_set = "dihedral";
      break;
    case Group::Gamma3:
      out.form = "eta(3tau)^3/eta(tau)";
      out.weight = 1;
      form = eta_quotient({{3, 3}, {1, -1}}, order);
      out.coefficient_ring = "C[t, (t-1)^-1, (t-w)^-1, (t-w^2)^-1], w^3 = 1";
      out.pole_set = "tetrahedral";
      break;
    case Group::Gamma4:
      out.form = "theta3^2";
      out.weight = 1;
      form = pow(named_form("theta3", order)->series, 2);
      out.coefficient_ring = "C[mu, mu^-1, (mu-1)^-1, (mu+1)^-1, (mu-i)^-1, (mu+i)^-1]";
      out.pole_set = "octahedral";
      break;
    case Group::Gamma5: {
      const auto f = named_form("f_gamma5", order);
      out.form = "f";
      out.weight = f->weight;
      form = f->series;
      out.coefficient_ring = "C[t, t^-1, (t-p)^-1 for the ten finite icosahedral vertices p != 0]";
      out.pole_set = "icosahedral";
      break;
    }
    default:
      throw Error(Errc::Unsupported, "no weight-zero isomorphism check for " + group_name(group));
  }
  out.leading_exponent = form.valuation();
  out.leading_coeff = form.leading_coeff();
  const QSeries unit = form * inverse(form);
  out.inverse = agree(unit, QSeries::constant(1, unit.trunc()));
  return out;
}

}  // namespace mfal
