#include "mfal/liealg.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace mfal {

RootType parse_root_type(const std::string& name) {
  if (name == "A1") return RootType::A1;
  if (name == "A2") return RootType::A2;
  if (name == "B2") return RootType::B2;
  if (name == "G2") return RootType::G2;
  throw Error(Errc::Unsupported, "unsupported root type: " + name);
}

std::string root_type_name(RootType t) {
  switch (t) {
    case RootType::A1: return "A1";
    case RootType::A2: return "A2";
    case RootType::B2: return "B2";
    case RootType::G2: return "G2";
  }
  return "?";
}

int RootSystemData::index_of(const Root& r) const {
  const auto it = std::find(roots.begin(), roots.end(), r);
  return it == roots.end() ? -1 : static_cast<int>(it - roots.begin());
}

int RootSystemData::sum_index(int a, int b) const {
  const Root& x = roots[static_cast<std::size_t>(a)];
  const Root& y = roots[static_cast<std::size_t>(b)];
  return index_of({x[0] + y[0], x[1] + y[1]});
}

Rational RootSystemData::inner(const Root& a, const Root& b) const {
  Rational out = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) out += form(i, j) * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return out;
}

int RootSystemData::height(int i) const {
  const Root& r = roots[static_cast<std::size_t>(i)];
  return r[0] + r[1];
}

std::string RootSystemData::label(int i) const {
  const Root& r = roots[static_cast<std::size_t>(i)];
  if (rank == 1) return "(" + std::to_string(r[0]) + ")";
  return "(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ")";
}

RootSystemData root_system(RootType type) {
  RootSystemData rs;
  rs.type = type;
  std::vector<Root> positive;
  std::vector<std::vector<int>> gram;
  switch (type) {
    case RootType::A1:
      rs.rank = 1;
      positive = {{1, 0}};
      gram = {{2}};
      break;
    case RootType::A2:
      rs.rank = 2;
      positive = {{1, 0}, {0, 1}, {1, 1}};
      gram = {{2, -1}, {-1, 2}};
      break;
    case RootType::B2:
      rs.rank = 2;
      positive = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
      gram = {{1, -1}, {-1, 2}};
      break;
    case RootType::G2:
      rs.rank = 2;
      positive = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
      gram = {{6, -3}, {-3, 2}};
      break;
  }
  rs.num_positive = static_cast<int>(positive.size());
  rs.roots = positive;
  for (const Root& r : positive) rs.roots.push_back({-r[0], -r[1]});
  rs.form = zeros<Rational>(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) rs.form(i, j) = gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  rs.cartan = Eigen::MatrixXi::Zero(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      rs.cartan(i, j) = to_int64(Rational(2 * rs.form(j, i) / rs.form(i, i)));
  return rs;
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}

void LieAlgebra::set_bracket(int i, int j, Sparse value) {
  Sparse negated = value;
  for (auto& [k, c] : negated) c = -c;
  table_[static_cast<std::size_t>(i * dim() + j)] = std::move(value);
  if (i != j) table_[static_cast<std::size_t>(j * dim() + i)] = std::move(negated);
}

RatVec LieAlgebra::basis_vector(int i) const {
  RatVec v = RatVec::Zero(dim());
  v(i) = 1;
  return v;
}

RatVec LieAlgebra::bracket(const RatVec& x, const RatVec& y) const {
  RatVec out = RatVec::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x(i) == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y(j) == 0) continue;
      const Rational c = x(i) * y(j);
      for (const auto& [k, v] : bracket_basis(i, j)) out(k) += c * v;
    }
  }
  return out;
}

RatMat LieAlgebra::ad(const RatVec& x) const {
  RatMat out = zeros<Rational>(dim(), dim());
  for (int j = 0; j < dim(); ++j) out.col(j) = bracket(x, basis_vector(j));
  return out;
}

RatMat LieAlgebra::killing_form() const {
  std::vector<RatMat> ads;
  ads.reserve(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) ads.push_back(ad(basis_vector(i)));
  RatMat out = zeros<Rational>(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j) {
      Rational trace = 0;
      for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b) trace += ads[static_cast<std::size_t>(i)](a, b) * ads[static_cast<std::size_t>(j)](b, a);
      out(i, j) = trace;
      out(j, i) = trace;
    }
  return out;
}

Rational LieAlgebra::killing(const RatVec& x, const RatVec& y) const {
  const RatMat ax = ad(x), ay = ad(y);
  return RatMat(ax * ay).trace();
}

bool LieAlgebra::jacobi_holds() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      for (int k = j + 1; k < dim(); ++k) {
        const RatVec x = basis_vector(i), y = basis_vector(j), z = basis_vector(k);
        const RatVec sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        if (!is_zero<Rational>(sum)) return false;
      }
  return true;
}

RatMat column_span(const RatMat& vectors) {
  RatMat rows = vectors.transpose();
  const auto pivots = row_reduce<Rational>(rows);
  return rows.topRows(static_cast<Eigen::Index>(pivots.size())).transpose();
}

RatMat bracket_span(const LieAlgebra& g, const RatMat& a, const RatMat& b) {
  RatMat products = zeros<Rational>(g.dim(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.cols(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) products.col(i * b.cols() + j) = g.bracket(a.col(i), b.col(j));
  return column_span(products);
}

RatMat center_of(const LieAlgebra& g, const RatMat& sub) {
  // x = sub * c with [x, sub_j] = 0 for every j.
  const Eigen::Index m = sub.cols();
  RatMat system = zeros<Rational>(g.dim() * m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) system.block(j * g.dim(), i, g.dim(), 1) = g.bracket(sub.col(i), sub.col(j));
  const RatMat kernel = nullspace<Rational>(system);
  return column_span(RatMat(sub * kernel));
}

std::vector<int> derived_series(const LieAlgebra& g) {
  RatMat current = identity<Rational>(g.dim());
  std::vector<int> dims{g.dim()};
  while (current.cols() > 0) {
    current = bracket_span(g, current, current);
    if (current.cols() == dims.back()) break;
    dims.push_back(static_cast<int>(current.cols()));
  }
  return dims;
}

int ChevalleyStructure::epsilon(int a, int b) const {
  const auto it = eps.find({a, b});
  return it == eps.end() ? 0 : it->second;
}

int ChevalleyStructure::string_below(int a, int b) const {
  const Root& x = roots.roots[static_cast<std::size_t>(a)];
  Root y = roots.roots[static_cast<std::size_t>(b)];
  int p = 0;
  while (true) {
    y = {y[0] - x[0], y[1] - x[1]};
    if (roots.index_of(y) < 0) return p;
    ++p;
  }
}

namespace {

/// Structure constants from the extraspecial-pair signs, all chosen positive.
class SignSolver {
 public:
  explicit SignSolver(const ChevalleyStructure& g) : g_(g), rs_(g.roots) {}

  int value(int a, int b) {
    if (rs_.sum_index(a, b) < 0) return 0;
    const auto key = std::make_pair(a, b);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int out = compute(a, b);
    memo_[key] = out;
    return out;
  }

 private:
  Rational norm(int i) const { return rs_.inner(rs_.roots[static_cast<std::size_t>(i)], rs_.roots[static_cast<std::size_t>(i)]); }

  int compute(int a, int b) {
    const bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
    if (!pa && !pb) return -value(rs_.negative(a), rs_.negative(b));
    if (pa && pb) return positive_pair(a, b);
    const int gamma = rs_.negative(rs_.sum_index(a, b));
    // N(a,b)/(g,g) = N(b,g)/(a,a) = N(g,a)/(b,b) for a + b + g = 0.
    Rational r;
    if (rs_.is_positive(gamma)) {
      if (pa) r = norm(gamma) / norm(b) * value(gamma, a);
      else r = norm(gamma) / norm(a) * value(b, gamma);
    } else if (!pb) {
      r = norm(gamma) / norm(a) * -value(rs_.negative(b), rs_.negative(gamma));
    } else {
      r = norm(gamma) / norm(b) * -value(rs_.negative(gamma), rs_.negative(a));
    }
    return static_cast<int>(to_int64(r));
  }

  int positive_pair(int a, int b) {
    if (b < a) return -value(b, a);
    const int xi = rs_.sum_index(a, b);
    int r1 = 0;
    while (rs_.sum_index(xi, rs_.negative(r1)) < 0 || !rs_.is_positive(rs_.sum_index(xi, rs_.negative(r1)))) ++r1;
    const int s1 = rs_.sum_index(xi, rs_.negative(r1));
    const int base = g_.string_below(r1, s1) + 1;
    if (a == r1 && b == s1) return base;
    const int nr1 = rs_.negative(r1), ns1 = rs_.negative(s1);
    Rational bracket_sum = 0;
    if (const int t = rs_.sum_index(b, nr1); t >= 0)
      bracket_sum += Rational(value(b, nr1) * value(a, ns1)) / norm(t);
    if (const int t = rs_.sum_index(a, nr1); t >= 0)
      bracket_sum += Rational(value(nr1, a) * value(b, ns1)) / norm(t);
    return static_cast<int>(to_int64(Rational(norm(xi) / base * bracket_sum)));
  }

  const ChevalleyStructure& g_;
  const RootSystemData& rs_;
  std::map<std::pair<int, int>, int> memo_;
};

}  // namespace

ChevalleyStructure chevalley(RootType type) {
  ChevalleyStructure g;
  g.roots = root_system(type);
  const RootSystemData& rs = g.roots;
  const int rank = rs.rank;

  SignSolver solver(g);
  for (int a = 0; a < rs.size(); ++a)
    for (int b = 0; b < rs.size(); ++b)
      if (rs.sum_index(a, b) >= 0) g.eps[{a, b}] = solver.value(a, b);

  for (int a = 0; a < rs.size(); ++a) {
    const Root& r = rs.roots[static_cast<std::size_t>(a)];
    const Rational len = rs.inner(r, r);
    RatVec c = RatVec::Zero(rank);
    for (int i = 0; i < rank; ++i) c(i) = Rational(r[static_cast<std::size_t>(i)]) * rs.form(i, i) / len;
    g.coroot.push_back(c);
  }

  std::vector<std::string> labels;
  for (int i = 0; i < rank; ++i) labels.push_back("H" + std::to_string(i + 1));
  for (int a = 0; a < rs.size(); ++a) labels.push_back("A" + rs.label(a));
  g.algebra = LieAlgebra(std::move(labels));

  for (int i = 0; i < rank; ++i)
    for (int a = 0; a < rs.size(); ++a) {
      const Root& r = rs.roots[static_cast<std::size_t>(a)];
      int weight = 0;
      for (int j = 0; j < rank; ++j) weight += r[static_cast<std::size_t>(j)] * rs.cartan(i, j);
      if (weight != 0) g.algebra.set_bracket(i, g.root_basis(a), {{g.root_basis(a), Rational(weight)}});
    }
  for (int a = 0; a < rs.size(); ++a)
    for (int b = a + 1; b < rs.size(); ++b) {
      if (b == rs.negative(a)) {
        LieAlgebra::Sparse h;
        for (int i = 0; i < rank; ++i)
          if (g.coroot[static_cast<std::size_t>(a)](i) != 0) h.emplace_back(i, g.coroot[static_cast<std::size_t>(a)](i));
        g.algebra.set_bracket(g.root_basis(a), g.root_basis(b), std::move(h));
      } else if (const int c = rs.sum_index(a, b); c >= 0) {
        g.algebra.set_bracket(g.root_basis(a), g.root_basis(b), {{g.root_basis(c), Rational(g.epsilon(a, b))}});
      }
    }
  return g;
}

std::vector<int> orbit_labels(RootType type, const std::string& orbit) {
  const int rank = type == RootType::A1 ? 1 : 2;
  if (orbit == "principal") return std::vector<int>(static_cast<std::size_t>(rank), 2);
  if (orbit == "zero") return std::vector<int>(static_cast<std::size_t>(rank), 0);
  if (orbit == "subregular") {
    if (type == RootType::B2) return {0, 2};
    if (type == RootType::G2) return {2, 0};
    if (type == RootType::A2) return {1, 1};
  }
  throw Error(Errc::Unsupported, "unknown orbit " + root_type_name(type) + ":" + orbit);
}

std::pair<RootType, std::string> parse_type_orbit(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(Errc::InvalidArgument, "expected TYPE:ORBIT, got " + spec);
  const RootType type = parse_root_type(spec.substr(0, colon));
  const std::string orbit = spec.substr(colon + 1);
  orbit_labels(type, orbit);
  return {type, orbit};
}

std::vector<std::pair<RootType, std::string>> table_orbits() {
  return {{RootType::A1, "principal"}, {RootType::A2, "principal"}, {RootType::B2, "subregular"},
          {RootType::B2, "principal"}, {RootType::G2, "subregular"}, {RootType::G2, "principal"}};
}

GradedTriple graded_triple(const ChevalleyStructure& g, const std::string& orbit, bool require_even) {
  GradedTriple t = graded_triple(g, orbit_labels(g.roots.type, orbit), require_even);
  t.orbit = orbit;
  return t;
}

GradedTriple graded_triple(const ChevalleyStructure& g, const std::vector<int>& labels, bool require_even) {
  const RootSystemData& rs = g.roots;
  const int rank = rs.rank;
  if (static_cast<int>(labels.size()) != rank) throw Error(Errc::InvalidArgument, "label count must equal the rank");
  for (int l : labels) {
    if (l < 0 || l > 2) throw Error(Errc::InvalidArgument, "labels must lie in {0,1,2}");
    if (require_even && l % 2 != 0) throw Error(Errc::OddLabel, "odd Dynkin label");
  }
  GradedTriple t;
  t.type = rs.type;
  t.labels = labels;
  for (const Root& r : rs.roots) {
    int k = 0;
    for (int i = 0; i < rank; ++i) k += r[static_cast<std::size_t>(i)] * labels[static_cast<std::size_t>(i)];
    t.grading.push_back(k);
  }

  const int dim = g.algebra.dim();
  RatMat cartan_t = zeros<Rational>(rank, rank);
  RatVec target = RatVec::Zero(rank);
  for (int i = 0; i < rank; ++i) {
    target(i) = labels[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank; ++j) cartan_t(j, i) = rs.cartan(i, j);
  }
  const auto h_coeffs = solve<Rational>(cartan_t, target);
  t.H = RatVec::Zero(dim);
  for (int i = 0; i < rank; ++i) t.H(i) = (*h_coeffs)(i);

  std::vector<int> grade2;
  for (int a = 0; a < rs.num_positive; ++a)
    if (t.grading[static_cast<std::size_t>(a)] == 2) grade2.push_back(a);
  t.E = RatVec::Zero(dim);
  t.F = RatVec::Zero(dim);
  if (is_zero<Rational>(t.H)) return t;

  const int m = static_cast<int>(grade2.size());
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < (1u << m); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });
  for (unsigned mask : masks) {
    RatVec e = RatVec::Zero(dim);
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) e(g.root_basis(grade2[static_cast<std::size_t>(i)])) = 1;
    RatMat system = zeros<Rational>(dim, m);
    for (int i = 0; i < m; ++i)
      system.col(i) = g.algebra.bracket(e, g.algebra.basis_vector(g.root_basis(rs.negative(grade2[static_cast<std::size_t>(i)]))));
    const auto y = solve<Rational>(system, t.H);
    if (!y) continue;
    RatVec f = RatVec::Zero(dim);
    for (int i = 0; i < m; ++i) f(g.root_basis(rs.negative(grade2[static_cast<std::size_t>(i)]))) = (*y)(i);
    t.E = e;
    t.F = f;
    return t;
  }
  throw Error(Errc::NoRationalTriple, "no rational triple for the given labels");
}

SymRep sym_rep(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "n must be nonnegative");
  SymRep rep;
  rep.n = n;
  rep.H = zeros<Rational>(n + 1, n + 1);
  rep.E = zeros<Rational>(n + 1, n + 1);
  rep.F = zeros<Rational>(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    rep.H(i, i) = n - 2 * i;
    if (i > 0) rep.E(i - 1, i) = n - i + 1;
    if (i < n) rep.F(i + 1, i) = i + 1;
  }
  return rep;
}

}  // namespace mfal
