#include "mfal/loopext.hpp"

#include "mfal/error.hpp"

#include <algorithm>
#include <map>

namespace mfal {

namespace {

CycloPoly linear(const CycloNumber& p) { return CycloPoly::x() - CycloPoly(p); }

/// First `count` Taylor coefficients of p at `at`.
std::vector<CycloNumber> taylor(CycloPoly p, const CycloNumber& at, int count) {
  std::vector<CycloNumber> out;
  const CycloPoly divisor = linear(at);
  for (int i = 0; i < count; ++i) {
    auto [quotient, remainder] = divmod(p, divisor);
    out.push_back(remainder.coeff(0));
    p = std::move(quotient);
  }
  return out;
}

std::shared_ptr<const PoleSet> make_pole_set(const std::string& name) {
  auto set = std::make_shared<PoleSet>();
  set->name = name;
  if (name == "loop") {
    set->points = {0};
  } else if (name == "dihedral") {
    set->points = {0, 1};
  } else if (name == "tetrahedral") {
    set->field = 3;
    set->points = {1, CycloNumber::zeta(3, 1), CycloNumber::zeta(3, 2)};
  } else if (name == "octahedral") {
    set->field = 4;
    set->points = {0, 1, -1, CycloNumber::zeta(4, 1), -CycloNumber::zeta(4, 1)};
  } else if (name == "icosahedral") {
    set->field = 5;
    set->points = {0};
    const CycloNumber first = CycloNumber::zeta(5, 1) + CycloNumber::zeta(5, 4);
    const CycloNumber second = CycloNumber::zeta(5, 2) + CycloNumber::zeta(5, 3);
    for (int j = 0; j < 5; ++j) set->points.push_back(CycloNumber::zeta(5, j) * first);
    for (int j = 0; j < 5; ++j) set->points.push_back(CycloNumber::zeta(5, j) * second);
  } else {
    throw Error(Errc::InvalidArgument, "unknown pole set: " + name);
  }
  return set;
}

void require_same_set(const RatFunc& a, const RatFunc& b) {
  if (a.poles().name != b.poles().name) throw Error(Errc::InvalidArgument, "rational functions on different pole sets");
}

}  // namespace

std::shared_ptr<const PoleSet> pole_set(const std::string& name) {
  static const std::map<std::string, std::shared_ptr<const PoleSet>> presets = [] {
    std::map<std::string, std::shared_ptr<const PoleSet>> out;
    for (const std::string& n : {"loop", "dihedral", "tetrahedral", "octahedral", "icosahedral"}) out[n] = make_pole_set(n);
    return out;
  }();
  const auto it = presets.find(name);
  if (it == presets.end()) throw Error(Errc::InvalidArgument, "unknown pole set: " + name);
  return it->second;
}

std::vector<std::string> pole_set_names() { return {"loop", "dihedral", "tetrahedral", "octahedral", "icosahedral"}; }

RatFunc::RatFunc(std::shared_ptr<const PoleSet> set) : set_(std::move(set)), mult_(set_->points.size(), 0) {}

RatFunc RatFunc::polynomial(std::shared_ptr<const PoleSet> set, CycloPoly p) {
  RatFunc f(std::move(set));
  f.num_ = std::move(p);
  return f;
}

RatFunc RatFunc::pole(std::shared_ptr<const PoleSet> set, int point, int order, const CycloNumber& c) {
  if (point < 0 || point >= static_cast<int>(set->points.size()) || order < 0)
    throw Error(Errc::InvalidArgument, "invalid pole specification");
  RatFunc f(std::move(set));
  f.num_ = CycloPoly(c);
  f.mult_[static_cast<std::size_t>(point)] = order;
  f.reduce();
  return f;
}

RatFunc RatFunc::power_of_t(std::shared_ptr<const PoleSet> set, int power) {
  if (power >= 0) return polynomial(std::move(set), CycloPoly::monomial(1, power));
  const auto& pts = set->points;
  const auto zero = std::find(pts.begin(), pts.end(), CycloNumber(0));
  if (zero == pts.end()) throw Error(Errc::InvalidArgument, "0 is not an admissible pole");
  return pole(std::move(set), static_cast<int>(zero - pts.begin()), -power);
}

CycloPoly RatFunc::denominator() const {
  CycloPoly d(1);
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] > 0) d *= pow(linear(set_->points[i]), static_cast<unsigned>(mult_[i]));
  return d;
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    std::fill(mult_.begin(), mult_.end(), 0);
    return;
  }
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    const CycloNumber& p = set_->points[i];
    while (mult_[i] > 0 && num_.eval(p) == CycloNumber(0)) {
      num_ = divmod(num_, linear(p)).first;
      --mult_[i];
    }
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  require_same_set(a, b);
  RatFunc out(a.set_);
  CycloPoly na = a.num_, nb = b.num_;
  for (std::size_t i = 0; i < a.mult_.size(); ++i) {
    const int m = std::max(a.mult_[i], b.mult_[i]);
    out.mult_[i] = m;
    const CycloPoly l = linear(a.set_->points[i]);
    if (m > a.mult_[i]) na *= pow(l, static_cast<unsigned>(m - a.mult_[i]));
    if (m > b.mult_[i]) nb *= pow(l, static_cast<unsigned>(m - b.mult_[i]));
  }
  out.num_ = na + nb;
  out.reduce();
  return out;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  require_same_set(a, b);
  RatFunc out(a.set_);
  out.num_ = a.num_ * b.num_;
  for (std::size_t i = 0; i < a.mult_.size(); ++i) out.mult_[i] = a.mult_[i] + b.mult_[i];
  out.reduce();
  return out;
}

bool operator==(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }

RatFunc RatFunc::derivative() const {
  // (N/D)' = (N' P - N sum_i m_i P/(t - p_i)) / (D P), P = prod over the active points.
  RatFunc out(set_);
  CycloPoly active(1);
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] > 0) active *= linear(set_->points[i]);
  CycloPoly numerator = num_.derivative() * active;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] == 0) continue;
    const CycloPoly others = divmod(active, linear(set_->points[i])).first;
    numerator -= CycloPoly(CycloNumber(mult_[i])) * num_ * others;
  }
  out.num_ = std::move(numerator);
  for (std::size_t i = 0; i < mult_.size(); ++i) out.mult_[i] = mult_[i] > 0 ? mult_[i] + 1 : 0;
  out.reduce();
  return out;
}

CycloNumber RatFunc::eval(const CycloNumber& at) const {
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] > 0 && set_->points[i] == at) throw Error(Errc::PoleAtEvaluationPoint, "evaluation at a pole");
  return num_.eval(at) / denominator().eval(at);
}

CycloNumber RatFunc::residue(int point) const {
  const auto idx = static_cast<std::size_t>(point);
  const int m = mult_.at(idx);
  if (m == 0) return CycloNumber(0);
  const CycloNumber& p = set_->points[idx];
  CycloPoly rest(1);
  for (std::size_t k = 0; k < mult_.size(); ++k)
    if (k != idx && mult_[k] > 0) rest *= pow(linear(set_->points[k]), static_cast<unsigned>(mult_[k]));
  const auto n = taylor(num_, p, m);
  const auto r = taylor(rest, p, m);
  std::vector<CycloNumber> c;
  const CycloNumber r0_inv = r[0].inverse();
  for (int k = 0; k < m; ++k) {
    CycloNumber acc = n[static_cast<std::size_t>(k)];
    for (int l = 0; l < k; ++l) acc -= c[static_cast<std::size_t>(l)] * r[static_cast<std::size_t>(k - l)];
    c.push_back(acc * r0_inv);
  }
  return c.back();
}

CycloNumber RatFunc::residue_at_infinity() const {
  const CycloPoly d = denominator();
  if (d.degree() == 0) return CycloNumber(0);
  const CycloPoly remainder = divmod(num_, d).second;
  return -remainder.coeff(d.degree() - 1);
}

LoopTerm loop_bracket(const LieAlgebra& g, const LoopTerm& a, const LoopTerm& b) {
  return {g.bracket(a.x, b.x), a.f * b.f};
}

CycloNumber loop_cocycle(const RatMat& killing, const LoopTerm& a, const LoopTerm& b, int point) {
  const Rational k = Rational(a.x.transpose() * killing * b.x);
  if (k == 0) return CycloNumber(0);
  const RatFunc integrand = a.f.derivative() * b.f;
  const CycloNumber res = point < 0 ? integrand.residue_at_infinity() : integrand.residue(point);
  return CycloNumber(k) * res;
}

bool loop_monomial_check(RootType type, int bound) {
  const ChevalleyStructure g = chevalley(type);
  const RatMat killing = g.algebra.killing_form();
  const auto set = pole_set("loop");
  std::vector<RatFunc> powers;
  for (int m = -bound; m <= bound; ++m) powers.push_back(RatFunc::power_of_t(set, m));
  for (int i = 0; i < g.algebra.dim(); ++i)
    for (int j = 0; j < g.algebra.dim(); ++j) {
      const RatVec x = g.algebra.basis_vector(i), y = g.algebra.basis_vector(j);
      for (int m = -bound; m <= bound; ++m)
        for (int n = -bound; n <= bound; ++n) {
          const LoopTerm a{x, powers[static_cast<std::size_t>(m + bound)]};
          const LoopTerm b{y, powers[static_cast<std::size_t>(n + bound)]};
          const CycloNumber expected = m + n == 0 ? CycloNumber(Rational(m) * killing(i, j)) : CycloNumber(0);
          if (!(loop_cocycle(killing, a, b, 0) == expected)) return false;
        }
    }
  return true;
}

LoopTerm sample_loop_term(const LieAlgebra& g, const std::shared_ptr<const PoleSet>& set, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), degree(0, 2), order(1, 2);
  std::uniform_int_distribution<int> point(0, static_cast<int>(set->points.size()) - 1);
  std::uniform_int_distribution<int> pole_count(1, 2);
  RatVec x(g.dim());
  for (int i = 0; i < g.dim(); ++i) x(i) = coeff(rng);
  CycloPoly p;
  const int deg = degree(rng);
  for (int d = 0; d <= deg; ++d) p += CycloPoly::monomial(coeff(rng), d);
  RatFunc f = RatFunc::polynomial(set, p);
  const int poles = pole_count(rng);
  for (int k = 0; k < poles; ++k) {
    const int c = coeff(rng);
    f = f + RatFunc::pole(set, point(rng), order(rng), c == 0 ? 1 : c);
  }
  return {x, f};
}

CocycleIdentityReport cocycle_identity_check(const std::string& pole_set_name, int samples, unsigned seed) {
  const auto set = pole_set(pole_set_name);
  const ChevalleyStructure sl2 = chevalley(RootType::A1);
  const LieAlgebra& g = sl2.algebra;
  const RatMat killing = g.killing_form();
  std::mt19937 rng(seed);
  CocycleIdentityReport report;
  report.pole_set = pole_set_name;
  const int points = static_cast<int>(set->points.size());
  for (int s = 0; s < samples; ++s) {
    const LoopTerm a = sample_loop_term(g, set, rng), b = sample_loop_term(g, set, rng), c = sample_loop_term(g, set, rng);
    const LoopTerm ab = loop_bracket(g, a, b), bc = loop_bracket(g, b, c), ca = loop_bracket(g, c, a);
    bool ok = true;
    for (int pt = -1; pt < points && ok; ++pt) {
      const CycloNumber cyclic = loop_cocycle(killing, ab, c, pt) + loop_cocycle(killing, bc, a, pt) + loop_cocycle(killing, ca, b, pt);
      const CycloNumber antisym = loop_cocycle(killing, a, b, pt) + loop_cocycle(killing, b, a, pt);
      ok = cyclic.is_zero() && antisym.is_zero();
    }
    ++report.samples;
    if (!ok) ++report.failures;
  }
  return report;
}

int cocycle_rank(const std::string& pole_set_name, int samples, unsigned seed) {
  const auto set = pole_set(pole_set_name);
  const ChevalleyStructure sl2 = chevalley(RootType::A1);
  const RatMat killing = sl2.algebra.killing_form();
  std::mt19937 rng(seed);
  const auto points = static_cast<Eigen::Index>(set->points.size());
  Mat<CycloNumber> values(samples, points);
  for (int s = 0; s < samples; ++s) {
    const LoopTerm a = sample_loop_term(sl2.algebra, set, rng), b = sample_loop_term(sl2.algebra, set, rng);
    for (Eigen::Index p = 0; p < points; ++p) values(s, p) = loop_cocycle(killing, a, b, static_cast<int>(p));
  }
  return static_cast<int>(rank<CycloNumber>(values));
}

LaurentElement LaurentElement::monomial(const RatMat& m, int power) {
  LaurentElement out;
  out.terms_[power] = m;
  out.trim();
  return out;
}

void LaurentElement::trim() {
  std::erase_if(terms_, [](const auto& kv) { return is_zero<Rational>(kv.second); });
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  for (const auto& [p, m] : o.terms_) {
    auto it = terms_.find(p);
    if (it == terms_.end()) terms_.emplace(p, m);
    else it->second += m;
  }
  trim();
  return *this;
}

LaurentElement operator*(const Rational& c, const LaurentElement& a) {
  LaurentElement out;
  for (const auto& [p, m] : a.terms_) out.terms_[p] = c * m;
  out.trim();
  return out;
}

LaurentElement operator-(const LaurentElement& a, const LaurentElement& b) { return a + Rational(-1) * b; }

LaurentElement operator*(const std::map<int, Rational>& poly, const LaurentElement& a) {
  LaurentElement out;
  for (const auto& [q, c] : poly)
    for (const auto& [p, m] : a.terms_) out += LaurentElement::monomial(RatMat(c * m), p + q);
  return out;
}

LaurentElement laurent_bracket(const LaurentElement& a, const LaurentElement& b) {
  LaurentElement out;
  for (const auto& [p, m] : a.terms())
    for (const auto& [q, n] : b.terms()) out += LaurentElement::monomial(commutator<Rational>(m, n), p + q);
  return out;
}

LaurentScalar laurent_mul(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar out;
  for (const auto& [p, c] : a)
    for (const auto& [q, d] : b) out[p + q] += c * d;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

RatMat mat2(int a, int b, int c, int d) {
  RatMat m(2, 2);
  m << a, b, c, d;
  return m;
}

/// sigma_x M(1/z) sigma_x.
LaurentElement involution(const LaurentElement& a) {
  const RatMat sx = mat2(0, 1, 1, 0);
  LaurentElement out;
  for (const auto& [p, m] : a.terms()) out += LaurentElement::monomial(RatMat(sx * m * sx), -p);
  return out;
}

}  // namespace

LaurentElement roan_A(int k) {
  return LaurentElement::monomial(mat2(0, 1, 0, 0), k) + LaurentElement::monomial(mat2(0, 0, 1, 0), -k);
}

LaurentElement roan_G(int m) {
  const RatMat h = mat2(1, 0, 0, -1);
  return LaurentElement::monomial(h, m) - LaurentElement::monomial(h, -m);
}

OnsagerReport onsager_roan(int bound) {
  OnsagerReport report;
  report.bound = bound;
  bool relations = true, fixed = true;
  for (int k = -bound; k <= bound; ++k) {
    fixed = fixed && involution(roan_A(k)) == roan_A(k);
    for (int l = -bound; l <= bound; ++l) relations = relations && laurent_bracket(roan_A(k), roan_A(l)) == roan_G(k - l);
  }
  for (int m = 1; m <= bound; ++m) {
    fixed = fixed && involution(roan_G(m)) == roan_G(m);
    for (int n = 1; n <= bound; ++n) relations = relations && laurent_bracket(roan_G(m), roan_G(n)) == LaurentElement();
    for (int k = -bound; k <= bound; ++k)
      relations = relations && laurent_bracket(roan_G(m), roan_A(k)) ==
                                   Rational(2) * roan_A(k + m) - Rational(2) * roan_A(k - m);
  }
  report.relations = relations;
  report.fixed_points = fixed;

  const LaurentScalar z_diff = {{1, Rational(1, 8)}, {-1, Rational(-1, 8)}};
  const LaurentElement e_hat = z_diff * LaurentElement::monomial(mat2(1, -1, 1, -1), 0);
  const LaurentElement f_hat = z_diff * LaurentElement::monomial(mat2(1, 1, -1, -1), 0);
  const LaurentElement h_hat = LaurentElement::monomial(mat2(0, 1, 1, 0), 0);
  const auto triple_with = [&](const LaurentScalar& j_hat) {
    LaurentScalar j_minus_one = j_hat;
    j_minus_one[0] -= 1;
    return laurent_bracket(h_hat, e_hat) == Rational(2) * e_hat &&
           laurent_bracket(h_hat, f_hat) == Rational(-2) * f_hat &&
           laurent_bracket(e_hat, f_hat) == laurent_mul(j_hat, j_minus_one) * h_hat;
  };
  report.triple = triple_with({{1, Rational(1, 4)}, {0, Rational(1, 2)}, {-1, Rational(1, 4)}});
  report.literal_hauptmodul = triple_with({{2, Rational(1, 4)}, {0, Rational(1, 2)}, {-2, Rational(1, 4)}});
  return report;
}

DolanGradyReport dolan_grady_check() {
  const AliaTable table = alia_table(RootType::A1, "principal");
  const PolyJ j = PolyJ::x();
  const std::vector<PolyJ> b0 = {PolyJ(1), PolyJ(), PolyJ()};
  const std::vector<PolyJ> b1 = {j * PolyJ(Rational(1, 864)) - PolyJ(1), PolyJ(Rational(-1, 864)), PolyJ(Rational(1, 864))};
  const auto br = [&](const std::vector<PolyJ>& x, const std::vector<PolyJ>& y) { return table.bracket(x, y); };
  const auto scaled = [](std::vector<PolyJ> v, int c) {
    for (PolyJ& p : v) p = p * PolyJ(c);
    return v;
  };
  DolanGradyReport report;
  const auto b1b0 = br(b1, b0), b0b1 = br(b0, b1);
  report.relation_b1 = br(b1, br(b1, b1b0)) == scaled(b1b0, 4);
  report.relation_b0 = br(b0, br(b0, b0b1)) == scaled(b0b1, 4);
  for (const PolyJ& p : b1b0) report.bracket_degree = std::max(report.bracket_degree, p.degree());
  return report;
}

Mat<CycloNumber> evaluate(const std::vector<CycloNumber>& points, const std::vector<SymRep>& reps, const LoopTerm& a) {
  if (points.size() != reps.size()) throw Error(Errc::InvalidArgument, "one representation per point");
  for (const CycloNumber& p : points)
    for (const CycloNumber& s : a.f.poles().points)
      if (p == s) throw Error(Errc::PoleAtEvaluationPoint, "evaluation point lies in the pole set");
  const auto to_cyclo = [](const RatMat& m) { return map_entries<CycloNumber>(m, [](const Rational& r) { return CycloNumber(r); }); };
  Eigen::Index total = 1;
  for (const SymRep& r : reps) total *= r.n + 1;
  Mat<CycloNumber> out = zeros<CycloNumber>(total, total);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const SymRep& r = reps[i];
    const RatMat psi = a.x(0) * r.H + a.x(1) * r.E + a.x(2) * r.F;
    Mat<CycloNumber> factor = identity<CycloNumber>(1);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const Mat<CycloNumber> piece =
          k == i ? Mat<CycloNumber>(to_cyclo(psi) * a.f.eval(points[i])) : identity<CycloNumber>(reps[k].n + 1);
      factor = kron<CycloNumber>(factor, piece);
    }
    out += factor;
  }
  return out;
}

bool evaluation_homomorphism(const std::vector<CycloNumber>& points, const std::vector<SymRep>& reps,
                             const LoopTerm& a, const LoopTerm& b) {
  const ChevalleyStructure sl2 = chevalley(RootType::A1);
  const Mat<CycloNumber> lhs = evaluate(points, reps, loop_bracket(sl2.algebra, a, b));
  const Mat<CycloNumber> ea = evaluate(points, reps, a), eb = evaluate(points, reps, b);
  const Mat<CycloNumber> rhs = ea * eb - eb * ea;
  return equal<CycloNumber>(lhs, rhs);
}

}  // namespace mfal
