#include "mfal/json_io.hpp"

#include "mfal/error.hpp"

namespace mfal {

namespace {

std::string coroot_text(const AliaTable& table, int root) {
  const RatVec& h = table.chevalley().coroot[static_cast<std::size_t>(root)];
  const auto& labels = table.labels();
  std::string out;
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    if (h(i) == 0) continue;
    if (!out.empty()) out += h(i) > 0 ? " + " : " - ";
    else if (h(i) < 0) out += "-";
    const Rational c = abs(h(i));
    if (c != 1) out += to_string(c) + " ";
    out += labels[static_cast<std::size_t>(i)];
  }
  return out;
}

Json require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::InvalidArgument, std::string("missing JSON field: ") + key);
  return j.at(key);
}

}  // namespace

Json to_json(const QSeries& a) {
  Json terms = Json::array();
  for (const auto& [e, c] : a.items()) terms.push_back({to_fraction_string(e), to_fraction_string(c)});
  return {{"denom", a.denom()}, {"trunc", to_fraction_string(a.trunc())}, {"terms", terms}};
}

QSeries qseries_from_json(const Json& j) {
  std::vector<std::pair<Rational, Rational>> terms;
  for (const Json& t : require(j, "terms")) {
    if (!t.is_array() || t.size() != 2) throw Error(Errc::InvalidArgument, "series term must be [exponent, coefficient]");
    terms.emplace_back(parse_rational(t[0].get<std::string>()), parse_rational(t[1].get<std::string>()));
  }
  return QSeries::from_terms(terms, parse_rational(require(j, "trunc").get<std::string>()));
}

Json to_json(const QuasiPoly& a) {
  Json terms = Json::array();
  for (const auto& [e, c] : a.terms()) terms.push_back({{e.tau, e.p, e.q, e.r, e.s}, to_fraction_string(c)});
  return {{"terms", terms}};
}

QuasiPoly quasipoly_from_json(const Json& j) {
  QuasiPoly out;
  for (const Json& t : require(j, "terms")) {
    if (!t.is_array() || t.size() != 2 || t[0].size() != 5) throw Error(Errc::InvalidArgument, "malformed quasimodular term");
    const Json& e = t[0];
    out += QuasiPoly::monomial(parse_rational(t[1].get<std::string>()),
                               {e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>(), e[4].get<int>()});
  }
  return out;
}

Json to_json(const AliaTable& table) {
  const auto& labels = table.labels();
  const RootSystemData& rs = table.chevalley().roots;
  Json brackets = Json::array();
  for (const AliaBracket& b : table.root_brackets()) {
    const bool cartan = b.target < 0;
    const int root_x = b.x - rs.rank;
    brackets.push_back({{"x", labels[static_cast<std::size_t>(b.x)]},
                        {"y", labels[static_cast<std::size_t>(b.y)]},
                        {"coeff", {{"eps", cartan ? 1 : b.eps}, {"w4", b.w4}, {"w6", b.w6}}},
                        {"target", cartan ? coroot_text(table, root_x) : labels[static_cast<std::size_t>(b.target)]}});
  }
  return {{"type", root_type_name(table.triple().type)},
          {"orbit", table.triple().orbit},
          {"basis", labels},
          {"brackets", brackets}};
}

Json to_json(const HilbertSeries& h, int k_max) {
  Json weights = Json::array();
  for (const auto& [k, dim] : h.coefficients(k_max)) weights.push_back({k, dim});
  return {{"weights", weights}};
}

}  // namespace mfal
