#pragma once

#include "mfal/alia.hpp"
#include "mfal/qseries.hpp"
#include "mfal/quasimodular.hpp"
#include "mfal/vvmf.hpp"

#include <json.hpp>

namespace mfal {

using Json = nlohmann::ordered_json;

/// {"denom": D, "trunc": "p/q", "terms": [["e", "c"], ...]} with "p/q" strings.
Json to_json(const QSeries& a);
QSeries qseries_from_json(const Json& j);

/// {"terms": [[[tau, P, Q, R, s], "c"], ...]}.
Json to_json(const QuasiPoly& a);
QuasiPoly quasipoly_from_json(const Json& j);

/// {"basis": [...], "brackets": [{"x", "y", "coeff": {"eps", "w4", "w6"}, "target"}]}.
/// Cartan brackets carry eps 1 and the coroot as target.
Json to_json(const AliaTable& table);

/// {"weights": [[k, dim], ...]} for k up to k_max.
Json to_json(const HilbertSeries& h, int k_max);

}  // namespace mfal
