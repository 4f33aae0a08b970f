#include <doctest.h>

#include "mfal/cli.hpp"
#include "mfal/error.hpp"
#include "mfal/json_io.hpp"
#include "mfal/modforms.hpp"
#include "mfal/suite.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

using namespace mfal;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tau parsing") {
  CHECK(parse_tau("0.3+1.1i") == std::complex<double>(0.3, 1.1));
  CHECK(parse_tau("i") == std::complex<double>(0, 1));
  CHECK(parse_tau("2i") == std::complex<double>(0, 2));
  CHECK(parse_tau("-0.5+0.866i") == std::complex<double>(-0.5, 0.866));
  CHECK(parse_tau("1e-1+2i") == std::complex<double>(0.1, 2));
  CHECK(parse_tau("0.25") == std::complex<double>(0.25, 0));
  CHECK(parse_tau("1-i") == std::complex<double>(1, -1));
  CHECK_THROWS_AS(parse_tau("abc"), Error);
  CHECK_THROWS_AS(parse_tau(""), Error);
}

TEST_CASE("expand") {
  const Run j = run({"expand", "j", "--order", "3"});
  CHECK(j.code == 0);
  CHECK(j.out.starts_with("q^-1 + 744 + 196884 q + 21493760 q^2 + "));
  const Run delta = run({"expand", "Delta", "--order", "2"});
  CHECK(delta.code == 0);
  CHECK(delta.out.starts_with("q - 24 q^2"));
  const Run missing = run({"expand", "nosuch"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("UnknownForm") != std::string::npos);
  CHECK(run({"expand"}).code == 2);
  CHECK(run({"expand", "j", "--format", "xml"}).code == 2);
}

TEST_CASE("expand json round-trips") {
  for (const std::string id : {"E4", "j", "theta2", "lambda", "phi1", "F_k:-4"}) {
    CAPTURE(id);
    const Run r = run({"expand", id, "--order", "20", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json parsed = Json::parse(r.out);
    CHECK(parsed.contains("denom"));
    CHECK(qseries_from_json(parsed) == named_form(id, 21)->series);
  }
}

TEST_CASE("default order from the environment") {
  ::setenv("MFAL_ORDER", "5", 1);
  CHECK(default_order() == 5);
  const Json parsed = Json::parse(run({"expand", "E4", "--format", "json"}).out);
  CHECK(parsed["trunc"] == "6/1");
  ::setenv("MFAL_ORDER", "junk", 1);
  CHECK(default_order() == 64);
  ::unsetenv("MFAL_ORDER");
}

TEST_CASE("quasimodular json round-trips") {
  const QuasiPoly p = QuasiPoly::tau() * QuasiPoly::P() - Rational(3, 7) * pow(QuasiPoly::Q(), 2) + QuasiPoly::pi_squared();
  CHECK(quasipoly_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(quasipoly_from_json(Json::parse(R"({"terms": [[[1, 2], "1/1"]]})")), Error);
}

TEST_CASE("alia tables") {
  const Run a1 = run({"alia", "A1", "principal", "--format", "json"});
  REQUIRE(a1.code == 0);
  const Json j = Json::parse(a1.out);
  CHECK(j["basis"] == Json({"h", "e", "f"}));
  REQUIRE(j["brackets"].size() == 1);
  const Json& ef = j["brackets"][0];
  CHECK(ef["x"] == "e");
  CHECK(ef["y"] == "f");
  CHECK(ef["coeff"] == Json({{"eps", 1}, {"w4", 1}, {"w6", 1}}));
  CHECK(ef["target"] == "h");

  for (const auto& [type, orbit] : table_orbits()) {
    const Run r = run({"alia", root_type_name(type), orbit, "--format", "json"});
    REQUIRE(r.code == 0);
    const Json parsed = Json::parse(r.out);
    const AliaTable table = alia_table(type, orbit);
    const auto brackets = table.root_brackets();
    REQUIRE(parsed["brackets"].size() == brackets.size());
    for (std::size_t k = 0; k < brackets.size(); ++k) {
      const Json& b = parsed["brackets"][k];
      CHECK(b["x"] == table.labels()[static_cast<std::size_t>(brackets[k].x)]);
      CHECK(b["coeff"]["w4"] == brackets[k].w4);
      CHECK(b["coeff"]["w6"] == brackets[k].w6);
      if (brackets[k].target >= 0) CHECK(b["coeff"]["eps"] == brackets[k].eps);
    }
  }
  CHECK(run({"alia", "A1", "principal"}).out == "[e, f] = j (j - 1728) h\n");
  CHECK(run({"alia", "A2", "subregular"}).code == 2);
  CHECK(run({"alia", "E8", "principal"}).code == 2);
}

TEST_CASE("hilbert") {
  const Run r = run({"hilbert", "2", "Gamma1", "12", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json weights = Json::parse(r.out)["weights"];
  CHECK(weights.front() == Json({-2, 1}));
  CHECK(weights.back()[0] == 12);
  CHECK(weights.size() == 15);
  const HilbertSeries h = hilbert_vvmf(2, Group::Gamma1);
  for (const Json& w : weights) CHECK(w[1].get<std::int64_t>() == h.coefficient(w[0].get<int>()));
  CHECK(run({"hilbert", "2", "Gamma(2)", "4"}).code == 0);
  CHECK(run({"hilbert", "2", "Gamma3", "4"}).code == 2);
  CHECK(run({"hilbert", "x", "Gamma1", "4"}).code == 2);
}

TEST_CASE("eval") {
  const Run s = run({"eval", "E4", "--tau", "0.3+1.1i", "--check", "S", "--format", "json"});
  CHECK(s.code == 0);
  const Json j = Json::parse(s.out);
  CHECK(j["status"] == "pass");
  CHECK(j["residual"].get<double>() < 1e-8);
  CHECK(run({"eval", "E2", "--tau", "i", "--check", "S"}).code == 0);
  CHECK(run({"eval", "lambda", "--tau", "0.1+0.9i", "--check", "T"}).code == 0);
  CHECK(run({"eval", "j", "--tau", "i"}).out.find("1728") != std::string::npos);
  // A single term of E4 cannot satisfy the transformation law.
  CHECK(run({"eval", "E4", "--tau", "0.3+1.1i", "--check", "S", "--order", "1"}).code == 1);
  CHECK(run({"eval", "theta3", "--tau", "i", "--check", "S"}).code == 2);
  CHECK(run({"eval", "E4", "--tau", "-i"}).code == 2);
  CHECK(run({"eval", "E4", "--tau", "nonsense"}).code == 2);
}

TEST_CASE("verify") {
  const Run theta = run({"verify", "theta"});
  CHECK(theta.code == 0);
  CHECK(theta.out.find("PASS theta.jacobi") != std::string::npos);
  CHECK(run({"verify", "--suite", "nosuch"}).code == 2);

  const SuiteReport first = run_suite("core", 64), second = run_suite("core", 64);
  REQUIRE(first.checks.size() == second.checks.size());
  for (std::size_t k = 0; k < first.checks.size(); ++k) {
    CHECK(first.checks[k].id == second.checks[k].id);
    CHECK(first.checks[k].passed == second.checks[k].passed);
    CHECK(first.checks[k].detail == second.checks[k].detail);
    if (k > 0) CHECK(first.checks[k - 1].id < first.checks[k].id);
  }
  CHECK(first.all_passed());

  const Json report = Json::parse(run({"verify", "alia", "--format", "json"}).out);
  CHECK(report["passed"] == true);
  std::set<std::string> ids;
  for (const Json& c : report["checks"]) ids.insert(c["id"].get<std::string>());
  CHECK(ids.count("alia.A1.contraction") == 1);
}
