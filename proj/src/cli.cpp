#include "mfal/cli.hpp"

#include "mfal/error.hpp"
#include "mfal/json_io.hpp"
#include "mfal/modforms.hpp"
#include "mfal/suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iterator>
#include <string_view>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

namespace mfal {

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

std::complex<double> eval_transformed(const NamedForm& form, std::complex<double> tau, const std::string& check,
                                      std::complex<double>& expected) {
  const QSeries& f = form.series;
  if (check == "S") {
    if (form.group != Group::Gamma1 || denominator_of(form.weight) != 1)
      throw Error(Errc::Unsupported, "S check needs a level one form of integral weight");
    const auto k = static_cast<int>(to_int64(form.weight));
    expected = std::pow(tau, k) * eval_numeric(f, tau);
    if (form.name == "E2") expected += 12.0 * tau / std::complex<double>(0, 2 * std::numbers::pi);
    return eval_numeric(f, -1.0 / tau);
  }
  if (form.group == Group::Gamma1) {
    expected = eval_numeric(f, tau);
  } else {
    expected = eval_numeric(shift_tau(f), tau);
  }
  return eval_numeric(f, tau + 1.0);
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(15) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

Json suite_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"id", c.id}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail},
                      {"elapsed_ms", c.elapsed_ms}, {"order", c.order}});
  return {{"suite", r.suite}, {"order", r.order}, {"passed", r.all_passed()}, {"checks", checks}};
}

}  // namespace

std::complex<double> parse_tau(const std::string& text) {
  const auto fail = [&] { return Error(Errc::InvalidArgument, "cannot parse tau '" + text + "'"); };
  const auto number = [&](std::string_view v) {
    if (v == "" || v == "+") return 1.0;
    if (v == "-") return -1.0;
    if (v.front() == '+') v.remove_prefix(1);
    double x = 0;
    const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || end != v.data() + v.size()) throw fail();
    return x;
  };
  std::string body;
  std::copy_if(text.begin(), text.end(), std::back_inserter(body), [](char c) { return c != ' '; });
  if (body.empty()) throw fail();
  if (body.back() != 'i') return {number(body), 0.0};
  body.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0.0, number(body)};
  return {number(std::string_view(body).substr(0, split)), number(std::string_view(body).substr(split))};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact modular forms and automorphic Lie algebra toolkit", "mfal"};
  app.require_subcommand(1);
  int order = default_order();
  double tolerance = 1e-8;
  std::string format = "text";
  app.add_option("--order", order, "truncation order (default 64 or MFAL_ORDER)")->check(CLI::Range(1, 100000));
  app.add_option("--tol", tolerance, "tolerance for numeric residuals")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--order", order, "truncation order")->check(CLI::Range(1, 100000));
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--tol", tolerance, "tolerance for numeric residuals")->check(CLI::PositiveNumber);
  };

  std::string form_id;
  CLI::App* expand = app.add_subcommand("expand", "print a q-expansion");
  expand->add_option("form", form_id, "form id, e.g. E4, Delta, j, theta2, F_k:-4")->required();
  common(expand);

  std::string type_name, orbit;
  CLI::App* alia = app.add_subcommand("alia", "bracket table of an automorphic Lie algebra");
  alia->add_option("type", type_name, "A1, A2, B2 or G2")->required();
  alia->add_option("orbit", orbit, "principal or subregular")->required();
  common(alia);

  int hilbert_n = 0, k_max = 0;
  std::string group_text;
  CLI::App* hilbert = app.add_subcommand("hilbert", "dimensions of vector-valued modular forms");
  hilbert->add_option("n", hilbert_n, "symmetric power")->required()->check(CLI::Range(0, 64));
  hilbert->add_option("group", group_text, "Gamma1 or Gamma2")->required();
  hilbert->add_option("kmax", k_max, "largest weight")->required();
  common(hilbert);

  std::string tau_text, check = "none";
  CLI::App* eval = app.add_subcommand("eval", "evaluate a form numerically");
  eval->add_option("form", form_id, "form id")->required();
  eval->add_option("--tau", tau_text, "point in the upper half plane, RE+IMi")->required();
  eval->add_option("--check", check, "transformation to test")->check(CLI::IsMember({"S", "T", "none"}));
  common(eval);

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run the certification suites");
  verify->add_option("suite_name", suite, "core, theta, gamma, alia, loop or all");
  verify->add_option("--suite", suite, "core, theta, gamma, alia, loop or all");
  common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*expand) {
      // --order N prints every exponent up to N.
      const auto form = named_form(form_id, order + 1);
      if (format == "json") out << to_json(form->series).dump() << "\n";
      else out << to_text(form->series) << "\n";
      return 0;
    }
    if (*alia) {
      const auto [type, orbit_name] = parse_type_orbit(type_name + ":" + orbit);
      const AliaTable table = alia_table(type, orbit_name);
      if (format == "json") {
        out << to_json(table).dump(2) << "\n";
      } else {
        const Json json = to_json(table);
        for (const Json& b : json["brackets"]) {
          const Json& c = b["coeff"];
          const int eps = c["eps"].get<int>();
          std::string factor = eps == 1 ? "" : eps == -1 ? "-" : std::to_string(eps) + " ";
          if (c["w4"].get<int>() == 1) factor += "j ";
          if (c["w6"].get<int>() == 1) factor += "(j - 1728) ";
          const std::string target = b["target"].get<std::string>();
          out << "[" << b["x"].get<std::string>() << ", " << b["y"].get<std::string>() << "] = " << factor
              << (target.find(' ') != std::string::npos && !factor.empty() ? "(" + target + ")" : target) << "\n";
        }
      }
      return 0;
    }
    if (*hilbert) {
      const HilbertSeries h = hilbert_vvmf(hilbert_n, parse_group(group_text));
      if (format == "json") {
        out << to_json(h, k_max).dump() << "\n";
      } else {
        for (const auto& [k, dim] : h.coefficients(k_max)) out << k << " " << dim << "\n";
      }
      return 0;
    }
    if (*eval) {
      const std::complex<double> tau = parse_tau(tau_text);
      if (tau.imag() <= 0) throw Error(Errc::InvalidArgument, "tau must lie in the upper half plane");
      const auto form = named_form(form_id, order);
      const std::complex<double> value = eval_numeric(form->series, tau);
      Json result = {{"form", form_id}, {"tau", format_complex(tau)}, {"value", format_complex(value)},
                     {"tail_bound", tail_bound(form->series, tau)}};
      bool passed = true;
      if (check != "none") {
        std::complex<double> expected;
        const std::complex<double> transformed = eval_transformed(*form, tau, check, expected);
        const double residual = std::abs(transformed - expected);
        passed = residual < tolerance;
        result["check"] = check;
        result["residual"] = residual;
        result["status"] = passed ? "pass" : "fail";
      }
      if (format == "json") {
        out << result.dump() << "\n";
      } else {
        out << form_id << "(" << format_complex(tau) << ") = " << format_complex(value) << "\n";
        if (check != "none")
          out << check << " residual " << result["residual"].get<double>() << (passed ? " PASS" : " FAIL") << "\n";
      }
      return passed ? 0 : exit_failure;
    }
    if (*verify) {
      const auto names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end())
        throw Error(Errc::InvalidArgument, "unknown suite '" + suite + "'");
      const SuiteReport report = run_suite(suite, order, tolerance);
      if (format == "json") {
        out << suite_json(report).dump(2) << "\n";
      } else {
        int passed = 0;
        for (const CheckResult& c : report.checks) {
          passed += c.passed ? 1 : 0;
          out << (c.passed ? "PASS " : "FAIL ") << c.id;
          if (c.order > 0) out << " [order " << c.order << "]";
          out << " (" << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms) " << c.detail << "\n";
        }
        out << passed << "/" << report.checks.size() << " checks passed\n";
      }
      return report.exit_code();
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace mfal
