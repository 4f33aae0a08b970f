#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace mfal {

/// Parses "RE+IMi", "RE-IMi", "IMi" or "RE".
std::complex<double> parse_tau(const std::string& text);

/// Entry point of the command-line tool; `args` excludes the program name.
/// Returns 0 on success, 1 when a check fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfal
