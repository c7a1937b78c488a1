#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json_io.hpp"

namespace latext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInfeasible = 3;

struct Options {
  double tol = kDefaultTolerance;
  std::string alpha = "0.5";
  std::optional<long> d;
};

const std::vector<std::pair<std::string, std::string>>& commands();

/// Runs one subcommand on a parsed input document. Throws LatticeError.
Json execute(const std::string& command, const Json& input, const Options& options);

/// Domain F = {0 <= a <= 1/2, a^2 + b^2 >= 1} with one marker per (a, b).
std::string plot_domain_svg(const std::vector<std::pair<double, double>>& points);

/// Full command line (without argv[0]); returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace latext::cli
