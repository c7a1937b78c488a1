#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"

namespace latext::cli {
namespace {

void report_error(std::ostream& err, int code, const std::string& message) {
  Json e = Json::object();
  e["code"] = code;
  e["message"] = message;
  err << e.dump() << '\n';
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json read_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text = slurp(in);
  } else {
    std::ifstream file(path);
    if (!file) fail_input("cannot read " + path);
    text = slurp(file);
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return Json::object();
  return Json::parse(text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact lattice extensions, covering radii and deep holes", "latext"};
  std::string input_path, format;
  Options options;
  long d = 0;
  app.add_option("--input", input_path, "JSON input file (default: standard input)");
  app.add_option("--tol", options.tol, "tolerance for the binary64 backend")->capture_default_str();
  app.add_option("--alpha", options.alpha, "alpha in (0, 1), read as an exact decimal")
      ->capture_default_str();
  app.add_option("--format", format, "text, json or svg (svg only for plot-domain)")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  auto* d_opt = app.add_option("--D", d, "squarefree discriminant parameter for numfield");
  for (const auto& [name, help] : commands()) app.add_subcommand(name, help)->fallthrough();
  app.require_subcommand(1, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, kExitInvalid, e.what());
    return kExitInvalid;
  }
  if (d_opt->count()) options.d = d;
  const std::string command = app.get_subcommands().front()->get_name();
  if (format.empty()) format = command == "plot-domain" ? "svg" : "json";

  try {
    if (!(options.tol > 0) || !std::isfinite(options.tol)) fail_input("--tol must be positive");
    if (format == "svg" && command != "plot-domain") fail_input("svg output is only for plot-domain");
    Json result = execute(command, read_input(input_path, in), options);
    if (format == "svg") {
      std::vector<std::pair<double, double>> points;
      for (const auto& p : result.at("points")) points.emplace_back(p.at("a"), p.at("b"));
      out << plot_domain_svg(points);
    } else if (format == "text") {
      out << render_text(result);
    } else {
      out << result.dump() << '\n';
    }
    return kExitOk;
  } catch (const LatticeError& e) {
    int code = e.kind() == ErrorKind::kInfeasible ? kExitInfeasible : kExitInvalid;
    report_error(err, code, e.what());
    return code;
  } catch (const Json::exception& e) {
    report_error(err, kExitInvalid, std::string("invalid JSON: ") + e.what());
    return kExitInvalid;
  }
}

}  // namespace latext::cli
