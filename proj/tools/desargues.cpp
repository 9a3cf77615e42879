// Command-line front end: verify claim scripts, run the randomized property
// suite, render a script's couples as SVG.
//
// Exit status: 0 everything holds, 1 some claim or property fails, 2 usage,
// parse or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "desargues/desargues.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

desargues::FieldSpec parse_field_option(const std::string& text) {
  if (text == "q" || text == "Q") return desargues::FieldSpec::rationals();
  if (text.rfind("fp:", 0) == 0) {
    auto n = desargues::detail::parse_integer(text.substr(3));
    if (n < 3 || n > desargues::BigInt(std::numeric_limits<std::uint64_t>::max())) {
      desargues::fail(desargues::ErrorKind::InvalidField, "modulus " + n.str() + " is not an odd prime");
    }
    return desargues::FieldSpec::prime(static_cast<std::uint64_t>(n));
  }
  desargues::fail(desargues::ErrorKind::InvalidField, "expected q or fp:<p>, got '" + text + "'");
}

int emit(const desargues::dsl::Report& report, bool json) {
  if (json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.pass() ? exit_pass : exit_fail;
}

void print_error(const desargues::Error& e, const std::string& file) {
  std::cerr << (file.empty() ? "" : file + ": ") << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of involutions on the projective line"};
  app.require_subcommand(1);

  std::string verify_file;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Evaluate every claim of a script");
  verify->add_option("file", verify_file, "claim script")->required();
  verify->add_flag("--json", verify_json, "machine-readable report");

  std::string field_text = "q";
  std::size_t cases = 100;
  std::uint64_t seed = 0;
  bool random_json = false;
  auto* random = app.add_subcommand("random", "Run the randomized property suite");
  random->add_option("--field", field_text, "q or fp:<p>")->required();
  random->add_option("--cases", cases, "cases per property")->required()->check(CLI::PositiveNumber);
  random->add_option("--seed", seed, "seed")->required();
  random->add_flag("--json", random_json, "machine-readable report");

  std::string render_file, out_file;
  auto* render = app.add_subcommand("render", "Draw the couples of a script over Q as SVG");
  render->add_option("file", render_file, "claim script")->required();
  render->add_option("-o,--output", out_file, "output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (*verify) {
      auto script = desargues::dsl::parse_script(read_file(verify_file));
      return emit(desargues::dsl::run_script(script), verify_json);
    }
    if (*random) {
      return emit(desargues::dsl::random_suite(parse_field_option(field_text), cases, seed), random_json);
    }
    if (*render) {
      auto svg = desargues::dsl::render(desargues::dsl::parse_script(read_file(render_file)));
      std::ofstream out(out_file, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + out_file);
      out << svg;
      return exit_pass;
    }
  } catch (const desargues::Error& e) {
    print_error(e, *verify ? verify_file : *render ? render_file : "");
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
