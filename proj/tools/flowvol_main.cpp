// flowvol: volume polynomials of type-A flow polytopes on the nice chamber.
//
//   flowvol volume "r=2; m[1,2]=1; m[1,3]=1; m[2,3]=1" --order-check
//   flowvol kernel --file spec.json --degree 3
//   flowvol oracle-compare "r=1; m[1,2]=2; a=(3)" --dilations 4

#include "flowvol/problem.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw flowvol::InputError("cannot open spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& path, const std::string& text) {
  if (path.ends_with(".json")) return true;
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact volume polynomials of type-A flow polytopes on the nice chamber"};
  app.require_subcommand(1, 1);

  std::string spec_text;
  std::string spec_file;
  bool latex = false;
  bool order_check = false;
  int degree = -1;
  int dilations = -1;

  const char* commands[][2] = {
      {"volume", "Volume polynomial by iterated residues"},
      {"check-pde", "Apply the annihilating operators to the volume polynomial"},
      {"kernel", "Exact solution space of the operator system in a given degree"},
      {"lift", "Rebuild the volume from the rank r-1 volume and compare"},
      {"oracle-compare", "Compare v(a) with the lattice-point dilation oracle"},
      {"corner", "Check the coefficient of a1^(M1-1)...ar^(Mr-1)"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("spec", spec_text, "Spec text, e.g. \"r=1; m[1,2]=3\"");
    sub->add_option("-f,--file", spec_file, "Read the spec from a file (text or JSON)");
    sub->add_flag("--latex", latex, "Render polynomials as LaTeX");
    sub->add_flag("--order-check", order_check, "Also take residues in reversed order and compare");
    sub->add_option("--degree", degree, "Degree for the kernel command")->check(CLI::NonNegativeNumber);
    sub->add_option("--dilations", dilations, "Largest dilation t counted by the oracle")->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : flowvol::kInputError;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const flowvol::Command command = flowvol::parse_command(sub->get_name());

    if (spec_text.empty() == spec_file.empty()) {
      throw flowvol::InputError("give exactly one of a spec string or --file");
    }
    flowvol::ProblemSpec spec = [&] {
      if (spec_file.empty()) return flowvol::parse_spec(spec_text);
      const std::string text = read_file(spec_file);
      return looks_like_json(spec_file, text) ? flowvol::parse_spec_json(text) : flowvol::parse_spec(text);
    }();
    if (degree >= 0) spec.degree = degree;
    if (dilations >= 0) spec.dilations = dilations;

    const auto result = flowvol::run_command(spec, command, {latex, order_check});
    std::cout << result.report;
    return result.status;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return flowvol::kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return flowvol::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return flowvol::kPropertyViolation;
  }
}
