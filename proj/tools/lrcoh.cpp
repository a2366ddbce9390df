// lrcoh: Lie-Rinehart cohomology from JSON problem files.
//
//   lrcoh <command> <problem.json> [--field F] [--degree d] [--max-page r]
//         [--format json|text] [--output path]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lrc/report.hpp"
#include "lrc/sha256.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Lie-Rinehart cohomology, enveloping algebras and Hochschild-Serre spectral sequences"};
  app.set_version_flag("--version", std::string(lrc::engine_version));

  std::string command, path, field, format = "json", output;
  std::size_t degree = 0;
  int max_page = 0;
  app.add_option("command", command, "validate | cohomology | invariants | hs | env | total")
      ->required()
      ->check(CLI::IsMember(lrc::commands()));
  app.add_option("problem", path, "problem file (JSON)")->required();
  auto* field_opt = app.add_option("--field", field, "override the field: Q or a prime p");
  auto* degree_opt = app.add_option("--degree", degree, "PBW cutoff for env (default 3)")->check(CLI::PositiveNumber);
  auto* page_opt =
      app.add_option("--max-page", max_page, "last page for hs (default: filtration length + 1)")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", output, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? lrc::exit_ok : lrc::exit_input_error;
  }

  lrc::Report report;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    report = lrc::input_error_report(command, "", "cannot open " + path);
  } else {
    std::ostringstream bytes;
    bytes << in.rdbuf();
    const std::string text = bytes.str();
    lrc::RunOptions opt;
    opt.command = command;
    opt.input_sha256 = lrc::sha256_hex(text);
    try {
      if (*field_opt) opt.field = lrc::FieldSpec::parse(field);
      if (*degree_opt) opt.degree = degree;
      if (*page_opt) opt.max_page = max_page;
      report = lrc::run_command(lrc::parse_problem_json(text), opt);
    } catch (const lrc::ParseError& e) {
      report = lrc::input_error_report(command, opt.input_sha256, e.what());
    }
  }

  const std::string rendered = format == "text" ? lrc::render_text(report) : lrc::render_json(report);
  if (output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return lrc::exit_input_error;
    }
    out << rendered;
  }
  if (report.exit_code != lrc::exit_ok && report.body.contains("error"))
    std::cerr << "lrcoh: " << report.body["error"].get<std::string>() << "\n";
  return report.exit_code;
}
