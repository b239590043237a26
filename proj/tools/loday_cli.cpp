// Command-line front end: check structures, run constructions, reformat
// reports. Exit codes: 0 = pass, 1 = axiom failure, 2 = usage/parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "loday/dispatch.hpp"

namespace {

int read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open \"" << path << "\"\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return 0;
}

int write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write \"" << out_path << "\"\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loday: structure-constant checks and constructions for Leibniz algebras,\n"
               "Lie-Rinehart algebras and the Loday-Pirashvili category of linear maps"};
  app.require_subcommand(1);

  std::string file, entity, kind, recipe, out_path, format = "human";

  CLI::App* check = app.add_subcommand("check", "run an axiom checker on a named entity");
  check->add_option("file", file, "definition document")->required();
  check->add_option("--entity", entity, "entity name")->required();
  check->add_option("--kind", kind, "check kind")->required();
  check->add_option("--format", format, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));
  check->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* construct = app.add_subcommand("construct", "run a construction recipe");
  construct->add_option("file", file, "definition document")->required();
  construct->add_option("--recipe", recipe, "recipe name")->required();
  construct->add_option("--entity", entity, "comma-separated input entities")->required();
  construct->add_option("--format", format, "human | machine (for error reports)")
      ->check(CLI::IsMember({"human", "machine"}));
  construct->add_option("--out", out_path, "write the output document here");

  CLI::App* report = app.add_subcommand("report", "re-emit a machine report");
  report->add_option("file", file, "machine report document")->required();
  report->add_option("--format", format, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));
  report->add_option("--out", out_path, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string text;
  if (int rc = read_file(file, text)) return rc;

  try {
    if (check->parsed()) {
      loday::LoadResult loaded = loday::load_document(text);
      if (!loaded.ok()) {
        std::cerr << loaded.diagnostic->render() << "\n";
        return 2;
      }
      loday::CheckReport r = loday::run_check(*loaded.doc, entity, kind);
      std::string rendered =
          format == "machine" ? loday::emit_report_machine(r) : loday::emit_report_human(r);
      if (int rc = write_output(out_path, rendered)) return rc;
      return r.pass() ? 0 : 1;
    }

    if (construct->parsed()) {
      loday::LoadResult loaded = loday::load_document(text);
      if (!loaded.ok()) {
        std::cerr << loaded.diagnostic->render() << "\n";
        return 2;
      }
      std::vector<std::string> entities;
      std::stringstream ss(entity);
      std::string item;
      while (std::getline(ss, item, ',')) entities.push_back(item);
      try {
        loday::Value outdoc = loday::run_construct(*loaded.doc, recipe, entities);
        if (int rc = write_output(out_path, loday::emit_value(outdoc))) return rc;
        return 0;
      } catch (const loday::precondition_error& e) {
        std::cerr << e.what() << "\n";
        std::string rendered = format == "machine"
                                   ? loday::emit_report_machine(e.report())
                                   : loday::emit_report_human(e.report());
        std::cerr << rendered;
        return 1;
      }
    }

    // report
    loday::ParseResult parsed = loday::parse_value(text);
    if (!parsed.ok()) {
      std::cerr << parsed.diagnostic->render() << "\n";
      return 2;
    }
    std::optional<loday::CheckReport> r = loday::report_from_value(*parsed.value);
    if (!r) {
      std::cerr << "not a loday-report/1 document\n";
      return 2;
    }
    std::string rendered =
        format == "machine" ? loday::emit_report_machine(*r) : loday::emit_report_human(*r);
    if (int rc = write_output(out_path, rendered)) return rc;
    return r->pass() ? 0 : 1;
  } catch (const loday::usage_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const loday::structural_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
