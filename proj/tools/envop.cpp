// envop: computations with weight-graded algebras, ns operads, and their
// enveloping operads. See README.md for the input grammar and verbs.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "envop/report.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw envop::input_error("cannot open input file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations with weight-graded algebras, operads, "
               "and enveloping operads"};
  app.require_subcommand(0, 0);

  std::string verb, input;
  envop::RunOptions opt;
  std::string format = "text";
  std::string out_path;

  app.add_option("verb", verb,
                 "dims | gb | dual | umin | umax | forget | bar | koszul | "
                 "series-gk | series-backelin | lagrange | raney | demo")
      ->required();
  app.add_option("input", input,
                 "presentation file, or the demo name for the demo verb");
  app.add_option("--arity", opt.arity, "arity truncation bound");
  app.add_option("--weight", opt.weight, "weight truncation bound");
  app.add_option("--order", opt.order,
                 "generator order like a>b>c, or a series truncation order");
  app.add_option("--field", opt.field, "rational (default) or a prime");
  app.add_option("--series", opt.series, "input series, e.g. \"t - t^2\"");
  app.add_option("--dual", opt.dual, "candidate dual series");
  app.add_option("--format", format, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // malformed invocation is an input error
  }

  envop::PresentationDocument doc;
  const envop::PresentationDocument* doc_ptr = nullptr;
  if (verb == "demo") {
    if (input.empty())
      throw envop::input_error(
          "demo needs a name: catalan, sklyanin, duality, or raney");
    opt.demo_name = input;
  } else if (!input.empty()) {
    doc = envop::parse_presentation(slurp(input));
    doc_ptr = &doc;
  }

  envop::Report r = envop::run_command(verb, doc_ptr, opt);
  std::string payload =
      format == "json" ? envop::emit_json(r) : envop::emit_text(r);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw envop::input_error("cannot open output file " + out_path);
    out << payload;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const envop::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const envop::internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  }
}
