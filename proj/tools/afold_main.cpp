#include <afold/afold.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Args {
  std::string suite;
  std::string catalog;
  std::string input;
  std::string a, e, c, m, t, N, s;
  uint64_t budget_pairs = 0;
  int64_t budget_ms = -1;
  bool include_generic5 = false;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, Args& args) {
  cmd->add_option("--catalog", args.catalog, "built-in arrangement id");
  cmd->add_option("--input", args.input, "arrangement JSON file");
  cmd->add_option("--a", args.a, "a range: all | 2 | 1..4");
  cmd->add_option("--e", args.e, "power range");
  cmd->add_option("--c", args.c, "codimension range");
  cmd->add_option("--m", args.m, "symbolic exponent range");
  cmd->add_option("--t", args.t, "inequality sweep depth");
  cmd->add_option("--N", args.N, "projective dimension range");
  cmd->add_option("--s", args.s, "form count range");
  cmd->add_option("--budget-pairs", args.budget_pairs, "S-pair cap per basis");
  cmd->add_option("--budget-ms", args.budget_ms, "wall-clock cap per basis, 0 = unlimited");
  cmd->add_option("--format", args.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", args.out, "write the report here instead of stdout");
}

int fail_usage(const std::string& msg) {
  std::cerr << "afold: " << msg << "\n";
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification harness for ideals of a-fold products of linear forms"};
  app.require_subcommand(1);
  Args args;

  CLI::App* verify = app.add_subcommand("verify", "run a named check suite");
  verify->add_option("suite", args.suite, "decomposition | resolution | powers | rees | star | all")
      ->required();
  verify->add_flag("--include-generic5", args.include_generic5,
                   "also run the heavy five-form blow-up theorems");
  add_common(verify, args);
  CLI::App* decompose = app.add_subcommand("decompose", "list predicted primary components");
  add_common(decompose, args);
  CLI::App* betti = app.add_subcommand("betti", "print graded Betti tables");
  add_common(betti, args);
  CLI::App* rees_gens = app.add_subcommand("rees-gens", "list minimal blow-up ideal generators");
  add_common(rees_gens, args);
  CLI::App* alpha = app.add_subcommand("alpha", "compare least degrees with the closed form");
  add_common(alpha, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;  // help and version exit clean; usage errors do not
  }

  nlohmann::json req;
  if (verify->parsed()) {
    req["verb"] = "verify";
    req["suite"] = args.suite;
    if (args.include_generic5) req["include_generic5"] = true;
  } else if (decompose->parsed()) {
    req["verb"] = "decompose";
  } else if (betti->parsed()) {
    req["verb"] = "betti";
  } else if (rees_gens->parsed()) {
    req["verb"] = "rees-gens";
  } else {
    req["verb"] = "alpha";
  }
  (void)alpha;

  if (!args.catalog.empty() && !args.input.empty())
    return fail_usage("--catalog and --input are mutually exclusive");
  if (!args.catalog.empty()) req["catalog"] = args.catalog;
  if (!args.input.empty()) {
    std::ifstream file(args.input);
    if (!file) return fail_usage("cannot read " + args.input);
    std::ostringstream text;
    text << file.rdbuf();
    req["arrangement_text"] = text.str();
    req["input_id"] = std::filesystem::path(args.input).filename().string();
  }
  const std::pair<const char*, const std::string*> ranges[] = {
      {"a", &args.a}, {"e", &args.e}, {"c", &args.c}, {"m", &args.m},
      {"t", &args.t}, {"N", &args.N}, {"s", &args.s}};
  for (const auto& [key, value] : ranges)
    if (!value->empty()) req[key] = *value;
  if (args.budget_pairs) req["budget_pairs"] = args.budget_pairs;
  if (args.budget_ms >= 0) req["budget_ms"] = args.budget_ms;

  afold_report* report = nullptr;
  afold_status status = afold_run(req.dump().c_str(), &report);
  if (status != AFOLD_OK) return fail_usage(afold_last_error());

  const char* rendered = afold_report_render(report, args.format.c_str());
  if (!rendered) {
    std::string msg = afold_last_error();
    afold_report_free(report);
    return fail_usage(msg);
  }
  if (args.out.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream sink(args.out);
    if (!sink) {
      afold_report_free(report);
      return fail_usage("cannot write " + args.out);
    }
    sink << rendered;
  }
  int exit_code = afold_report_exit_code(report);
  afold_report_free(report);
  return exit_code;
}
