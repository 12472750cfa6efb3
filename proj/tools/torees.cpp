#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "torees/cli/runner.hpp"

using namespace torees;
using namespace torees::cli;

namespace {

int emit(const Json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric multi-symbolic Rees algebras: class groups, symbolic powers, F-purity"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<long> max_degree;
  std::optional<unsigned long> characteristic;
  std::string out_path;
  app.add_option("--max-degree", max_degree, "Default degree bound for degree-by-degree checks")->check(CLI::NonNegativeNumber);
  app.add_option("--char", characteristic, "Characteristic used when a task gives none");
  app.add_option("--out", out_path, "Write the JSON report to this file instead of stdout");

  std::string scenario_path;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("file", scenario_path, "Scenario file")->required();

  std::optional<std::string> only;
  auto* examples_cmd = app.add_subcommand("paper-examples", "Run the built-in example checks");
  examples_cmd->add_option("--only", only, "Restrict to a tag (s3, s4, s6) or a check name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (characteristic && *characteristic != 0 && !is_prime_number(*characteristic)) {
    std::cerr << "error: --char must be 0 or a prime\n";
    return 2;
  }
  RunOptions options{max_degree, characteristic};

  if (*run) {
    std::ifstream in(scenario_path);
    if (!in) {
      std::cerr << "error: cannot read " << scenario_path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    Scenario s;
    try {
      s = parse_scenario(buf.str());
    } catch (const ParseError& e) {
      std::cerr << scenario_path << ": " << e.what() << "\n";
      return 2;
    }
    RunResult r = run_scenario(s, options);
    r.report["scenario"] = scenario_path;
    for (const auto& t : r.report["tasks"]) {
      std::string status = t["status"].get<std::string>();
      std::cerr << "[" << status << "] " << t["task"].get<std::string>();
      if (!t["target"].is_null()) std::cerr << " " << t["target"].get<std::string>();
      if (t.contains("verdict")) std::cerr << ": " << t["verdict"].get<std::string>();
      if (t.contains("error")) std::cerr << ": " << t["error"].get<std::string>();
      std::cerr << "\n";
    }
    if (int e = emit(r.report, out_path)) return e;
    return r.exit_code;
  }

  bool ok = true;
  Json checks;
  try {
    checks = run_paper_examples(only, ok);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (const auto& c : checks) {
    std::cerr << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["tag"].get<std::string>() << "/"
              << c["name"].get<std::string>();
    if (c.contains("contradicts")) std::cerr << " (contradicts " << c["contradicts"].get<std::string>() << ")";
    std::cerr << "\n";
  }
  Json report{{"schema", report_schema}, {"version", tool_version}, {"suite", "paper-examples"}};
  report["only"] = only ? Json(*only) : Json(nullptr);
  report["checks"] = checks;
  report["all_passed"] = ok;
  if (int e = emit(report, out_path)) return e;
  return ok ? 0 : 1;
}
