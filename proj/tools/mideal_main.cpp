#include "mideal/report.hpp"
#include "mideal/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"exact multiplicative ideal theory over valuation domains and quadratic orders"};

  std::string config_path, suite, out_path, format = "report";
  std::uint64_t seed = 0;
  bool seed_set = false, list_suites = false;

  app.add_option("-c,--config", config_path, "job config (JSON)");
  app.add_option("-f,--format", format, "report (full JSON) or summary (one line)")
      ->check(CLI::IsMember({"report", "summary"}));
  app.add_option("-s,--suite", suite, "run a property suite by name");
  app.add_option("--seed", seed, "RNG seed (overrides the config)")->each([&](const std::string&) {
    seed_set = true;
  });
  app.add_option("-o,--out", out_path, "write the report here instead of stdout");
  app.add_flag("--list-suites", list_suites, "list property suite names and exit");
  CLI11_PARSE(app, argc, argv);

  if (list_suites) {
    for (auto& n : mideal::suite_names()) std::cout << n << "\n";
    return 0;
  }

  mideal::json cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config: " + config_path);
      in >> cfg;
    } else if (!suite.empty()) {
      cfg = mideal::json{{"command", "propsuite"}};
    } else {
      std::cerr << "error: need --config or --suite\n";
      return 2;
    }
    if (!suite.empty()) {
      cfg["command"] = "propsuite";
      cfg["suite"] = suite;
    }
    if (seed_set || !cfg.contains("seed")) cfg["seed"] = seed;

    auto t0 = std::chrono::steady_clock::now();
    mideal::RunResult result = mideal::run_job(mideal::parse_config(cfg));
    auto t1 = std::chrono::steady_clock::now();

    std::string body;
    if (format == "summary") {
      bool ok = result.report.value("passed", false);
      body = result.report.value("command", std::string("?")) + ": " +
             (ok ? "pass" : "fail") + "\n";
    } else {
      body = mideal::render(result.report);
    }
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot open output: " + out_path);
      out << body;
    }
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
