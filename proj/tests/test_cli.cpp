#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int exit_code;
  std::string output;
};

Run run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("mideal-cli-out-" + std::to_string(counter++));
  std::string cmd = std::string(MIDEAL_CLI_PATH) + " " + args + " -o " + out.string() +
                    " 2>/dev/null";
  int status = std::system(cmd.c_str());
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  fs::remove(out);
  return Run{code, buf.str()};
}

fs::path write_config(const nlohmann::json& j) {
  static int counter = 0;
  fs::path p = fs::temp_directory_path() / ("mideal-cli-cfg-" + std::to_string(counter++));
  std::ofstream out(p);
  out << j.dump();
  return p;
}

}  // namespace

TEST_CASE("closure job round trip") {
  nlohmann::json cfg = {
      {"command", "closure"},
      {"backend", {{"type", "valuation"}, {"group", "Z[1/2]"}}},
      {"op", {{"op", "v"}}},
      {"ideal", {{"point", {"0"}}, {"open", true}}},
  };
  fs::path p = write_config(cfg);
  Run r = run_cli("-c " + p.string());
  fs::remove(p);
  CHECK(r.exit_code == 0);
  nlohmann::json rep = nlohmann::json::parse(r.output);
  CHECK(rep.at("command") == "closure");
  CHECK(rep.at("passed") == true);
}

TEST_CASE("failing gauss jobs are byte-deterministic across processes") {
  nlohmann::json cfg = {
      {"command", "gauss"},
      {"backend", {{"type", "order"}, {"disc", -12}}},
      {"f", "2+(1+sqrt(-3))X"},
      {"g", "2+(1-sqrt(-3))X"},
      {"seed", 11},
  };
  fs::path p = write_config(cfg);
  Run r1 = run_cli("-c " + p.string());
  Run r2 = run_cli("-c " + p.string());
  fs::remove(p);
  CHECK(r1.exit_code == 1);
  CHECK_FALSE(r1.output.empty());
  CHECK(r1.output == r2.output);

  nlohmann::json rep = nlohmann::json::parse(r1.output);
  REQUIRE(rep.contains("repro"));
  fs::path pr = write_config(rep.at("repro"));
  Run r3 = run_cli("-c " + pr.string());
  fs::remove(pr);
  CHECK(r3.exit_code == 1);
  nlohmann::json rep3 = nlohmann::json::parse(r3.output);
  CHECK(rep3.at("witness") == rep.at("witness"));
}

TEST_CASE("config errors exit with status 2") {
  nlohmann::json cfg = {{"command", "no-such-command"}};
  fs::path p = write_config(cfg);
  Run r = run_cli("-c " + p.string());
  fs::remove(p);
  CHECK(r.exit_code == 2);
}
