// centralspin: run scenario files or the oracle self-check.
//
//   centralspin run scenarios/dynamics.scn --override eta=0.5 --jobs 4
//   centralspin --check --seed 1 --draws 20

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "centralspin.h"

namespace {

int emit(cs_status status, cs_result* result) {
  if (result) {
    const std::string path = cs_result_output_path(result);
    if (path.empty()) {
      std::cout << cs_result_csv(result);
    } else {
      std::ofstream file(path, std::ios::binary);
      file << cs_result_csv(result);
      if (!file) {
        std::cerr << "error: cannot write " << path << "\n";
        cs_result_destroy(result);
        return CS_ERR_VALIDATION;
      }
    }
    std::cerr << cs_result_summary(result) << "\n";
    cs_result_destroy(result);
  }
  if (status != CS_OK) std::cerr << "error: " << cs_last_error() << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central spins in an XY bath: reduced dynamics and QFI entanglement witness"};
  app.set_version_flag("--version", std::string(cs_version()));

  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  bool check = false;
  std::uint64_t seed = 1;
  int draws = 20;
  app.add_flag("--check", check, "Run the oracle suite only");
  app.add_option("--seed", seed, "Seed for --check draws");
  app.add_option("--draws", draws, "Random draws for --check")->check(CLI::PositiveNumber);

  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->fallthrough();  // --jobs may follow the subcommand
  std::string scenario_path;
  std::vector<std::string> overrides;
  run->add_option("file", scenario_path, "Scenario file")->required();
  run->add_option("--override", overrides, "key=value, repeatable")->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : CS_ERR_PARSE;
  }

  if (check) {
    cs_result* result = nullptr;
    const cs_status status = cs_check_run(seed, draws, jobs, &result);
    return emit(status, result);
  }
  if (!run->parsed()) {
    std::cerr << app.help();
    return CS_ERR_PARSE;
  }

  std::ifstream file(scenario_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot read " << scenario_path << "\n";
    return CS_ERR_PARSE;
  }
  std::stringstream text;
  text << file.rdbuf();
  std::vector<const char*> raw;
  for (const auto& o : overrides) raw.push_back(o.c_str());
  cs_result* result = nullptr;
  const cs_status status =
      cs_scenario_run(text.str().c_str(), raw.data(), raw.size(), jobs, &result);
  return emit(status, result);
}
