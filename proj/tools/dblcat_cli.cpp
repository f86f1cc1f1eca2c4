// Copyright 2026 The dblcat Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dblcat/instance_file.hpp"
#include "dblcat/runner.hpp"

namespace
{

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_suites(const std::vector<std::string> & raw)
{
  std::vector<std::string> out;
  for (const auto & item : raw) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) {out.push_back(name);}
    }
  }
  return out;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Brute-force law checks for finite double categories"};
  app.require_subcommand(1);

  auto * check = app.add_subcommand("check", "Run verification suites on an instance file");
  std::string path;
  std::vector<std::string> suites;
  int bound = 0;
  int budget = 0;
  bool json = false;
  bool text = false;
  check->add_option("file", path, "Instance file")->required()->check(CLI::ExistingFile);
  check->add_option("--suite", suites, "Suites to run, comma separated")->delimiter(',');
  auto * bound_opt = check->add_option("--bound", bound, "Largest carrier size enumerated")
    ->check(CLI::NonNegativeNumber);
  auto * budget_opt = check->add_option("--budget", budget, "Tuples tried per law, 0 for no limit")
    ->check(CLI::NonNegativeNumber);
  auto * json_flag = check->add_flag("--json", json, "Emit the JSON report");
  check->add_flag("--text", text, "Emit a summary table")->excludes(json_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();

  dblcat::RunOptions options;
  options.suites = split_suites(suites);
  if (bound_opt->count() > 0) {options.bound = bound;}
  if (budget_opt->count() > 0) {options.budget = budget;}

  dblcat::Json report;
  try {
    auto instance = dblcat::parse_instance(buffer.str());
    dblcat::validate_instance(instance);
    report = dblcat::run_instance(instance, options);
  } catch (const dblcat::ParseError & e) {
    std::cerr << path << ":" << e.diagnostic() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument & e) {
    std::cerr << "dblcat: " << e.what() << "\n";
    return kExitUsage;
  }

  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << dblcat::text_summary(report);
  }
  return report.at("ok").get<bool>() ? kExitPass : kExitFail;
}
