// Copyright 2026 the nevk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nevk: scenario-driven verification of non-Archimedean Nevanlinna
// identities and the defect relation.
//
//   nevk <command> --scenario <path> [--format text|json]
//        [--samples s1,s2,...] [--cap M]
//
// Commands: polygon, fmt-check, general-position, certificates,
// defect-report, verify. Exit codes: 0 all verdicts pass, 1 a
// mathematical verdict fails, 2 errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nevk/errors.hpp"
#include "nevk/scenario.hpp"

namespace {

std::vector<nevk::Rat> parseSampleList(const std::string& text) {
  std::vector<nevk::Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(nevk::ratFromString(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact non-Archimedean Nevanlinna / defect-relation checker"};
  app.require_subcommand(1);

  std::string scenarioPath;
  std::string format = "text";
  std::string samplesText;
  long cap = 0;

  std::vector<CLI::App*> subs;
  for (const char* name : {"polygon", "fmt-check", "general-position",
                           "certificates", "defect-report", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--scenario", scenarioPath, "scenario JSON path")
        ->required();
    sub->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--samples", samplesText,
                    "comma-separated rational sample points");
    sub->add_option("--cap", cap, "exponent search cap");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(scenarioPath, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open scenario '" << scenarioPath << "'\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    nevk::Scenario sc = nevk::parseScenario(buf.str());
    if (!samplesText.empty()) sc.samples = parseSampleList(samplesText);
    if (cap > 0) sc.cap = cap;
    if (sc.cap == 0) {
      if (const char* env = std::getenv("NEVK_CAP"))
        sc.cap = std::strtol(env, nullptr, 10);
    }

    nevk::Command cmd =
        nevk::commandFromString(app.get_subcommands().front()->get_name());
    nevk::Report rep = nevk::runScenario(sc, cmd);
    if (format == "json")
      std::cout << rep.machine.dump(2) << "\n";
    else
      std::cout << rep.text;
    return rep.exitCode;
  } catch (const nevk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
