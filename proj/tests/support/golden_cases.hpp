#pragma once

// CLI invocations whose outputs are checked into tests/golden/. "{corpus}" and
// "{out}" in the arguments are replaced with the fixture corpus directory and a
// scratch directory.

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace golden {

namespace fs = std::filesystem;

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  std::vector<std::string> outputs;  // files under {out} compared to tests/golden/
};

inline const std::vector<GoldenCase>& cases() {
  static const std::vector<GoldenCase> all = {
      {"indicators-csv",
       {"indicators", "{corpus}/calm", "{corpus}/erratic", "--out", "{out}/indicators.csv"},
       {"indicators.csv"}},
      {"indicators-json",
       {"indicators", "{corpus}/calm", "{corpus}/erratic", "--format", "json", "--out",
        "{out}/indicators.json"},
       {"indicators.json"}},
      {"indicators-segmented",
       {"indicators", "{corpus}/calm", "{corpus}/erratic", "--segment-len", "50", "--r-ctm", "2",
        "--r-d", "5", "--divisions", "4,4,4", "--out", "{out}/indicators_segmented.csv"},
       {"indicators_segmented.csv"}},
      {"sweep",
       {"sweep", "{corpus}/calm", "{corpus}/erratic", "--indicator", "ctm,d,cctm1,cctm2,cctm3,cctm4",
        "--out", "{out}/sweep.csv"},
       {"sweep.csv"}},
      {"aggregate-csv",
       {"aggregate", "{corpus}/calm", "{corpus}/erratic", "--out", "{out}/aggregate.csv"},
       {"aggregate.csv"}},
      {"aggregate-json",
       {"aggregate", "{corpus}/calm", "{corpus}/erratic", "--format", "json", "--out",
        "{out}/aggregate.json"},
       {"aggregate.json"}},
      {"classify",
       {"classify", "{corpus}/calm", "{corpus}/erratic", "--out", "{out}/classify.csv"},
       {"classify.csv"}},
      {"points",
       {"points", "{corpus}/calm/calm01.txt", "{corpus}/erratic/erratic04.csv", "--out",
        "{out}/points"},
       {"points/calm01.sodp.csv", "points/calm01.tvm.csv", "points/erratic04.sodp.csv",
        "points/erratic04.tvm.csv"}},
  };
  return all;
}

inline std::string substitute(std::string arg, const fs::path& corpus, const fs::path& out) {
  auto replace = [&](const std::string& key, const std::string& value) {
    for (auto pos = arg.find(key); pos != std::string::npos; pos = arg.find(key)) {
      arg.replace(pos, key.size(), value);
    }
  };
  replace("{corpus}", corpus.string());
  replace("{out}", out.string());
  return arg;
}

struct RunResult {
  int exit_code = 0;
  std::string diagnostics;
};

inline RunResult run_case(const GoldenCase& c, const fs::path& corpus, const fs::path& out) {
  std::vector<std::string> args;
  for (const auto& a : c.args) args.push_back(substitute(a, corpus, out));
  std::ostringstream so, se;
  RunResult r;
  r.exit_code = hrvtvm::cli::run(args, so, se);
  r.diagnostics = se.str();
  return r;
}

}  // namespace golden
