// Copyright 2026 The Antimagic Authors
//
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

// Searches planted centre-set instances for ones that drive the repair
// ladder through each branch, and writes the smallest found per branch
// sequence as JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "antimagic/io.hpp"
#include "planted.hpp"

namespace fs = std::filesystem;
using namespace antimagic;

int main(int argc, char** argv) {
  CLI::App app{"search for repair-ladder instances"};
  std::string out_dir = "tests/data/repair";
  std::uint64_t seed = 1;
  long iterations = 200000;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "search seed");
  app.add_option("--iterations", iterations, "random instances per shape");
  CLI11_PARSE(app, argc, argv);

  struct Found {
    tools::PlantedInstance inst;
    std::uint64_t shuffle;
  };
  std::map<std::string, Found> best;
  Lcg64 rng(seed);
  const std::pair<int, WitnessShape> shapes[] = {{2, WitnessShape::x1_to_x2},
                                                 {2, WitnessShape::x1_to_y4},
                                                 {3, WitnessShape::x3_to_y4},
                                                 {3, WitnessShape::x3_to_y8}};
  for (auto [t, shape] : shapes) {
    for (long it = 0; it < iterations; ++it) {
      tools::PlantedOptions o;
      o.t = t;
      o.shape = shape;
      o.n = rng.between(5 * t, 5 * t + 7);
      o.density = rng.between(0, 40);
      o.centre_density = rng.between(0, 15);
      o.inner_density = rng.between(0, 100);
      auto inst = tools::planted_instance(o, rng);
      if (!inst) continue;
      for (std::uint64_t shuffle = 0; shuffle < 8; ++shuffle) {
        XConstruction r = repair_x_sums(inst->graph, label_x_instance(inst->graph, inst->witnesses, {shuffle}));
        std::string key = std::to_string(t);
        for (RepairBranch b : r.trace.repairs) key += std::string("_") + to_string(b);
        auto found = best.find(key);
        if (found == best.end() || inst->graph.size() < found->second.inst.graph.size())
          best.insert_or_assign(key, Found{*inst, shuffle});
      }
    }
  }
  fs::create_directories(out_dir);
  for (const auto& [key, f] : best) {
    if (key.ends_with("_none")) continue;
    nlohmann::json j;
    j["branches"] = key;
    j["centers"] = f.inst.witnesses.centers;
    j["witnesses"] = f.inst.witnesses.witnesses;
    j["e1_shuffle_seed"] = f.shuffle;
    j["graph"] = to_edge_list(f.inst.graph);
    std::ofstream(fs::path(out_dir) / (key + ".json")) << j.dump(2) << '\n';
    std::cout << key << "  m=" << f.inst.graph.size() << '\n';
  }
  return 0;
}
