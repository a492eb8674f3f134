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

// The frozen repair-coverage instances under tests/data/repair.

#pragma once

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "antimagic/antimagic.hpp"

namespace support {

struct RepairCase {
  std::string name;
  antimagic::Graph graph;
  antimagic::WitnessConfig witnesses;
  antimagic::XOptions options;
  std::vector<std::string> branches;
};

inline std::vector<RepairCase> load_repair_cases(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<RepairCase> out;
  for (const auto& path : files) {
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    RepairCase c;
    c.name = path.stem().string();
    c.graph = antimagic::parse_edge_list(j.at("graph").get<std::string>());
    c.witnesses.centers = j.at("centers").get<std::vector<antimagic::VertexId>>();
    c.witnesses.witnesses = j.at("witnesses").get<std::vector<antimagic::VertexId>>();
    c.options.e1_shuffle_seed = j.at("e1_shuffle_seed").get<std::uint64_t>();
    const std::string tags = j.at("branches").get<std::string>();
    // "<t>_<tag>[_<tag>...]"
    std::size_t pos = tags.find('_');
    while (pos != std::string::npos) {
      const std::size_t next = tags.find('_', pos + 1);
      c.branches.push_back(tags.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1));
      pos = next;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace support
