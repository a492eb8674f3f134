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

// The `antimagic` command line. Kept in a header so tests can drive run()
// in-process.
//
//   construct GRAPH [--strategy auto|matching|x-set|alpha] [--out CERT]
//   verify GRAPH CERT
//   oracle GRAPH [--out CERT]
//   generate --family F [--n N ...] [--seed S] [--out GRAPH]
//   batch CONFIG [--count N] [--seed S] [--family F] [--out DIR]
//
// Exit codes: 0 success, 1 collision / verifier failure, 2 rejected
// instance, 3 unsupported instance, 64 unparsable input or usage, 65
// malformed certificate, 66 unreadable file, 70 internal error.

#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "antimagic/antimagic.hpp"

namespace antimagic::cli {

enum Exit : int {
  kOk = 0,
  kCollision = 1,
  kRejected = 2,
  kUnsupported = 3,
  kUsage = 64,
  kBadCertificate = 65,
  kNoInput = 66,
  kInternal = 70,
};

/// Trace verbosity from ANTIMAGIC_LOG: unset or "0" is quiet, anything
/// else prints construction traces to stderr.
inline bool tracing() {
  const char* v = std::getenv("ANTIMAGIC_LOG");
  return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

struct Failure {
  int code;
  std::string message;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kNoInput, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Graph load_graph(const std::string& path) {
  const std::string text = slurp(path);
  try {
    return parse_edge_list(text);
  } catch (const ParseError& e) {
    throw Failure{kUsage, path + ":" + std::to_string(e.line()) + ": " + e.what()};
  } catch (const InvalidArgument& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

template <typename T>
std::string join(const std::vector<T>& v, char sep = ' ') {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? std::string(1, sep) : "") << v[i];
  return s.str();
}

struct ConstructRequest {
  std::string strategy = "auto";
  std::vector<VertexId> set;  // A, for the matching strategy
  std::vector<VertexId> centers;
  std::vector<VertexId> witnesses;
  std::uint64_t seed = 1;
};

struct ConstructOutcome {
  LabeledOrientation certificate;
  std::string strategy;
  std::vector<std::string> trace;
};

inline ConstructOutcome construct_matching(const Graph& g, const ConstructRequest& req) {
  std::vector<VertexId> a_side = req.set;
  if (a_side.empty()) {
    auto colors = two_coloring(g);
    if (!colors) throw RejectedInstance("A is independent");
    std::vector<VertexId> side[2];
    for (VertexId v = 0; v < g.order(); ++v) side[(*colors)[v]].push_back(v);
    a_side = side[1].size() > side[0].size() ? side[1] : side[0];
  }
  for (VertexId a : a_side)
    if (a < 0 || a >= g.order()) throw InvalidArgument("--set names a vertex outside G");
  if (!is_independent(g, a_side)) throw RejectedInstance("A is independent");
  MatchingInstance inst{a_side, {}};
  auto matching = find_saturating_matching(g, a_side);
  if (!matching) throw RejectedInstance("M saturates V(G)\\A");
  inst.matching = *matching;
  MatchingConstruction c = construct_from_matching(g, inst);
  ConstructOutcome out{std::move(c.result), "matching", {}};
  out.trace.push_back("A = " + join(a_side));
  out.trace.push_back("b-order = " + join(c.trace.b_order));
  out.trace.push_back("modulus = " + std::to_string(c.trace.modulus));
  return out;
}

inline ConstructOutcome construct_x_set(const Graph& g, const ConstructRequest& req) {
  WitnessConfig w;
  w.centers = req.centers;
  if (w.centers.empty()) {
    auto c = center_within(g, 2);
    if (!c) throw RejectedInstance("d(v, X) <= 2 for every v");
    w.centers = {*c};
  }
  if (!req.witnesses.empty()) {
    w.witnesses = req.witnesses;
  } else if (w.centers.size() > 1) {
    auto found = find_witnesses(g, w.centers);
    if (!found) throw RejectedInstance("witnesses y_1..y_{4t-1} exist");
    w = *found;
  }
  XConstruction c = construct_x_orientation(g, w);
  ConstructOutcome out{std::move(c.result), "x-set", {}};
  out.trace.push_back("X = " + join(w.centers));
  out.trace.push_back("A1 = " + join(c.trace.forest.a1));
  out.trace.push_back("A2 = " + join(c.trace.forest.a2));
  std::vector<std::string> repairs;
  for (RepairBranch b : c.trace.repairs) repairs.emplace_back(to_string(b));
  out.trace.push_back("repairs = " + join(repairs));
  return out;
}

inline ConstructOutcome construct_alpha(const Graph& g, const ConstructRequest& req) {
  AlphaOptions opt;
  opt.seed = req.seed;
  AlphaResult r = antimagic_by_alpha(g, opt);
  ConstructOutcome out{std::move(r.result), std::string("alpha/") + to_string(r.strategy), std::move(r.log)};
  if (!r.centers.empty()) out.trace.push_back("X = " + join(r.centers));
  return out;
}

inline ConstructOutcome construct(const Graph& g, const ConstructRequest& req) {
  if (req.strategy == "matching") return construct_matching(g, req);
  if (req.strategy == "x-set") return construct_x_set(g, req);
  if (req.strategy == "alpha") return construct_alpha(g, req);
  if (req.strategy != "auto") throw Failure{kUsage, "unknown strategy " + req.strategy};
  if (two_coloring(g)) {
    try {
      return construct_matching(g, req);
    } catch (const RejectedInstance&) {
    }
  }
  return construct_alpha(g, req);
}

/// Maps library errors of a construction to exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Failure& f) {
    err << f.message << '\n';
    return f.code;
  } catch (const RejectedInstance& e) {
    err << "rejected: " << e.hypothesis() << " fails\n";
    return kRejected;
  } catch (const UnsupportedInstance& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const BudgetError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{kNoInput, "cannot write " + path};
  f << text;
}

inline int cmd_construct(const std::string& graph_path, const ConstructRequest& req, const std::string& out_path,
                         std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(graph_path);
    ConstructOutcome c = construct(g, req);
    const auto verdict = is_antimagic(g, c.certificate);
    if (!verdict) throw ConstructionBug("certificate failed verification");
    const std::string cert_path = out_path.empty() ? graph_path + ".cert" : out_path;
    emit(cert_path, to_certificate(g, c.certificate), out);
    out << "strategy " << c.strategy << '\n';
    out << "sums " << join(verdict.sums) << '\n';
    if (tracing())
      for (const auto& line : c.trace) err << "trace: " << line << '\n';
    return static_cast<int>(kOk);
  });
}

inline int cmd_verify(const std::string& graph_path, const std::string& cert_path, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(graph_path);
    const std::string text = slurp(cert_path);
    LabeledOrientation c;
    try {
      c = parse_certificate(text, g);
    } catch (const ParseError& e) {
      throw Failure{kBadCertificate, cert_path + ":" + std::to_string(e.line()) + ": " + e.what()};
    } catch (const MalformedLabeling& e) {
      throw Failure{kBadCertificate, cert_path + ": " + e.what()};
    }
    const auto verdict = is_antimagic(g, c);
    if (!verdict) {
      const auto [u, v] = *verdict.collision;
      out << "collision " << u << ' ' << v << " sum " << verdict.sums[u] << '\n';
      return static_cast<int>(kCollision);
    }
    out << "antimagic\n";
    return static_cast<int>(kOk);
  });
}

inline int cmd_oracle(const std::string& graph_path, const std::string& out_path, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(graph_path);
    auto w = oracle_antimagic_exists(g);
    if (!w) {
      out << "none\n";
      return static_cast<int>(kCollision);
    }
    emit(out_path, to_certificate(g, *w), out);
    if (!out_path.empty()) out << "exists\n";
    return static_cast<int>(kOk);
  });
}

/// Flat key=value configuration for batch runs.
struct BatchConfig {
  FamilySpec spec;
  int count = 1;
  std::string strategy = "auto";
};

inline void apply_setting(BatchConfig& c, const std::string& key, const std::string& value, int line) {
  auto number = [&]() -> long long {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      return v;
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer for " + key);
    }
  };
  if (key == "family") {
    auto f = family_from_string(value);
    if (!f) throw ParseError(line, "unknown family " + value);
    c.spec.family = *f;
  } else if (key == "n") c.spec.n = static_cast<int>(number());
  else if (key == "a") c.spec.a = static_cast<int>(number());
  else if (key == "b") c.spec.b = static_cast<int>(number());
  else if (key == "side_a") c.spec.side_a = static_cast<int>(number());
  else if (key == "side_b") c.spec.side_b = static_cast<int>(number());
  else if (key == "k") c.spec.k = static_cast<int>(number());
  else if (key == "delta_min") c.spec.delta_min = static_cast<int>(number());
  else if (key == "min_radius") c.spec.min_radius = static_cast<int>(number());
  else if (key == "seed") c.spec.seed = static_cast<std::uint64_t>(number());
  else if (key == "count") c.count = static_cast<int>(number());
  else if (key == "strategy") c.strategy = value;
  else throw ParseError(line, "unknown key " + key);
}

inline BatchConfig parse_batch_config(std::string_view text) {
  BatchConfig c;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key=value");
    apply_setting(c, line.substr(0, eq), line.substr(eq + 1), line_no);
  }
  return c;
}

/// Side sizes for a biregular family given only degrees and a target n.
inline void fill_biregular_sides(FamilySpec& s) {
  if (s.side_a > 0 && s.side_b > 0) return;
  if (s.a < 1 || s.b < 1) throw InvalidArgument("biregular needs a and b");
  const int l = std::lcm(s.a, s.b);
  const int na = l / s.a;
  const int nb = l / s.b;
  int mult = std::max(1, s.n / (na + nb));
  while (na * mult < s.b || nb * mult < s.a) ++mult;
  s.side_a = na * mult;
  s.side_b = nb * mult;
}

struct BatchLine {
  int index = 0;
  bool ok = false;
  std::string text;
};

inline int cmd_batch(const std::string& config_path, std::optional<int> count, std::optional<std::uint64_t> seed,
                     const std::string& family, const std::string& strategy, bool timing, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    BatchConfig cfg;
    try {
      cfg = parse_batch_config(slurp(config_path));
    } catch (const ParseError& e) {
      throw Failure{kUsage, config_path + ":" + std::to_string(e.line()) + ": " + e.what()};
    }
    if (count) cfg.count = *count;
    if (seed) cfg.spec.seed = *seed;
    if (!strategy.empty()) cfg.strategy = strategy;
    if (!family.empty()) {
      auto f = family_from_string(family);
      if (!f) throw Failure{kUsage, "unknown family " + family};
      cfg.spec.family = *f;
    }
    if (cfg.spec.family == Family::biregular) fill_biregular_sides(cfg.spec);

    int ok = 0;
    bool verifier_failure = false;
    for (int i = 0; i < cfg.count; ++i) {
      FamilySpec spec = cfg.spec;
      spec.seed = cfg.spec.seed + static_cast<std::uint64_t>(i);
      std::ostringstream line;
      line << i << ' ' << to_string(spec.family) << " seed=" << spec.seed;
      const auto start = std::chrono::steady_clock::now();
      bool success = false;
      try {
        const Graph g = generate(spec);
        line << " n=" << g.order() << " m=" << g.size();
        ConstructRequest req;
        req.strategy = cfg.strategy;
        req.seed = spec.seed;
        ConstructOutcome c = construct(g, req);
        // Round trip through the certificate text before verifying.
        const LabeledOrientation back = parse_certificate(to_certificate(g, c.certificate), g);
        success = static_cast<bool>(is_antimagic(g, back));
        if (!success) verifier_failure = true;
        line << " strategy=" << c.strategy << (success ? " ok" : " VERIFY-FAILED");
      } catch (const ConstructionBug& e) {
        verifier_failure = true;
        line << " CONSTRUCTION-BUG " << e.what();
      } catch (const RejectedInstance& e) {
        line << " rejected: " << e.hypothesis();
      } catch (const Error& e) {
        line << " failed: " << e.what();
      }
      if (timing) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        line << " ms=" << ms;
      }
      ok += success;
      out << line.str() << '\n';
    }
    out << ok << '/' << cfg.count << '\n';
    return verifier_failure ? static_cast<int>(kCollision) : static_cast<int>(kOk);
  });
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"antimagic orientations of graphs"};
  app.require_subcommand(1);

  std::string graph_path, cert_path, out_path, config_path;
  ConstructRequest req;
  auto* construct_cmd = app.add_subcommand("construct", "build an antimagic orientation");
  construct_cmd->add_option("graph", graph_path, "edge-list file")->required();
  construct_cmd->add_option("--strategy", req.strategy, "auto|matching|x-set|alpha")
      ->check(CLI::IsMember({"auto", "matching", "x-set", "alpha"}));
  construct_cmd->add_option("--out", out_path, "certificate path (default GRAPH.cert, - for stdout)");
  construct_cmd->add_option("--set", req.set, "independent set A for the matching strategy")->delimiter(',');
  construct_cmd->add_option("--centers", req.centers, "centre set X for the x-set strategy")->delimiter(',');
  construct_cmd->add_option("--witnesses", req.witnesses, "witnesses y_1.. for the x-set strategy")->delimiter(',');
  construct_cmd->add_option("--seed", req.seed, "seed for randomised fallbacks");

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("graph", graph_path, "edge-list file")->required();
  verify_cmd->add_option("certificate", cert_path, "labeled-orientation file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search (at most 9 edges)");
  oracle_cmd->add_option("graph", graph_path, "edge-list file")->required();
  oracle_cmd->add_option("--out", out_path, "certificate path (default stdout)");

  FamilySpec spec;
  std::string family;
  auto* generate_cmd = app.add_subcommand("generate", "write a generated graph");
  generate_cmd->add_option("--family", family, "family name")->required();
  generate_cmd->add_option("--n", spec.n);
  generate_cmd->add_option("--a", spec.a);
  generate_cmd->add_option("--b", spec.b);
  generate_cmd->add_option("--side-a", spec.side_a);
  generate_cmd->add_option("--side-b", spec.side_b);
  generate_cmd->add_option("--k", spec.k);
  generate_cmd->add_option("--delta-min", spec.delta_min);
  generate_cmd->add_option("--min-radius", spec.min_radius);
  generate_cmd->add_option("--seed", spec.seed);
  generate_cmd->add_option("--out", out_path, "output path (default stdout)");

  std::optional<int> count;
  std::optional<std::uint64_t> batch_seed;
  std::string batch_strategy;
  bool timing = false;
  auto* batch_cmd = app.add_subcommand("batch", "generate, construct and verify many instances");
  batch_cmd->add_option("config", config_path, "key=value config file")->required();
  batch_cmd->add_option("--count", count);
  batch_cmd->add_option("--seed", batch_seed);
  batch_cmd->add_option("--family", family);
  batch_cmd->add_option("--strategy", batch_strategy);
  batch_cmd->add_flag("--timing", timing, "append wall time per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  if (*construct_cmd) return cmd_construct(graph_path, req, out_path, out, err);
  if (*verify_cmd) return cmd_verify(graph_path, cert_path, out, err);
  if (*oracle_cmd) return cmd_oracle(graph_path, out_path, out, err);
  if (*batch_cmd) return cmd_batch(config_path, count, batch_seed, family, batch_strategy, timing, out, err);
  if (*generate_cmd) {
    return guarded(err, [&] {
      auto f = family_from_string(family);
      if (!f) throw Failure{kUsage, "unknown family " + family};
      spec.family = *f;
      if (spec.family == Family::biregular) fill_biregular_sides(spec);
      emit(out_path, to_edge_list(generate(spec)), out);
      return static_cast<int>(kOk);
    });
  }
  return kUsage;
}

}  // namespace antimagic::cli
