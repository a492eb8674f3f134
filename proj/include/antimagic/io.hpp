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

// Text formats.
//
// Edge list:
//   n m
//   u v        (m lines, 0 <= u < v < n, strictly ascending; line k is edge k-2)
//
// Labeled orientation (certificate):
//   t h L      (m lines, one per edge id in ascending order: arc t -> h, label L)
//
// Fields are separated by a single space and lines end in '\n'; the writer
// emits exactly this and the reader accepts nothing else, except that the
// last newline may be missing.

#pragma once

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

/// Exactly `count` nonnegative decimal integers separated by single spaces.
inline std::vector<std::int64_t> parse_fields(std::string_view line, int count, int line_no) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  for (int k = 0; k < count; ++k) {
    if (k > 0) {
      if (pos >= line.size() || line[pos] != ' ') throw ParseError(line_no, "expected " + std::to_string(count) + " fields");
      ++pos;
    }
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    if (begin == end || *begin < '0' || *begin > '9') throw ParseError(line_no, "expected a nonnegative integer");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc()) throw ParseError(line_no, "integer out of range");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  if (pos != line.size()) throw ParseError(line_no, "trailing characters");
  return out;
}

inline std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");
  const auto header = detail::parse_fields(lines[0], 2, 1);
  const std::int64_t n = header[0];
  const std::int64_t m = header[1];
  if (n > 100'000'000 || m > 100'000'000) throw ParseError(1, "graph too large");
  const auto found = static_cast<std::int64_t>(lines.size()) - 1;
  if (found < m) throw ParseError(static_cast<int>(found) + 2, "missing edge line");
  if (found > m) throw ParseError(static_cast<int>(m) + 2, "unexpected line after the last edge");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) {
    const int line_no = static_cast<int>(k) + 2;
    const auto f = detail::parse_fields(lines[static_cast<std::size_t>(k) + 1], 2, line_no);
    if (!(f[0] < f[1])) throw ParseError(line_no, "need u < v");
    if (f[1] >= n) throw ParseError(line_no, "vertex out of range");
    const Edge e{static_cast<VertexId>(f[0]), static_cast<VertexId>(f[1])};
    if (!edges.empty() && !(edges.back() < e)) throw ParseError(line_no, "edges must be strictly ascending");
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph read_edge_list(std::istream& in) { return parse_edge_list(detail::read_all(in)); }

inline void write_edge_list(std::ostream& out, const Graph& g) {
  if (!g.is_canonical()) throw InvalidArgument("edge-list output needs edges in ascending order");
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

/// Reads a certificate for `g`. Syntax problems raise ParseError; an arc
/// that is not the edge of its line, or labels that are not a bijection
/// onto {1..m}, raise MalformedLabeling.
inline LabeledOrientation parse_certificate(std::string_view text, const Graph& g) {
  const auto lines = detail::split_lines(text);
  const int m = g.size();
  if (static_cast<int>(lines.size()) != m)
    throw MalformedLabeling("expected " + std::to_string(m) + " arcs, found " + std::to_string(lines.size()));
  LabeledOrientation c{Orientation(m), ArcLabeling(m)};
  for (int k = 0; k < m; ++k) {
    const auto f = detail::parse_fields(lines[static_cast<std::size_t>(k)], 3, k + 1);
    const Edge& e = g.edge(k);
    const bool fwd = f[0] == e.u && f[1] == e.v;
    const bool bwd = f[0] == e.v && f[1] == e.u;
    if (!fwd && !bwd)
      throw MalformedLabeling("line " + std::to_string(k + 1) + ": arc does not match edge " + std::to_string(k));
    c.orientation.orient(g, k, static_cast<VertexId>(f[0]));
    c.labeling[k] = f[2];
  }
  if (!c.labeling.is_bijection()) throw MalformedLabeling("labels are not a bijection onto {1..m}");
  return c;
}

inline LabeledOrientation read_certificate(std::istream& in, const Graph& g) {
  return parse_certificate(detail::read_all(in), g);
}

inline void write_certificate(std::ostream& out, const Graph& g, const LabeledOrientation& c) {
  for (EdgeId e = 0; e < g.size(); ++e)
    out << c.orientation.tail(g, e) << ' ' << c.orientation.head(g, e) << ' ' << c.labeling[e] << '\n';
}

inline std::string to_certificate(const Graph& g, const LabeledOrientation& c) {
  std::ostringstream out;
  write_certificate(out, g, c);
  return out.str();
}

}  // namespace antimagic
