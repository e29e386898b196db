// Copyright 2026 The orbitalg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORBITALG_GRAPH_IO_HPP
#define ORBITALG_GRAPH_IO_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orbitalg/error.hpp"
#include "orbitalg/graph.hpp"
#include "orbitalg/group_io.hpp"

namespace orbitalg {

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// packed six bits per byte (most significant first), each byte offset by 63.
inline std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.n();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

inline Graph from_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw InputError("graph6: empty input");
  std::size_t pos = 0;
  auto take = [&]() -> std::uint64_t {
    if (pos >= s.size()) throw InputError("graph6: truncated input");
    auto c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw InputError("graph6: byte out of range at offset " + std::to_string(pos - 1));
    return c - 63u;
  };
  std::uint64_t n = take();
  if (n == 63) {
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | take();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | take();
    }
  }
  if (n > kMaxDegree) throw InputError("graph6: graph has more than 2^20 vertices");
  const std::uint64_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes)
    throw InputError("graph6: expected " + std::to_string(bytes) + " data bytes, found " + std::to_string(s.size() - pos));
  BitMatrix m(n, n);
  std::uint64_t bit = 0;
  unsigned cur = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) cur = static_cast<unsigned>(take());
      if ((cur >> (5 - bit % 6)) & 1u) {
        m.set(i, j);
        m.set(j, i);
      }
    }
  if (bits % 6 && (cur & ((1u << (6 - bits % 6)) - 1)))
    throw InputError("graph6: nonzero padding bits");
  return Graph(std::move(m));
}

// Adjacency-list text: first line "n", then "u: v1 v2 ..." (1-based). Edges
// may be listed from either end; missing lines mean isolated vertices.
inline std::string to_adjacency_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (std::size_t x = 0; x < g.n(); ++x) {
    out += std::to_string(x + 1) + ":";
    g.row(x).for_each([&](std::size_t y) { out += " " + std::to_string(y + 1); });
    out += "\n";
  }
  return out;
}

inline Graph from_adjacency_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_n = false;
  BitMatrix m;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string where = "line " + std::to_string(lineno);
    if (!have_n) {
      n = detail::parse_count(t, where);
      if (n > kMaxDegree) throw InputError(where + ": more than 2^20 vertices");
      m = BitMatrix(n, n);
      have_n = true;
      continue;
    }
    auto colon = t.find(':');
    if (colon == std::string_view::npos) throw InputError(where + ": expected 'u: v1 v2 ...'");
    Point u = detail::parse_point(t.substr(0, colon), n, where);
    std::istringstream rest{std::string(t.substr(colon + 1))};
    std::string tok;
    while (rest >> tok) {
      Point v = detail::parse_point(tok, n, where);
      if (u == v) throw InputError(where + ": loop at vertex " + std::to_string(u + 1));
      m.set(u, v);
      m.set(v, u);
    }
  }
  if (!have_n) throw InputError("adjacency list has no vertex count");
  return Graph(std::move(m));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Reads every graph in a file: graph6 (".g6", one graph per line) or the
// adjacency-list format (anything else, one graph per file).
inline std::vector<Graph> read_graph_file(const std::string& path) {
  const std::string text = read_text_file(path);
  std::vector<Graph> graphs;
  if (path.ends_with(".g6")) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (!detail::trim(line).empty()) graphs.push_back(from_graph6(detail::trim(line)));
    if (graphs.empty()) throw InputError("no graphs in '" + path + "'");
  } else {
    graphs.push_back(from_adjacency_list(text));
  }
  return graphs;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace orbitalg

#endif  // ORBITALG_GRAPH_IO_HPP
