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

#ifndef ORBITALG_GROUP_IO_HPP
#define ORBITALG_GROUP_IO_HPP

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orbitalg/error.hpp"
#include "orbitalg/group.hpp"
#include "orbitalg/permutation.hpp"

namespace orbitalg {

// Group files (".grp"):
//
//   # name: s5_pairs          optional "# key: value" metadata lines
//   10                        degree
//   (1,2,3,4,5)(6,7)          one generator per line, 1-based cycles,
//   perm: 2 1 3 4 5 6 7 8 9 10   or a 1-based image list
//
// Blank lines and other '#' lines are ignored, CRLF is accepted and a
// trailing backslash joins a line with the next one.
namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::size_t parse_count(std::string_view s, const std::string& where) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError(where + ": expected an integer, got '" + std::string(s) + "'");
  return v;
}

inline Point parse_point(std::string_view s, std::size_t degree, const std::string& where) {
  std::size_t v = parse_count(s, where);
  if (v < 1 || v > degree)
    throw InputError(where + ": point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
  return static_cast<Point>(v - 1);
}

inline Permutation parse_cycles(std::string_view text, std::size_t degree, const std::string& where) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw InputError(where + ": empty generator");
  while (i < text.size()) {
    if (text[i] != '(') throw InputError(where + ": expected '(' in cycle notation");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw InputError(where + ": unterminated cycle");
    std::string_view body = trim(text.substr(i + 1, close - i - 1));
    if (body.find('(') != std::string_view::npos) throw InputError(where + ": nested '(' in cycle");
    std::vector<Point> cycle;
    if (!body.empty()) {
      std::size_t start = 0;
      for (;;) {
        std::size_t comma = body.find(',', start);
        cycle.push_back(parse_point(body.substr(start, comma - start), degree, where));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    for (std::size_t a = 0; a < cycle.size(); ++a)
      for (std::size_t b = a + 1; b < cycle.size(); ++b)
        if (cycle[a] == cycle[b])
          throw InputError(where + ": point " + std::to_string(cycle[a] + 1) + " repeated in cycle");
    cycles.push_back(std::move(cycle));
    i = close + 1;
    skip_space();
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline Permutation parse_image_list(std::string_view text, std::size_t degree, const std::string& where) {
  std::vector<Point> images;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) images.push_back(parse_point(tok, degree, where));
  if (images.size() != degree)
    throw InputError(where + ": image list has " + std::to_string(images.size()) + " entries, expected " +
                     std::to_string(degree));
  try {
    return Permutation::from_images(std::move(images));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace detail

inline PermutationGroup parse_group(std::string_view text) {
  // Split into logical lines.
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string pending;
  std::size_t pending_line = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (pending.empty()) pending_line = lineno;
    std::string_view t = detail::trim(raw);
    if (!t.empty() && t.back() == '\\') {
      pending += t.substr(0, t.size() - 1);
    } else {
      pending += t;
      lines.emplace_back(pending_line, std::move(pending));
      pending.clear();
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (!pending.empty()) lines.emplace_back(pending_line, std::move(pending));

  Metadata metadata;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  for (auto& [no, line] : lines) {
    std::string_view t = detail::trim(line);
    if (t.empty()) continue;
    const std::string where = "line " + std::to_string(no);
    if (t.front() == '#') {
      std::string_view body = detail::trim(t.substr(1));
      auto colon = body.find(':');
      if (colon != std::string_view::npos && colon > 0) {
        std::string key = detail::lower(detail::trim(body.substr(0, colon)));
        if (key.find(' ') == std::string::npos)
          metadata[key] = std::string(detail::trim(body.substr(colon + 1)));
      }
      continue;
    }
    if (!have_degree) {
      degree = detail::parse_count(t, where);
      if (degree == 0) throw InputError(where + ": degree must be positive");
      if (degree > kMaxDegree) throw InputError(where + ": degree " + std::to_string(degree) + " exceeds 2^20");
      have_degree = true;
      continue;
    }
    if (t.starts_with("perm:"))
      gens.push_back(detail::parse_image_list(t.substr(5), degree, where));
    else
      gens.push_back(detail::parse_cycles(t, degree, where));
  }
  if (!have_degree) throw InputError("group file has no degree line");
  if (gens.empty()) throw InputError("group file has no generators");
  return PermutationGroup(degree, std::move(gens), std::move(metadata));
}

inline PermutationGroup read_group_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  PermutationGroup g = parse_group(buf.str());
  if (g.metadata().count("name")) return g;
  // Default the name to the file stem.
  std::string stem = path.substr(path.find_last_of('/') + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem.resize(dot);
  Metadata meta = g.metadata();
  meta["name"] = stem;
  return PermutationGroup(g.degree(), {g.generators().begin(), g.generators().end()}, std::move(meta));
}

inline std::string format_group(const PermutationGroup& group) {
  std::string out;
  for (const auto& [key, value] : group.metadata()) out += "# " + key + ": " + value + "\n";
  out += std::to_string(group.degree()) + "\n";
  for (const auto& g : group.generators()) out += g.to_cycle_string() + "\n";
  return out;
}

}  // namespace orbitalg

#endif  // ORBITALG_GROUP_IO_HPP
