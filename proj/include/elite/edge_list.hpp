// Copyright 2026 The Elite Authors.
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

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "elite/error.hpp"
#include "elite/graph.hpp"

namespace elite {

/// Where an edge list comes from. Lines whose first non-blank character is the
/// comment prefix are ignored, as are blank lines.
struct EdgeListSource {
  std::variant<std::filesystem::path, std::vector<std::string>> origin;
  char comment_prefix = '#';

  static EdgeListSource file(std::filesystem::path path) {
    return {std::move(path), '#'};
  }
  static EdgeListSource lines(std::vector<std::string> text_lines) {
    return {std::move(text_lines), '#'};
  }
};

// Values recovered from a "# n=<n> m=<m> directed=<0|1>" header comment.
struct EdgeListHeader {
  NodeId n = 0;
  EdgeCount m = 0;
  bool directed = false;
};

struct ParsedEdgeList {
  Graph graph;
  /// original_ids[v] is the id node v carried in the input.
  std::vector<std::uint64_t> original_ids;
  NormalizationStats dropped;
  std::size_t edge_lines = 0;
  std::size_t comment_lines = 0;
  std::optional<EdgeListHeader> header;
};

namespace detail {

inline bool is_blank(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

inline std::optional<EdgeListHeader> parse_header(std::string_view comment) {
  // comment excludes the prefix character.
  std::istringstream in{std::string(comment)};
  std::string token;
  std::optional<std::uint64_t> n, m, directed;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const auto key = std::string_view(token).substr(0, eq);
    const auto val = std::string_view(token).substr(eq + 1);
    std::uint64_t parsed = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), parsed);
    if (ec != std::errc() || ptr != val.data() + val.size()) return std::nullopt;
    if (key == "n") n = parsed;
    else if (key == "m") m = parsed;
    else if (key == "directed") directed = parsed;
  }
  if (!n || !m || !directed || *directed > 1 || *n > 0xffffffffULL) {
    return std::nullopt;
  }
  return EdgeListHeader{static_cast<NodeId>(*n), *m, *directed == 1};
}

// Maps sparse input ids to dense ids in order of first appearance.
class IdCompactor {
 public:
  NodeId operator()(std::uint64_t id) {
    if (id < kDenseLimit) {
      if (id >= dense_.size()) {
        const auto grown = std::max<std::size_t>(id + 1, dense_.size() * 2);
        dense_.resize(std::min<std::size_t>(grown, kDenseLimit), kUnset);
      }
      auto& slot = dense_[id];
      if (slot == kUnset) slot = assign(id);
      return slot;
    }
    auto [it, inserted] = sparse_.try_emplace(id, 0);
    if (inserted) it->second = assign(id);
    return it->second;
  }

  std::vector<std::uint64_t> take_originals() { return std::move(originals_); }
  NodeId size() const noexcept { return static_cast<NodeId>(originals_.size()); }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 27;
  static constexpr NodeId kUnset = 0xffffffffu;

  NodeId assign(std::uint64_t id) {
    if (originals_.size() >= kUnset) throw Error("too many distinct node ids");
    originals_.push_back(id);
    return static_cast<NodeId>(originals_.size() - 1);
  }

  std::vector<NodeId> dense_;
  std::unordered_map<std::uint64_t, NodeId> sparse_;
  std::vector<std::uint64_t> originals_;
};

template <class LineFn>
void for_each_line(const EdgeListSource& src, LineFn&& fn) {
  if (const auto* lines = std::get_if<std::vector<std::string>>(&src.origin)) {
    std::size_t no = 0;
    for (const auto& line : *lines) fn(++no, std::string_view(line));
    return;
  }
  const auto& path = std::get<std::filesystem::path>(src.origin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  const std::string text{std::istreambuf_iterator<char>(in), {}};
  if (in.bad()) throw Error("read failure on " + path.string());
  std::string_view rest(text);
  std::size_t no = 0;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    const auto line = rest.substr(0, nl);
    fn(++no, line);
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
}

inline std::uint64_t parse_id(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected a non-negative integer id, got '" +
                                  std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

/// Reads a whitespace-separated edge list into a simple graph.
///
/// Ids are compacted to 0..n-1 in order of first appearance, unless the input
/// opens with a "# n=.. m=.. directed=.." header (as written by
/// write_edge_list), in which case ids are taken as already dense and nodes
/// without edges are kept.
inline ParsedEdgeList parse_edge_list(const EdgeListSource& src, bool directed) {
  ParsedEdgeList out;
  detail::IdCompactor compact;
  std::vector<Edge> pairs;
  bool seen_content = false;

  detail::for_each_line(src, [&](std::size_t no, std::string_view raw) {
    const auto line = detail::trim(raw);
    if (line.empty()) return;
    if (line.front() == src.comment_prefix) {
      ++out.comment_lines;
      if (!seen_content && !out.header) out.header = detail::parse_header(line.substr(1));
      return;
    }
    seen_content = true;
    std::string_view toks[3];
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && detail::is_blank(line[pos])) ++pos;
      if (pos >= line.size()) break;
      const auto start = pos;
      while (pos < line.size() && !detail::is_blank(line[pos])) ++pos;
      if (count == 3) break;
      toks[count++] = line.substr(start, pos - start);
    }
    if (count != 2) {
      throw ParseError(no, "expected exactly two ids per line");
    }
    const auto a = detail::parse_id(toks[0], no);
    const auto b = detail::parse_id(toks[1], no);
    ++out.edge_lines;
    if (out.header) {
      if (a >= out.header->n || b >= out.header->n) {
        throw ParseError(no, "id exceeds header node count");
      }
      pairs.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    } else {
      const auto u = compact(a);
      const auto v = compact(b);
      pairs.emplace_back(u, v);
    }
  });

  if (out.edge_lines == 0) throw EmptyGraphError("edge list contains no edges");

  NodeId n = 0;
  if (out.header) {
    n = out.header->n;
    out.original_ids.resize(n);
    for (NodeId v = 0; v < n; ++v) out.original_ids[v] = v;
  } else {
    n = compact.size();
    out.original_ids = compact.take_originals();
  }
  out.graph = Graph::from_edges(n, std::move(pairs), directed, &out.dropped);
  return out;
}

/// Writes the graph with a "# n=<n> m=<m> directed=<0|1>" header, one edge
/// per line.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << "# n=" << g.node_count() << " m=" << g.edge_count()
     << " directed=" << (g.directed() ? 1 : 0) << '\n';
  std::string buf;
  buf.reserve(1 << 16);
  char num[24];
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (!g.directed() && v < u) continue;
      auto r = std::to_chars(num, num + sizeof num, u);
      buf.append(num, r.ptr);
      buf.push_back(' ');
      r = std::to_chars(num, num + sizeof num, v);
      buf.append(num, r.ptr);
      buf.push_back('\n');
      if (buf.size() > (1 << 16) - 64) {
        os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        buf.clear();
      }
    }
  }
  os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

/// Header of an edge-list file, if its first line carries one.
inline std::optional<EdgeListHeader> read_edge_list_header(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line)) return std::nullopt;
  const auto t = detail::trim(line);
  if (t.empty() || t.front() != '#') return std::nullopt;
  return detail::parse_header(t.substr(1));
}

}  // namespace elite
