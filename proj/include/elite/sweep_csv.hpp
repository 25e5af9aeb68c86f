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

#include <charconv>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "elite/error.hpp"
#include "elite/sweep.hpp"

namespace elite {

inline constexpr std::string_view kSweepCsvHeader =
    "k,degree_at_k,sum_di,sum_do,internal_edges,c1,c2,c3,sociability_raw,"
    "components,lcc_size,coverage,internal_arcs,reciprocal_arcs,sym_ratio";

/// Six significant digits, as %g prints them.
inline std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << '\n';
  auto real = [](const std::optional<double>& x) { return x ? format_real(*x) : std::string(); };
  auto count = [](const std::optional<EdgeCount>& x) {
    return x ? std::to_string(*x) : std::string();
  };
  for (const auto& r : rows) {
    os << r.k << ',' << r.degree_at_k << ',' << r.sum_di << ',' << r.sum_do << ','
       << r.internal_edges << ',' << format_real(r.c1) << ',' << real(r.c2) << ','
       << format_real(r.c3) << ',' << format_real(r.sociability_raw) << ',' << r.components
       << ',' << r.lcc_size << ',' << real(r.coverage) << ',' << count(r.internal_arcs) << ','
       << count(r.reciprocal_arcs) << ',' << real(r.sym_ratio) << '\n';
  }
}

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "bad numeric field '" + std::string(field) + "'");
  }
  return value;
}

template <class T>
std::optional<T> parse_optional(std::string_view field, std::size_t line_no) {
  if (field.empty()) return std::nullopt;
  return parse_number<T>(field, line_no);
}

}  // namespace detail

/// Reads a file produced by write_sweep_csv. Real fields come back rounded to
/// the six digits they were written with.
inline std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::string line;
  std::size_t no = 1;
  if (!std::getline(is, line)) throw ParseError(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepCsvHeader) throw ParseError(1, "unexpected sweep CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = detail::split_commas(line);
    if (f.size() != 15) throw ParseError(no, "expected 15 fields");
    SweepRow r;
    r.k = detail::parse_number<NodeId>(f[0], no);
    r.degree_at_k = detail::parse_number<EdgeCount>(f[1], no);
    r.sum_di = detail::parse_number<EdgeCount>(f[2], no);
    r.sum_do = detail::parse_number<EdgeCount>(f[3], no);
    r.internal_edges = detail::parse_number<EdgeCount>(f[4], no);
    r.c1 = detail::parse_number<double>(f[5], no);
    r.c2 = detail::parse_optional<double>(f[6], no);
    r.c3 = detail::parse_number<double>(f[7], no);
    r.sociability_raw = detail::parse_number<double>(f[8], no);
    r.components = detail::parse_number<NodeId>(f[9], no);
    r.lcc_size = detail::parse_number<NodeId>(f[10], no);
    r.coverage = detail::parse_optional<double>(f[11], no);
    r.internal_arcs = detail::parse_optional<EdgeCount>(f[12], no);
    r.reciprocal_arcs = detail::parse_optional<EdgeCount>(f[13], no);
    r.sym_ratio = detail::parse_optional<double>(f[14], no);
    if (!rows.empty() && r.k <= rows.back().k) {
      throw ParseError(no, "k values must be strictly increasing");
    }
    rows.push_back(r);
  }
  if (rows.empty()) throw ParseError(no, "no data rows");
  return rows;
}

}  // namespace elite
