// Copyright 2026 The mip Authors
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

// Kernel-size tables, maximal-quotient tables and the quotient graph as
// Markdown, CSV, JSON or DOT. JSON carries every field; the other formats
// are projections of it. Output contains no timestamps.

#ifndef MIP_RENDER_HPP_
#define MIP_RENDER_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mip/power_maps.hpp"
#include "mip/recognize.hpp"

namespace mip {

using Json = nlohmann::ordered_json;

enum class Format { kMarkdown, kCsv, kJson, kDot };

inline Format parse_format(const std::string& text) {
  if (text == "md" || text == "markdown") return Format::kMarkdown;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  if (text == "dot") return Format::kDot;
  throw std::invalid_argument("unknown format '" + text + "'");
}

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string to_markdown(const TextTable& t) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    return out + "\n";
  };
  std::string out = line(t.header) + "|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : t.rows) out += line(r);
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// RFC 4180: CRLF line endings, quoted fields where needed.
inline std::string to_csv(const TextTable& t) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ",";
      out += csv_field(cells[i]);
    }
    return out + "\r\n";
  };
  std::string out = line(t.header);
  for (const auto& r : t.rows) out += line(r);
  return out;
}

inline std::string to_json_text(const Json& j) { return j.dump(2) + "\n"; }

inline void check_order_guard(std::uint64_t order, std::size_t max_order) {
  if (order > max_order) {
    throw GuardExceeded("group order " + std::to_string(order) + " exceeds the limit " +
                        std::to_string(max_order));
  }
}

inline std::string triple_case(const ParamTriple& t) {
  if (t.m > t.l) return "m > l";
  if (t.m == t.l) return "m = l";
  return "m < l";
}

// --- Kernel sizes ----------------------------------------------------------

struct KernelTable {
  int field_degree = 1;
  std::vector<ParamTriple> columns;
  /// cells[family index - 1][column]; empty where the label is not
  /// canonical or l < 2.
  std::array<std::vector<std::optional<std::size_t>>, 6> cells;
};

inline KernelTable kernel_table(const std::vector<ParamTriple>& columns, int field_degree,
                                std::size_t max_order = kDefaultMaxOrder) {
  KernelTable t;
  t.field_degree = field_degree;
  t.columns = columns;
  for (const auto& c : columns) {
    check_order_guard(std::uint64_t{1} << (c.n + c.m + c.l), max_order);
    for (Family f : kAllFamilies) {
      std::optional<std::size_t> cell;
      const bool canonical = c.n > c.m || (f != Family::kG2 && f != Family::kG4);
      if (canonical && c.l >= 2) {
        const GroupAlgebra alg(GroupParams::of_family(f, c.n, c.m, c.l), FieldSpec(field_degree));
        const JenningsBasis basis(alg);
        cell = phi_kernel_size(basis);
      }
      t.cells[family_index(f) - 1].push_back(cell);
    }
  }
  return t;
}

inline Json to_json(const KernelTable& t) {
  Json j;
  j["field_degree"] = t.field_degree;
  j["field_size"] = 1u << t.field_degree;
  Json cols = Json::array();
  for (const auto& c : t.columns) {
    cols.push_back({{"n", c.n}, {"m", c.m}, {"l", c.l}, {"case", triple_case(c)}});
  }
  j["columns"] = cols;
  Json rows = Json::array();
  for (Family f : kAllFamilies) {
    Json cells = Json::array();
    for (const auto& c : t.cells[family_index(f) - 1]) {
      cells.push_back(c ? Json(*c) : Json(nullptr));
    }
    rows.push_back({{"group", family_name(f)}, {"kernel_sizes", cells}});
  }
  j["rows"] = rows;
  return j;
}

inline TextTable to_text_table(const KernelTable& t) {
  TextTable out;
  out.header.push_back("group");
  for (const auto& c : t.columns) out.header.push_back(c.label() + " " + triple_case(c));
  for (Family f : kAllFamilies) {
    std::vector<std::string> row{family_name(f)};
    for (const auto& c : t.cells[family_index(f) - 1]) row.push_back(c ? std::to_string(*c) : "-");
    out.rows.push_back(std::move(row));
  }
  return out;
}

// --- Maximal quotients -----------------------------------------------------

/// The group a family label names at (n, m, l): canonical when possible,
/// otherwise the literal presentation (degenerate mode when l = 1).
inline GroupParams table_params(Family f, int n, int m, int l) {
  const Mode mode = l >= 2 ? Mode::kStandard : Mode::kDegenerate;
  const bool canonical = l >= 2 && (n > m || (f != Family::kG2 && f != Family::kG4));
  return canonical ? GroupParams::of_family(f, n, m, l, mode)
                   : GroupParams::literal_family(f, n, m, l, mode);
}

struct QuotientSummary {
  ParamTriple triple;
  std::array<ParamTriple, 3> columns;
  std::vector<QuotientTable> tables;  // one per family, G1..G6
};

inline QuotientSummary quotient_summary(int n, int m, int l,
                                        std::size_t max_order = kDefaultMaxOrder) {
  check_order_guard(std::uint64_t{1} << (n + m + l), max_order);
  QuotientSummary s;
  s.triple = {n, m, l};
  s.columns = quotient_columns(n, m, l);
  for (Family f : kAllFamilies) {
    s.tables.push_back(maximal_quotient_table(Group(table_params(f, n, m, l))));
  }
  return s;
}

inline std::string labels_text(const std::vector<Family>& labels) {
  std::string out;
  for (Family f : labels) {
    if (!out.empty()) out += " ";
    out += family_name(f);
  }
  return out;
}

inline Json to_json(const QuotientSummary& s) {
  Json j;
  j["n"] = s.triple.n;
  j["m"] = s.triple.m;
  j["l"] = s.triple.l;
  Json cols = Json::array();
  for (const auto& c : s.columns) cols.push_back(c.label());
  j["columns"] = cols;
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.tables.size(); ++i) {
    const QuotientTable& t = s.tables[i];
    Json cells = Json::array();
    for (const auto& cell : t.cells) {
      Json c = Json::array();
      for (Family f : cell) c.push_back(family_name(f));
      cells.push_back(c);
    }
    Json entries = Json::array();
    for (const auto& e : t.entries) {
      entries.push_back({{"involution", e.involution_name},
                         {"target", e.label ? family_name(*e.label) +
                                                  t.columns[*e.column].label()
                                            : std::string("-")}});
    }
    rows.push_back({{"group", family_name(family_from_index(static_cast<int>(i) + 1))},
                    {"cells", cells},
                    {"quotients", entries}});
  }
  j["rows"] = rows;
  return j;
}

inline TextTable to_text_table(const QuotientSummary& s) {
  TextTable out;
  out.header.push_back("group");
  for (const auto& c : s.columns) out.header.push_back(c.label());
  for (std::size_t i = 0; i < s.tables.size(); ++i) {
    std::vector<std::string> row{family_name(family_from_index(static_cast<int>(i) + 1)) +
                                 s.triple.label()};
    for (const auto& cell : s.tables[i].cells) row.push_back(labels_text(cell));
    out.rows.push_back(std::move(row));
  }
  return out;
}

// --- Quotient graph --------------------------------------------------------

struct GraphNode {
  int n = 0, m = 0, l = 0;
  Family family = Family::kG1;
  std::string name() const { return family_name(family) + ParamTriple{n, m, l}.label(); }
  auto key() const { return std::make_tuple(n + m + l, n, m, l, family_index(family)); }
};

struct QuotientGraph {
  std::vector<GraphNode> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Groups with l >= 1 and order <= max_order under their normalized labels,
/// with an edge G -> H whenever H is a maximal quotient of G. Groups with
/// n = 1 have no outgoing edges.
inline QuotientGraph quotient_graph(std::size_t max_order) {
  QuotientGraph g;
  for (int total = 3; (std::size_t{1} << total) <= max_order; ++total) {
    if (total > kMaxLogOrder) break;
    for (int n = 1; n < total; ++n) {
      for (int m = 1; m <= n && n + m < total; ++m) {
        const int l = total - n - m;
        std::set<Family> labels;
        for (Family f : kAllFamilies) labels.insert(normalize_label(f, n, m, l));
        for (Family f : labels) g.nodes.push_back({n, m, l, f});
      }
    }
  }
  std::sort(g.nodes.begin(), g.nodes.end(),
            [](const GraphNode& a, const GraphNode& b) { return a.key() < b.key(); });
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& node : g.nodes) {
    if (node.n < 2) continue;
    const QuotientTable t =
        maximal_quotient_table(Group(table_params(node.family, node.n, node.m, node.l)));
    for (const auto& e : t.entries) {
      if (e.label) edges.insert({node.name(), family_name(*e.label) + t.columns[*e.column].label()});
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

inline std::string to_dot(const QuotientGraph& g) {
  std::string out = "digraph quotients {\n  node [shape=box];\n";
  for (const auto& n : g.nodes) out += "  \"" + n.name() + "\";\n";
  for (const auto& [from, to] : g.edges) out += "  \"" + from + "\" -> \"" + to + "\";\n";
  return out + "}\n";
}

inline Json to_json(const QuotientGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes) nodes.push_back(n.name());
  Json edges = Json::array();
  for (const auto& [from, to] : g.edges) edges.push_back({{"from", from}, {"to", to}});
  return {{"nodes", nodes}, {"edges", edges}};
}

inline TextTable to_text_table(const QuotientGraph& g) {
  TextTable t;
  t.header = {"from", "to"};
  for (const auto& [from, to] : g.edges) t.rows.push_back({from, to});
  return t;
}

/// Renders any of the documents above; DOT only exists for the graph.
template <typename Doc>
std::string render(const Doc& doc, Format format) {
  switch (format) {
    case Format::kMarkdown:
      return to_markdown(to_text_table(doc));
    case Format::kCsv:
      return to_csv(to_text_table(doc));
    case Format::kJson:
      return to_json_text(to_json(doc));
    case Format::kDot:
      if constexpr (std::is_same_v<Doc, QuotientGraph>) {
        return to_dot(doc);
      } else {
        throw std::invalid_argument("dot output is only available for the quotient graph");
      }
  }
  throw std::logic_error("bad format");
}

}  // namespace mip

#endif  // MIP_RENDER_HPP_
