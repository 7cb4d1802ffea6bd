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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "mip/render.hpp"

namespace mip {
namespace {

TEST(TextTableTest, MarkdownAndCsv) {
  const TextTable t{{"a", "b"}, {{"1", "x, y"}, {"say \"hi\"", ""}}};
  EXPECT_EQ(to_markdown(t), "| a | b |\n| --- | --- |\n| 1 | x, y |\n| say \"hi\" |  |\n");
  EXPECT_EQ(to_csv(t), "a,b\r\n1,\"x, y\"\r\n\"say \"\"hi\"\"\",\r\n");
}

TEST(FormatTest, Parse) {
  EXPECT_EQ(parse_format("md"), Format::kMarkdown);
  EXPECT_EQ(parse_format("csv"), Format::kCsv);
  EXPECT_EQ(parse_format("json"), Format::kJson);
  EXPECT_EQ(parse_format("dot"), Format::kDot);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(KernelTableTest, Cells) {
  const std::vector<ParamTriple> cols{{4, 3, 2}, {4, 3, 3}, {4, 2, 3}};
  const KernelTable t = kernel_table(cols, 1);
  EXPECT_EQ(t.cells[0], (std::vector<std::optional<std::size_t>>{2, 2, 2}));
  EXPECT_EQ(t.cells[1], (std::vector<std::optional<std::size_t>>{2, 1, 1}));
  EXPECT_EQ(t.cells[2], (std::vector<std::optional<std::size_t>>{1, 1, 2}));
  EXPECT_EQ(t.cells[3], (std::vector<std::optional<std::size_t>>{1, 2, 1}));
  const std::string md = render(t, Format::kMarkdown);
  EXPECT_NE(md.find("| (4,3,2) m > l |"), std::string::npos);
  EXPECT_EQ(md, render(kernel_table(cols, 1), Format::kMarkdown));
}

TEST(KernelTableTest, FieldOfFourElements) {
  const KernelTable t = kernel_table({{4, 3, 2}}, 2);
  EXPECT_EQ(t.cells[1][0], 4u);
  const auto j = Json::parse(render(t, Format::kJson));
  EXPECT_EQ(j["field_size"], 4);
  EXPECT_EQ(j["rows"][1]["group"], "G2");
  EXPECT_EQ(j["rows"][1]["kernel_sizes"][0], 4);
}

TEST(KernelTableTest, NonCanonicalCellsAreEmpty) {
  const KernelTable t = kernel_table({{3, 3, 2}, {3, 2, 1}}, 1);
  EXPECT_FALSE(t.cells[1][0].has_value());
  EXPECT_TRUE(t.cells[0][0].has_value());
  EXPECT_FALSE(t.cells[0][1].has_value());
  EXPECT_NE(render(t, Format::kCsv).find("G2,-,-\r\n"), std::string::npos);
}

TEST(KernelTableTest, GuardAndDot) {
  EXPECT_THROW(kernel_table({{4, 3, 2}}, 1, 256), GuardExceeded);
  EXPECT_THROW(render(kernel_table({{2, 1, 2}}, 1), Format::kDot), std::invalid_argument);
}

TEST(QuotientSummaryTest, RowsAtFiveThreeTwo) {
  const QuotientSummary s = quotient_summary(5, 3, 2);
  const TextTable t = to_text_table(s);
  ASSERT_EQ(t.rows.size(), 6u);
  EXPECT_EQ(t.header, (std::vector<std::string>{"group", "(4,3,2)", "(5,2,2)", "(5,3,1)"}));
  EXPECT_EQ(t.rows[0][0], "G1(5,3,2)");
  EXPECT_EQ(t.rows[0][1], "G1 G5");
  EXPECT_EQ(t.rows[0][2], "G1 G3");
  EXPECT_EQ(t.rows[4][1], "");
  const std::string json = render(s, Format::kJson);
  EXPECT_EQ(json, render(quotient_summary(5, 3, 2), Format::kJson));
  EXPECT_EQ(Json::parse(json)["rows"][0]["cells"][0][1], "G5");
}

TEST(QuotientGraphTest, SmallForest) {
  const QuotientGraph g = quotient_graph(std::size_t{1} << 7);
  const std::pair<std::string, std::string> edge{"G6(2,1,2)", "G2(2,1,1)"};
  EXPECT_NE(std::find(g.edges.begin(), g.edges.end(), edge), g.edges.end());
  const std::string dot = render(g, Format::kDot);
  EXPECT_EQ(dot.rfind("digraph quotients {\n", 0), 0u);
  EXPECT_NE(dot.find("  \"G6(2,1,2)\" -> \"G2(2,1,1)\";\n"), std::string::npos);
  EXPECT_EQ(dot, render(quotient_graph(std::size_t{1} << 7), Format::kDot));
  // Every edge halves the order and ends at a listed node.
  std::set<std::string> names;
  for (const auto& n : g.nodes) names.insert(n.name());
  for (const auto& [from, to] : g.edges) {
    EXPECT_TRUE(names.count(from));
    EXPECT_TRUE(names.count(to)) << to;
  }
}

}  // namespace
}  // namespace mip
