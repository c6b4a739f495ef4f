#include <gtest/gtest.h>

#include "hypertree/hypertree.hpp"

using namespace hypertree;

TEST(TextFormat, RoundTripIsByteStable) {
  for (const auto& g : {hyperstar(7, 3), loose_path(10, 4), s_cycle(4, 2, 4)}) {
    const std::string text = format_hypergraph(g);
    EXPECT_EQ(parse_hypergraph(text), g);
    EXPECT_EQ(format_hypergraph(parse_hypergraph(text)), text);
  }
}

TEST(TextFormat, WritesHeaderThenEdges) {
  EXPECT_EQ(format_hypergraph(hyperstar(7, 3)), "3 7 3\n1 2 3\n1 4 5\n1 6 7\n");
}

TEST(TextFormat, SkipsCommentsAndBlankLines) {
  const auto g = parse_hypergraph("# a path\n3 5 2\n\n1 2 3\n  # inline comment line\n3 4 5\n");
  EXPECT_EQ(g, loose_path(5, 3));
}

TEST(TextFormat, ReportsMalformedInput) {
  auto code = [](const std::string& text) {
    try {
      parse_hypergraph(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code(""), ErrorCode::ParseError);
  EXPECT_EQ(code("3 5\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("3 5 2\n1 2 3\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("3 5 1\n1 2 x\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("3 5 1\n1 2 3\n3 4 5\n"), ErrorCode::ParseError);
  EXPECT_EQ(code("3 5 1\n1 2 9\n"), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code("3 5 1\n1 2\n"), ErrorCode::NonUniform);
  EXPECT_EQ(code("3 5 2\n1 2 3\n3 2 1\n"), ErrorCode::DuplicateEdge);
}

TEST(TextFormat, MissingFileIsAParseError) {
  try {
    load_hypergraph("/nonexistent/graph.hg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}
