#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "llyconn/io.hpp"

using namespace llyconn;

TEST(EdgeList, Parse) {
  auto doc = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(doc.n, 3);
  EXPECT_EQ(doc.edges.size(), 2u);
  auto padded = parse_edge_list("# comment\nn 4\n0 1");
  EXPECT_EQ(padded.n, 4);
  EXPECT_EQ(padded.edges.size(), 1u);
  EXPECT_EQ(padded.graph().degree(3), 0);
  auto crlf = parse_edge_list("0 1\r\n\r\n  1 2  # trailing\r\n");
  EXPECT_EQ(crlf.edges.size(), 2u);
  EXPECT_EQ(parse_edge_list("").n, 0);
}

TEST(EdgeList, Directives) {
  auto doc = parse_edge_list("#@name sharp example\n#@mark x 0\n#@mark y 1\n#@label 2 (0,1)\n0 1\n1 2\n");
  EXPECT_EQ(doc.name, "sharp example");
  EXPECT_EQ(doc.marked_edge(), (Edge{0, 1}));
  ASSERT_EQ(doc.labels.size(), 3u);
  EXPECT_EQ(doc.labels[2], "(0,1)");
  EXPECT_EQ(parse_edge_list(emit_edge_list(doc)), doc);
}

TEST(EdgeList, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("0 0"), 1);
  try {
    parse_edge_list("0 0");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
  EXPECT_EQ(line_of("0 1\n1 0"), 2);
  EXPECT_EQ(line_of("0 1\n1 x"), 2);
  EXPECT_EQ(line_of("0 1 2"), 1);
  EXPECT_EQ(line_of("0 1\n-1 2"), 2);
  EXPECT_EQ(line_of("n 2\n0 5"), 2);
  EXPECT_EQ(line_of("n 2\nn 3"), 2);
  EXPECT_EQ(line_of("#@bogus\n"), 1);
  EXPECT_THROW(parse_edge_list("n 2\n#@mark x 4\n0 1"), ParseError);
}

TEST(EdgeList, RoundTrip) {
  auto doc = make_document(fixtures::petersen(), "petersen");
  EXPECT_EQ(parse_edge_list(emit_edge_list(doc)), doc);
}

TEST(JsonDocument, RoundTrip) {
  auto doc = make_document(fixtures::bowtie(), "bowtie");
  doc.marked["x"] = 0;
  doc.marked["y"] = 1;
  doc.labels = {"a", "b", "c", "d", "apex"};
  EXPECT_EQ(document_from_json(document_to_json(doc)), doc);
  EXPECT_EQ(parse_graph_text(document_to_json(doc).dump()), doc);
}

TEST(JsonDocument, Errors) {
  EXPECT_THROW(parse_graph_text("{\"n\": 2, \"edges\": [[0, 0]]}"), ParseError);
  EXPECT_THROW(parse_graph_text("{\"n\": 2, \"edges\": [[0]]}"), ParseError);
  EXPECT_THROW(parse_graph_text("{\"edges\": []}"), ParseError);
  EXPECT_THROW(parse_graph_text("{ nope"), ParseError);
}

TEST(Rationals, Json) {
  auto j = rational_to_json(Rational(-3, 4));
  EXPECT_EQ(j["num"], -3);
  EXPECT_EQ(j["den"], 4);
  Rational huge(BigInt("123456789012345678901234567890"), BigInt(7));
  EXPECT_TRUE(rational_to_json(huge)["num"].is_string());
  EXPECT_EQ(rational_from_json(rational_to_json(huge)), huge);
  EXPECT_THROW(rational_from_json({{"num", 1}, {"den", 0}}), ParseError);
}

TEST(Rationals, Text) {
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(to_string(Rational(2, 6)), "1/3");
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("2"), 2);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Report, CsvEmpty) { EXPECT_EQ(emit_report({}, "csv"), "id,graph,pass,vacuous,lhs,rhs,margin\n"); }

TEST(Report, CsvBowtie) {
  auto reports = run_suite({{"bowtie", fixtures::bowtie(), std::nullopt}}, {"thm_1_1"});
  EXPECT_EQ(emit_report(reports, "csv"), "id,graph,pass,vacuous,lhs,rhs,margin\nthm_1_1,bowtie,true,false,1,1,0\n");
}

TEST(Report, CsvQuotesNames) {
  TheoremReport r;
  r.id = "whitney";
  r.graph = "a,\"b\"";
  auto text = emit_report({r}, "csv");
  EXPECT_NE(text.find("\"a,\"\"b\"\"\""), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  auto reports = run_suite({{"bowtie", fixtures::bowtie(), std::nullopt}, {"h23", hamming(2, 3), std::nullopt}}, {"all"});
  EXPECT_EQ(parse_reports_json(emit_report(reports, "json")), reports);
  auto j = report_to_json(reports.front());
  EXPECT_TRUE(j["lhs"].contains("num"));
  EXPECT_TRUE(j["lhs"].contains("den"));
}

TEST(Report, TextAndUnknown) {
  auto reports = run_suite({{"c6", cycle(6), std::nullopt}}, {"thm_1_4"});
  auto text = emit_report(reports, "text");
  EXPECT_NE(text.find("VACUOUS"), std::string::npos);
  EXPECT_THROW(emit_report(reports, "xml"), std::invalid_argument);
  EXPECT_THROW(parse_reports_json("[{\"id\": 1}]"), ParseError);
}
