#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "pbtd/pbtd.hpp"
#include "support.hpp"

using namespace pbtd;
namespace pt = pbtd::testing;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParseError parse_failure(std::string_view text) {
  try {
    parse_all(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return ParseError(ErrorKind::Parse, 0, 0, "none");
}

}  // namespace

TEST(Parse, SideOne) {
  auto d = parse("PBTD n=1\n0,1\n");
  EXPECT_EQ(d.kind, DocumentKind::PBTD);
  ASSERT_NE(d.find("n"), nullptr);
  EXPECT_EQ(*d.find("n"), "1");
  auto t = to_design(d);
  EXPECT_EQ(t(0, 0), UnorderedPair(0, 1));
  EXPECT_TRUE(verify_pbtd(t).valid());
}

TEST(Parse, RangeErrorHasPosition) {
  auto e = parse_failure("PBTD n=1\n9,9\n");
  EXPECT_EQ(e.kind(), ErrorKind::Range);
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 1);

  auto far = parse_failure("PBTD n=2\n0,1 | 2,3 | 0,2\n0,3 | 1,2 |  1,9\n");
  EXPECT_EQ(far.kind(), ErrorKind::Range);
  EXPECT_EQ(far.line(), 3);
  EXPECT_EQ(far.column(), 14);
}

TEST(Parse, Malformed) {
  EXPECT_EQ(parse_failure("0,1\n").kind(), ErrorKind::Parse);
  EXPECT_EQ(parse_failure("PBTD n=1\n0;1\n").kind(), ErrorKind::Parse);
  EXPECT_EQ(parse_failure("PBTD n=1\n-\n").kind(), ErrorKind::Parse);
  EXPECT_EQ(parse_failure("PBTD\n0,1\n").kind(), ErrorKind::Parse);
  EXPECT_EQ(parse_failure("PBTD n=2\n0,1 | 2,3 | 0,2\n").kind(), ErrorKind::Shape);
  EXPECT_EQ(parse_failure("PBTD n=2\n0,1 | 2,3\n0,1 | 2,3\n").kind(), ErrorKind::Shape);
  EXPECT_EQ(parse_failure("PBTD n=1\n1,0\n").kind(), ErrorKind::Range);
  EXPECT_THROW(parse("PBTD n=1\n0,1\n\nPBTD n=1\n0,1\n"), ParseError);
}

TEST(Parse, CommentsAndBlankLines) {
  auto docs = parse_all("# header comment\n\nPBTD n=1\n  0,1  \n\n# trailing\n");
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(serialize(docs[0]), "PBTD n=1\n0,1\n");
}

TEST(Parse, HowellBlanks) {
  auto d = parse("HOWELL s=2 v=4\n0,1 | -\n- | 0,1\n");
  auto h = to_howell(d);
  EXPECT_EQ(h.s(), 2);
  EXPECT_FALSE(h(0, 1).has_value());
  EXPECT_EQ(serialize(to_document(h)), "HOWELL s=2 v=4\n0,1 | -\n- | 0,1\n");
}

TEST(RoundTrip, FixturesByteIdentical) {
  for (const auto& name : pt::fixture_names()) {
    std::string text = serialize(to_document(fixture_design(name)));
    EXPECT_EQ(serialize(parse(text)), text);
    EXPECT_EQ(to_design(parse(text)), fixture_design(name));
    std::string pair_text(fixture(name).howell_pair);
    EXPECT_EQ(serialize(parse_all(pair_text)), pair_text);
  }
}

TEST(RoundTrip, ShippedFilesMatchEmbedded) {
  for (const auto& name : pt::fixture_names()) {
    std::string dir = std::string(PBTD_SOURCE_DIR) + "/fixtures/";
    EXPECT_EQ(read_file(dir + name + ".pbtd"), serialize(to_document(fixture_design(name)))) << name;
    EXPECT_EQ(read_file(dir + name + ".howell"), std::string(fixture(name).howell_pair)) << name;
  }
}

TEST(RoundTrip, Template) {
  for (const auto& t : {sigma_template(5), tau_templates_n7().left, tau_templates_n7().right}) {
    std::string text = serialize(to_document(t));
    auto back = to_template(parse(text));
    EXPECT_EQ(back, t);
    EXPECT_EQ(serialize(to_document(back)), text);
  }
}

TEST(RoundTrip, Checkpoint) {
  Checkpoint cp{4, SearchMode::Template, false, 77, 12345,
                {Prefix{}, Prefix{UnorderedPair(0, 2)}, Prefix{UnorderedPair(0, 3), UnorderedPair(1, 5)}}};
  std::string text = serialize(to_document(cp));
  EXPECT_EQ(to_checkpoint(parse(text)), cp);
  EXPECT_EQ(serialize(parse(text)), text);
}

TEST(RoundTrip, DesignSerializationFormat) {
  PairGrid g(2, 3);
  g(0, 0) = UnorderedPair(0, 2);
  g(0, 1) = UnorderedPair(1, 3);
  g(0, 2) = UnorderedPair(0, 1);
  g(1, 0) = UnorderedPair(1, 2);
  g(1, 1) = UnorderedPair(0, 3);
  g(1, 2) = UnorderedPair(2, 3);
  EXPECT_EQ(serialize(to_document(PBTDesign(2, g))), "PBTD n=2\n0,2 | 1,3 | 0,1\n1,2 | 0,3 | 2,3\n");
}

TEST(Json, ReportFields) {
  PairGrid g = fixture_design("f2").cells();
  std::swap(g(0, 0), g(1, 0));
  auto j = to_json(verify_pbtd(g, 11));
  EXPECT_EQ(j["subject"], "pbtd");
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_EQ(j["pairs_expected"], 231);
  ASSERT_FALSE(j["violations"].empty());
  bool saw_c3 = false;
  for (const auto& v : j["violations"]) {
    if (v["condition"] != "C3") continue;
    saw_c3 = true;
    EXPECT_TRUE(v.contains("row"));
    EXPECT_TRUE(v.contains("element"));
    EXPECT_FALSE(v.contains("column"));
  }
  EXPECT_TRUE(saw_c3);

  auto ok = to_json(verify_pbtd(fixture_design("f1")));
  EXPECT_TRUE(ok["valid"].get<bool>());
  EXPECT_TRUE(ok["violations"].empty());
}

TEST(Format, Violation) {
  Violation v{Condition::C3_FirstHalfCovers, 0, -1, 4, std::nullopt, "missing"};
  EXPECT_EQ(format_violation(v), "C3 row=0 element=4: missing");
}
