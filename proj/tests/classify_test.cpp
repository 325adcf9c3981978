#include <gtest/gtest.h>

#include "bx/catalog.hpp"

using namespace bx;

namespace {

const std::pair<const char*, const char*> kGolden[] = {
    {"uppercase-mapping", "S | S,S | N,N | T"}, {"fst-lens", "A | S,S | S,N | T"},
    {"key-maintainer", "S | S,S | S,S | E"},    {"key-trigonal", "S | SS,SS | S,S | E"},
    {"pair-sync", "S | S,S | C,C | I"},         {"list-edit-lens", "S | E,E | C,C | I"},
    {"rename-sync", "S | D,D | D,D | E"},
};

}  // namespace

TEST(Classify, FrameworkSignatures) {
  for (const auto& [name, sig] : kGolden) EXPECT_EQ(render_signature(classify(catalog(name).bx)), sig) << name;
}

TEST(Classify, EveryEntryHasItsFrameworkSignature) {
  for (const auto& name : catalog_names()) {
    const auto& e = catalog(name);
    EXPECT_EQ(classify(e.bx), e.expected_signature) << name;
    EXPECT_EQ(e.expected_signature, framework_signature(e.framework)) << name;
  }
}

TEST(Classify, SignatureTextRoundTrips) {
  for (const auto& [_, sig] : kGolden) EXPECT_EQ(render_signature(parse_signature(sig)), sig);
  for (const char* bad : {"", "S | S,S | N,N", "Q | S,S | N,N | T", "S | S S | N,N | T", "S | X,S | N,N | T"}) {
    try {
      parse_signature(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Report, EmptyInputIsHeaderOnly) {
  const auto text = render_report({});
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  EXPECT_NE(text.find("Stable"), std::string::npos);
  EXPECT_NE(text.find("Total"), std::string::npos);
}

TEST(Report, Cells) {
  const auto fst = run_suite(catalog("fst-lens").bx);
  EXPECT_EQ(arrow_cell(fst, Law::Stability), "<->");
  EXPECT_EQ(arrow_cell(fst, Law::Invertibility), "<->");
  const auto up = run_suite(catalog("uppercase-mapping").bx);
  EXPECT_EQ(arrow_cell(up, Law::Stability), "");
  const auto broken = run_suite(catalog("broken-put-lens").bx);
  EXPECT_EQ(arrow_cell(broken, Law::Invertibility), "->");
  const auto embed = run_suite(catalog("embed-mapping").bx);
  EXPECT_EQ(totality_cell(embed), "<~>");
  EXPECT_EQ(totality_cell(up), "<->");
  const auto osc = run_suite(catalog("oscillating-toy").bx);
  EXPECT_EQ(arrow_cell(osc, Law::Convergence), "x");
}

TEST(Report, RowsAreDistinctAndStable) {
  std::vector<ReportRow> rows;
  for (const auto& name : catalog_names()) {
    const auto& e = catalog(name);
    rows.push_back({name, classify(e.bx), run_suite(e.bx)});
  }
  const auto a = render_report(rows), b = render_report(rows);
  EXPECT_EQ(a, b);
  std::istringstream in(a);
  std::set<std::string> lines;
  for (std::string l; std::getline(in, l);) EXPECT_TRUE(lines.insert(l).second) << l;
  EXPECT_EQ(lines.size(), rows.size() + 1);
}

TEST(Behaviour, Classes) {
  auto of = [](const char* name) {
    const auto& bx = catalog(name).bx;
    return well_behaved(bx, run_suite(bx));
  };
  EXPECT_EQ(of("fst-lens"), Behaviour::VeryWellBehaved);
  EXPECT_EQ(of("key-maintainer"), Behaviour::WellBehaved);
  EXPECT_EQ(of("broken-put-lens"), Behaviour::NotWellBehaved);
  EXPECT_EQ(of("wrong-key-maintainer"), Behaviour::NotWellBehaved);
}

TEST(Report, ValueForm) {
  const auto v = report_value(run_suite(catalog("fst-lens").bx));
  EXPECT_EQ(*v.field("bx"), S("fst-lens"));
  const Value* stab = v.field("laws")->field("stability");
  ASSERT_NE(stab, nullptr);
  EXPECT_EQ(*stab->field("to"), S("holds"));
  EXPECT_EQ(parse_value(render_value(v)), v);
}
