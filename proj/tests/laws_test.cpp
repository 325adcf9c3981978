#include <gtest/gtest.h>

#include "bx/catalog.hpp"
#include "bx/text.hpp"

using namespace bx;

namespace {

const LawReport& report_for(const std::string& name) {
  static std::map<std::string, LawReport> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_suite(catalog(name).bx)).first;
  return it->second;
}

VerdictKind kind_of(const std::string& name, Law law, Direction d) {
  const auto* v = report_for(name).find(law, d);
  EXPECT_NE(v, nullptr) << name << ' ' << to_string(law);
  return v ? v->kind : VerdictKind::Vacuous;
}

}  // namespace

class CatalogLaws : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogLaws, MatchExpectations) {
  const auto& e = catalog(GetParam());
  for (const auto& [key, expected] : e.expected_laws)
    EXPECT_EQ(to_string(kind_of(GetParam(), key.first, key.second)), std::string(to_string(expected)))
        << to_string(key.first) << ' ' << to_string(key.second);
}

TEST_P(CatalogLaws, NoMetaTheoremViolations) {
  for (const auto& err : report_for(GetParam()).errors) ADD_FAILURE() << err;
}

TEST_P(CatalogLaws, FailuresCarryCounterexamples) {
  for (const auto& [key, v] : report_for(GetParam()).verdicts) {
    if (v.kind != VerdictKind::Fails) continue;
    ASSERT_TRUE(v.counterexample) << to_string(key.first);
    EXPECT_FALSE(v.counterexample->steps.empty());
    EXPECT_NE(v.counterexample->expected, v.counterexample->actual);
  }
}

INSTANTIATE_TEST_SUITE_P(All, CatalogLaws, ::testing::ValuesIn(catalog_names()), [](const auto& info) {
  std::string s = info.param;
  for (char& c : s)
    if (c == '-') c = '_';
  return s;
});

TEST(Laws, UppercaseIsInvertibleBothWays) {
  EXPECT_EQ(kind_of("uppercase-mapping", Law::Invertibility, Direction::To), VerdictKind::Holds);
  EXPECT_EQ(kind_of("uppercase-mapping", Law::Invertibility, Direction::From), VerdictKind::Holds);
}

TEST(Laws, EmbedIsSafeButNotTotal) {
  EXPECT_EQ(kind_of("embed-mapping", Law::Totality, Direction::To), VerdictKind::Holds);
  EXPECT_EQ(kind_of("embed-mapping", Law::Totality, Direction::From), VerdictKind::Fails);
  EXPECT_EQ(kind_of("embed-mapping", Law::Safety, Direction::From), VerdictKind::Holds);
  const auto* v = report_for("embed-mapping").find(Law::Totality, Direction::From);
  ASSERT_TRUE(v && v->counterexample);
  EXPECT_EQ(render_update(v->counterexample->steps.back().update), "state{post=\"C\"}");
}

TEST(Laws, BrokenPutFailsInvertibilityFrom) {
  const auto* v = report_for("broken-put-lens").find(Law::Invertibility, Direction::From);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, VerdictKind::Fails);
  EXPECT_EQ(kind_of("broken-put-lens", Law::Invertibility, Direction::To), VerdictKind::Holds);
}

TEST(Laws, OscillatorDoesNotConverge) {
  EXPECT_EQ(kind_of("oscillating-toy", Law::Convergence, Direction::To), VerdictKind::Fails);
  EXPECT_EQ(kind_of("pair-sync", Law::Convergence, Direction::To), VerdictKind::Holds);
}

TEST(Laws, PostStateOnlyFrameworksCannotStateStability) {
  EXPECT_EQ(kind_of("uppercase-mapping", Law::Stability, Direction::To), VerdictKind::NotExpressible);
  EXPECT_EQ(kind_of("key-maintainer", Law::Stability, Direction::From), VerdictKind::NotExpressible);
  EXPECT_EQ(kind_of("fst-lens", Law::Stability, Direction::To), VerdictKind::Holds);
}

TEST(Laws, EmptyRelationIsVacuous) {
  const auto empty = make_maintainer(
      "empty", [](const Value&, const Value&) { return false; },
      [](const Value&, const Value& b) -> Partial<Value> { return b; },
      [](const Value&, const Value& a) -> Partial<Value> { return a; }, DomainDescriptor::ints(0, 1),
      DomainDescriptor::ints(0, 1));
  EXPECT_EQ(check_hippocraticness(empty, Direction::To).kind, VerdictKind::Vacuous);
  // No world is reachable, so there is nothing to check either.
  EXPECT_EQ(check_correctness(empty, Direction::To).kind, VerdictKind::Vacuous);
}

TEST(Laws, EditLensReportsLiteralHippocraticness) {
  const auto& r = report_for("list-edit-lens");
  EXPECT_EQ(r.literal_hippocraticness.size(), 2u);
  EXPECT_TRUE(report_for("fst-lens").literal_hippocraticness.empty());
}

TEST(Laws, Deterministic) {
  for (const char* name : {"broken-put-lens", "list-edit-lens", "rename-sync"}) {
    const auto a = run_suite(catalog(name).bx), b = run_suite(catalog(name).bx);
    ASSERT_EQ(a.verdicts.size(), b.verdicts.size());
    for (const auto& [key, v] : a.verdicts) {
      const auto& w = b.verdicts.at(key);
      EXPECT_EQ(v.kind, w.kind);
      EXPECT_EQ(v.cases, w.cases);
      EXPECT_EQ(v.counterexample.has_value(), w.counterexample.has_value());
      if (v.counterexample && w.counterexample) EXPECT_EQ(v.counterexample->actual, w.counterexample->actual);
    }
  }
}

TEST(Laws, CapIsEnforced) {
  LawSuiteConfig cfg;
  cfg.cap = 2;
  try {
    run_suite(catalog("fst-lens").bx, cfg);
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(Laws, Names) {
  for (Law l : kAllLaws) EXPECT_EQ(parse_law(to_string(l)), l);
  try {
    parse_law("stabilty");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownName);
  }
}
