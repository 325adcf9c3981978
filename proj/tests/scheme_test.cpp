#include <gtest/gtest.h>

#include "algebra.hpp"
#include "bx/text.hpp"

using namespace bx;
using namespace bx::testing;

namespace {

Value kv(std::int64_t k, std::int64_t u) { return R({{"k", I(k)}, {"u", I(u)}}); }

ErrorKind error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::CapExceeded;
}

}  // namespace

TEST(Endpoints, Updates) {
  EXPECT_EQ(rho_of(Update::post_state(I(5))), I(5));
  EXPECT_EQ(delta_of(Update::both_states(I(3), I(4))), I(3));
  EXPECT_EQ(rho_of(Update::both_states(I(3), I(4))), I(4));
  EXPECT_EQ(error_of([] { delta_of(Update::post_state(I(5))); }), ErrorKind::StateNotRepresented);
  EXPECT_EQ(error_of([] { rho_of(Update::edits({})); }), ErrorKind::StateNotRepresented);
  EXPECT_EQ(rho_of(Update::state_edits(L({}), {EditOp::insert(0, I(1))})), L({I(1)}));
}

TEST(Endpoints, Traces) {
  EXPECT_EQ(src_of(Traceability::state(P(I(1), I(5)))), P(I(1), I(5)));
  EXPECT_EQ(src_of(Traceability::delta(I(1), I(2), {})), I(1));
  EXPECT_EQ(tgt_of(Traceability::delta(I(1), I(2), {})), I(2));
  EXPECT_EQ(error_of([] { src_of(Traceability::none()); }), ErrorKind::StateNotRepresented);
  EXPECT_EQ(error_of([] { tgt_of(Traceability::state(I(1))); }), ErrorKind::StateNotRepresented);
  EXPECT_EQ(error_of([] { src_of(Traceability::complement(I(1))); }), ErrorKind::StateNotRepresented);
}

TEST(Construction, Validation) {
  Path bogus{Step::go_field("zz")};
  EXPECT_EQ(error_of([&] { Update::delta(kv(1, 7), kv(1, 7), SamenessRelation({{bogus, bogus}})); }),
            ErrorKind::ReprMismatch);
  EXPECT_EQ(error_of([] { Update::state_edits(L({}), {EditOp::erase(0, I(1))}); }), ErrorKind::InvalidEdit);
}

TEST(Identity, Examples) {
  EXPECT_EQ(identity_update(I(2), UpdateRepr::BothStates), Update::both_states(I(2), I(2)));
  EXPECT_EQ(identity_update(I(2), UpdateRepr::Edits), Update::edits({}));
  EXPECT_EQ(identity_update(kv(1, 7), UpdateRepr::Delta), Update::delta(kv(1, 7), kv(1, 7), diff(kv(1, 7), kv(1, 7))));
  EXPECT_EQ(error_of([] { identity_update(I(2), UpdateRepr::PostState); }), ErrorKind::NotExpressible);
  EXPECT_EQ(error_of([] { identity_update(I(2), UpdateRepr::Opaque); }), ErrorKind::NotExpressible);
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose_updates(Update::both_states(I(2), I(3)), Update::both_states(I(1), I(2))),
            Update::both_states(I(1), I(3)));
  EditScript bs1{EditOp::insert(0, I(1))}, bs2{EditOp::erase(0, I(1)), EditOp::insert(0, I(2))};
  EditScript cat = bs1;
  cat.insert(cat.end(), bs2.begin(), bs2.end());
  EXPECT_EQ(compose_updates(Update::edits(bs2), Update::edits(bs1)), Update::edits(cat));
  EXPECT_EQ(compose_updates(Update::post_state(I(7)), Update::post_state(I(8))), Update::post_state(I(7)));
  EXPECT_EQ(error_of([] { compose_updates(Update::both_states(I(5), I(6)), Update::both_states(I(1), I(2))); }),
            ErrorKind::SeamMismatch);
  EXPECT_EQ(error_of([] { compose_updates(Update::edits({}), Update::both_states(I(1), I(2))); }),
            ErrorKind::ReprMismatch);
  EXPECT_EQ(error_of([] { compose_updates(Update::opaque("f"), Update::opaque("g")); }), ErrorKind::NotExpressible);
}

TEST(Compose, DeltaRelationsChain) {
  // Swap the pair, then swap it back: sameness links come home.
  Path l{Step::go_left()}, r{Step::go_right()};
  SamenessRelation swap({{l, r}, {r, l}});
  auto u1 = Update::delta(P(I(1), I(2)), P(I(2), I(1)), swap);
  auto u2 = Update::delta(P(I(2), I(1)), P(I(1), I(2)), swap);
  auto c = compose_updates(u2, u1);
  EXPECT_EQ(c.as<DeltaU>().same, SamenessRelation({{l, l}, {r, r}}));
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert_update(Update::both_states(I(1), I(2))), Update::both_states(I(2), I(1)));
  EditScript ops{EditOp::insert(0, I(1)), EditOp::set_field("k", I(1), I(2))};
  EXPECT_EQ(invert_update(Update::edits(ops)),
            Update::edits({EditOp::set_field("k", I(2), I(1)), EditOp::erase(0, I(1))}));
  EXPECT_EQ(invert_update(Update::edits({EditOp::insert(0, I(4))})), Update::edits({EditOp::erase(0, I(4))}));
  EXPECT_EQ(error_of([] { invert_update(Update::post_state(I(1))); }), ErrorKind::NotExpressible);
  EXPECT_EQ(error_of([] { invert_update(Update::opaque("f")); }), ErrorKind::NotExpressible);
}

TEST(Invert, Traces) {
  Path l{Step::go_left()}, r{Step::go_right()};
  auto c = Traceability::complement(I(3));
  EXPECT_EQ(invert_trace(c), c);
  EXPECT_EQ(invert_trace(Traceability::none()), Traceability::none());
  auto d = Traceability::delta(P(I(1), I(2)), P(I(2), I(1)), SamenessRelation({{l, r}}));
  EXPECT_EQ(invert_trace(d), Traceability::delta(P(I(2), I(1)), P(I(1), I(2)), SamenessRelation({{r, l}})));
  EXPECT_EQ(invert_trace(invert_trace(d)), d);
}

TEST(TraceComposition, Examples) {
  const auto a = kv(1, 7);
  const auto b = R({{"k", I(1)}, {"v", I(8)}});
  SamenessRelation s({{{Step::go_field("k")}, {Step::go_field("k")}}});
  auto r = Traceability::delta(a, b, s);
  EXPECT_EQ(compose_trace_update(Update::both_states(b, b), r), r);

  auto b1 = R({{"k", I(1)}, {"v", I(7)}});
  EXPECT_EQ(compose_trace_update(Update::post_state(b1), Traceability::state(a)), Traceability::state(a));

  // Changing v keeps the k link alive; changing k breaks it.
  EXPECT_EQ(compose_trace_update(Update::both_states(b, b1), r), Traceability::delta(a, b1, s));
  auto b2 = R({{"k", I(2)}, {"v", I(8)}});
  EXPECT_EQ(compose_trace_update(Update::both_states(b, b2), r), Traceability::delta(a, b2, {}));

  EXPECT_EQ(error_of([&] { compose_trace_update(Update::post_state(b1), Traceability::none()); }),
            ErrorKind::NotExpressible);
  EXPECT_EQ(error_of([&] { compose_trace_update(Update::post_state(b1), Traceability::complement(I(0))); }),
            ErrorKind::NotExpressible);
  EXPECT_EQ(error_of([&] { compose_trace_update(Update::both_states(b1, b), r); }), ErrorKind::SeamMismatch);
}

TEST(Incidence, LensTo) {
  auto v = check_incidence(Update::post_state(P(I(2), I(5))), Traceability::none(), Update::post_state(I(2)),
                           Traceability::state(P(I(2), I(5))), Direction::To);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.checked(), 1u);
  EXPECT_EQ(v.conditions[2].name, "rho(a) = delta(r)");
}

TEST(Incidence, TrigonalChecksWhatIsRepresented) {
  const auto a = kv(1, 7), a1 = kv(2, 7);
  const auto b = R({{"k", I(1)}, {"v", I(7)}}), b1 = R({{"k", I(2)}, {"v", I(7)}});
  // from((b, b1), a) = ((a, a1), b1)
  auto v = check_incidence(Update::both_states(b, b1), Traceability::state(a), Update::both_states(a, a1),
                           Traceability::state(b1), Direction::From);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.checked(), 2u);
}

TEST(Incidence, DeltaAllFour) {
  const auto a = kv(1, 7), a1 = kv(2, 7);
  const auto b = R({{"k", I(1)}, {"v", I(7)}}), b1 = R({{"k", I(2)}, {"v", I(7)}});
  auto v = check_incidence(Update::delta(b, b1, diff(b, b1)), Traceability::delta(a, b, {}),
                           Update::delta(a, a1, diff(a, a1)), Traceability::delta(b1, a1, {}), Direction::From);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.checked(), 4u);
}

TEST(Incidence, FabricatedMismatch) {
  auto v = check_incidence(Update::both_states(I(1), I(2)), Traceability::delta(I(9), I(1), {}),
                           Update::both_states(I(9), I(3)), Traceability::delta(I(2), I(4), {}), Direction::To);
  EXPECT_FALSE(v.holds());
  EXPECT_EQ(v.first_failure(), "rho(b) = rho(r)");
}

TEST(Preorder, Examples) {
  const auto a = R({{"x", I(0)}, {"y", I(0)}});
  const auto a1 = R({{"x", I(1)}, {"y", I(0)}});
  auto ss = default_preorder(UpdateRepr::BothStates);
  EXPECT_EQ(ss.compare(Update::both_states(a, a), Update::both_states(a, a1)), Order::LessOrEqual);
  EXPECT_EQ(ss.compare(Update::both_states(a, a1), Update::both_states(a, a)), Order::Greater);

  auto e = default_preorder(UpdateRepr::Edits);
  EXPECT_EQ(e.compare(Update::edits({EditOp::set_field("x", I(0), I(1))}), Update::edits({})), Order::Greater);

  // Unlinked post paths: root + x (1) vs root + x + y (2) -> 2 vs 3.
  auto d = default_preorder(UpdateRepr::Delta);
  const auto b2 = R({{"x", I(1)}, {"y", I(1)}});
  auto full = Update::delta(a, a1, diff(a, a1));
  auto partial = Update::delta(a, b2, diff(a, b2));
  EXPECT_EQ(update_size(full), 2u);
  EXPECT_EQ(update_size(partial), 3u);
  EXPECT_EQ(d.compare(full, partial), Order::LessOrEqual);

  EXPECT_EQ(error_of([] { default_preorder(UpdateRepr::Opaque); }), ErrorKind::NotExpressible);
}

TEST(Text, UpdatesAndTraces) {
  EXPECT_EQ(render_update(Update::post_state(P(I(9), I(5)))), "state{post=(9, 5)}");
  EXPECT_EQ(render_trace(Traceability::state(P(I(2), I(5)))), "state{(2, 5)}");
  EXPECT_EQ(render_trace(Traceability::none()), "none");
  auto u = Update::delta(P(I(1), I(5)), P(I(2), I(5)), diff(P(I(1), I(5)), P(I(2), I(5))));
  EXPECT_EQ(render_update(u), "delta{pre=(1, 5), post=(2, 5), same=[(/right, /right)]}");
  EXPECT_EQ(parse_update(render_update(u)), u);
  EXPECT_EQ(parse_update("edits[ins(0, 1), set(k, 1, 2), root(1, 2), del(3, \"a\"), rep(1, 1, 2)]"),
            Update::edits({EditOp::insert(0, I(1)), EditOp::set_field("k", I(1), I(2)),
                           EditOp::replace_root(I(1), I(2)), EditOp::erase(3, S("a")),
                           EditOp::replace_at(1, I(1), I(2))}));
  EXPECT_EQ(parse_trace(" delta{src=1, tgt=1, same=[(/, /)]} "), Traceability::delta(I(1), I(1), diff(I(1), I(1))));
  EXPECT_EQ(parse_update("opaque{\"f\"}"), Update::opaque("f"));
  for (const char* bad : {"state{1}", "states{pre=1}", "edits[ins(-1, 2)]", "stat{post=1}", "none x"}) {
    EXPECT_EQ(error_of([&] { parse_update(bad); }), ErrorKind::ParseError) << bad;
  }
  EXPECT_EQ(error_of([] { parse_trace("compl{}"); }), ErrorKind::ParseError);
  EXPECT_EQ(error_of([] { parse_update("delta{pre=1, post=1, same=[(/left, /)]}"); }), ErrorKind::ReprMismatch);
  EXPECT_EQ(error_of([] { parse_update("stateedits{pre=[], edits=[del(0, 1)]}"); }), ErrorKind::InvalidEdit);
}

TEST(Algebra, BothStates) {
  auto us = both_states_universe();
  ASSERT_GE(us.size(), 100u);
  EXPECT_TRUE(check_involution(us).empty());
  EXPECT_TRUE(check_seams(us).empty());
  EXPECT_TRUE(check_identities(us).empty());
  EXPECT_TRUE(check_preorder(us).empty());
}

TEST(Algebra, Delta) {
  auto us = delta_universe();
  ASSERT_GE(us.size(), 100u);
  EXPECT_TRUE(check_involution(us).empty());
  EXPECT_TRUE(check_seams(us).empty());
  EXPECT_TRUE(check_identities(us).empty());
  EXPECT_TRUE(check_preorder(us).empty());
}

TEST(Algebra, Edits) {
  auto us = edits_universe();
  ASSERT_GE(us.size(), 100u);
  EXPECT_TRUE(check_involution(us).empty());
  EXPECT_TRUE(check_seams(us).empty());
  EXPECT_TRUE(check_identities(us).empty());
  EXPECT_TRUE(check_edit_soundness(us).empty());
  EXPECT_TRUE(check_preorder(us).empty());
}

TEST(Algebra, StateEdits) {
  auto us = state_edits_universe();
  ASSERT_GE(us.size(), 100u);
  EXPECT_TRUE(check_involution(us).empty());
  EXPECT_TRUE(check_seams(us).empty());
  EXPECT_TRUE(check_identities(us).empty());
  EXPECT_TRUE(check_edit_soundness(us).empty());
}

TEST(Algebra, RenderParseRoundTrip) {
  for (const auto& us : {both_states_universe(), delta_universe(), edits_universe(), state_edits_universe()})
    for (const auto& u : us) ASSERT_EQ(parse_update(render_update(u)), u) << render_update(u);
}
