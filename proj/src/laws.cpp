#include "bx/laws.hpp"

#include <algorithm>

#include "bx/text.hpp"
#include "harness.hpp"

namespace bx {

const char* to_string(Law law) {
  switch (law) {
    case Law::Stability: return "stability";
    case Law::Invertibility: return "invertibility";
    case Law::Undoability: return "undoability";
    case Law::HistoryIgnorance: return "history-ignorance";
    case Law::Correctness: return "correctness";
    case Law::Hippocraticness: return "hippocraticness";
    case Law::LeastUpdate: return "least-update";
    case Law::Totality: return "totality";
    case Law::Safety: return "safety";
    case Law::Convergence: return "convergence";
  }
  return "?";
}

Law parse_law(std::string_view name) {
  for (Law l : kAllLaws)
    if (name == to_string(l)) return l;
  throw Error(ErrorKind::UnknownName, "unknown law: " + std::string(name));
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Holds: return "holds";
    case VerdictKind::Fails: return "fails";
    case VerdictKind::WeaklyHolds: return "weakly-holds";
    case VerdictKind::NotExpressible: return "not-expressible";
    case VerdictKind::Vacuous: return "vacuous";
  }
  return "?";
}

const Verdict* LawReport::find(Law law, Direction d) const {
  auto it = verdicts.find({law, d});
  return it == verdicts.end() ? nullptr : &it->second;
}

namespace {

using detail::Candidate;
using detail::Harness;
using detail::Match;
using detail::World;

std::string render_result(const Applied& a) { return render_update(a.update) + "\n" + render_trace(a.trace); }
std::string render_result(const Update& u, const Traceability& t) { return render_update(u) + "\n" + render_trace(t); }
std::string render_undefined(const Undefined& u) { return "undefined: " + u.reason; }

// Accumulates cases of one law; the first failure ends the check.
class Tally {
 public:
  explicit Tally(std::string weak_variant = "equal up to post-states") : variant_(std::move(weak_variant)) {}

  void pass() { ++cases_; }
  void weak() {
    ++cases_;
    weak_ = true;
  }
  void fail(std::vector<Invocation> steps, std::string expected, std::string actual) {
    ++cases_;
    if (!failure_) failure_ = Counterexample{std::move(steps), std::move(expected), std::move(actual)};
  }
  void record(Match m, std::vector<Invocation> steps, std::string expected, std::string actual) {
    if (m == Match::Strict) pass();
    else if (m == Match::Weak) weak();
    else fail(std::move(steps), std::move(expected), std::move(actual));
  }
  bool failed() const { return failure_.has_value(); }
  void set_variant(std::string v) { variant_ = std::move(v); }

  Verdict finish(const std::string& vacuous_reason) const {
    if (failure_) return Verdict::fails(cases_, *failure_);
    if (cases_ == 0) return Verdict::vacuous(vacuous_reason);
    if (weak_) return Verdict::weakly(cases_, variant_);
    return Verdict::holds(cases_);
  }

 private:
  std::size_t cases_ = 0;
  bool weak_ = false;
  std::string variant_;
  std::optional<Counterexample> failure_;
};

// ---------------------------------------------------------------------------
// Expressibility of the law ingredients, per direction. A bare post-state
// carries no pre-state; it can be recovered from a trace that stores the
// needed side, from a complement or delta trace, or, when R is a
// transformation, by running it on the trace's state.

bool opaque(const Bx& bx) { return bx.upd_to == UpdateRepr::Opaque || bx.upd_from == UpdateRepr::Opaque; }

bool derivable_by_transformation(const Bx& bx) {
  return bx.kind == ConsistencyKind::Transformation &&
         (bx.trace_to == TraceRepr::State || bx.trace_from == TraceRepr::State);
}

bool null_in(const Bx& bx, Direction d) {
  if (bx.input_update(d) != UpdateRepr::PostState) return true;
  const auto t = bx.input_trace(d);
  return t == TraceRepr::Complement || t == TraceRepr::Delta || derivable_by_transformation(bx);
}

bool null_out(const Bx& bx, Direction d) {
  if (bx.output_update(d) != UpdateRepr::PostState) return true;
  return bx.input_trace(d) != TraceRepr::None || derivable_by_transformation(bx);
}

bool inverse_in(const Bx& bx, Direction d) {
  if (bx.input_update(d) != UpdateRepr::PostState) return true;
  return bx.input_trace(d) != TraceRepr::None || derivable_by_transformation(bx);
}

bool compose_in(const Bx& bx, Direction d) {
  return bx.input_trace(d) != TraceRepr::None || derivable_by_transformation(bx);
}

std::optional<Verdict> inexpressible(const Bx& bx, Direction d, Law law) {
  if (opaque(bx)) return Verdict::not_expressible("opaque updates are not checked");
  const auto side = [&](bool in) {
    return std::string(in ? "input" : "output") + " updates are bare post-states with no way to recover the pre-state";
  };
  switch (law) {
    case Law::Stability:
      if (!null_in(bx, d)) return Verdict::not_expressible("null update: " + side(true));
      if (!null_out(bx, d)) return Verdict::not_expressible("null update: " + side(false));
      break;
    case Law::Undoability:
      if (!inverse_in(bx, d)) return Verdict::not_expressible("update inversion: " + side(true));
      if (!null_out(bx, d)) return Verdict::not_expressible("update inversion: " + side(false));
      break;
    case Law::LeastUpdate:
      if (!null_out(bx, d)) return Verdict::not_expressible("output updates cannot be ranked: " + side(false));
      break;
    case Law::Hippocraticness:
      if (!compose_in(bx, d)) return Verdict::not_expressible("no trace to compose the update with");
      if (!null_out(bx, d)) return Verdict::not_expressible("null update: " + side(false));
      break;
    default: break;
  }
  return std::nullopt;
}

Invocation inv(Direction d, const Update& u, const Traceability& t) { return Invocation{d, u, t}; }

// Output-side pre-state of a call, where the harness knows it.
std::optional<Value> out_pre(const Harness& h, const World& w, const Applied& result) {
  if (auto y = h.out(w)) return y;
  if (h.collapsed()) return Harness::post_of(result.update, std::nullopt);
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Verdict stability(const Harness& h) {
  const auto& bx = h.bx();
  const Direction d = h.dir();
  Tally tally;
  const auto worlds = h.collapsed() ? h.consistent_pairs() : h.worlds();
  for (const auto& w : worlds) {
    const auto x = h.in(w), y = h.out(w);
    if (!x || !y) continue;
    const Update u = h.null_update(*x, bx.input_update(d));
    const Traceability t = h.input_trace(w, d);
    const auto o = h.call(d, u, t);
    const auto* ok = applied(o);
    if (!ok) continue;
    const Update eu = h.null_update(*y, bx.output_update(d));
    const Traceability et = h.input_trace(w, h.opp());
    tally.record(h.compare(*ok, eu, et, y), {inv(d, u, t)}, render_result(eu, et), render_result(*ok));
    if (tally.failed()) break;
  }
  return tally.finish("no defined translation of a null update");
}

// The trace to send an output update back with. A bare post-state goes back
// with the trace it came with; an update relative to a pre-state must go
// back with the trace that ends in that pre-state, i.e. the world's.
Traceability round_trip_trace(const Harness& h, const World& w, const Applied& result) {
  if (result.update.repr() == UpdateRepr::PostState) return result.trace;
  return h.input_trace(w, h.opp());
}

Verdict invertibility(const Harness& h) {
  const Direction d = h.dir();
  Tally tally;
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    for (const auto& cand : h.updates_from(w)) {
      const auto o1 = h.call(d, cand.update, t);
      const auto* r1 = applied(o1);
      if (!r1) continue;
      const World w1 = h.after(w, d, cand.update, *r1);
      const Traceability back = round_trip_trace(h, w, *r1);
      const auto o2 = h.call(h.opp(), r1->update, back);
      const auto* r2 = applied(o2);
      if (!r2) continue;
      const Traceability et = h.input_trace(w1, d);
      tally.record(h.compare(*r2, cand.update, et, h.in(w)), {inv(d, cand.update, t), inv(h.opp(), r1->update, back)},
                   render_result(cand.update, et), render_result(*r2));
      if (tally.failed()) return tally.finish({});
    }
  }
  return tally.finish("no defined round trip");
}

Verdict undoability(const Harness& h) {
  const Direction d = h.dir();
  Tally tally;
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    for (const auto& cand : h.updates_from(w)) {
      const auto o1 = h.call(d, cand.update, t);
      const auto* r1 = applied(o1);
      if (!r1) continue;
      const World w1 = h.after(w, d, cand.update, *r1);
      const auto pre_in = h.collapsed() ? std::optional(cand.post) : h.in(w);
      const auto pre_out = out_pre(h, w, *r1);
      const auto undo = h.inverse(cand.update, pre_in);
      const auto expected = h.inverse(r1->update, pre_out);
      if (!undo || !expected) continue;
      const Traceability t1 = h.input_trace(w1, d);
      const auto o2 = h.call(d, *undo, t1);
      const auto* r2 = applied(o2);
      if (!r2) continue;
      const World back = h.collapsed() ? w1 : w;
      const Traceability et = h.input_trace(back, h.opp());
      tally.record(h.compare(*r2, *expected, et, Harness::post_of(r1->update, pre_out)),
                   {inv(d, cand.update, t), inv(d, *undo, t1)}, render_result(*expected, et), render_result(*r2));
      if (tally.failed()) return tally.finish({});
    }
  }
  return tally.finish("no defined update to undo");
}

// Both scripts are known to apply in the world at hand, so an op followed by
// its inverse can be cancelled without changing the effect. Without this an
// update composed with its inverse would never be the null update.
Update compose_in_world(const Update& u2, const Update& u1) {
  const Update u = compose_updates(u2, u1);
  if (u.repr() != UpdateRepr::Edits && u.repr() != UpdateRepr::StateEdits) return u;
  const auto& ops = u.repr() == UpdateRepr::Edits ? u.as<EditsU>().ops : u.as<StateEditsU>().ops;
  EditScript out;
  for (const auto& op : ops) {
    if (!out.empty() && out.back() == invert(op)) out.pop_back();
    else out.push_back(op);
  }
  return u.repr() == UpdateRepr::Edits ? Update::edits(std::move(out))
                                       : Update::state_edits(u.as<StateEditsU>().pre, std::move(out));
}

Verdict history_ignorance(const Harness& h) {
  const Direction d = h.dir();
  const std::size_t depth = (h.config().edit_depth + 1) / 2;
  Tally tally;
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    for (const auto& c1 : h.updates_from(w, d, depth)) {
      const auto o1 = h.call(d, c1.update, t);
      const auto* r1 = applied(o1);
      if (!r1) continue;
      const World w1 = h.after(w, d, c1.update, *r1);
      const Traceability t1 = h.input_trace(w1, d);
      for (const auto& c2 : h.updates_from(w1, d, depth)) {
        const auto o2 = h.call(d, c2.update, t1);
        const auto* r2 = applied(o2);
        if (!r2) continue;
        std::optional<Update> whole, expected;
        try {
          whole = compose_in_world(c2.update, c1.update);
          expected = compose_in_world(r2->update, r1->update);
        } catch (const Error&) {
          continue;
        }
        const auto o = h.call(d, *whole, t);
        const auto* r = applied(o);
        if (!r) continue;
        tally.record(h.compare(*r, *expected, r2->trace, out_pre(h, w, *r)),
                     {inv(d, c1.update, t), inv(d, c2.update, t1), inv(d, *whole, t)},
                     render_result(*expected, r2->trace), render_result(*r));
        if (tally.failed()) return tally.finish({});
      }
    }
  }
  return tally.finish("no defined pair of updates");
}

Verdict correctness(const Harness& h) {
  const Direction d = h.dir();
  Tally tally("weak correctness: no consistent result existed");
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    for (const auto& cand : h.updates_from(w)) {
      const auto o = h.call(d, cand.update, t);
      const auto* r = applied(o);
      if (!r) continue;
      const World w1 = h.after(w, d, cand.update, *r);
      if (h.member(w1)) {
        tally.pass();
      } else if (h.config().weak_variants && !h.has_counterpart(cand.post)) {
        tally.weak();
      } else {
        tally.fail({inv(d, cand.update, t)}, "a result consistent with " + render_value(cand.post), render_result(*r));
        return tally.finish({});
      }
    }
  }
  return tally.finish("no defined translation");
}

// The trace r composed with an input update b: the world where the input
// side has moved to b's post-state and nothing else has.
World composed_world(const Harness& h, const World& w, const Candidate& cand, const Traceability& t) {
  World wh = h.with(w, cand.post, h.out(w));
  if (t.repr() == TraceRepr::Delta) {
    const auto composed = compose_trace_update(cand.update, t);
    const auto& same = composed.as<DeltaTraceT>().same;
    wh.link = h.dir() == Direction::From ? same : same.inverse();
  }
  return wh;
}

Verdict hippocraticness(const Harness& h) {
  if (h.collapsed()) return stability(h);
  const auto& bx = h.bx();
  const Direction d = h.dir();
  Tally tally;
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    const auto y = h.out(w);
    if (!y) continue;
    for (const auto& cand : h.updates_from(w)) {
      World wh;
      try {
        wh = composed_world(h, w, cand, t);
      } catch (const Error&) {
        continue;
      }
      if (!h.member(wh)) continue;
      const auto o = h.call(d, cand.update, t);
      const auto* r = applied(o);
      if (!r) continue;
      const Update eu = h.null_update(*y, bx.output_update(d));
      const Traceability et = h.input_trace(wh, h.opp());
      tally.record(h.compare(*r, eu, et, y), {inv(d, cand.update, t)}, render_result(eu, et), render_result(*r));
      if (tally.failed()) return tally.finish({});
    }
  }
  return tally.finish("no update keeps the states consistent");
}

// Every update must be ignored, consistent or not.
Verdict hippocraticness_literal(const Harness& h) {
  const auto& bx = h.bx();
  const Direction d = h.dir();
  Tally tally;
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    const auto y = h.out(w);
    if (!y) continue;
    for (const auto& cand : h.updates_from(w)) {
      const auto o = h.call(d, cand.update, t);
      const auto* r = applied(o);
      if (!r) continue;
      const Update eu = h.null_update(*y, bx.output_update(d));
      const Traceability et = h.input_trace(w, h.opp());
      tally.record(h.compare(*r, eu, et, y), {inv(d, cand.update, t)}, render_result(eu, et), render_result(*r));
      if (tally.failed()) return tally.finish({});
    }
  }
  return tally.finish("no defined translation");
}

// The output update as something the preorder can rank, and the same for
// an alternative ending in `alt`. Bare post-states are ranked as state
// pairs from the known pre-state.
struct Ranking {
  UpdatePreorder order;
  std::function<std::optional<Update>(const Update&, const Value& pre)> lift;
  std::function<std::optional<Update>(const Value& pre, const Value& alt)> alternative;
};

Ranking ranking(const Harness& h) {
  const auto& bx = h.bx();
  const auto repr = bx.output_update(h.dir());
  const Direction out_side = h.opp();
  Ranking r;
  const auto lifted = repr == UpdateRepr::PostState ? UpdateRepr::BothStates : repr;
  r.order = bx.preorder ? *bx.preorder : default_preorder(lifted);
  r.lift = [repr](const Update& u, const Value& pre) -> std::optional<Update> {
    if (repr == UpdateRepr::PostState) return Update::both_states(pre, rho_of(u));
    return u;
  };
  r.alternative = [&h, lifted, out_side](const Value& pre, const Value& alt) -> std::optional<Update> {
    switch (lifted) {
      case UpdateRepr::BothStates: return Update::both_states(pre, alt);
      case UpdateRepr::Delta: return Update::delta(pre, alt, diff(pre, alt));
      case UpdateRepr::Edits:
      case UpdateRepr::StateEdits: {
        const auto& scripts = h.shortest_scripts(pre, out_side);
        auto it = scripts.find(alt);
        if (it == scripts.end()) return std::nullopt;
        return lifted == UpdateRepr::Edits ? Update::edits(it->second) : Update::state_edits(pre, it->second);
      }
      default: return std::nullopt;
    }
  };
  return r;
}

Verdict least_update(const Harness& h) {
  const auto& bx = h.bx();
  const Direction d = h.dir();
  if (opaque(bx)) return Verdict::not_expressible("opaque updates have no preorder");
  const Ranking rank = ranking(h);
  Tally tally;
  // Without a pre-state in the input, any consistent pair can be the one the
  // update started from.
  const auto worlds = h.collapsed() ? h.consistent_pairs() : h.worlds();
  for (const auto& w : worlds) {
    const Traceability t = h.input_trace(w, d);
    const auto y = h.out(w);
    if (!y) continue;
    for (const auto& cand : h.updates_from(w)) {
      const auto o = h.call(d, cand.update, t);
      const auto* r = applied(o);
      if (!r) continue;
      const auto mine = rank.lift(r->update, *y);
      bool smaller_exists = false;
      std::string witness;
      for (const auto& alt : h.counterparts(cand.post)) {
        const auto other = rank.alternative(*y, alt);
        if (!other || !mine) continue;
        if (rank.order.compare(*mine, *other) == Order::Greater) {
          smaller_exists = true;
          witness = render_update(*other);
          break;
        }
      }
      if (!smaller_exists) {
        tally.pass();
      } else {
        tally.fail({inv(d, cand.update, t)}, "an update no larger than " + witness, render_result(*r));
        return tally.finish({});
      }
    }
  }
  return tally.finish("no defined translation");
}

Verdict totality(const Harness& h) {
  const Direction d = h.dir();
  Tally tally;
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    for (const auto& cand : h.updates_from(w)) {
      const auto o = h.call(d, cand.update, t);
      if (applied(o)) {
        tally.pass();
      } else {
        tally.fail({inv(d, cand.update, t)}, "a defined result", render_undefined(std::get<Undefined>(o)));
        return tally.finish({});
      }
    }
  }
  return tally.finish("no inputs");
}

Verdict safety(const Harness& h) {
  const Direction d = h.dir();
  Tally tally;
  std::map<Value, bool> known;
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    for (const auto& cand : h.updates_from(w)) {
      auto it = known.find(cand.post);
      if (it == known.end()) it = known.emplace(cand.post, h.has_counterpart(cand.post)).first;
      if (!it->second) continue;
      const auto o = h.call(d, cand.update, t);
      if (applied(o)) {
        tally.pass();
      } else {
        tally.fail({inv(d, cand.update, t)}, "a defined result", render_undefined(std::get<Undefined>(o)));
        return tally.finish({});
      }
    }
  }
  return tally.finish("no input has a consistent counterpart");
}

// There and back again, once or twice, must settle on the same post-state.
// Every round trip starts over from the original world.
Verdict convergence(const Harness& h) {
  const Direction d = h.dir();
  Tally tally;
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    for (const auto& cand : h.updates_from(w)) {
      std::vector<Invocation> steps{inv(d, cand.update, t)};
      const auto o1 = h.call(d, cand.update, t);
      const auto* r1 = applied(o1);
      if (!r1) continue;
      const auto pre = out_pre(h, w, *r1);
      Applied last = *r1;
      std::optional<Value> post = Harness::post_of(r1->update, pre);
      bool settled = false, defined = true;
      for (int round = 0; round < 2 && !settled; ++round) {
        const Traceability back = round_trip_trace(h, w, last);
        steps.push_back(inv(h.opp(), last.update, back));
        const auto o2 = h.call(h.opp(), last.update, back);
        const auto* r2 = applied(o2);
        if (!r2) {
          defined = false;
          break;
        }
        steps.push_back(inv(d, r2->update, t));
        const auto o3 = h.call(d, r2->update, t);
        const auto* r3 = applied(o3);
        if (!r3) {
          defined = false;
          break;
        }
        const auto next = Harness::post_of(r3->update, pre);
        settled = next && next == post;
        last = *r3;
        post = next;
      }
      if (!defined) continue;
      if (settled) {
        tally.pass();
      } else {
        tally.fail(std::move(steps), "post-state " + (post ? render_value(*post) : std::string("?")) + " again",
                   render_result(last));
        return tally.finish({});
      }
    }
  }
  return tally.finish("no defined round trip");
}

Verdict check(Law law, const Bx& bx, Direction d, const LawSuiteConfig& config, bool literal = false) {
  if (auto v = inexpressible(bx, d, law)) return *v;
  const Harness h(bx, d, config);
  switch (law) {
    case Law::Stability: return stability(h);
    case Law::Invertibility: return invertibility(h);
    case Law::Undoability: return undoability(h);
    case Law::HistoryIgnorance: return history_ignorance(h);
    case Law::Correctness: return correctness(h);
    case Law::Hippocraticness: return literal ? hippocraticness_literal(h) : hippocraticness(h);
    case Law::LeastUpdate: return least_update(h);
    case Law::Totality: return totality(h);
    case Law::Safety: return safety(h);
    case Law::Convergence: return convergence(h);
  }
  return Verdict::vacuous("unknown law");
}

}  // namespace

Verdict check_law(Law law, const Bx& bx, Direction d, const LawSuiteConfig& config) {
  return check(law, bx, d, config);
}

Verdict check_stability(const Bx& bx, Direction d, const LawSuiteConfig& c) { return check(Law::Stability, bx, d, c); }
Verdict check_invertibility(const Bx& bx, Direction d, const LawSuiteConfig& c) {
  return check(Law::Invertibility, bx, d, c);
}
Verdict check_undoability(const Bx& bx, Direction d, const LawSuiteConfig& c) {
  return check(Law::Undoability, bx, d, c);
}
Verdict check_history_ignorance(const Bx& bx, Direction d, const LawSuiteConfig& c) {
  return check(Law::HistoryIgnorance, bx, d, c);
}
Verdict check_correctness(const Bx& bx, Direction d, const LawSuiteConfig& c) {
  return check(Law::Correctness, bx, d, c);
}
Verdict check_hippocraticness(const Bx& bx, Direction d, const LawSuiteConfig& c) {
  return check(Law::Hippocraticness, bx, d, c);
}
Verdict check_hippocraticness_literal(const Bx& bx, Direction d, const LawSuiteConfig& c) {
  return check(Law::Hippocraticness, bx, d, c, true);
}
Verdict check_least_update(const Bx& bx, Direction d, const LawSuiteConfig& c) {
  return check(Law::LeastUpdate, bx, d, c);
}
Verdict check_totality(const Bx& bx, Direction d, const LawSuiteConfig& c) { return check(Law::Totality, bx, d, c); }
Verdict check_safety(const Bx& bx, Direction d, const LawSuiteConfig& c) { return check(Law::Safety, bx, d, c); }
Verdict check_convergence(const Bx& bx, Direction d, const LawSuiteConfig& c) {
  return check(Law::Convergence, bx, d, c);
}

// ---------------------------------------------------------------------------

namespace {

void meta_theorems(const Bx& bx, Direction d, LawReport& report) {
  auto kind = [&](Law l) -> std::optional<VerdictKind> {
    const auto* v = report.find(l, d);
    return v ? std::optional(v->kind) : std::nullopt;
  };
  const std::string where = std::string(" (") + to_string(d) + ")";
  auto is = [&](Law l, VerdictKind k) { return kind(l) == k; };

  if (is(Law::Stability, VerdictKind::Holds) && is(Law::HistoryIgnorance, VerdictKind::Holds) && kind(Law::Undoability) &&
      !is(Law::Undoability, VerdictKind::Holds)) {
    report.errors.push_back("stability and history-ignorance hold but undoability does not" + where);
  }
  if (bx.kind == ConsistencyKind::Transformation) {
    if (kind(Law::Correctness) && kind(Law::Invertibility) && kind(Law::Correctness) != kind(Law::Invertibility))
      report.errors.push_back("correctness and invertibility disagree on a transformation-defined relation" + where);
    if (kind(Law::Hippocraticness) && kind(Law::Stability) && kind(Law::Hippocraticness) != kind(Law::Stability))
      report.errors.push_back("hippocraticness and stability disagree on a transformation-defined relation" + where);
  }
  if (is(Law::LeastUpdate, VerdictKind::Holds) && null_out(bx, d) && kind(Law::Hippocraticness) &&
      !is(Law::Hippocraticness, VerdictKind::Holds) && !is(Law::Hippocraticness, VerdictKind::NotExpressible)) {
    report.errors.push_back("least-update holds but hippocraticness does not" + where);
  }
}

}  // namespace

LawReport run_suite(const Bx& bx, const LawSuiteConfig& config) {
  LawReport report;
  report.bx_name = bx.name;
  for (Direction d : {Direction::To, Direction::From}) {
    std::optional<Harness> h;
    for (Law law : kAllLaws) {
      if (!config.laws.count(law)) continue;
      if (auto v = inexpressible(bx, d, law)) {
        report.verdicts[{law, d}] = *v;
        continue;
      }
      if (!h) h.emplace(bx, d, config);
      Verdict v;
      switch (law) {
        case Law::Stability: v = stability(*h); break;
        case Law::Invertibility: v = invertibility(*h); break;
        case Law::Undoability: v = undoability(*h); break;
        case Law::HistoryIgnorance: v = history_ignorance(*h); break;
        case Law::Correctness: v = correctness(*h); break;
        case Law::Hippocraticness:
          v = hippocraticness(*h);
          if (bx.framework == Framework::EditLens) report.literal_hippocraticness[d] = hippocraticness_literal(*h);
          break;
        case Law::LeastUpdate: v = least_update(*h); break;
        case Law::Totality: v = totality(*h); break;
        case Law::Safety: v = safety(*h); break;
        case Law::Convergence: v = convergence(*h); break;
      }
      report.verdicts[{law, d}] = std::move(v);
    }
    meta_theorems(bx, d, report);
  }
  return report;
}

std::vector<Invocation> enumerate_invocations(const Bx& bx, Direction d, const LawSuiteConfig& config) {
  std::vector<Invocation> out;
  const Harness h(bx, d, config);
  for (const auto& w : h.worlds()) {
    const Traceability t = h.input_trace(w, d);
    for (const auto& cand : h.updates_from(w)) out.push_back(inv(d, cand.update, t));
  }
  return out;
}

}  // namespace bx
