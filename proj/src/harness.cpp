#include "harness.hpp"

#include <deque>
#include <stdexcept>

namespace bx::detail {

namespace {

std::optional<Value>& side(World& w, Direction dir) { return dir == Direction::To ? w.a : w.b; }
const std::optional<Value>& side(const World& w, Direction dir) { return dir == Direction::To ? w.a : w.b; }

const DomainDescriptor& descriptor(const Bx& bx, Direction dir) {
  return dir == Direction::To ? bx.domain_a : bx.domain_b;
}

// Every single edit that keeps v inside its domain.
std::vector<EditOp> ops_for(const Value& v, const DomainDescriptor& dom) {
  std::vector<EditOp> ops;
  if (dom.kind() == DomainDescriptor::Kind::Seq && v.is_seq()) {
    const auto elems = enumerate_values(dom.element());
    const auto& xs = v.elements();
    if (xs.size() < dom.max_len())
      for (std::size_t i = 0; i <= xs.size(); ++i)
        for (const auto& e : elems) ops.push_back(EditOp::insert(i, e));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ops.push_back(EditOp::erase(i, xs[i]));
      for (const auto& e : elems)
        if (e != xs[i]) ops.push_back(EditOp::replace_at(i, xs[i], e));
    }
  } else if (dom.kind() == DomainDescriptor::Kind::Rec && v.is_rec()) {
    for (const auto& [name, fd] : dom.fields()) {
      const Value* cur = v.field(name);
      if (cur == nullptr) continue;
      for (const auto& e : enumerate_values(fd))
        if (e != *cur) ops.push_back(EditOp::set_field(name, *cur, e));
    }
  } else {
    for (const auto& e : enumerate_values(dom))
      if (e != v) ops.push_back(EditOp::replace_root(v, e));
  }
  return ops;
}

void extend_scripts(const Value& v, const DomainDescriptor& dom, std::size_t depth, EditScript& cur,
                    std::vector<std::pair<EditScript, Value>>& out) {
  out.emplace_back(cur, v);
  if (depth == 0) return;
  for (const auto& op : ops_for(v, dom)) {
    auto next = try_apply(op, v);
    if (!next || !dom.contains(*next)) continue;
    cur.push_back(op);
    extend_scripts(*next, dom, depth - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Harness::Harness(const Bx& bx, Direction d, const LawSuiteConfig& config) : bx_(bx), d_(d), config_(config) {
  collapsed_ = bx.input_update(d) == UpdateRepr::PostState && bx.input_trace(d) == TraceRepr::None;
  as_ = enumerate_values(bx.domain_a, config.cap);
  bs_ = enumerate_values(bx.domain_b, config.cap);
  if (bx.kind == ConsistencyKind::Implicit) build_reachable();
  build_worlds();
}

const std::vector<Value>& Harness::domain(Direction side_of) const {
  return side_of == Direction::To ? as_ : bs_;
}

World Harness::with(const World& w, std::optional<Value> in_state, std::optional<Value> out_state) const {
  World r = w;
  side(r, d_) = std::move(in_state);
  side(r, opp()) = std::move(out_state);
  return r;
}

Traceability Harness::input_trace(const World& w, Direction dir) const {
  switch (bx_.input_trace(dir)) {
    case TraceRepr::None: return Traceability::none();
    case TraceRepr::State: {
      // The state trace stores the endpoint on the far side of the call.
      const auto& s = side(w, opposite(dir));
      if (!s) throw std::logic_error("state trace needs a state the world does not have");
      return Traceability::state(*s);
    }
    case TraceRepr::Complement: {
      const auto c = w.c ? w.c : bx_.init_complement;
      if (!c) throw std::logic_error("complement trace without a complement");
      return Traceability::complement(*c);
    }
    case TraceRepr::Delta: {
      const SamenessRelation link = w.link.value_or(SamenessRelation{});
      if (dir == Direction::From) return Traceability::delta(*w.a, *w.b, link);
      return Traceability::delta(*w.b, *w.a, link.inverse());
    }
  }
  return Traceability::none();
}

std::optional<Value> Harness::post_of(const Update& u, const std::optional<Value>& pre) {
  switch (u.repr()) {
    case UpdateRepr::PostState:
    case UpdateRepr::BothStates:
    case UpdateRepr::Delta:
    case UpdateRepr::StateEdits: return rho_of(u);
    case UpdateRepr::Edits: return pre ? try_apply(u.as<EditsU>().ops, *pre) : std::nullopt;
    case UpdateRepr::Opaque: break;
  }
  return std::nullopt;
}

World Harness::after(const World& w, Direction dir, const Update& u_in, const Applied& result) const {
  World r = w;
  side(r, dir) = post_of(u_in, side(w, dir));
  side(r, opposite(dir)) = post_of(result.update, side(w, opposite(dir)));
  if (result.trace.repr() == TraceRepr::Complement) r.c = result.trace.as<ComplementTraceT>().payload;
  if (result.trace.repr() == TraceRepr::Delta) {
    const auto& same = result.trace.as<DeltaTraceT>().same;
    r.link = dir == Direction::From ? same.inverse() : same;
  }
  return r;
}

std::vector<Candidate> Harness::updates_from(const World& w, Direction dir, std::size_t depth) const {
  std::vector<Candidate> out;
  const auto& x = side(w, dir);
  const auto& dom = domain(dir);
  const auto repr = bx_.input_update(dir);
  if (repr == UpdateRepr::PostState) {
    for (const auto& x1 : dom) out.push_back({Update::post_state(x1), x1});
    return out;
  }
  if (!x) return out;
  switch (repr) {
    case UpdateRepr::BothStates:
      for (const auto& x1 : dom) out.push_back({Update::both_states(*x, x1), x1});
      break;
    case UpdateRepr::Delta:
      for (const auto& x1 : dom) {
        auto same = diff(*x, x1);
        if (!same.empty()) out.push_back({Update::delta(*x, x1, {}), x1});
        out.push_back({Update::delta(*x, x1, std::move(same)), x1});
      }
      break;
    case UpdateRepr::Edits:
    case UpdateRepr::StateEdits: {
      std::vector<std::pair<EditScript, Value>> scripts;
      EditScript cur;
      extend_scripts(*x, descriptor(bx_, dir), depth, cur, scripts);
      for (auto& [ops, post] : scripts) {
        out.push_back({repr == UpdateRepr::Edits ? Update::edits(ops) : Update::state_edits(*x, ops), post});
      }
      break;
    }
    default: break;
  }
  return out;
}

const std::map<Value, EditScript>& Harness::shortest_scripts(const Value& pre, Direction side_of) const {
  auto key = std::make_pair(pre, static_cast<int>(side_of));
  if (auto it = scripts_.find(key); it != scripts_.end()) return it->second;
  std::map<Value, EditScript> best;
  best.emplace(pre, EditScript{});
  std::deque<Value> frontier{pre};
  const auto& dom = descriptor(bx_, side_of);
  while (!frontier.empty()) {
    Value v = frontier.front();
    frontier.pop_front();
    const EditScript path = best.at(v);
    if (path.size() >= config_.edit_depth) continue;
    for (const auto& op : ops_for(v, dom)) {
      auto next = try_apply(op, v);
      if (!next || !dom.contains(*next) || best.count(*next)) continue;
      EditScript p = path;
      p.push_back(op);
      best.emplace(*next, std::move(p));
      frontier.push_back(*next);
    }
  }
  return scripts_.emplace(key, std::move(best)).first->second;
}

// ---------------------------------------------------------------------------

bool Harness::member_pair(const Value& in_state, const Value& out_state) const {
  switch (bx_.kind) {
    case ConsistencyKind::Implicit: {
      const auto& a = d_ == Direction::To ? in_state : out_state;
      const auto& b = d_ == Direction::To ? out_state : in_state;
      return reachable_pairs_.count({a, b}) > 0;
    }
    case ConsistencyKind::Transformation:
      // (x, y) is in R when the opposite transformation, fed y, gives back x.
      if (bx_.input_update(opp()) == UpdateRepr::PostState) {
        const World w = with(World{}, in_state, out_state);
        const auto o = call(opp(), Update::post_state(out_state), input_trace(w, opp()));
        const auto* ok = applied(o);
        return ok && post_of(ok->update, in_state) == in_state;
      }
      [[fallthrough]];
    case ConsistencyKind::Explicit:
      return d_ == Direction::To ? bx_.consistency(in_state, out_state) : bx_.consistency(out_state, in_state);
  }
  return false;
}

bool Harness::member(const World& w) const {
  const auto x = in(w), y = out(w);
  if (!x || !y) return false;
  if (bx_.kind == ConsistencyKind::Implicit && w.c) {
    return reachable_.count(World{w.a, w.b, w.c, std::nullopt}) > 0;
  }
  // A delta trace testifies consistency only with the canonical links.
  if (bx_.correspond && w.link && *w.link != bx_.correspond(*w.a, *w.b)) return false;
  return member_pair(*x, *y);
}

std::vector<Value> Harness::counterparts(const Value& in_state) const {
  std::vector<Value> out;
  for (const auto& y : domain(opp()))
    if (member_pair(in_state, y)) out.push_back(y);
  return out;
}

bool Harness::has_counterpart(const Value& in_state) const {
  for (const auto& y : domain(opp()))
    if (member_pair(in_state, y)) return true;
  return false;
}

std::vector<World> Harness::consistent_pairs() const {
  std::vector<World> out;
  for (const auto& x : domain(d_))
    for (const auto& y : domain(opp()))
      if (member_pair(x, y)) out.push_back(with(World{}, x, y));
  return out;
}

void Harness::build_worlds() {
  if (collapsed_) {
    for (const auto& x : domain(d_)) worlds_.push_back(with(World{}, x, std::nullopt));
    return;
  }
  if (bx_.kind == ConsistencyKind::Implicit) {
    for (const auto& w : reachable_)
      if (bx_.domain_a.contains(*w.a) && bx_.domain_b.contains(*w.b)) worlds_.push_back(w);
    return;
  }
  const bool linked = bx_.trace_to == TraceRepr::Delta || bx_.trace_from == TraceRepr::Delta;
  for (const auto& a : as_)
    for (const auto& b : bs_) {
      if (!bx_.consistency(a, b)) continue;
      World w{a, b, std::nullopt, std::nullopt};
      if (linked) w.link = bx_.correspond ? bx_.correspond(a, b) : SamenessRelation{};
      worlds_.push_back(std::move(w));
    }
}

// States reachable from the initial configuration by any history of
// propagated updates, in both directions. Results outside the domains are
// recorded but not expanded.
void Harness::build_reachable() {
  std::deque<World> queue;
  auto add = [&](World w) {
    if (reachable_.size() >= config_.cap || !w.a || !w.b) return;
    if (!reachable_.insert(w).second) return;
    reachable_pairs_.emplace(*w.a, *w.b);
    const bool inside = bx_.domain_a.contains(*w.a) && bx_.domain_b.contains(*w.b) &&
                        (!w.c || !bx_.complement_domain || bx_.complement_domain->contains(*w.c));
    if (inside) queue.push_back(std::move(w));
  };

  if (bx_.init_states) {
    add(World{bx_.init_states->first, bx_.init_states->second, bx_.init_complement, std::nullopt});
  } else {
    for (Direction dir : {Direction::To, Direction::From}) {
      if (bx_.input_update(dir) != UpdateRepr::PostState) continue;
      for (const auto& x : domain(dir)) {
        World seed{std::nullopt, std::nullopt, bx_.init_complement, std::nullopt};
        const auto u = Update::post_state(x);
        const auto o = call(dir, u, input_trace(seed, dir));
        if (const auto* ok = applied(o)) add(after(seed, dir, u, *ok));
      }
    }
  }

  while (!queue.empty()) {
    World w = queue.front();
    queue.pop_front();
    for (Direction dir : {Direction::To, Direction::From}) {
      for (const auto& cand : updates_from(w, dir, 1)) {
        const auto o = call(dir, cand.update, input_trace(w, dir));
        if (const auto* ok = applied(o)) add(after(w, dir, cand.update, *ok));
      }
    }
  }
}

// ---------------------------------------------------------------------------

Update Harness::null_update(const Value& x, UpdateRepr r) const {
  return r == UpdateRepr::PostState ? Update::post_state(x) : identity_update(x, r);
}

std::optional<Update> Harness::inverse(const Update& u, const std::optional<Value>& pre) const {
  switch (u.repr()) {
    case UpdateRepr::PostState: return pre ? std::optional(Update::post_state(*pre)) : std::nullopt;
    case UpdateRepr::Opaque: return std::nullopt;
    default: return invert_update(u);
  }
}

Match Harness::compare(const Applied& actual, const Update& update, const Traceability& trace,
                       const std::optional<Value>& pre) const {
  if (actual.trace != trace) return Match::Different;
  if (actual.update == update) return Match::Strict;
  if (!config_.weak_variants) return Match::Different;
  const auto pa = post_of(actual.update, pre), pe = post_of(update, pre);
  if (!pa || !pe) return Match::Different;
  if (actual.update.repr() == UpdateRepr::Edits && *pa == *pe) return Match::Weak;
  if (config_.normalizer && config_.normalizer(*pa) == config_.normalizer(*pe)) return Match::Weak;
  return Match::Different;
}

}  // namespace bx::detail
