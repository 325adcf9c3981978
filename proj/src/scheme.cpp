#include "bx/scheme.hpp"

#include <algorithm>

namespace bx {

const char* glyph(UpdateRepr r) {
  switch (r) {
    case UpdateRepr::PostState: return "S";
    case UpdateRepr::BothStates: return "SS";
    case UpdateRepr::Delta: return "D";
    case UpdateRepr::Edits: return "E";
    case UpdateRepr::StateEdits: return "SE";
    case UpdateRepr::Opaque: return "F";
  }
  return "?";
}

const char* glyph(TraceRepr r) {
  switch (r) {
    case TraceRepr::None: return "N";
    case TraceRepr::State: return "S";
    case TraceRepr::Complement: return "C";
    case TraceRepr::Delta: return "D";
  }
  return "?";
}

const char* to_string(Direction d) { return d == Direction::To ? "to" : "from"; }

// ---------------------------------------------------------------------------

std::optional<Value> try_apply(const EditOp& op, const Value& v) {
  using K = EditOp::Kind;
  switch (op.kind) {
    case K::Insert: {
      if (!v.is_seq() || op.index > v.elements().size()) return std::nullopt;
      auto xs = v.elements();
      xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(op.index), op.new_value);
      return Value::seq(std::move(xs));
    }
    case K::Delete: {
      if (!v.is_seq() || op.index >= v.elements().size() || v.elements()[op.index] != op.old_value)
        return std::nullopt;
      auto xs = v.elements();
      xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(op.index));
      return Value::seq(std::move(xs));
    }
    case K::ReplaceAt:
      if (!v.is_seq() || op.index >= v.elements().size() || v.elements()[op.index] != op.old_value)
        return std::nullopt;
      return v.with_element(op.index, op.new_value);
    case K::SetField: {
      const Value* f = v.field(op.name);
      if (f == nullptr || *f != op.old_value) return std::nullopt;
      return v.with_field(op.name, op.new_value);
    }
    case K::ReplaceRoot:
      if (v != op.old_value) return std::nullopt;
      return op.new_value;
  }
  return std::nullopt;
}

std::optional<Value> try_apply(const EditScript& ops, const Value& v) {
  std::optional<Value> cur = v;
  for (const auto& op : ops) {
    cur = try_apply(op, *cur);
    if (!cur) return std::nullopt;
  }
  return cur;
}

Value apply(const EditScript& ops, const Value& v) {
  Value cur = v;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    auto next = try_apply(ops[i], cur);
    if (!next) {
      throw Error(ErrorKind::InvalidEdit,
                  "edit " + std::to_string(i) + " does not apply to " + render_value(cur), i);
    }
    cur = std::move(*next);
  }
  return cur;
}

EditOp invert(const EditOp& op) {
  using K = EditOp::Kind;
  switch (op.kind) {
    case K::Insert: return EditOp::erase(op.index, op.new_value);
    case K::Delete: return EditOp::insert(op.index, op.old_value);
    case K::ReplaceAt: return EditOp::replace_at(op.index, op.new_value, op.old_value);
    case K::SetField: return EditOp::set_field(op.name, op.new_value, op.old_value);
    case K::ReplaceRoot: return EditOp::replace_root(op.new_value, op.old_value);
  }
  return op;
}

EditScript invert(const EditScript& ops) {
  EditScript out;
  out.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) out.push_back(invert(*it));
  return out;
}

// ---------------------------------------------------------------------------

Update Update::post_state(Value post) { return Update(PostStateU{std::move(post)}); }
Update Update::both_states(Value pre, Value post) { return Update(BothStatesU{std::move(pre), std::move(post)}); }

Update Update::delta(Value pre, Value post, SamenessRelation same) {
  if (!same.valid_for(pre, post)) {
    throw Error(ErrorKind::ReprMismatch, "delta sameness relation references an invalid path");
  }
  return Update(DeltaU{std::move(pre), std::move(post), std::move(same)});
}

Update Update::edits(EditScript ops) { return Update(EditsU{std::move(ops)}); }

Update Update::state_edits(Value pre, EditScript ops) {
  (void)bx::apply(ops, pre);
  return Update(StateEditsU{std::move(pre), std::move(ops)});
}

Update Update::opaque(std::string tag) { return Update(OpaqueU{std::move(tag)}); }

Traceability Traceability::state(Value v) { return Traceability(StateTraceT{std::move(v)}); }
Traceability Traceability::complement(Value c) { return Traceability(ComplementTraceT{std::move(c)}); }

Traceability Traceability::delta(Value src, Value tgt, SamenessRelation same) {
  if (!same.valid_for(src, tgt)) {
    throw Error(ErrorKind::ReprMismatch, "delta trace sameness relation references an invalid path");
  }
  return Traceability(DeltaTraceT{std::move(src), std::move(tgt), std::move(same)});
}

// ---------------------------------------------------------------------------

std::optional<Value> try_delta_of(const Update& u) {
  return std::visit(
      [](const auto& x) -> std::optional<Value> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BothStatesU> || std::is_same_v<T, DeltaU> ||
                      std::is_same_v<T, StateEditsU>) {
          return x.pre;
        } else {
          return std::nullopt;
        }
      },
      u.rep());
}

std::optional<Value> try_rho_of(const Update& u) {
  return std::visit(
      [](const auto& x) -> std::optional<Value> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PostStateU> || std::is_same_v<T, BothStatesU> ||
                      std::is_same_v<T, DeltaU>) {
          return x.post;
        } else if constexpr (std::is_same_v<T, StateEditsU>) {
          return bx::apply(x.ops, x.pre);
        } else {
          return std::nullopt;
        }
      },
      u.rep());
}

Value delta_of(const Update& u) {
  if (auto v = try_delta_of(u)) return *v;
  throw Error(ErrorKind::StateNotRepresented, std::string("pre-state not represented in ") + glyph(u.repr()));
}

Value rho_of(const Update& u) {
  if (auto v = try_rho_of(u)) return *v;
  throw Error(ErrorKind::StateNotRepresented, std::string("post-state not represented in ") + glyph(u.repr()));
}

std::optional<Value> try_src_of(const Traceability& t) {
  if (const auto* s = std::get_if<StateTraceT>(&t.rep())) return s->state;
  if (const auto* d = std::get_if<DeltaTraceT>(&t.rep())) return d->src;
  return std::nullopt;
}

std::optional<Value> try_tgt_of(const Traceability& t) {
  if (const auto* d = std::get_if<DeltaTraceT>(&t.rep())) return d->tgt;
  return std::nullopt;
}

Value src_of(const Traceability& t) {
  if (auto v = try_src_of(t)) return *v;
  throw Error(ErrorKind::StateNotRepresented, std::string("src not represented in trace ") + glyph(t.repr()));
}

Value tgt_of(const Traceability& t) {
  if (auto v = try_tgt_of(t)) return *v;
  throw Error(ErrorKind::StateNotRepresented, std::string("tgt not represented in trace ") + glyph(t.repr()));
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void not_expressible(const char* what, UpdateRepr r) {
  throw Error(ErrorKind::NotExpressible, std::string(what) + " is not expressible for " + glyph(r));
}

void require_seam(const Value& post1, const Value& pre2) {
  if (post1 != pre2) {
    throw Error(ErrorKind::SeamMismatch,
                "post-state " + render_value(post1) + " does not meet pre-state " + render_value(pre2));
  }
}

}  // namespace

Update identity_update(const Value& a, UpdateRepr repr) {
  switch (repr) {
    case UpdateRepr::BothStates: return Update::both_states(a, a);
    case UpdateRepr::Delta: return Update::delta(a, a, diff(a, a));
    case UpdateRepr::Edits: return Update::edits({});
    case UpdateRepr::StateEdits: return Update::state_edits(a, {});
    default: not_expressible("null update", repr);
  }
}

Update compose_updates(const Update& u2, const Update& u1) {
  if (u1.repr() != u2.repr()) {
    throw Error(ErrorKind::ReprMismatch, std::string("cannot compose ") + glyph(u2.repr()) + " after " +
                                             glyph(u1.repr()));
  }
  switch (u1.repr()) {
    case UpdateRepr::PostState: return u2;
    case UpdateRepr::BothStates: {
      const auto& a = u1.as<BothStatesU>();
      const auto& b = u2.as<BothStatesU>();
      require_seam(a.post, b.pre);
      return Update::both_states(a.pre, b.post);
    }
    case UpdateRepr::Delta: {
      const auto& a = u1.as<DeltaU>();
      const auto& b = u2.as<DeltaU>();
      require_seam(a.post, b.pre);
      return Update::delta(a.pre, b.post, a.same.then(b.same));
    }
    case UpdateRepr::Edits: {
      EditScript ops = u1.as<EditsU>().ops;
      const auto& more = u2.as<EditsU>().ops;
      ops.insert(ops.end(), more.begin(), more.end());
      return Update::edits(std::move(ops));
    }
    case UpdateRepr::StateEdits: {
      const auto& a = u1.as<StateEditsU>();
      const auto& b = u2.as<StateEditsU>();
      require_seam(bx::apply(a.ops, a.pre), b.pre);
      EditScript ops = a.ops;
      ops.insert(ops.end(), b.ops.begin(), b.ops.end());
      return Update::state_edits(a.pre, std::move(ops));
    }
    case UpdateRepr::Opaque: break;
  }
  not_expressible("composition", u1.repr());
}

Update invert_update(const Update& u) {
  switch (u.repr()) {
    case UpdateRepr::BothStates: {
      const auto& x = u.as<BothStatesU>();
      return Update::both_states(x.post, x.pre);
    }
    case UpdateRepr::Delta: {
      const auto& x = u.as<DeltaU>();
      return Update::delta(x.post, x.pre, x.same.inverse());
    }
    case UpdateRepr::Edits: return Update::edits(invert(u.as<EditsU>().ops));
    case UpdateRepr::StateEdits: {
      const auto& x = u.as<StateEditsU>();
      return Update::state_edits(bx::apply(x.ops, x.pre), invert(x.ops));
    }
    default: not_expressible("update inversion", u.repr());
  }
}

Traceability invert_trace(const Traceability& t) {
  if (const auto* d = std::get_if<DeltaTraceT>(&t.rep())) {
    return Traceability::delta(d->tgt, d->src, d->same.inverse());
  }
  return t;
}

Traceability compose_trace_update(const Update& b, const Traceability& r) {
  switch (r.repr()) {
    case TraceRepr::State:
      if (b.repr() == UpdateRepr::Opaque) not_expressible("trace composition", b.repr());
      return r;
    case TraceRepr::Delta: {
      const auto& d = r.as<DeltaTraceT>();
      Update lifted = b;
      switch (b.repr()) {
        case UpdateRepr::Delta: break;
        case UpdateRepr::PostState:
          lifted = Update::delta(d.tgt, b.as<PostStateU>().post, diff(d.tgt, b.as<PostStateU>().post));
          break;
        case UpdateRepr::BothStates:
        case UpdateRepr::StateEdits: {
          const Value pre = delta_of(b), post = rho_of(b);
          lifted = Update::delta(pre, post, diff(pre, post));
          break;
        }
        case UpdateRepr::Edits: {
          const Value post = bx::apply(b.as<EditsU>().ops, d.tgt);
          lifted = Update::delta(d.tgt, post, diff(d.tgt, post));
          break;
        }
        case UpdateRepr::Opaque: not_expressible("trace composition", b.repr());
      }
      const auto& q = lifted.as<DeltaU>();
      require_seam(d.tgt, q.pre);
      return Traceability::delta(d.src, q.post, d.same.then(q.same));
    }
    default:
      throw Error(ErrorKind::NotExpressible,
                  std::string("trace composition is not expressible for trace ") + glyph(r.repr()));
  }
}

// ---------------------------------------------------------------------------

bool IncidenceVerdict::holds() const {
  return std::none_of(conditions.begin(), conditions.end(),
                      [](const auto& c) { return c.status == IncidenceCondition::Status::Fails; });
}

std::size_t IncidenceVerdict::checked() const {
  return static_cast<std::size_t>(std::count_if(conditions.begin(), conditions.end(), [](const auto& c) {
    return c.status != IncidenceCondition::Status::Skipped;
  }));
}

std::optional<std::string> IncidenceVerdict::first_failure() const {
  for (const auto& c : conditions) {
    if (c.status == IncidenceCondition::Status::Fails) return c.name;
  }
  return std::nullopt;
}

IncidenceVerdict check_incidence(const Update& u_in, const Traceability& t_in, const Update& u_out,
                                 const Traceability& t_out, Direction direction) {
  // Both directions share one shape once updates and traces are named by
  // role: the incoming update starts where the incoming trace ends, and so on.
  const bool to = direction == Direction::To;
  const std::string ui = to ? "a" : "b", uo = to ? "b" : "a", ti = to ? "s" : "r", tout = to ? "r" : "s";

  auto cond = [](std::string name, const std::optional<Value>& x, const std::optional<Value>& y) {
    IncidenceCondition c{std::move(name), IncidenceCondition::Status::Skipped};
    if (x && y) c.status = *x == *y ? IncidenceCondition::Status::Holds : IncidenceCondition::Status::Fails;
    return c;
  };
  auto safe_rho = [](const Update& u) -> std::optional<Value> {
    try {
      return try_rho_of(u);
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  IncidenceVerdict v;
  v.conditions.push_back(cond("delta(" + ui + ") = rho(" + ti + ")", try_delta_of(u_in), try_tgt_of(t_in)));
  v.conditions.push_back(cond("delta(" + uo + ") = delta(" + ti + ")", try_delta_of(u_out), try_src_of(t_in)));
  v.conditions.push_back(cond("rho(" + ui + ") = delta(" + tout + ")", safe_rho(u_in), try_src_of(t_out)));
  v.conditions.push_back(cond("rho(" + uo + ") = rho(" + tout + ")", safe_rho(u_out), try_tgt_of(t_out)));
  return v;
}

// ---------------------------------------------------------------------------

std::size_t update_size(const Update& u) {
  switch (u.repr()) {
    case UpdateRepr::PostState: return 0;
    case UpdateRepr::BothStates: {
      const auto& x = u.as<BothStatesU>();
      const auto same = diff(x.pre, x.post);
      std::size_t n = 0;
      for (const auto& p : all_paths(x.post)) n += same.has_target(p) ? 0 : 1;
      return n;
    }
    case UpdateRepr::Delta: {
      const auto& x = u.as<DeltaU>();
      std::size_t n = 0;
      for (const auto& p : all_paths(x.post)) n += x.same.has_target(p) ? 0 : 1;
      return n;
    }
    case UpdateRepr::Edits: return u.as<EditsU>().ops.size();
    case UpdateRepr::StateEdits: return u.as<StateEditsU>().ops.size();
    case UpdateRepr::Opaque: break;
  }
  throw Error(ErrorKind::NoPreorder, "opaque updates have no preorder");
}

UpdatePreorder default_preorder(UpdateRepr repr) {
  if (repr == UpdateRepr::Opaque) not_expressible("update preorder", repr);
  return UpdatePreorder{[repr](const Update& x, const Update& y) {
    if (x.repr() != repr || y.repr() != repr) {
      throw Error(ErrorKind::ReprMismatch, std::string("preorder over ") + glyph(repr) + " got other updates");
    }
    return update_size(x) <= update_size(y) ? Order::LessOrEqual : Order::Greater;
  }};
}

}  // namespace bx
