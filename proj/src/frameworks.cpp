#include "bx/frameworks.hpp"

#include "bx/text.hpp"

namespace bx {

const char* glyph(Symmetry s) { return s == Symmetry::Symmetric ? "S" : "A"; }

const char* glyph(ConsistencyKind k) {
  switch (k) {
    case ConsistencyKind::Explicit: return "E";
    case ConsistencyKind::Transformation: return "T";
    case ConsistencyKind::Implicit: return "I";
  }
  return "?";
}

const char* to_string(Framework f) {
  switch (f) {
    case Framework::Mapping: return "mapping";
    case Framework::Lens: return "lens";
    case Framework::Maintainer: return "maintainer";
    case Framework::Trigonal: return "trigonal";
    case Framework::SymmetricLens: return "symmetric-lens";
    case Framework::EditLens: return "edit-lens";
    case Framework::SdeltaLens: return "sdelta-lens";
  }
  return "?";
}

const char* to_string(Undefined::Kind k) {
  switch (k) {
    case Undefined::Kind::Partial: return "partial";
    case Undefined::Kind::ReprMismatch: return "repr mismatch";
    case Undefined::Kind::SeamMismatch: return "seam mismatch";
  }
  return "?";
}

Symmetry Bx::symmetry() const {
  return upd_to == upd_from && trace_to == trace_from ? Symmetry::Symmetric : Symmetry::Asymmetric;
}

namespace {

using UK = Undefined::Kind;

Undefined outside(const char* what, const Value& v) {
  return undefined(std::string(what) + " " + render_value(v) + " is outside its domain", UK::ReprMismatch);
}

// Input states that are represented must lie in their domains: updates on
// the input side, trace endpoints on the sides they belong to.
std::optional<Undefined> check_states(const Bx& bx, Direction d, const Update& u, const Traceability& t) {
  const auto& in = bx.input_domain(d);
  const auto& out = bx.output_domain(d);
  if (auto pre = try_delta_of(u); pre && !in.contains(*pre)) return outside("pre-state", *pre);
  try {
    if (auto post = try_rho_of(u); post && !in.contains(*post)) return outside("post-state", *post);
  } catch (const Error& e) {
    return undefined(e.what(), UK::Partial);
  }
  if (auto s = try_src_of(t); s && !out.contains(*s)) return outside("trace source", *s);
  if (auto s = try_tgt_of(t); s && !in.contains(*s)) return outside("trace target", *s);
  if (t.repr() == TraceRepr::Complement && bx.complement_domain &&
      !bx.complement_domain->contains(t.as<ComplementTraceT>().payload)) {
    return outside("complement", t.as<ComplementTraceT>().payload);
  }
  return std::nullopt;
}

template <class T>
const Undefined* failed(const Partial<T>& p) {
  return std::get_if<Undefined>(&p);
}

// Definedness of (a, b) in R by a `to` run, for kind-T frameworks.
void derive_consistency(Bx& bx) {
  bx.consistency = [to_fn = bx.to_fn](const Value& a, const Value& b) {
    const auto o = to_fn(Update::post_state(a), Traceability::none());
    const auto* ok = applied(o);
    return ok && rho_of(ok->update) == b;
  };
}

bool has_partner(const Relation& r, const std::vector<Value>& others, const Value& v, bool v_is_a) {
  for (const auto& o : others)
    if (v_is_a ? r(v, o) : r(o, v)) return true;
  return false;
}

std::vector<Value> enumerate_or_empty(const DomainDescriptor& d) {
  try {
    return enumerate_values(d);
  } catch (const Error&) {
    return {};
  }
}

}  // namespace

Outcome run(const Bx& bx, Direction d, const Update& u, const Traceability& t) {
  if (u.repr() != bx.input_update(d)) {
    return undefined(std::string("expected a ") + glyph(bx.input_update(d)) + " update, got " + glyph(u.repr()),
                     UK::ReprMismatch);
  }
  if (t.repr() != bx.input_trace(d)) {
    return undefined(std::string("expected a ") + glyph(bx.input_trace(d)) + " trace, got " + glyph(t.repr()),
                     UK::ReprMismatch);
  }
  if (auto bad = check_states(bx, d, u, t)) return *bad;
  try {
    Outcome o = d == Direction::To ? bx.to_fn(u, t) : bx.from_fn(u, t);
    if (const auto* ok = applied(o)) {
      if (ok->update.repr() != bx.output_update(d) || ok->trace.repr() != bx.output_trace(d)) {
        return undefined("transformation produced the wrong representation", UK::ReprMismatch);
      }
    }
    return o;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::SeamMismatch: return undefined(e.what(), UK::SeamMismatch);
      case ErrorKind::ReprMismatch:
      case ErrorKind::InvalidPath: return undefined(e.what(), UK::ReprMismatch);
      default: return undefined(e.what(), UK::Partial);
    }
  }
}

Outcome to(const Bx& bx, const Update& u, const Traceability& t) { return run(bx, Direction::To, u, t); }
Outcome from(const Bx& bx, const Update& u, const Traceability& t) { return run(bx, Direction::From, u, t); }

// ---------------------------------------------------------------------------

Bx make_mapping(std::string name, StateFn to_fn, StateFn from_fn, DomainDescriptor a, DomainDescriptor b) {
  Bx bx;
  bx.name = std::move(name);
  bx.framework = Framework::Mapping;
  bx.kind = ConsistencyKind::Transformation;
  auto lift = [](StateFn f) -> Transform {
    return [f = std::move(f)](const Update& u, const Traceability&) -> Outcome {
      auto r = f(rho_of(u));
      if (const auto* bad = failed(r)) return *bad;
      return Applied{Update::post_state(std::get<Value>(r)), Traceability::none()};
    };
  };
  bx.to_fn = lift(std::move(to_fn));
  bx.from_fn = lift(std::move(from_fn));
  bx.domain_a = std::move(a);
  bx.domain_b = std::move(b);
  derive_consistency(bx);
  return bx;
}

Bx make_lens(std::string name, StateFn get, StateFn2 put, DomainDescriptor a, DomainDescriptor b) {
  Bx bx;
  bx.name = std::move(name);
  bx.framework = Framework::Lens;
  bx.kind = ConsistencyKind::Transformation;
  bx.trace_to = TraceRepr::State;
  bx.to_fn = [get = std::move(get)](const Update& u, const Traceability&) -> Outcome {
    const Value a = rho_of(u);
    auto r = get(a);
    if (const auto* bad = failed(r)) return *bad;
    return Applied{Update::post_state(std::get<Value>(r)), Traceability::state(a)};
  };
  bx.from_fn = [put = std::move(put)](const Update& u, const Traceability& t) -> Outcome {
    auto r = put(rho_of(u), src_of(t));
    if (const auto* bad = failed(r)) return *bad;
    return Applied{Update::post_state(std::get<Value>(r)), Traceability::none()};
  };
  bx.domain_a = std::move(a);
  bx.domain_b = std::move(b);
  derive_consistency(bx);
  return bx;
}

Bx make_maintainer(std::string name, Relation r, StateFn2 to_fn, StateFn2 from_fn, DomainDescriptor a,
                   DomainDescriptor b) {
  Bx bx;
  bx.name = std::move(name);
  bx.framework = Framework::Maintainer;
  bx.kind = ConsistencyKind::Explicit;
  bx.trace_to = bx.trace_from = TraceRepr::State;
  bx.consistency = r;
  const auto as = enumerate_or_empty(a), bs = enumerate_or_empty(b);
  // The incoming trace state must be half of some consistent pair.
  bx.to_fn = [r, as, bs, f = std::move(to_fn)](const Update& u, const Traceability& t) -> Outcome {
    const Value b0 = src_of(t);
    if (!as.empty() && !has_partner(r, as, b0, false)) {
      return undefined("trace state " + render_value(b0) + " is consistent with nothing", UK::SeamMismatch);
    }
    const Value a1 = rho_of(u);
    auto res = f(a1, b0);
    if (const auto* bad = failed(res)) return *bad;
    return Applied{Update::post_state(std::get<Value>(res)), Traceability::state(a1)};
  };
  bx.from_fn = [r, as, bs, f = std::move(from_fn)](const Update& u, const Traceability& t) -> Outcome {
    const Value a0 = src_of(t);
    if (!bs.empty() && !has_partner(r, bs, a0, true)) {
      return undefined("trace state " + render_value(a0) + " is consistent with nothing", UK::SeamMismatch);
    }
    const Value b1 = rho_of(u);
    auto res = f(b1, a0);
    if (const auto* bad = failed(res)) return *bad;
    return Applied{Update::post_state(std::get<Value>(res)), Traceability::state(b1)};
  };
  bx.domain_a = std::move(a);
  bx.domain_b = std::move(b);
  return bx;
}

Bx make_trigonal(std::string name, Relation r, StateFn3 to_fn, StateFn3 from_fn, DomainDescriptor a,
                 DomainDescriptor b) {
  Bx bx;
  bx.name = std::move(name);
  bx.framework = Framework::Trigonal;
  bx.kind = ConsistencyKind::Explicit;
  bx.upd_to = bx.upd_from = UpdateRepr::BothStates;
  bx.trace_to = bx.trace_from = TraceRepr::State;
  bx.consistency = r;
  // The trace state must be consistent with the update's pre-state: that is
  // the only way the missing trace endpoint can be recovered.
  bx.to_fn = [r, f = std::move(to_fn)](const Update& u, const Traceability& t) -> Outcome {
    const auto& x = u.as<BothStatesU>();
    const Value b0 = src_of(t);
    if (!r(x.pre, b0)) {
      return undefined("trace state " + render_value(b0) + " is not consistent with pre-state " +
                           render_value(x.pre),
                       UK::SeamMismatch);
    }
    auto res = f(x.pre, x.post, b0);
    if (const auto* bad = failed(res)) return *bad;
    return Applied{Update::both_states(b0, std::get<Value>(res)), Traceability::state(x.post)};
  };
  bx.from_fn = [r, f = std::move(from_fn)](const Update& u, const Traceability& t) -> Outcome {
    const auto& x = u.as<BothStatesU>();
    const Value a0 = src_of(t);
    if (!r(a0, x.pre)) {
      return undefined("trace state " + render_value(a0) + " is not consistent with pre-state " +
                           render_value(x.pre),
                       UK::SeamMismatch);
    }
    auto res = f(x.pre, x.post, a0);
    if (const auto* bad = failed(res)) return *bad;
    return Applied{Update::both_states(a0, std::get<Value>(res)), Traceability::state(x.post)};
  };
  bx.domain_a = std::move(a);
  bx.domain_b = std::move(b);
  return bx;
}

Bx make_symmetric_lens(std::string name, ComplementFn to_fn, ComplementFn from_fn, Value init_complement,
                       DomainDescriptor complement, DomainDescriptor a, DomainDescriptor b) {
  Bx bx;
  bx.name = std::move(name);
  bx.framework = Framework::SymmetricLens;
  bx.kind = ConsistencyKind::Implicit;
  bx.trace_to = bx.trace_from = TraceRepr::Complement;
  auto lift = [](ComplementFn f) -> Transform {
    return [f = std::move(f)](const Update& u, const Traceability& t) -> Outcome {
      auto res = f(rho_of(u), t.as<ComplementTraceT>().payload);
      if (const auto* bad = failed(res)) return *bad;
      auto& [v, c] = std::get<std::pair<Value, Value>>(res);
      return Applied{Update::post_state(v), Traceability::complement(c)};
    };
  };
  bx.to_fn = lift(std::move(to_fn));
  bx.from_fn = lift(std::move(from_fn));
  bx.init_complement = std::move(init_complement);
  bx.complement_domain = std::move(complement);
  bx.domain_a = std::move(a);
  bx.domain_b = std::move(b);
  return bx;
}

Bx make_edit_lens(std::string name, EditFn to_fn, EditFn from_fn, Value init_complement,
                  DomainDescriptor complement, std::pair<Value, Value> init_states, DomainDescriptor a,
                  DomainDescriptor b) {
  Bx bx;
  bx.name = std::move(name);
  bx.framework = Framework::EditLens;
  bx.kind = ConsistencyKind::Implicit;
  bx.upd_to = bx.upd_from = UpdateRepr::Edits;
  bx.trace_to = bx.trace_from = TraceRepr::Complement;
  auto lift = [](EditFn f) -> Transform {
    return [f = std::move(f)](const Update& u, const Traceability& t) -> Outcome {
      auto res = f(u.as<EditsU>().ops, t.as<ComplementTraceT>().payload);
      if (const auto* bad = failed(res)) return *bad;
      auto& [ops, c] = std::get<std::pair<EditScript, Value>>(res);
      return Applied{Update::edits(ops), Traceability::complement(c)};
    };
  };
  bx.to_fn = lift(std::move(to_fn));
  bx.from_fn = lift(std::move(from_fn));
  bx.init_complement = std::move(init_complement);
  bx.complement_domain = std::move(complement);
  bx.init_states = std::move(init_states);
  bx.domain_a = std::move(a);
  bx.domain_b = std::move(b);
  return bx;
}

Bx make_sdelta_lens(std::string name, Relation r,
                    std::function<SamenessRelation(const Value&, const Value&)> correspond, DeltaFn to_fn,
                    DeltaFn from_fn, DomainDescriptor a, DomainDescriptor b) {
  Bx bx;
  bx.name = std::move(name);
  bx.framework = Framework::SdeltaLens;
  bx.kind = ConsistencyKind::Explicit;
  bx.upd_to = bx.upd_from = UpdateRepr::Delta;
  bx.trace_to = bx.trace_from = TraceRepr::Delta;
  bx.consistency = r;
  bx.correspond = std::move(correspond);
  // The update must start where the trace ends, and the trace must relate
  // consistent states.
  auto lift = [r](DeltaFn f, bool forward) -> Transform {
    return [r, forward, f = std::move(f)](const Update& u, const Traceability& t) -> Outcome {
      const auto& x = u.as<DeltaU>();
      const auto& tr = t.as<DeltaTraceT>();
      if (x.pre != tr.tgt) {
        return undefined("update pre-state " + render_value(x.pre) + " does not match trace target " +
                             render_value(tr.tgt),
                         UK::SeamMismatch);
      }
      const bool ok = forward ? r(tr.tgt, tr.src) : r(tr.src, tr.tgt);
      if (!ok) return undefined("input trace relates inconsistent states", UK::SeamMismatch);
      return f(x, tr);
    };
  };
  bx.to_fn = lift(std::move(to_fn), true);
  bx.from_fn = lift(std::move(from_fn), false);
  bx.domain_a = std::move(a);
  bx.domain_b = std::move(b);
  return bx;
}

}  // namespace bx
