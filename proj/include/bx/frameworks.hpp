#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "bx/scheme.hpp"

namespace bx {

enum class Symmetry { Symmetric, Asymmetric };
enum class ConsistencyKind { Explicit, Transformation, Implicit };  // E, T, I
enum class Framework { Mapping, Lens, Maintainer, Trigonal, SymmetricLens, EditLens, SdeltaLens };

const char* glyph(Symmetry s);
const char* glyph(ConsistencyKind k);
const char* to_string(Framework f);

// Why a transformation gave no result.
struct Undefined {
  enum class Kind { Partial, ReprMismatch, SeamMismatch };
  Kind kind = Kind::Partial;
  std::string reason;
};

const char* to_string(Undefined::Kind k);

struct Applied {
  Update update;
  Traceability trace;
};

using Outcome = std::variant<Applied, Undefined>;
using Transform = std::function<Outcome(const Update&, const Traceability&)>;

inline const Applied* applied(const Outcome& o) { return std::get_if<Applied>(&o); }
inline Undefined undefined(std::string reason, Undefined::Kind kind = Undefined::Kind::Partial) {
  return Undefined{kind, std::move(reason)};
}

// A value or the reason there is none; the return type of the user-level
// functions the adapters wrap.
template <class T>
using Partial = std::variant<T, Undefined>;

struct Bx {
  std::string name;
  Framework framework = Framework::Mapping;

  // trace_to is T->(A,B): produced by `to`, consumed by `from`.
  // trace_from is T<-(A,B): produced by `from`, consumed by `to`.
  UpdateRepr upd_to = UpdateRepr::PostState, upd_from = UpdateRepr::PostState;
  TraceRepr trace_to = TraceRepr::None, trace_from = TraceRepr::None;
  ConsistencyKind kind = ConsistencyKind::Explicit;

  // Set for kinds E and T. For T it is derived from `to`.
  std::function<bool(const Value&, const Value&)> consistency;

  Transform to_fn, from_fn;
  DomainDescriptor domain_a, domain_b;
  std::optional<UpdatePreorder> preorder;

  // Harness metadata for complement-based frameworks.
  std::optional<Value> init_complement;
  std::optional<DomainDescriptor> complement_domain;
  std::optional<std::pair<Value, Value>> init_states;  // edit lenses start here

  // Sameness links between consistent states (delta lenses).
  std::function<SamenessRelation(const Value&, const Value&)> correspond;

  Symmetry symmetry() const;
  UpdateRepr input_update(Direction d) const { return d == Direction::To ? upd_to : upd_from; }
  UpdateRepr output_update(Direction d) const { return d == Direction::To ? upd_from : upd_to; }
  TraceRepr input_trace(Direction d) const { return d == Direction::To ? trace_from : trace_to; }
  TraceRepr output_trace(Direction d) const { return d == Direction::To ? trace_to : trace_from; }
  const DomainDescriptor& input_domain(Direction d) const { return d == Direction::To ? domain_a : domain_b; }
  const DomainDescriptor& output_domain(Direction d) const { return d == Direction::To ? domain_b : domain_a; }
};

// Checks the input representations, then runs the transformation. Contract
// violations surface as Undefined, never as exceptions.
Outcome to(const Bx& bx, const Update& u, const Traceability& t);
Outcome from(const Bx& bx, const Update& u, const Traceability& t);
Outcome run(const Bx& bx, Direction d, const Update& u, const Traceability& t);

// ---------------------------------------------------------------------------
// Adapters

using StateFn = std::function<Partial<Value>(const Value&)>;
using StateFn2 = std::function<Partial<Value>(const Value&, const Value&)>;
using StateFn3 = std::function<Partial<Value>(const Value&, const Value&, const Value&)>;
using Relation = std::function<bool(const Value&, const Value&)>;

// to : A -> B, from : B -> A.
Bx make_mapping(std::string name, StateFn to_fn, StateFn from_fn, DomainDescriptor a, DomainDescriptor b);

// to = get : A -> B, from = put : B x A -> A.
Bx make_lens(std::string name, StateFn get, StateFn2 put, DomainDescriptor a, DomainDescriptor b);

// to : A x B -> B, from : B x A -> A.
Bx make_maintainer(std::string name, Relation r, StateFn2 to_fn, StateFn2 from_fn, DomainDescriptor a,
                   DomainDescriptor b);

// to : (A x A) x B -> B, from : (B x B) x A -> A; arguments are (pre, post, other).
Bx make_trigonal(std::string name, Relation r, StateFn3 to_fn, StateFn3 from_fn, DomainDescriptor a,
                 DomainDescriptor b);

// to : A x C -> B x C, from : B x C -> A x C.
using ComplementFn = std::function<Partial<std::pair<Value, Value>>(const Value&, const Value&)>;
Bx make_symmetric_lens(std::string name, ComplementFn to_fn, ComplementFn from_fn, Value init_complement,
                       DomainDescriptor complement, DomainDescriptor a, DomainDescriptor b);

// to : O(A)* x C -> O(B)* x C and back.
using EditFn = std::function<Partial<std::pair<EditScript, Value>>(const EditScript&, const Value&)>;
Bx make_edit_lens(std::string name, EditFn to_fn, EditFn from_fn, Value init_complement,
                  DomainDescriptor complement, std::pair<Value, Value> init_states, DomainDescriptor a,
                  DomainDescriptor b);

// to : (A x A x D(A,A)) x (B x A x D(B,A)) -> (B x B x D(B,B)) x (A x B x D(A,B)).
using DeltaFn = std::function<Outcome(const DeltaU&, const DeltaTraceT&)>;
Bx make_sdelta_lens(std::string name, Relation r, std::function<SamenessRelation(const Value&, const Value&)> correspond,
                    DeltaFn to_fn, DeltaFn from_fn, DomainDescriptor a, DomainDescriptor b);

}  // namespace bx
