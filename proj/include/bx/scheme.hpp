#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bx/value.hpp"

namespace bx {

// Update representations.
enum class UpdateRepr {
  PostState,   // S
  BothStates,  // SS
  Delta,       // D
  Edits,       // E
  StateEdits,  // SE
  Opaque,      // F
};

// Traceability representations.
enum class TraceRepr { None, State, Complement, Delta };

const char* glyph(UpdateRepr r);
const char* glyph(TraceRepr r);

enum class Direction { To, From };
inline Direction opposite(Direction d) { return d == Direction::To ? Direction::From : Direction::To; }
const char* to_string(Direction d);

// ---------------------------------------------------------------------------
// Edit operations

struct EditOp {
  enum class Kind { Insert, Delete, ReplaceAt, SetField, ReplaceRoot };
  Kind kind = Kind::ReplaceRoot;
  std::size_t index = 0;  // Insert, Delete, ReplaceAt
  std::string name;       // SetField
  Value old_value;        // removed / old
  Value new_value;        // inserted / new

  static EditOp insert(std::size_t i, Value v) { return {Kind::Insert, i, {}, Value{}, std::move(v)}; }
  static EditOp erase(std::size_t i, Value removed) { return {Kind::Delete, i, {}, std::move(removed), Value{}}; }
  static EditOp replace_at(std::size_t i, Value o, Value n) {
    return {Kind::ReplaceAt, i, {}, std::move(o), std::move(n)};
  }
  static EditOp set_field(std::string f, Value o, Value n) {
    return {Kind::SetField, 0, std::move(f), std::move(o), std::move(n)};
  }
  static EditOp replace_root(Value o, Value n) { return {Kind::ReplaceRoot, 0, {}, std::move(o), std::move(n)}; }

  friend bool operator==(const EditOp&, const EditOp&) = default;
  friend auto operator<=>(const EditOp&, const EditOp&) = default;
};

using EditScript = std::vector<EditOp>;

std::optional<Value> try_apply(const EditOp& op, const Value& v);
std::optional<Value> try_apply(const EditScript& ops, const Value& v);
// Throws InvalidEdit when an op's precondition fails.
Value apply(const EditScript& ops, const Value& v);
EditOp invert(const EditOp& op);
EditScript invert(const EditScript& ops);

// ---------------------------------------------------------------------------
// Updates

struct PostStateU { Value post; friend bool operator==(const PostStateU&, const PostStateU&) = default; };
struct BothStatesU { Value pre, post; friend bool operator==(const BothStatesU&, const BothStatesU&) = default; };
struct DeltaU {
  Value pre, post;
  SamenessRelation same;
  friend bool operator==(const DeltaU&, const DeltaU&) = default;
};
struct EditsU { EditScript ops; friend bool operator==(const EditsU&, const EditsU&) = default; };
struct StateEditsU {
  Value pre;
  EditScript ops;
  friend bool operator==(const StateEditsU&, const StateEditsU&) = default;
};
struct OpaqueU { std::string tag; friend bool operator==(const OpaqueU&, const OpaqueU&) = default; };

class Update {
 public:
  using Rep = std::variant<PostStateU, BothStatesU, DeltaU, EditsU, StateEditsU, OpaqueU>;

  static Update post_state(Value post);
  static Update both_states(Value pre, Value post);
  // Throws ReprMismatch if `same` references a path invalid in pre or post.
  static Update delta(Value pre, Value post, SamenessRelation same);
  static Update edits(EditScript ops);
  // Throws InvalidEdit if the ops do not apply to pre in order.
  static Update state_edits(Value pre, EditScript ops);
  static Update opaque(std::string tag);

  UpdateRepr repr() const { return static_cast<UpdateRepr>(rep_.index()); }
  const Rep& rep() const { return rep_; }
  template <class T> const T& as() const { return std::get<T>(rep_); }

  friend bool operator==(const Update&, const Update&) = default;

 private:
  explicit Update(Rep r) : rep_(std::move(r)) {}
  Rep rep_;
};

// ---------------------------------------------------------------------------
// Traceabilities

struct NoTraceT { friend bool operator==(const NoTraceT&, const NoTraceT&) = default; };
struct StateTraceT { Value state; friend bool operator==(const StateTraceT&, const StateTraceT&) = default; };
struct ComplementTraceT { Value payload; friend bool operator==(const ComplementTraceT&, const ComplementTraceT&) = default; };
struct DeltaTraceT {
  Value src, tgt;
  SamenessRelation same;
  friend bool operator==(const DeltaTraceT&, const DeltaTraceT&) = default;
};

class Traceability {
 public:
  using Rep = std::variant<NoTraceT, StateTraceT, ComplementTraceT, DeltaTraceT>;

  Traceability() : rep_(NoTraceT{}) {}
  static Traceability none() { return Traceability(); }
  static Traceability state(Value v);
  static Traceability complement(Value c);
  // Throws ReprMismatch if `same` references an invalid path.
  static Traceability delta(Value src, Value tgt, SamenessRelation same);

  TraceRepr repr() const { return static_cast<TraceRepr>(rep_.index()); }
  const Rep& rep() const { return rep_; }
  template <class T> const T& as() const { return std::get<T>(rep_); }

  friend bool operator==(const Traceability&, const Traceability&) = default;

 private:
  explicit Traceability(Rep r) : rep_(std::move(r)) {}
  Rep rep_;
};

// ---------------------------------------------------------------------------
// Scheme operators. All throw bx::Error on contract violations.

Value delta_of(const Update& u);  // pre-state
Value rho_of(const Update& u);    // post-state
std::optional<Value> try_delta_of(const Update& u);
std::optional<Value> try_rho_of(const Update& u);

Value src_of(const Traceability& t);
Value tgt_of(const Traceability& t);
std::optional<Value> try_src_of(const Traceability& t);
std::optional<Value> try_tgt_of(const Traceability& t);

Update identity_update(const Value& a, UpdateRepr repr);
// u1 first, then u2.
Update compose_updates(const Update& u2, const Update& u1);
Update invert_update(const Update& u);
Traceability invert_trace(const Traceability& t);
Traceability compose_trace_update(const Update& b, const Traceability& r);

// ---------------------------------------------------------------------------
// Incidence conditions

struct IncidenceCondition {
  enum class Status { Holds, Fails, Skipped };
  std::string name;  // e.g. "delta(a) = rho(s)"
  Status status = Status::Skipped;
};

struct IncidenceVerdict {
  std::vector<IncidenceCondition> conditions;
  bool holds() const;
  std::size_t checked() const;
  std::optional<std::string> first_failure() const;
};

// For Direction::To the call is to(u_in, t_in) = (u_out, t_out) with u_in on
// A and t_in : T<-(A,B). For Direction::From the roles are dual.
IncidenceVerdict check_incidence(const Update& u_in, const Traceability& t_in, const Update& u_out,
                                 const Traceability& t_out, Direction direction);

// ---------------------------------------------------------------------------
// Update preorder

enum class Order { LessOrEqual, Greater };

struct UpdatePreorder {
  std::function<Order(const Update&, const Update&)> compare;
  bool leq(const Update& a, const Update& b) const { return compare(a, b) == Order::LessOrEqual; }
};

// Size measure behind the default preorder: changed post-state paths for
// SS/D, op count for E/SE, 0 for S.
std::size_t update_size(const Update& u);
UpdatePreorder default_preorder(UpdateRepr repr);

}  // namespace bx
