#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bx/error.hpp"

namespace bx {

class Value;

using Fields = std::map<std::string, Value, std::less<>>;

// Immutable tree value. Copies share structure.
class Value {
 public:
  enum class Kind { Int, Str, Pair, Seq, Rec };

  Value();  // AtomInt(0)

  static Value integer(std::int64_t v);
  static Value string(std::string s);
  static Value pair(Value left, Value right);
  static Value seq(std::vector<Value> elements);
  static Value rec(Fields fields);

  Kind kind() const;
  bool is_int() const { return kind() == Kind::Int; }
  bool is_str() const { return kind() == Kind::Str; }
  bool is_pair() const { return kind() == Kind::Pair; }
  bool is_seq() const { return kind() == Kind::Seq; }
  bool is_rec() const { return kind() == Kind::Rec; }

  std::int64_t as_int() const;
  const std::string& as_str() const;
  const Value& left() const;
  const Value& right() const;
  const std::vector<Value>& elements() const;
  const Fields& fields() const;

  // Rec field lookup; nullptr when absent or not a record.
  const Value* field(std::string_view name) const;

  // Functional updates; the receiver is unchanged.
  Value with_field(const std::string& name, Value v) const;
  Value with_element(std::size_t index, Value v) const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Value::Node {
  std::variant<std::int64_t, std::string, std::pair<Value, Value>, std::vector<Value>, Fields> data;
};

// Convenience constructors used heavily by tests and the catalog.
inline Value I(std::int64_t v) { return Value::integer(v); }
inline Value S(std::string s) { return Value::string(std::move(s)); }
inline Value P(Value l, Value r) { return Value::pair(std::move(l), std::move(r)); }
inline Value L(std::vector<Value> xs) { return Value::seq(std::move(xs)); }
inline Value R(Fields fs) { return Value::rec(std::move(fs)); }

// ---------------------------------------------------------------------------
// Paths

struct Step {
  enum class Kind { Left, Right, Index, Field };
  Kind kind = Kind::Left;
  std::size_t index = 0;
  std::string name;

  static Step go_left() { return {Kind::Left, 0, {}}; }
  static Step go_right() { return {Kind::Right, 0, {}}; }
  static Step go_index(std::size_t i) { return {Kind::Index, i, {}}; }
  static Step go_field(std::string n) { return {Kind::Field, 0, std::move(n)}; }

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

using Path = std::vector<Step>;

Path child(const Path& p, Step s);

// Throws Error{InvalidPath} whose detail is the index of the first step
// that fails to resolve.
const Value& select(const Value& v, const Path& path);
bool is_valid_path(const Value& v, const Path& path);

// Every valid path of `v` in pre-order, root first.
std::vector<Path> all_paths(const Value& v);

// ---------------------------------------------------------------------------
// Sameness relations: partial bijections between the paths of two values.

class SamenessRelation {
 public:
  using Link = std::pair<Path, Path>;

  SamenessRelation() = default;
  // Throws ReprMismatch if the links do not form a partial bijection.
  explicit SamenessRelation(std::vector<Link> links);

  const std::vector<Link>& links() const { return links_; }
  bool empty() const { return links_.empty(); }
  std::size_t size() const { return links_.size(); }

  bool contains(const Path& src, const Path& tgt) const;
  bool has_source(const Path& src) const;
  bool has_target(const Path& tgt) const;

  SamenessRelation inverse() const;
  // Diagrammatic composition: (p, q) in *this and (q, r) in next gives (p, r).
  SamenessRelation then(const SamenessRelation& next) const;

  bool valid_for(const Value& src, const Value& tgt) const;

  friend bool operator==(const SamenessRelation&, const SamenessRelation&) = default;
  friend auto operator<=>(const SamenessRelation&, const SamenessRelation&) = default;

 private:
  std::vector<Link> links_;  // sorted, unique
};

// Structural alignment of two values. Pairs align positionally, records by
// field name, sequences by a leftmost longest common subsequence of equal
// elements. A node is linked iff it equals its partner, in which case its
// whole subtree is linked.
SamenessRelation diff(const Value& pre, const Value& post);

// ---------------------------------------------------------------------------
// Finite domains

class DomainDescriptor {
 public:
  enum class Kind { Atoms, Pair, Seq, Rec };

  static DomainDescriptor atoms(std::vector<Value> alphabet);
  static DomainDescriptor ints(std::int64_t lo, std::int64_t hi);  // inclusive
  static DomainDescriptor pair(DomainDescriptor l, DomainDescriptor r);
  static DomainDescriptor seq(DomainDescriptor element, std::size_t max_len);
  static DomainDescriptor rec(std::map<std::string, DomainDescriptor> fields);

  Kind kind() const { return kind_; }
  const std::vector<Value>& alphabet() const { return alphabet_; }
  const DomainDescriptor& left() const { return children_.at(0); }
  const DomainDescriptor& right() const { return children_.at(1); }
  const DomainDescriptor& element() const { return children_.at(0); }
  std::size_t max_len() const { return max_len_; }
  const std::map<std::string, DomainDescriptor>& fields() const { return fields_; }

  // Saturates at UINT64_MAX.
  std::uint64_t cardinality() const;
  bool contains(const Value& v) const;

 private:
  Kind kind_ = Kind::Atoms;
  std::vector<Value> alphabet_;
  std::vector<DomainDescriptor> children_;
  std::size_t max_len_ = 0;
  std::map<std::string, DomainDescriptor> fields_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000;

// Throws Error{CapExceeded} (detail = cardinality, saturated) when the
// universe is larger than `cap`.
std::vector<Value> enumerate_values(const DomainDescriptor& domain,
                                    std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Text form

std::string render_value(const Value& v);
Value parse_value(std::string_view text);

std::string render_path(const Path& p);
std::string render_relation(const SamenessRelation& r);

}  // namespace bx
