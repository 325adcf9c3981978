#pragma once

// Enumeration machinery shared by the law checkers.
//
// A World is the state of both sides at some moment: the A and B values,
// the complement, and the sameness link between A and B. Input traces are
// always rebuilt from a world, so a reversed trace (r°, s°) is simply the
// opposite direction's input trace in the same world.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bx/laws.hpp"

namespace bx::detail {

struct World {
  std::optional<Value> a, b, c;
  std::optional<SamenessRelation> link;  // A -> B

  friend bool operator==(const World&, const World&) = default;
  friend auto operator<=>(const World&, const World&) = default;
};

// An input update together with the post-state it leads to.
struct Candidate {
  Update update;
  Value post;
};

enum class Match { Strict, Weak, Different };

class Harness {
 public:
  Harness(const Bx& bx, Direction d, const LawSuiteConfig& config);

  const Bx& bx() const { return bx_; }
  Direction dir() const { return d_; }
  Direction opp() const { return opposite(d_); }
  const LawSuiteConfig& config() const { return config_; }

  // Directions whose input is a bare post-state with no trace know nothing
  // about pre-states. There, each world is a single input value and the
  // pre-state is identified with the post-state.
  bool collapsed() const { return collapsed_; }

  std::optional<Value> in(const World& w) const { return d_ == Direction::To ? w.a : w.b; }
  std::optional<Value> out(const World& w) const { return d_ == Direction::To ? w.b : w.a; }
  World with(const World& w, std::optional<Value> in_state, std::optional<Value> out_state) const;

  Traceability input_trace(const World& w, Direction dir) const;
  World after(const World& w, Direction dir, const Update& u_in, const Applied& result) const;

  // Consistent starting worlds (collapsed: one per input value).
  const std::vector<World>& worlds() const { return worlds_; }
  // Pairs (in, out) in the relation, as worlds; used where the collapsed
  // mode needs a consistent pair anyway.
  std::vector<World> consistent_pairs() const;

  std::vector<Candidate> updates_from(const World& w, Direction dir, std::size_t depth) const;
  std::vector<Candidate> updates_from(const World& w) const { return updates_from(w, d_, config_.edit_depth); }

  // s ∈ R for the world's states (and complement, if it has one).
  bool member(const World& w) const;
  // Some output-side value is consistent with `in_state`.
  bool has_counterpart(const Value& in_state) const;
  std::vector<Value> counterparts(const Value& in_state) const;

  Outcome call(Direction dir, const Update& u, const Traceability& t) const { return run(bx_, dir, u, t); }

  Update null_update(const Value& x, UpdateRepr r) const;
  std::optional<Update> inverse(const Update& u, const std::optional<Value>& pre) const;
  static std::optional<Value> post_of(const Update& u, const std::optional<Value>& pre);

  Match compare(const Applied& actual, const Update& update, const Traceability& trace,
                const std::optional<Value>& pre) const;

  const std::vector<Value>& domain(Direction side_of) const;  // input domain of that direction

  // Shortest edit scripts from `pre` to every value reachable within the
  // configured depth.
  const std::map<Value, EditScript>& shortest_scripts(const Value& pre, Direction side_of) const;

 private:
  void build_worlds();
  void build_reachable();
  bool member_pair(const Value& in_state, const Value& out_state) const;

  const Bx& bx_;
  Direction d_;
  LawSuiteConfig config_;
  bool collapsed_ = false;
  std::vector<Value> as_, bs_;
  std::vector<World> worlds_;
  std::set<World> reachable_;
  std::set<std::pair<Value, Value>> reachable_pairs_;  // (a, b)
  mutable std::map<std::pair<Value, int>, std::map<Value, EditScript>> scripts_;
};

}  // namespace bx::detail
