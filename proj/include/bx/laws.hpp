#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bx/frameworks.hpp"

namespace bx {

enum class Law {
  Stability,
  Invertibility,
  Undoability,
  HistoryIgnorance,
  Correctness,
  Hippocraticness,
  LeastUpdate,
  Totality,
  Safety,
  Convergence,
};

inline constexpr Law kAllLaws[] = {Law::Stability,       Law::Invertibility, Law::Undoability, Law::HistoryIgnorance,
                                   Law::Correctness,     Law::Hippocraticness, Law::LeastUpdate, Law::Totality,
                                   Law::Safety,          Law::Convergence};

const char* to_string(Law law);
// Accepts the names printed by to_string; throws UnknownName otherwise.
Law parse_law(std::string_view name);

enum class VerdictKind { Holds, Fails, WeaklyHolds, NotExpressible, Vacuous };
const char* to_string(VerdictKind k);

// One call of a transformation, enough to replay it from the command line.
struct Invocation {
  Direction direction = Direction::To;
  Update update;
  Traceability trace;
};

struct Counterexample {
  std::vector<Invocation> steps;  // the last one produced `actual`
  std::string expected;
  std::string actual;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Vacuous;
  std::size_t cases = 0;
  std::string detail;  // weak variant, or why not expressible / vacuous
  std::optional<Counterexample> counterexample;

  static Verdict holds(std::size_t n) { return {VerdictKind::Holds, n, {}, {}}; }
  static Verdict weakly(std::size_t n, std::string variant) { return {VerdictKind::WeaklyHolds, n, std::move(variant), {}}; }
  static Verdict not_expressible(std::string why) { return {VerdictKind::NotExpressible, 0, std::move(why), {}}; }
  static Verdict vacuous(std::string why) { return {VerdictKind::Vacuous, 0, std::move(why), {}}; }
  static Verdict fails(std::size_t n, Counterexample cx) { return {VerdictKind::Fails, n, {}, std::move(cx)}; }
};

struct LawSuiteConfig {
  std::set<Law> laws{std::begin(kAllLaws), std::end(kAllLaws)};
  std::uint64_t cap = kDefaultEnumerationCap;
  // Report WeaklyHolds (instead of Fails) when only a weak form holds:
  // equality up to the normalizer or on post-states, weak correctness.
  bool weak_variants = true;
  std::function<Value(const Value&)> normalizer;
  std::size_t edit_depth = 2;  // longest edit script drawn as an update
};

struct LawReport {
  std::string bx_name;
  std::map<std::pair<Law, Direction>, Verdict> verdicts;
  // Edit lenses: the literal reading of hippocraticness, reported beside the
  // strengthened one kept in `verdicts`.
  std::map<Direction, Verdict> literal_hippocraticness;
  std::vector<std::string> errors;  // meta-theorem violations

  const Verdict* find(Law law, Direction d) const;
};

Verdict check_stability(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_invertibility(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_undoability(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_history_ignorance(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_correctness(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_hippocraticness(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_hippocraticness_literal(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_least_update(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_totality(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_safety(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_convergence(const Bx& bx, Direction d, const LawSuiteConfig& config = {});
Verdict check_law(Law law, const Bx& bx, Direction d, const LawSuiteConfig& config = {});

LawReport run_suite(const Bx& bx, const LawSuiteConfig& config = {});

// Every input the checkers feed to `bx` in direction d.
std::vector<Invocation> enumerate_invocations(const Bx& bx, Direction d, const LawSuiteConfig& config = {});

}  // namespace bx
