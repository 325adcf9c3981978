// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "algebra.hpp"
#include "bx/catalog.hpp"
#include "bx/cli.hpp"

using namespace bx;

namespace {

constexpr auto To = Direction::To;
constexpr auto Fr = Direction::From;
using VK = VerdictKind;

// Collects the reasons a criterion failed; empty means it passed.
using Problems = std::vector<std::string>;

const LawReport& report(const std::string& name) {
  static std::map<std::string, LawReport> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_suite(catalog(name).bx)).first;
  return it->second;
}

VK kind(const std::string& name, Law law, Direction d) {
  const auto* v = report(name).find(law, d);
  return v ? v->kind : VK::Vacuous;
}

void expect(Problems& p, const std::string& name, Law law, Direction d, VK want) {
  const VK got = kind(name, law, d);
  if (got != want)
    p.push_back(name + " " + to_string(law) + " " + to_string(d) + ": " + to_string(got) + ", wanted " +
                to_string(want));
}

void expect_both(Problems& p, const std::string& name, Law law, VK want) {
  expect(p, name, law, To, want);
  expect(p, name, law, Fr, want);
}

Problems golden_verdicts() {
  Problems p;
  for (Law l : {Law::Stability, Law::Invertibility, Law::HistoryIgnorance, Law::Undoability, Law::Totality})
    expect_both(p, "fst-lens", l, VK::Holds);
  expect_both(p, "uppercase-mapping", Law::Invertibility, VK::Holds);
  for (Law l : {Law::Stability, Law::Undoability, Law::Hippocraticness})
    expect_both(p, "uppercase-mapping", l, VK::NotExpressible);
  expect_both(p, "uppercase-mapping", Law::HistoryIgnorance, VK::Holds);
  expect_both(p, "key-maintainer", Law::Correctness, VK::Holds);
  expect_both(p, "key-maintainer", Law::Hippocraticness, VK::Holds);
  expect_both(p, "key-maintainer", Law::Stability, VK::NotExpressible);
  for (Law l : {Law::Stability, Law::Invertibility, Law::Undoability, Law::HistoryIgnorance, Law::Correctness,
                Law::Hippocraticness})
    expect_both(p, "key-trigonal", l, VK::Holds);
  expect_both(p, "list-edit-lens", Law::Stability, VK::Holds);
  expect_both(p, "list-edit-lens", Law::Convergence, VK::Holds);
  // The catalog's own expectations, negative examples included.
  for (const auto& name : catalog_names())
    for (const auto& [key, want] : catalog(name).expected_laws) expect(p, name, key.first, key.second, want);
  return p;
}

Problems incidence() {
  Problems p;
  std::size_t checked = 0;
  for (const auto& name : catalog_names()) {
    const auto& bx = catalog(name).bx;
    for (Direction d : {To, Fr}) {
      for (const auto& inv : enumerate_invocations(bx, d)) {
        const Outcome o = run(bx, d, inv.update, inv.trace);
        const auto* r = applied(o);
        if (!r) continue;
        const auto v = check_incidence(inv.update, inv.trace, r->update, r->trace, d);
        checked += v.checked();
        if (!v.holds()) p.push_back(name + ": " + v.first_failure().value_or("?"));
      }
    }
  }
  if (checked == 0) p.push_back("no conditions checked");
  return p;
}

Problems degeneracy() {
  Problems p;
  std::size_t entries = 0;
  for (const auto& name : catalog_names()) {
    if (catalog(name).bx.kind != ConsistencyKind::Transformation) continue;
    ++entries;
    for (Direction d : {To, Fr}) {
      if (kind(name, Law::Correctness, d) != kind(name, Law::Invertibility, d))
        p.push_back(name + " " + to_string(d) + ": correctness differs from invertibility");
      if (kind(name, Law::Hippocraticness, d) != kind(name, Law::Stability, d))
        p.push_back(name + " " + to_string(d) + ": hippocraticness differs from stability");
    }
    for (const auto& e : report(name).errors) p.push_back(name + ": " + e);
  }
  if (entries == 0) p.push_back("no transformation-defined entries");
  return p;
}

Problems entailment() {
  Problems p;
  for (const auto& name : catalog_names()) {
    for (Direction d : {To, Fr}) {
      if (kind(name, Law::Stability, d) == VK::Holds && kind(name, Law::HistoryIgnorance, d) == VK::Holds &&
          kind(name, Law::Undoability, d) != VK::Holds)
        p.push_back(name + " " + to_string(d) + ": stable and history-ignorant but not undoable");
      if (kind(name, Law::LeastUpdate, d) == VK::Holds && kind(name, Law::Hippocraticness, d) == VK::Fails)
        p.push_back(name + " " + to_string(d) + ": least-update without hippocraticness");
    }
    for (const auto& e : report(name).errors) p.push_back(name + ": " + e);
  }
  return p;
}

Problems signatures() {
  Problems p;
  const std::pair<const char*, const char*> golden[] = {
      {"uppercase-mapping", "S | S,S | N,N | T"}, {"fst-lens", "A | S,S | S,N | T"},
      {"key-maintainer", "S | S,S | S,S | E"},    {"key-trigonal", "S | SS,SS | S,S | E"},
      {"pair-sync", "S | S,S | C,C | I"},         {"list-edit-lens", "S | E,E | C,C | I"},
      {"rename-sync", "S | D,D | D,D | E"},
  };
  for (const auto& [name, sig] : golden) {
    const auto got = render_signature(classify(catalog(name).bx));
    if (got != sig) p.push_back(std::string(name) + ": " + got);
  }
  return p;
}

Problems algebra() {
  using namespace bx::testing;
  Problems p;
  auto add = [&](const Violations& v) { p.insert(p.end(), v.begin(), v.end()); };
  const std::vector<std::pair<const char*, std::vector<Update>>> universes = {
      {"states", both_states_universe()},
      {"delta", delta_universe()},
      {"edits", edits_universe()},
      {"stateedits", state_edits_universe()},
  };
  for (const auto& [name, us] : universes) {
    if (us.size() < 100) p.push_back(std::string(name) + " universe has only " + std::to_string(us.size()));
    add(check_involution(us));
    add(check_seams(us));
    add(check_identities(us));
  }
  return p;
}

// Replays the last step of a counterexample through the command line and
// checks it reproduces the recorded result with the expected exit code.
void replay(Problems& p, const std::string& name, Law law, Direction d, int want_exit) {
  const auto* v = report(name).find(law, d);
  if (!v || v->kind != VK::Fails || !v->counterexample) {
    p.push_back(name + " " + to_string(law) + ": no failure recorded");
    return;
  }
  const auto& step = v->counterexample->steps.back();
  std::ostringstream out, err;
  const int code = run_cli({"apply", "--bx", name, "--dir", to_string(step.direction), "--update",
                            render_update(step.update), "--trace", render_trace(step.trace)},
                           out, err);
  if (code != want_exit) p.push_back(name + " " + to_string(law) + ": apply exited " + std::to_string(code));
  if (want_exit == kExitOk && out.str() != v->counterexample->actual + "\n")
    p.push_back(name + " " + to_string(law) + ": replay gave " + out.str());
}

Problems negatives() {
  Problems p;
  replay(p, "broken-put-lens", Law::Invertibility, Fr, kExitOk);
  replay(p, "constant-repair-maintainer", Law::Hippocraticness, Fr, kExitOk);
  replay(p, "oscillating-toy", Law::Convergence, To, kExitOk);
  replay(p, "embed-mapping", Law::Totality, Fr, kExitUndefined);
  expect(p, "embed-mapping", Law::Safety, Fr, VK::Holds);
  return p;
}

Problems serialization() {
  Problems p;
  std::size_t n = 0;
  auto value = [&](const Value& v) {
    ++n;
    if (parse_value(render_value(v)) != v) p.push_back("value " + render_value(v));
  };
  auto update = [&](const Update& u) {
    ++n;
    if (parse_update(render_update(u)) != u) p.push_back("update " + render_update(u));
  };
  auto trace = [&](const Traceability& t) {
    ++n;
    if (parse_trace(render_trace(t)) != t) p.push_back("trace " + render_trace(t));
  };
  for (const auto& name : catalog_names()) {
    const auto& bx = catalog(name).bx;
    for (const auto& v : enumerate_values(bx.domain_a)) value(v);
    for (const auto& v : enumerate_values(bx.domain_b)) value(v);
    if (bx.complement_domain)
      for (const auto& v : enumerate_values(*bx.complement_domain)) value(v);
    for (Direction d : {To, Fr}) {
      for (const auto& inv : enumerate_invocations(bx, d)) {
        update(inv.update);
        trace(inv.trace);
        const Outcome o = run(bx, d, inv.update, inv.trace);
        if (const auto* r = applied(o)) {
          update(r->update);
          trace(r->trace);
        }
      }
    }
  }
  if (n == 0) p.push_back("nothing enumerated");
  return p;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Problems()>> criteria[] = {
      {"golden law verdicts", golden_verdicts},
      {"incidence conditions", incidence},
      {"degeneracy for transformation-defined consistency", degeneracy},
      {"entailment between laws", entailment},
      {"scheme signatures", signatures},
      {"update algebra over >=100-element universes", algebra},
      {"negative examples replay through apply", negatives},
      {"round-trip serialization", serialization},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  int i = 0;
  for (const auto& [title, run] : criteria) {
    ++i;
    Problems p;
    try {
      p = run();
    } catch (const std::exception& e) {
      p.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (p.empty() ? "PASS" : "FAIL") << ' ' << i << ": " << title << '\n';
    for (std::size_t k = 0; k < p.size() && k < 5; ++k) std::cout << "    " << p[k] << '\n';
    failed += !p.empty();
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (8 - failed) << "/8 criteria passed in " << secs << "s\n";
  return failed == 0 ? 0 : 1;
}
