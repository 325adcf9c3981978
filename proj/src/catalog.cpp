#include "bx/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "bx/text.hpp"

namespace bx {

SchemeSignature framework_signature(Framework f) {
  using U = UpdateRepr;
  using T = TraceRepr;
  using K = ConsistencyKind;
  constexpr auto Sym = Symmetry::Symmetric, Asym = Symmetry::Asymmetric;
  switch (f) {
    case Framework::Mapping: return {Sym, U::PostState, U::PostState, T::None, T::None, K::Transformation};
    case Framework::Lens: return {Asym, U::PostState, U::PostState, T::State, T::None, K::Transformation};
    case Framework::Maintainer: return {Sym, U::PostState, U::PostState, T::State, T::State, K::Explicit};
    case Framework::Trigonal: return {Sym, U::BothStates, U::BothStates, T::State, T::State, K::Explicit};
    case Framework::SymmetricLens: return {Sym, U::PostState, U::PostState, T::Complement, T::Complement, K::Implicit};
    case Framework::EditLens: return {Sym, U::Edits, U::Edits, T::Complement, T::Complement, K::Implicit};
    case Framework::SdeltaLens: return {Sym, U::Delta, U::Delta, T::Delta, T::Delta, K::Explicit};
  }
  return {};
}

namespace {

using D = DomainDescriptor;
using VK = VerdictKind;
constexpr auto To = Direction::To;
constexpr auto Fr = Direction::From;

using Expectations = std::map<std::pair<Law, Direction>, VerdictKind>;

void expect_both(Expectations& e, Law law, VerdictKind k) {
  e[{law, To}] = k;
  e[{law, Fr}] = k;
}

// --- mappings --------------------------------------------------------------

CatalogEntry uppercase_mapping() {
  auto up = [](const Value& v) -> Partial<Value> {
    return S(std::string(1, static_cast<char>(std::toupper(v.as_str()[0]))));
  };
  auto down = [](const Value& v) -> Partial<Value> {
    return S(std::string(1, static_cast<char>(std::tolower(v.as_str()[0]))));
  };
  CatalogEntry e{make_mapping("uppercase-mapping", up, down, D::atoms({S("a"), S("b")}), D::atoms({S("A"), S("B")})),
                 Framework::Mapping, framework_signature(Framework::Mapping), {}};
  expect_both(e.expected_laws, Law::Invertibility, VK::Holds);
  expect_both(e.expected_laws, Law::Stability, VK::NotExpressible);
  expect_both(e.expected_laws, Law::Undoability, VK::NotExpressible);
  expect_both(e.expected_laws, Law::Hippocraticness, VK::NotExpressible);
  expect_both(e.expected_laws, Law::HistoryIgnorance, VK::Holds);
  return e;
}

CatalogEntry embed_mapping() {
  auto up = [](const Value& v) -> Partial<Value> {
    return S(std::string(1, static_cast<char>(std::toupper(v.as_str()[0]))));
  };
  auto down = [](const Value& v) -> Partial<Value> {
    if (v.as_str() == "C") return undefined("no source for C");
    return S(std::string(1, static_cast<char>(std::tolower(v.as_str()[0]))));
  };
  CatalogEntry e{make_mapping("embed-mapping", up, down, D::atoms({S("a"), S("b")}),
                              D::atoms({S("A"), S("B"), S("C")})),
                 Framework::Mapping, framework_signature(Framework::Mapping), {}};
  e.expected_laws[{Law::Totality, Fr}] = VK::Fails;
  e.expected_laws[{Law::Safety, Fr}] = VK::Holds;
  e.expected_laws[{Law::Totality, To}] = VK::Holds;
  return e;
}

// to is the identity, from flips the bit: every round trip moves.
CatalogEntry oscillating_toy() {
  auto id = [](const Value& v) -> Partial<Value> { return v; };
  auto flip = [](const Value& v) -> Partial<Value> { return I(1 - v.as_int()); };
  CatalogEntry e{make_mapping("oscillating-toy", id, flip, D::ints(0, 1), D::ints(0, 1)), Framework::Mapping,
                 framework_signature(Framework::Mapping), {}};
  expect_both(e.expected_laws, Law::Convergence, VK::Fails);
  return e;
}

// --- lenses ----------------------------------------------------------------

D small_pairs() { return D::pair(D::ints(0, 2), D::ints(0, 2)); }

CatalogEntry fst_lens() {
  auto get = [](const Value& a) -> Partial<Value> { return a.left(); };
  auto put = [](const Value& b, const Value& a) -> Partial<Value> { return P(b, a.right()); };
  // Digits, so the usual worked example (2, 5) is in range.
  const D digit = D::ints(0, 9);
  CatalogEntry e{make_lens("fst-lens", get, put, D::pair(digit, digit), digit), Framework::Lens,
                 framework_signature(Framework::Lens), {}};
  for (Law l : {Law::Stability, Law::Invertibility, Law::HistoryIgnorance, Law::Undoability, Law::Totality,
                Law::Convergence})
    expect_both(e.expected_laws, l, VK::Holds);
  return e;
}

CatalogEntry const_lens() {
  auto get = [](const Value&) -> Partial<Value> { return I(0); };
  auto put = [](const Value& b, const Value& a) -> Partial<Value> {
    if (b.as_int() != 0) return undefined("put is only defined for view 0");
    return a;
  };
  CatalogEntry e{make_lens("const-lens", get, put, D::ints(0, 2), D::ints(0, 1)), Framework::Lens,
                 framework_signature(Framework::Lens), {}};
  e.expected_laws[{Law::Totality, Fr}] = VK::Fails;
  e.expected_laws[{Law::Totality, To}] = VK::Holds;
  return e;
}

CatalogEntry broken_put_lens() {
  auto get = [](const Value& a) -> Partial<Value> { return a.left(); };
  auto put = [](const Value&, const Value& a) -> Partial<Value> { return a; };
  CatalogEntry e{make_lens("broken-put-lens", get, put, small_pairs(), D::ints(0, 2)), Framework::Lens,
                 framework_signature(Framework::Lens), {}};
  e.expected_laws[{Law::Invertibility, Fr}] = VK::Fails;
  e.expected_laws[{Law::Invertibility, To}] = VK::Holds;
  return e;
}

// --- maintainers -----------------------------------------------------------
//
// A = {k, u}, B = {k, v}; consistent when the keys agree. v also ranges over
// 9 so that a view value without any A-side twin exists.

D key_a() { return D::rec({{"k", D::ints(1, 2)}, {"u", D::ints(7, 8)}}); }
D key_b() { return D::rec({{"k", D::ints(1, 2)}, {"v", D::ints(7, 9)}}); }

bool same_key(const Value& a, const Value& b) { return *a.field("k") == *b.field("k"); }

Partial<Value> copy_key(const Value& from, const Value& into) {
  return into.with_field("k", *from.field("k"));
}

CatalogEntry maintainer(std::string name, StateFn2 from_fn) {
  return CatalogEntry{make_maintainer(std::move(name), same_key, copy_key, std::move(from_fn), key_a(), key_b()),
                      Framework::Maintainer, framework_signature(Framework::Maintainer), {}};
}

CatalogEntry key_maintainer() {
  auto e = maintainer("key-maintainer", copy_key);
  expect_both(e.expected_laws, Law::Correctness, VK::Holds);
  expect_both(e.expected_laws, Law::Hippocraticness, VK::Holds);
  expect_both(e.expected_laws, Law::Stability, VK::NotExpressible);
  expect_both(e.expected_laws, Law::LeastUpdate, VK::Holds);
  return e;
}

// Always answers with u = 7: consistent, but touches consistent inputs.
CatalogEntry constant_repair_maintainer() {
  auto e = maintainer("constant-repair-maintainer", [](const Value& b, const Value&) -> Partial<Value> {
    return R({{"k", *b.field("k")}, {"u", I(7)}});
  });
  e.expected_laws[{Law::Correctness, Fr}] = VK::Holds;
  e.expected_laws[{Law::Hippocraticness, Fr}] = VK::Fails;
  return e;
}

// Resets u whenever the key moves, so the result depends on the stale
// A-side state more than it needs to.
CatalogEntry reset_maintainer() {
  auto e = maintainer("reset-maintainer", [](const Value& b, const Value& a0) -> Partial<Value> {
    if (same_key(a0, b)) return a0;
    return R({{"k", *b.field("k")}, {"u", I(7)}});
  });
  e.expected_laws[{Law::Hippocraticness, Fr}] = VK::Holds;
  e.expected_laws[{Law::LeastUpdate, Fr}] = VK::Fails;
  e.expected_laws[{Law::HistoryIgnorance, Fr}] = VK::Fails;
  return e;
}

CatalogEntry wrong_key_maintainer() {
  auto e = maintainer("wrong-key-maintainer", [](const Value& b, const Value& a0) -> Partial<Value> {
    return a0.with_field("k", I(3 - b.field("k")->as_int()));
  });
  e.expected_laws[{Law::Correctness, Fr}] = VK::Fails;
  return e;
}

// --- trigonal --------------------------------------------------------------

// Only the fields the update changed are carried over.
Partial<Value> propagate_changes(const Value& pre, const Value& post, const Value& other, const char* mine,
                                 const char* theirs) {
  Value out = other;
  if (*pre.field("k") != *post.field("k")) out = out.with_field("k", *post.field("k"));
  if (*pre.field(mine) != *post.field(mine)) out = out.with_field(theirs, *post.field(mine));
  return out;
}

CatalogEntry key_trigonal() {
  auto r = [](const Value& a, const Value& b) { return same_key(a, b) && *a.field("u") == *b.field("v"); };
  auto to = [](const Value& pre, const Value& post, const Value& b) { return propagate_changes(pre, post, b, "u", "v"); };
  auto from = [](const Value& pre, const Value& post, const Value& a) {
    return propagate_changes(pre, post, a, "v", "u");
  };
  CatalogEntry e{make_trigonal("key-trigonal", r, to, from, key_a(),
                               D::rec({{"k", D::ints(1, 2)}, {"v", D::ints(7, 8)}})),
                 Framework::Trigonal, framework_signature(Framework::Trigonal), {}};
  for (Law l : {Law::Stability, Law::Invertibility, Law::Undoability, Law::HistoryIgnorance, Law::Correctness,
                Law::Hippocraticness})
    expect_both(e.expected_laws, l, VK::Holds);
  return e;
}

// --- symmetric lens ----------------------------------------------------------

// A = (x, y), B = (x, z); the complement keeps the hidden halves (y, z).
// This is one choice of complement among many.
CatalogEntry pair_sync() {
  auto to = [](const Value& a, const Value& c) -> Partial<std::pair<Value, Value>> {
    return std::pair{P(a.left(), c.right()), P(a.right(), c.right())};
  };
  auto from = [](const Value& b, const Value& c) -> Partial<std::pair<Value, Value>> {
    return std::pair{P(b.left(), c.left()), P(c.left(), b.right())};
  };
  const D bit = D::ints(0, 1);
  CatalogEntry e{make_symmetric_lens("pair-sync", to, from, P(I(0), I(0)), D::pair(bit, bit), D::pair(bit, bit),
                                     D::pair(bit, bit)),
                 Framework::SymmetricLens, framework_signature(Framework::SymmetricLens), {}};
  expect_both(e.expected_laws, Law::Convergence, VK::Holds);
  expect_both(e.expected_laws, Law::Stability, VK::Holds);
  return e;
}

// --- edit lens ---------------------------------------------------------------

// A is a list of (x, y), B the list of x; the complement is the list of y.
using EditResult = Partial<std::pair<EditScript, Value>>;

std::optional<Value> hidden_at(const Value& c, std::size_t i) {
  if (i >= c.elements().size()) return std::nullopt;
  return c.elements()[i];
}

Value insert_at(const Value& seq, std::size_t i, Value v) {
  auto xs = seq.elements();
  xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
  return L(std::move(xs));
}

Value erase_at(const Value& seq, std::size_t i) {
  auto xs = seq.elements();
  xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
  return L(std::move(xs));
}

EditResult list_to(const EditScript& ops, const Value& c0) {
  EditScript out;
  Value c = c0;
  for (const auto& op : ops) {
    const std::size_t i = op.index;
    switch (op.kind) {
      case EditOp::Kind::Insert:
        if (i > c.elements().size() || !op.new_value.is_pair()) return undefined("insert out of range");
        out.push_back(EditOp::insert(i, op.new_value.left()));
        c = insert_at(c, i, op.new_value.right());
        break;
      case EditOp::Kind::Delete: {
        const auto y = hidden_at(c, i);
        if (!y || !op.old_value.is_pair() || op.old_value.right() != *y) return undefined("delete out of range");
        out.push_back(EditOp::erase(i, op.old_value.left()));
        c = erase_at(c, i);
        break;
      }
      case EditOp::Kind::ReplaceAt: {
        const auto y = hidden_at(c, i);
        if (!y || !op.old_value.is_pair() || !op.new_value.is_pair() || op.old_value.right() != *y)
          return undefined("replace out of range");
        if (op.old_value.left() != op.new_value.left())
          out.push_back(EditOp::replace_at(i, op.old_value.left(), op.new_value.left()));
        c = c.with_element(i, op.new_value.right());
        break;
      }
      default: return undefined("untranslatable edit " + render_op(op));
    }
  }
  return std::pair{out, c};
}

EditResult list_from(const EditScript& ops, const Value& c0) {
  EditScript out;
  Value c = c0;
  for (const auto& op : ops) {
    const std::size_t i = op.index;
    switch (op.kind) {
      case EditOp::Kind::Insert:
        if (i > c.elements().size()) return undefined("insert out of range");
        out.push_back(EditOp::insert(i, P(op.new_value, I(0))));
        c = insert_at(c, i, I(0));
        break;
      case EditOp::Kind::Delete: {
        const auto y = hidden_at(c, i);
        if (!y) return undefined("delete out of range");
        out.push_back(EditOp::erase(i, P(op.old_value, *y)));
        c = erase_at(c, i);
        break;
      }
      case EditOp::Kind::ReplaceAt: {
        const auto y = hidden_at(c, i);
        if (!y) return undefined("replace out of range");
        out.push_back(EditOp::replace_at(i, P(op.old_value, *y), P(op.new_value, *y)));
        break;
      }
      default: return undefined("untranslatable edit " + render_op(op));
    }
  }
  return std::pair{out, c};
}

CatalogEntry list_edit_lens() {
  CatalogEntry e{make_list_edit_lens(2), Framework::EditLens, framework_signature(Framework::EditLens), {}};
  expect_both(e.expected_laws, Law::Stability, VK::Holds);
  expect_both(e.expected_laws, Law::Convergence, VK::Holds);
  return e;
}

// --- symmetric delta lens ----------------------------------------------------

// {x, y} against {x, z}: the shared field x is kept equal and linked.
CatalogEntry rename_sync() {
  auto r = [](const Value& a, const Value& b) { return *a.field("x") == *b.field("x"); };
  auto link = [](const Value&, const Value&) {
    return SamenessRelation({{Path{Step::go_field("x")}, Path{Step::go_field("x")}}});
  };
  // Carries x across. If the update does not keep x the same, neither does
  // the propagated one; the result trace is always the canonical link.
  auto carry = [link](bool forward) -> DeltaFn {
    return [link, forward](const DeltaU& x, const DeltaTraceT& tr) -> Outcome {
      const Path px{Step::go_field("x")};
      const Value& other0 = tr.src;
      const Value other1 = other0.with_field("x", *x.post.field("x"));
      const auto& in_links = x.same.links();
      const bool kept = std::find(in_links.begin(), in_links.end(), std::pair{px, px}) != in_links.end();
      std::vector<SamenessRelation::Link> out_links;
      const auto moved = diff(other0, other1);
      for (const auto& l : moved.links()) {
        const bool touches_x = l.first.empty() || l.first.front() == px.front();
        if (kept || !touches_x) out_links.push_back(l);
      }
      const auto same = forward ? link(x.post, other1) : link(other1, x.post).inverse();
      return Applied{Update::delta(other0, other1, SamenessRelation(std::move(out_links))),
                     Traceability::delta(x.post, other1, same)};
    };
  };
  const D bit = D::ints(0, 1);
  CatalogEntry e{make_sdelta_lens("rename-sync", r, link, carry(true), carry(false),
                                  D::rec({{"x", bit}, {"y", bit}}), D::rec({{"x", bit}, {"z", bit}})),
                 Framework::SdeltaLens, framework_signature(Framework::SdeltaLens), {}};
  expect_both(e.expected_laws, Law::Stability, VK::Holds);
  expect_both(e.expected_laws, Law::Correctness, VK::Holds);
  return e;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> v;
    v.push_back(uppercase_mapping());
    v.push_back(embed_mapping());
    v.push_back(oscillating_toy());
    v.push_back(fst_lens());
    v.push_back(const_lens());
    v.push_back(broken_put_lens());
    v.push_back(key_maintainer());
    v.push_back(constant_repair_maintainer());
    v.push_back(reset_maintainer());
    v.push_back(wrong_key_maintainer());
    v.push_back(key_trigonal());
    v.push_back(pair_sync());
    v.push_back(list_edit_lens());
    v.push_back(rename_sync());
    return v;
  }();
  return all;
}

}  // namespace

Bx make_list_edit_lens(std::size_t max_len) {
  const D bit = D::ints(0, 1);
  return make_edit_lens("list-edit-lens", list_to, list_from, L({}), D::seq(bit, max_len), {L({}), L({})},
                        D::seq(D::pair(bit, bit), max_len), D::seq(bit, max_len));
}

const CatalogEntry& catalog(std::string_view name) {
  for (const auto& e : entries())
    if (e.bx.name == name) return e;
  throw Error(ErrorKind::UnknownName, "unknown bx: " + std::string(name));
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.bx.name);
  return names;
}

}  // namespace bx
