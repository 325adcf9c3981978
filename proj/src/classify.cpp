#include "bx/classify.hpp"

#include <algorithm>
#include <sstream>

namespace bx {

SchemeSignature classify(const Bx& bx) {
  return SchemeSignature{bx.symmetry(), bx.upd_to, bx.upd_from, bx.trace_to, bx.trace_from, bx.kind};
}

std::string render_signature(const SchemeSignature& s) {
  std::string out = glyph(s.symmetry);
  out += std::string(" | ") + glyph(s.upd_to) + "," + glyph(s.upd_from);
  out += std::string(" | ") + glyph(s.trace_to) + "," + glyph(s.trace_from);
  out += std::string(" | ") + glyph(s.kind);
  return out;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    parts.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

template <class E, std::size_t N>
E from_glyph(const std::string& g, const E (&all)[N], std::string_view text) {
  for (E e : all)
    if (g == glyph(e)) return e;
  throw Error(ErrorKind::ParseError, "parse error: bad signature component '" + g + "' in " + std::string(text));
}

constexpr UpdateRepr kUpdateReprs[] = {UpdateRepr::PostState, UpdateRepr::BothStates, UpdateRepr::Delta,
                                       UpdateRepr::Edits,     UpdateRepr::StateEdits, UpdateRepr::Opaque};
constexpr TraceRepr kTraceReprs[] = {TraceRepr::None, TraceRepr::State, TraceRepr::Complement, TraceRepr::Delta};
constexpr Symmetry kSymmetries[] = {Symmetry::Symmetric, Symmetry::Asymmetric};
constexpr ConsistencyKind kKinds[] = {ConsistencyKind::Explicit, ConsistencyKind::Transformation,
                                      ConsistencyKind::Implicit};

}  // namespace

SchemeSignature parse_signature(std::string_view text) {
  const auto cols = split(text, '|');
  if (cols.size() != 4) throw Error(ErrorKind::ParseError, "parse error: signature needs 4 columns");
  const auto u = split(cols[1], ','), t = split(cols[2], ',');
  if (u.size() != 2 || t.size() != 2) throw Error(ErrorKind::ParseError, "parse error: expected two representations");
  SchemeSignature s;
  s.symmetry = from_glyph(cols[0], kSymmetries, text);
  s.upd_to = from_glyph(u[0], kUpdateReprs, text);
  s.upd_from = from_glyph(u[1], kUpdateReprs, text);
  s.trace_to = from_glyph(t[0], kTraceReprs, text);
  s.trace_from = from_glyph(t[1], kTraceReprs, text);
  s.kind = from_glyph(cols[3], kKinds, text);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

enum class Mark { None, Weak, Strong };

Mark mark(const Verdict* v) {
  if (!v) return Mark::None;
  if (v->kind == VerdictKind::Holds) return Mark::Strong;
  if (v->kind == VerdictKind::WeaklyHolds) return Mark::Weak;
  return Mark::None;
}

bool failed(const Verdict* v) { return v && v->kind == VerdictKind::Fails; }

std::string arrows(Mark to, Mark from) {
  if (to != Mark::None && from != Mark::None)
    return to == Mark::Strong && from == Mark::Strong ? "<->" : "<~>";
  if (to != Mark::None) return to == Mark::Strong ? "->" : "~>";
  if (from != Mark::None) return from == Mark::Strong ? "<-" : "<~";
  return {};
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

}  // namespace

// A failure with nothing to show otherwise is marked `x`, keeping it apart
// from a blank (not expressible) cell.
std::string arrow_cell(const LawReport& r, Law law) {
  const auto* to = r.find(law, Direction::To);
  const auto* from = r.find(law, Direction::From);
  auto cell = arrows(mark(to), mark(from));
  if (cell.empty() && (failed(to) || failed(from))) cell = "x";
  return cell;
}

std::string totality_cell(const LawReport& r) {
  auto dir_mark = [&](Direction d) {
    const Mark total = mark(r.find(Law::Totality, d));
    if (total != Mark::None) return total;
    if (failed(r.find(Law::Totality, d)) && mark(r.find(Law::Safety, d)) != Mark::None) return Mark::Weak;
    return Mark::None;
  };
  auto cell = arrows(dir_mark(Direction::To), dir_mark(Direction::From));
  if (cell.empty() && (failed(r.find(Law::Totality, Direction::To)) || failed(r.find(Law::Totality, Direction::From))))
    cell = "x";
  return cell;
}

std::string render_report(const std::vector<ReportRow>& rows) {
  static const std::pair<const char*, Law> kColumns[] = {
      {"Stable", Law::Stability},         {"Invertible", Law::Invertibility}, {"Convergent", Law::Convergence},
      {"Undoable", Law::Undoability},     {"HistIgn", Law::HistoryIgnorance}, {"Correct", Law::Correctness},
      {"Hippocratic", Law::Hippocraticness}, {"LeastUpd", Law::LeastUpdate}};
  std::size_t name_w = 4;
  for (const auto& row : rows) name_w = std::max(name_w, row.name.size());

  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& sig, const std::vector<std::string>& laws, const std::string& name) {
    std::string s = pad(name, name_w);
    for (const auto& c : sig) s += "  " + pad(c, 3);
    s += "  |";
    for (std::size_t i = 0; i < laws.size(); ++i) {
      const std::size_t w = i < std::size(kColumns) ? std::string(kColumns[i].first).size() : 5;
      s += "  " + pad(laws[i], w);
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };

  std::vector<std::string> header_laws;
  for (const auto& [title, _] : kColumns) header_laws.push_back(title);
  header_laws.push_back("Total");
  line({"Sym", "U->", "U<-", "T->", "T<-", "R"}, header_laws, "Name");

  for (const auto& row : rows) {
    const auto& s = row.signature;
    std::vector<std::string> laws;
    for (const auto& [_, law] : kColumns) laws.push_back(arrow_cell(row.report, law));
    laws.push_back(totality_cell(row.report));
    line({glyph(s.symmetry), glyph(s.upd_to), glyph(s.upd_from), glyph(s.trace_to), glyph(s.trace_from), glyph(s.kind)},
         laws, row.name);
  }
  return out.str();
}

// ---------------------------------------------------------------------------

const char* to_string(Behaviour b) {
  switch (b) {
    case Behaviour::VeryWellBehaved: return "very-well-behaved";
    case Behaviour::WellBehaved: return "well-behaved";
    case Behaviour::NotWellBehaved: return "not-well-behaved";
  }
  return "?";
}

// Hippocraticness is the stronger form of stability and stands in for it
// where a null update cannot be written down.
Behaviour well_behaved(const Bx&, const LawReport& r) {
  auto holds = [&](Law l, Direction d) {
    const auto* v = r.find(l, d);
    return v && v->kind == VerdictKind::Holds;
  };
  auto inexpressible = [&](Law l, Direction d) {
    const auto* v = r.find(l, d);
    return v && v->kind == VerdictKind::NotExpressible;
  };
  bool stable = true, strictly_stable = true, correct = true, history_ignorant = true;
  for (Direction d : {Direction::To, Direction::From}) {
    const bool s = holds(Law::Stability, d);
    strictly_stable = strictly_stable && s;
    stable = stable && (s || (inexpressible(Law::Stability, d) && holds(Law::Hippocraticness, d)));
    correct = correct && holds(Law::Correctness, d);
    history_ignorant = history_ignorant && holds(Law::HistoryIgnorance, d);
  }
  if (!stable || !correct) return Behaviour::NotWellBehaved;
  return strictly_stable && history_ignorant ? Behaviour::VeryWellBehaved : Behaviour::WellBehaved;
}

Value report_value(const LawReport& report) {
  Fields laws;
  for (const auto& [key, verdict] : report.verdicts) {
    const auto& [law, d] = key;
    const Value* existing = nullptr;
    if (auto it = laws.find(to_string(law)); it != laws.end()) existing = &it->second;
    Fields dirs = existing ? existing->fields() : Fields{};
    dirs[to_string(d)] = S(to_string(verdict.kind));
    laws[to_string(law)] = R(std::move(dirs));
  }
  Fields top;
  top["bx"] = S(report.bx_name);
  top["laws"] = R(std::move(laws));
  std::vector<Value> errors;
  for (const auto& e : report.errors) errors.push_back(S(e));
  top["errors"] = L(std::move(errors));
  return R(std::move(top));
}

}  // namespace bx
