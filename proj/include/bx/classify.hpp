#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bx/laws.hpp"

namespace bx {

struct SchemeSignature {
  Symmetry symmetry = Symmetry::Symmetric;
  UpdateRepr upd_to = UpdateRepr::PostState, upd_from = UpdateRepr::PostState;
  TraceRepr trace_to = TraceRepr::None, trace_from = TraceRepr::None;
  ConsistencyKind kind = ConsistencyKind::Explicit;

  friend bool operator==(const SchemeSignature&, const SchemeSignature&) = default;
};

SchemeSignature classify(const Bx& bx);

// "A | S,S | S,N | T"
std::string render_signature(const SchemeSignature& s);
// Inverse of render_signature; throws ParseError.
SchemeSignature parse_signature(std::string_view text);

struct ReportRow {
  std::string name;
  SchemeSignature signature;
  LawReport report;
};

// Fixed-width table, one row per entry. A cell reads `->` when the law holds
// for `to`, `<-` for `from`, `<->` for both; `~>`, `<~`, `<~>` mark the weak
// variants; blank when not expressible or not checked.
std::string render_report(const std::vector<ReportRow>& rows);
std::string arrow_cell(const LawReport& report, Law law);
// Totality cell: weak when total fails but safety holds.
std::string totality_cell(const LawReport& report);

enum class Behaviour { VeryWellBehaved, WellBehaved, NotWellBehaved };
const char* to_string(Behaviour b);
Behaviour well_behaved(const Bx& bx, const LawReport& report);

// The report in the value grammar: a record keyed by law name, each a record
// {from = ..., to = ...} of verdict strings; counterexamples are omitted.
Value report_value(const LawReport& report);

}  // namespace bx
