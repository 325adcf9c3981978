#include "bx/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bx/catalog.hpp"
#include "bx/text.hpp"

namespace bx {

namespace {

// Everything a subcommand may need; unset fields fall back to the config file.
struct CliConfig {
  std::optional<std::string> bx_name, direction, update, update_file, trace, trace_file, output, laws, format;
  std::optional<std::uint64_t> cap;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void fill_from_file(CliConfig& c, const std::string& path) {
  const Value v = parse_value(read_file(path));
  if (!v.is_rec()) throw UsageError("config must be a record");
  auto str = [&](const char* name, std::optional<std::string>& slot) {
    if (slot) return;
    if (const Value* f = v.field(name)) {
      if (!f->is_str()) throw UsageError(std::string("config field ") + name + " must be a string");
      slot = f->as_str();
    }
  };
  str("bx", c.bx_name);
  str("dir", c.direction);
  str("update", c.update);
  str("update-file", c.update_file);
  str("trace", c.trace);
  str("trace-file", c.trace_file);
  str("output", c.output);
  str("laws", c.laws);
  str("format", c.format);
  if (!c.cap) {
    if (const Value* f = v.field("cap")) {
      if (!f->is_int() || f->as_int() <= 0) throw UsageError("config field cap must be a positive integer");
      c.cap = static_cast<std::uint64_t>(f->as_int());
    }
  }
  for (const auto& [name, _] : v.fields()) {
    static const char* known[] = {"bx", "dir", "update", "update-file", "trace", "trace-file",
                                  "output", "laws", "format", "cap"};
    if (std::find(std::begin(known), std::end(known), name) == std::end(known))
      throw UsageError("unknown config field " + name);
  }
}

const CatalogEntry& entry(const CliConfig& c) {
  if (!c.bx_name) throw UsageError("--bx is required");
  return catalog(*c.bx_name);
}

Direction direction(const CliConfig& c) {
  if (!c.direction) throw UsageError("--dir is required");
  if (*c.direction == "to") return Direction::To;
  if (*c.direction == "from") return Direction::From;
  throw UsageError("--dir must be to or from");
}

LawSuiteConfig suite_config(const CliConfig& c) {
  LawSuiteConfig cfg;
  if (c.cap) cfg.cap = *c.cap;
  if (c.laws && *c.laws != "all") {
    cfg.laws.clear();
    std::stringstream s(*c.laws);
    for (std::string name; std::getline(s, name, ',');) cfg.laws.insert(parse_law(name));
  }
  return cfg;
}

bool value_format(const CliConfig& c) {
  if (!c.format || *c.format == "text") return false;
  if (*c.format == "value") return true;
  throw UsageError("--format must be text or value");
}

// ---------------------------------------------------------------------------

int cmd_apply(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const auto& e = entry(c);
  const Direction d = direction(c);
  if (c.update && c.update_file) throw UsageError("give --update or --update-file, not both");
  if (!c.update && !c.update_file) throw UsageError("--update is required");
  const std::string u_text = c.update ? *c.update : read_file(*c.update_file);
  const std::string t_text = c.trace ? *c.trace : c.trace_file ? read_file(*c.trace_file) : "none";

  // Well-formed text that violates a representation invariant is an input
  // the transformation is not defined on, not a usage error.
  std::optional<Update> u;
  std::optional<Traceability> t;
  try {
    u = parse_update(u_text);
    t = parse_trace(t_text);
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::ParseError) throw;
    err << "undefined (repr mismatch): " << ex.what() << '\n';
    return kExitUndefined;
  }

  const Outcome o = run(e.bx, d, *u, *t);
  if (const auto* bad = std::get_if<Undefined>(&o)) {
    err << "undefined: " << bad->reason << '\n';
    return kExitUndefined;
  }
  const auto& ok = std::get<Applied>(o);
  const std::string text = render_update(ok.update) + "\n" + render_trace(ok.trace) + "\n";
  out << text;
  if (c.output) {
    std::ofstream f(*c.output);
    if (!f) throw UsageError("cannot write " + *c.output);
    f << text;
  }
  return kExitOk;
}

Value counterexample_value(Law law, Direction d, const Counterexample& cx) {
  std::vector<Value> steps;
  for (const auto& s : cx.steps) {
    steps.push_back(R({{"dir", S(to_string(s.direction))},
                       {"update", S(render_update(s.update))},
                       {"trace", S(render_trace(s.trace))}}));
  }
  return R({{"law", S(to_string(law))},
            {"dir", S(to_string(d))},
            {"steps", L(std::move(steps))},
            {"expected", S(cx.expected)},
            {"actual", S(cx.actual)}});
}

void print_text(const LawReport& report, std::ostream& out) {
  out << report.bx_name << '\n';
  for (const auto& [key, v] : report.verdicts) {
    const auto& [law, d] = key;
    out << "  " << to_string(law) << ' ' << to_string(d) << ": " << to_string(v.kind);
    if (v.cases) out << " (" << v.cases << " cases)";
    if (!v.detail.empty()) out << " - " << v.detail;
    out << '\n';
    if (v.counterexample) {
      const auto& cx = *v.counterexample;
      for (std::size_t i = 0; i < cx.steps.size(); ++i) {
        const auto& s = cx.steps[i];
        out << "    step " << i + 1 << ": " << to_string(s.direction) << ' ' << render_update(s.update) << ' '
            << render_trace(s.trace) << '\n';
      }
      auto indent = [](const std::string& s) {
        std::string r;
        for (char ch : s) r += ch == '\n' ? std::string("\n              ") : std::string(1, ch);
        return r;
      };
      out << "    expected: " << indent(cx.expected) << '\n';
      out << "    actual:   " << indent(cx.actual) << '\n';
    }
  }
  for (const auto& [d, v] : report.literal_hippocraticness)
    out << "  hippocraticness " << to_string(d) << " (literal reading): " << to_string(v.kind) << '\n';
  for (const auto& e : report.errors) out << "  meta-theorem violated: " << e << '\n';
}

int cmd_check(const CliConfig& c, std::ostream& out) {
  const auto& e = entry(c);
  const auto report = run_suite(e.bx, suite_config(c));
  bool any_fail = !report.errors.empty();
  for (const auto& [_, v] : report.verdicts) any_fail = any_fail || v.kind == VerdictKind::Fails;

  if (value_format(c)) {
    Value v = report_value(report);
    std::vector<Value> cxs;
    for (const auto& [key, verdict] : report.verdicts)
      if (verdict.counterexample) cxs.push_back(counterexample_value(key.first, key.second, *verdict.counterexample));
    out << render_value(v.with_field("counterexamples", L(std::move(cxs)))) << '\n';
  } else {
    print_text(report, out);
  }
  return any_fail ? kExitLawFailure : kExitOk;
}

int cmd_classify(const CliConfig& c, std::ostream& out) {
  out << render_signature(classify(entry(c).bx)) << '\n';
  return kExitOk;
}

int cmd_report(const CliConfig& c, std::ostream& out) {
  const auto cfg = suite_config(c);
  std::vector<ReportRow> rows;
  for (const auto& name : catalog_names()) {
    const auto& e = catalog(name);
    rows.push_back({name, classify(e.bx), run_suite(e.bx, cfg)});
  }
  out << render_report(rows);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bidirectional transformation toolkit", "bxkit"};
  app.require_subcommand(1, 1);

  CliConfig c;
  std::string config_file;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "record of option defaults");
    sub->add_option("--bx", c.bx_name, "catalog name");
  };

  auto* apply = app.add_subcommand("apply", "run one transformation");
  common(apply);
  apply->add_option("--dir", c.direction, "to or from");
  apply->add_option("--update", c.update, "input update");
  apply->add_option("--update-file", c.update_file, "file holding the input update");
  apply->add_option("--trace", c.trace, "input trace (default none)");
  apply->add_option("--trace-file", c.trace_file, "file holding the input trace");
  apply->add_option("--output", c.output, "also write the result here");

  auto* check = app.add_subcommand("check", "run the law suite");
  common(check);
  check->add_option("--laws", c.laws, "all, or a comma-separated list");
  check->add_option("--cap", c.cap, "enumeration cap");
  check->add_option("--format", c.format, "text or value");

  auto* cls = app.add_subcommand("classify", "print the scheme signature");
  common(cls);

  auto* report = app.add_subcommand("report", "law table for the whole catalog");
  report->add_option("--config", config_file, "record of option defaults");
  report->add_option("--cap", c.cap, "enumeration cap");
  report->add_option("--laws", c.laws, "all, or a comma-separated list");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!config_file.empty()) fill_from_file(c, config_file);
    if (apply->parsed()) return cmd_apply(c, out, err);
    if (check->parsed()) return cmd_check(c, out);
    if (cls->parsed()) return cmd_classify(c, out);
    return cmd_report(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace bx
