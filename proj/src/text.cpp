#include "bx/text.hpp"

#include <cctype>
#include <charconv>

namespace bx {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  // Keyword immediately followed by a non-name character.
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && is_name_char(text_[end])) return false;
    pos_ = end;
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("'" + std::string(w) + "'");
  }

  std::string name() {
    skip_ws();
    if (pos_ >= text_.size() || !is_name_start(text_[pos_])) fail("name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("integer");
    }
    return v;
  }

  std::size_t index() {
    const std::size_t at = (skip_ws(), pos_);
    const auto v = integer();
    if (v < 0) {
      pos_ = at;
      fail("non-negative index");
    }
    return static_cast<std::size_t>(v);
  }

  std::string string_lit() {
    expect('"');
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("closing '\"'");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\\')) fail("escape");
        c = text_[pos_++];
      }
      out += c;
    }
    return out;
  }

  Value value() {
    const char c = peek();
    if (c == '"') return Value::string(string_lit());
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return Value::integer(integer());
    if (accept('(')) {
      Value l = value();
      expect(',');
      Value r = value();
      expect(')');
      return Value::pair(std::move(l), std::move(r));
    }
    if (accept('[')) {
      std::vector<Value> xs;
      if (!accept(']')) {
        do xs.push_back(value());
        while (accept(','));
        expect(']');
      }
      return Value::seq(std::move(xs));
    }
    if (accept('{')) {
      Fields fs;
      if (!accept('}')) {
        do {
          const std::size_t at = (skip_ws(), pos_);
          std::string n = name();
          expect('=');
          if (!fs.emplace(n, value()).second) {
            pos_ = at;
            fail("distinct field name");
          }
        } while (accept(','));
        expect('}');
      }
      return Value::rec(std::move(fs));
    }
    fail("value");
  }

  Path path() {
    expect('/');
    Path p;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c == '.') {
        ++pos_;
        p.push_back(Step::go_field(name()));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        p.push_back(Step::go_index(index()));
      } else if (accept_word("left")) {
        p.push_back(Step::go_left());
      } else if (accept_word("right")) {
        p.push_back(Step::go_right());
      } else if (p.empty()) {
        return p;  // lone "/" is the root path
      } else {
        fail("path step");
      }
      if (peek() != '/') break;
      ++pos_;
    }
    if (p.empty()) fail("path step");
    return p;
  }

  SamenessRelation relation() {
    expect('[');
    std::vector<SamenessRelation::Link> links;
    if (!accept(']')) {
      do {
        expect('(');
        Path s = path();
        expect(',');
        Path t = path();
        expect(')');
        links.emplace_back(std::move(s), std::move(t));
      } while (accept(','));
      expect(']');
    }
    const std::size_t at = pos_;
    try {
      return SamenessRelation(std::move(links));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, std::string("parse error at ") + std::to_string(at) + ": " + e.what(), at);
    }
  }

  EditOp op() {
    if (accept_word("ins")) {
      expect('(');
      auto i = index();
      expect(',');
      auto v = value();
      expect(')');
      return EditOp::insert(i, std::move(v));
    }
    if (accept_word("del")) {
      expect('(');
      auto i = index();
      expect(',');
      auto v = value();
      expect(')');
      return EditOp::erase(i, std::move(v));
    }
    if (accept_word("rep")) {
      expect('(');
      auto i = index();
      expect(',');
      auto o = value();
      expect(',');
      auto n = value();
      expect(')');
      return EditOp::replace_at(i, std::move(o), std::move(n));
    }
    if (accept_word("set")) {
      expect('(');
      auto f = name();
      expect(',');
      auto o = value();
      expect(',');
      auto n = value();
      expect(')');
      return EditOp::set_field(std::move(f), std::move(o), std::move(n));
    }
    if (accept_word("root")) {
      expect('(');
      auto o = value();
      expect(',');
      auto n = value();
      expect(')');
      return EditOp::replace_root(std::move(o), std::move(n));
    }
    fail("edit operation");
  }

  EditScript ops() {
    expect('[');
    EditScript out;
    if (!accept(']')) {
      do out.push_back(op());
      while (accept(','));
      expect(']');
    }
    return out;
  }

  Value keyed_value(std::string_view key) {
    expect_word(key);
    expect('=');
    return value();
  }

  Update update() {
    if (accept_word("states")) {
      expect('{');
      auto pre = keyed_value("pre");
      expect(',');
      auto post = keyed_value("post");
      expect('}');
      return Update::both_states(std::move(pre), std::move(post));
    }
    if (accept_word("state")) {
      expect('{');
      auto post = keyed_value("post");
      expect('}');
      return Update::post_state(std::move(post));
    }
    if (accept_word("delta")) {
      expect('{');
      auto pre = keyed_value("pre");
      expect(',');
      auto post = keyed_value("post");
      expect(',');
      expect_word("same");
      expect('=');
      auto same = relation();
      expect('}');
      return Update::delta(pre, post, same);
    }
    if (accept_word("edits")) return Update::edits(ops());
    if (accept_word("stateedits")) {
      expect('{');
      auto pre = keyed_value("pre");
      expect(',');
      expect_word("edits");
      expect('=');
      auto es = ops();
      expect('}');
      return Update::state_edits(pre, es);
    }
    if (accept_word("opaque")) {
      expect('{');
      auto tag = string_lit();
      expect('}');
      return Update::opaque(std::move(tag));
    }
    fail("update");
  }

  Traceability trace() {
    if (accept_word("none")) return Traceability::none();
    if (accept_word("state")) {
      expect('{');
      auto v = value();
      expect('}');
      return Traceability::state(std::move(v));
    }
    if (accept_word("compl")) {
      expect('{');
      auto v = value();
      expect('}');
      return Traceability::complement(std::move(v));
    }
    if (accept_word("delta")) {
      expect('{');
      auto src = keyed_value("src");
      expect(',');
      auto tgt = keyed_value("tgt");
      expect(',');
      expect_word("same");
      expect('=');
      auto same = relation();
      expect('}');
      return Traceability::delta(src, tgt, same);
    }
    fail("traceability");
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw Error(ErrorKind::ParseError,
                "parse error at " + std::to_string(pos_) + ": expected " + expected, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class F>
auto parse_all(std::string_view text, F&& f) {
  Cursor c(text);
  auto out = f(c);
  c.finish();
  return out;
}

std::string render_ops(const EditScript& ops) {
  std::string out = "[";
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) out += ", ";
    out += render_op(ops[i]);
  }
  return out + "]";
}

}  // namespace

std::string render_value(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Int: return std::to_string(v.as_int());
    case Value::Kind::Str: return quote(v.as_str());
    case Value::Kind::Pair: return "(" + render_value(v.left()) + ", " + render_value(v.right()) + ")";
    case Value::Kind::Seq: {
      std::string out = "[";
      const auto& xs = v.elements();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += render_value(xs[i]);
      }
      return out + "]";
    }
    case Value::Kind::Rec: {
      std::string out = "{";
      bool first = true;
      for (const auto& [name, fv] : v.fields()) {
        if (!first) out += ", ";
        first = false;
        out += name + " = " + render_value(fv);
      }
      return out + "}";
    }
  }
  return {};
}

Value parse_value(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return c.value(); });
}

std::string render_path(const Path& p) {
  if (p.empty()) return "/";
  std::string out;
  for (const auto& s : p) {
    switch (s.kind) {
      case Step::Kind::Left: out += "/left"; break;
      case Step::Kind::Right: out += "/right"; break;
      case Step::Kind::Index: out += "/" + std::to_string(s.index); break;
      case Step::Kind::Field: out += "/." + s.name; break;
    }
  }
  return out;
}

std::string render_relation(const SamenessRelation& r) {
  std::string out = "[";
  bool first = true;
  for (const auto& [s, t] : r.links()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + render_path(s) + ", " + render_path(t) + ")";
  }
  return out + "]";
}

std::string render_op(const EditOp& op) {
  using K = EditOp::Kind;
  switch (op.kind) {
    case K::Insert: return "ins(" + std::to_string(op.index) + ", " + render_value(op.new_value) + ")";
    case K::Delete: return "del(" + std::to_string(op.index) + ", " + render_value(op.old_value) + ")";
    case K::ReplaceAt:
      return "rep(" + std::to_string(op.index) + ", " + render_value(op.old_value) + ", " +
             render_value(op.new_value) + ")";
    case K::SetField:
      return "set(" + op.name + ", " + render_value(op.old_value) + ", " + render_value(op.new_value) + ")";
    case K::ReplaceRoot: return "root(" + render_value(op.old_value) + ", " + render_value(op.new_value) + ")";
  }
  return {};
}

std::string render_update(const Update& u) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PostStateU>) {
          return "state{post=" + render_value(x.post) + "}";
        } else if constexpr (std::is_same_v<T, BothStatesU>) {
          return "states{pre=" + render_value(x.pre) + ", post=" + render_value(x.post) + "}";
        } else if constexpr (std::is_same_v<T, DeltaU>) {
          return "delta{pre=" + render_value(x.pre) + ", post=" + render_value(x.post) +
                 ", same=" + render_relation(x.same) + "}";
        } else if constexpr (std::is_same_v<T, EditsU>) {
          return "edits" + render_ops(x.ops);
        } else if constexpr (std::is_same_v<T, StateEditsU>) {
          return "stateedits{pre=" + render_value(x.pre) + ", edits=" + render_ops(x.ops) + "}";
        } else {
          return "opaque{" + quote(x.tag) + "}";
        }
      },
      u.rep());
}

std::string render_trace(const Traceability& t) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NoTraceT>) {
          return "none";
        } else if constexpr (std::is_same_v<T, StateTraceT>) {
          return "state{" + render_value(x.state) + "}";
        } else if constexpr (std::is_same_v<T, ComplementTraceT>) {
          return "compl{" + render_value(x.payload) + "}";
        } else {
          return "delta{src=" + render_value(x.src) + ", tgt=" + render_value(x.tgt) +
                 ", same=" + render_relation(x.same) + "}";
        }
      },
      t.rep());
}

Path parse_path(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return c.path(); });
}

SamenessRelation parse_relation(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return c.relation(); });
}

EditOp parse_op(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return c.op(); });
}

Update parse_update(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return c.update(); });
}

Traceability parse_trace(std::string_view text) {
  return parse_all(text, [](Cursor& c) { return c.trace(); });
}

}  // namespace bx
