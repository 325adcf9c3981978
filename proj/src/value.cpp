#include "bx/value.hpp"

#include <algorithm>

namespace bx {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::InvalidPath: return "invalid path";
    case ErrorKind::ParseError: return "parse error";
    case ErrorKind::StateNotRepresented: return "state not represented";
    case ErrorKind::NotExpressible: return "not expressible";
    case ErrorKind::ReprMismatch: return "representation mismatch";
    case ErrorKind::SeamMismatch: return "seam mismatch";
    case ErrorKind::InvalidEdit: return "invalid edit";
    case ErrorKind::UnknownName: return "unknown name";
    case ErrorKind::NoPreorder: return "no preorder";
  }
  return "error";
}

namespace {

const Value& zero() {
  static const Value v = Value::integer(0);
  return v;
}

[[noreturn]] void wrong_kind(const char* want) {
  throw Error(ErrorKind::ReprMismatch, std::string("value is not a ") + want);
}

}  // namespace

Value::Value() : Value(zero()) {}

Value Value::integer(std::int64_t v) { return Value(std::make_shared<const Node>(Node{v})); }
Value Value::string(std::string s) { return Value(std::make_shared<const Node>(Node{std::move(s)})); }
Value Value::pair(Value l, Value r) {
  return Value(std::make_shared<const Node>(Node{std::pair<Value, Value>(std::move(l), std::move(r))}));
}
Value Value::seq(std::vector<Value> xs) { return Value(std::make_shared<const Node>(Node{std::move(xs)})); }
Value Value::rec(Fields fs) { return Value(std::make_shared<const Node>(Node{std::move(fs)})); }

Value::Kind Value::kind() const { return static_cast<Kind>(node_->data.index()); }

std::int64_t Value::as_int() const {
  if (!is_int()) wrong_kind("integer");
  return std::get<0>(node_->data);
}
const std::string& Value::as_str() const {
  if (!is_str()) wrong_kind("string");
  return std::get<1>(node_->data);
}
const Value& Value::left() const {
  if (!is_pair()) wrong_kind("pair");
  return std::get<2>(node_->data).first;
}
const Value& Value::right() const {
  if (!is_pair()) wrong_kind("pair");
  return std::get<2>(node_->data).second;
}
const std::vector<Value>& Value::elements() const {
  if (!is_seq()) wrong_kind("sequence");
  return std::get<3>(node_->data);
}
const Fields& Value::fields() const {
  if (!is_rec()) wrong_kind("record");
  return std::get<4>(node_->data);
}

const Value* Value::field(std::string_view name) const {
  if (!is_rec()) return nullptr;
  const auto& fs = fields();
  auto it = fs.find(name);
  return it == fs.end() ? nullptr : &it->second;
}

Value Value::with_field(const std::string& name, Value v) const {
  Fields fs = fields();
  fs[name] = std::move(v);
  return rec(std::move(fs));
}

Value Value::with_element(std::size_t index, Value v) const {
  std::vector<Value> xs = elements();
  xs.at(index) = std::move(v);
  return seq(std::move(xs));
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->data == b.node_->data;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = a.node_->data;
  const auto& y = b.node_->data;
  if (x.index() != y.index()) return x.index() <=> y.index();
  switch (x.index()) {
    case 0: return std::get<0>(x) <=> std::get<0>(y);
    case 1: return std::get<1>(x).compare(std::get<1>(y)) <=> 0;
    case 2: {
      const auto& [l1, r1] = std::get<2>(x);
      const auto& [l2, r2] = std::get<2>(y);
      if (auto c = l1 <=> l2; c != 0) return c;
      return r1 <=> r2;
    }
    case 3: {
      const auto& xs = std::get<3>(x);
      const auto& ys = std::get<3>(y);
      return std::lexicographical_compare_three_way(xs.begin(), xs.end(), ys.begin(), ys.end());
    }
    default: {
      const auto& xs = std::get<4>(x);
      const auto& ys = std::get<4>(y);
      return std::lexicographical_compare_three_way(xs.begin(), xs.end(), ys.begin(), ys.end());
    }
  }
}

// ---------------------------------------------------------------------------

Path child(const Path& p, Step s) {
  Path out = p;
  out.push_back(std::move(s));
  return out;
}

namespace {

const Value* step_into(const Value& v, const Step& s) {
  switch (s.kind) {
    case Step::Kind::Left: return v.is_pair() ? &v.left() : nullptr;
    case Step::Kind::Right: return v.is_pair() ? &v.right() : nullptr;
    case Step::Kind::Index:
      return v.is_seq() && s.index < v.elements().size() ? &v.elements()[s.index] : nullptr;
    case Step::Kind::Field: return v.field(s.name);
  }
  return nullptr;
}

void collect_paths(const Value& v, Path& prefix, std::vector<Path>& out) {
  out.push_back(prefix);
  switch (v.kind()) {
    case Value::Kind::Pair:
      prefix.push_back(Step::go_left());
      collect_paths(v.left(), prefix, out);
      prefix.back() = Step::go_right();
      collect_paths(v.right(), prefix, out);
      prefix.pop_back();
      break;
    case Value::Kind::Seq:
      for (std::size_t i = 0; i < v.elements().size(); ++i) {
        prefix.push_back(Step::go_index(i));
        collect_paths(v.elements()[i], prefix, out);
        prefix.pop_back();
      }
      break;
    case Value::Kind::Rec:
      for (const auto& [name, fv] : v.fields()) {
        prefix.push_back(Step::go_field(name));
        collect_paths(fv, prefix, out);
        prefix.pop_back();
      }
      break;
    default: break;
  }
}

}  // namespace

const Value& select(const Value& v, const Path& path) {
  const Value* cur = &v;
  for (std::size_t i = 0; i < path.size(); ++i) {
    cur = step_into(*cur, path[i]);
    if (cur == nullptr) {
      throw Error(ErrorKind::InvalidPath,
                  "path " + render_path(path) + " fails at step " + std::to_string(i), i);
    }
  }
  return *cur;
}

bool is_valid_path(const Value& v, const Path& path) {
  const Value* cur = &v;
  for (const auto& s : path) {
    cur = step_into(*cur, s);
    if (cur == nullptr) return false;
  }
  return true;
}

std::vector<Path> all_paths(const Value& v) {
  std::vector<Path> out;
  Path prefix;
  collect_paths(v, prefix, out);
  return out;
}

// ---------------------------------------------------------------------------

SamenessRelation::SamenessRelation(std::vector<Link> links) : links_(std::move(links)) {
  std::sort(links_.begin(), links_.end());
  links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
  std::vector<Path> srcs, tgts;
  for (const auto& [s, t] : links_) {
    srcs.push_back(s);
    tgts.push_back(t);
  }
  std::sort(srcs.begin(), srcs.end());
  std::sort(tgts.begin(), tgts.end());
  if (std::adjacent_find(srcs.begin(), srcs.end()) != srcs.end() ||
      std::adjacent_find(tgts.begin(), tgts.end()) != tgts.end()) {
    throw Error(ErrorKind::ReprMismatch, "sameness relation is not a partial bijection");
  }
}

bool SamenessRelation::contains(const Path& src, const Path& tgt) const {
  return std::binary_search(links_.begin(), links_.end(), Link{src, tgt});
}

bool SamenessRelation::has_source(const Path& src) const {
  auto it = std::lower_bound(links_.begin(), links_.end(), Link{src, Path{}});
  return it != links_.end() && it->first == src;
}

bool SamenessRelation::has_target(const Path& tgt) const {
  return std::any_of(links_.begin(), links_.end(), [&](const Link& l) { return l.second == tgt; });
}

SamenessRelation SamenessRelation::inverse() const {
  std::vector<Link> inv;
  inv.reserve(links_.size());
  for (const auto& [s, t] : links_) inv.emplace_back(t, s);
  return SamenessRelation(std::move(inv));
}

SamenessRelation SamenessRelation::then(const SamenessRelation& next) const {
  std::map<Path, Path> step;
  for (const auto& [s, t] : next.links_) step.emplace(s, t);
  std::vector<Link> out;
  for (const auto& [s, mid] : links_) {
    if (auto it = step.find(mid); it != step.end()) out.emplace_back(s, it->second);
  }
  return SamenessRelation(std::move(out));
}

bool SamenessRelation::valid_for(const Value& src, const Value& tgt) const {
  return std::all_of(links_.begin(), links_.end(), [&](const Link& l) {
    return is_valid_path(src, l.first) && is_valid_path(tgt, l.second);
  });
}

// ---------------------------------------------------------------------------

namespace {

void link_equal_subtrees(const Value& v, Path& p, Path& q, std::vector<SamenessRelation::Link>& out) {
  // v is the shared content at p (pre side) and q (post side).
  for (const auto& sub : all_paths(v)) {
    Path a = p, b = q;
    a.insert(a.end(), sub.begin(), sub.end());
    b.insert(b.end(), sub.begin(), sub.end());
    out.emplace_back(std::move(a), std::move(b));
  }
}

// Leftmost longest common subsequence of equal elements; returns matched index pairs.
std::vector<std::pair<std::size_t, std::size_t>> lcs_matches(const std::vector<Value>& xs,
                                                            const std::vector<Value>& ys) {
  const std::size_t n = xs.size(), m = ys.size();
  std::vector<std::vector<std::size_t>> dp(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      dp[i][j] = xs[i] == ys[j] ? dp[i + 1][j + 1] + 1 : std::max(dp[i + 1][j], dp[i][j + 1]);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t i = 0, j = 0;
  while (i < n && j < m) {
    if (xs[i] == ys[j] && dp[i][j] == dp[i + 1][j + 1] + 1) {
      out.emplace_back(i++, j++);
    } else if (dp[i + 1][j] >= dp[i][j + 1]) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

void align(const Value& a, const Value& b, Path& p, Path& q, std::vector<SamenessRelation::Link>& out) {
  if (a == b) {
    link_equal_subtrees(a, p, q, out);
    return;
  }
  if (a.kind() != b.kind()) return;
  switch (a.kind()) {
    case Value::Kind::Pair:
      p.push_back(Step::go_left());
      q.push_back(Step::go_left());
      align(a.left(), b.left(), p, q, out);
      p.back() = Step::go_right();
      q.back() = Step::go_right();
      align(a.right(), b.right(), p, q, out);
      p.pop_back();
      q.pop_back();
      break;
    case Value::Kind::Rec:
      for (const auto& [name, av] : a.fields()) {
        const Value* bv = b.field(name);
        if (bv == nullptr) continue;
        p.push_back(Step::go_field(name));
        q.push_back(Step::go_field(name));
        align(av, *bv, p, q, out);
        p.pop_back();
        q.pop_back();
      }
      break;
    case Value::Kind::Seq:
      for (const auto& [i, j] : lcs_matches(a.elements(), b.elements())) {
        p.push_back(Step::go_index(i));
        q.push_back(Step::go_index(j));
        link_equal_subtrees(a.elements()[i], p, q, out);
        p.pop_back();
        q.pop_back();
      }
      break;
    default: break;
  }
}

}  // namespace

SamenessRelation diff(const Value& pre, const Value& post) {
  std::vector<SamenessRelation::Link> links;
  Path p, q;
  align(pre, post, p, q, links);
  return SamenessRelation(std::move(links));
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

}  // namespace

DomainDescriptor DomainDescriptor::atoms(std::vector<Value> alphabet) {
  DomainDescriptor d;
  d.kind_ = Kind::Atoms;
  std::vector<Value> seen;
  for (auto& v : alphabet) {
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(std::move(v));
  }
  d.alphabet_ = std::move(seen);
  return d;
}

DomainDescriptor DomainDescriptor::ints(std::int64_t lo, std::int64_t hi) {
  std::vector<Value> xs;
  for (auto i = lo; i <= hi; ++i) xs.push_back(Value::integer(i));
  return atoms(std::move(xs));
}

DomainDescriptor DomainDescriptor::pair(DomainDescriptor l, DomainDescriptor r) {
  DomainDescriptor d;
  d.kind_ = Kind::Pair;
  d.children_ = {std::move(l), std::move(r)};
  return d;
}

DomainDescriptor DomainDescriptor::seq(DomainDescriptor element, std::size_t max_len) {
  DomainDescriptor d;
  d.kind_ = Kind::Seq;
  d.children_ = {std::move(element)};
  d.max_len_ = max_len;
  return d;
}

DomainDescriptor DomainDescriptor::rec(std::map<std::string, DomainDescriptor> fields) {
  DomainDescriptor d;
  d.kind_ = Kind::Rec;
  d.fields_ = std::move(fields);
  return d;
}

std::uint64_t DomainDescriptor::cardinality() const {
  switch (kind_) {
    case Kind::Atoms: return alphabet_.size();
    case Kind::Pair: return sat_mul(left().cardinality(), right().cardinality());
    case Kind::Seq: {
      const std::uint64_t n = element().cardinality();
      std::uint64_t total = 0, power = 1;
      for (std::size_t len = 0; len <= max_len_; ++len) {
        total = sat_add(total, power);
        power = sat_mul(power, n);
      }
      return total;
    }
    case Kind::Rec: {
      std::uint64_t total = 1;
      for (const auto& [_, d] : fields_) total = sat_mul(total, d.cardinality());
      return total;
    }
  }
  return 0;
}

bool DomainDescriptor::contains(const Value& v) const {
  switch (kind_) {
    case Kind::Atoms: return std::find(alphabet_.begin(), alphabet_.end(), v) != alphabet_.end();
    case Kind::Pair: return v.is_pair() && left().contains(v.left()) && right().contains(v.right());
    case Kind::Seq:
      return v.is_seq() && v.elements().size() <= max_len_ &&
             std::all_of(v.elements().begin(), v.elements().end(),
                         [&](const Value& e) { return element().contains(e); });
    case Kind::Rec: {
      if (!v.is_rec() || v.fields().size() != fields_.size()) return false;
      for (const auto& [name, d] : fields_) {
        const Value* fv = v.field(name);
        if (fv == nullptr || !d.contains(*fv)) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

std::vector<Value> enumerate_unchecked(const DomainDescriptor& d) {
  using K = DomainDescriptor::Kind;
  switch (d.kind()) {
    case K::Atoms: return d.alphabet();
    case K::Pair: {
      auto ls = enumerate_unchecked(d.left());
      auto rs = enumerate_unchecked(d.right());
      std::vector<Value> out;
      out.reserve(ls.size() * rs.size());
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(Value::pair(l, r));
      return out;
    }
    case K::Seq: {
      auto es = enumerate_unchecked(d.element());
      std::vector<Value> out;
      std::vector<std::vector<Value>> layer{{}};
      for (std::size_t len = 0;; ++len) {
        for (const auto& xs : layer) out.push_back(Value::seq(xs));
        if (len == d.max_len()) break;
        std::vector<std::vector<Value>> next;
        for (const auto& xs : layer) {
          for (const auto& e : es) {
            auto ys = xs;
            ys.push_back(e);
            next.push_back(std::move(ys));
          }
        }
        layer = std::move(next);
      }
      return out;
    }
    case K::Rec: {
      std::vector<Fields> partial{{}};
      for (const auto& [name, fd] : d.fields()) {
        auto vs = enumerate_unchecked(fd);
        std::vector<Fields> next;
        for (const auto& fs : partial) {
          for (const auto& v : vs) {
            Fields g = fs;
            g.emplace(name, v);
            next.push_back(std::move(g));
          }
        }
        partial = std::move(next);
      }
      std::vector<Value> out;
      for (auto& fs : partial) out.push_back(Value::rec(std::move(fs)));
      return out;
    }
  }
  return {};
}

}  // namespace

std::vector<Value> enumerate_values(const DomainDescriptor& domain, std::uint64_t cap) {
  const auto n = domain.cardinality();
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded,
                "domain has " + std::to_string(n) + " values, cap is " + std::to_string(cap),
                static_cast<std::size_t>(n));
  }
  return enumerate_unchecked(domain);
}

}  // namespace bx
