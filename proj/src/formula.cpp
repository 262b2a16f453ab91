#include "hml/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace hml {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

int reserved_index_of(const std::string& name) {
  if (name.size() < 2 || name[0] != 'q') return -1;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
  if (name.size() > 2 && name[1] == '0') return -1;
  if (name.size() > 9) return -1;
  return std::stoi(name.substr(1));
}

}  // namespace

Formula Formula::make(Kind k, int index, std::string name, std::vector<Formula> kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->index = index;
  n->name = std::move(name);
  n->kids = std::move(kids);
  std::size_t h = mix(static_cast<std::size_t>(k) + 1, static_cast<std::size_t>(index + 7));
  if (k == Kind::Atom) {
    h = mix(h, std::hash<std::string>{}(n->name));
    n->reserved = reserved_index_of(n->name);
    n->has_reserved = n->reserved >= 0;
    n->q_rank = n->reserved;
  }
  for (const auto& c : n->kids) {
    n->size += c.complexity();
    n->rank = std::max(n->rank, c.rank());
    n->q_rank = std::max(n->q_rank, c.q_rank());
    n->has_ibox = n->has_ibox || c.has_indexed_box();
    n->has_ubox = n->has_ubox || c.has_plain_box();
    n->has_reserved = n->has_reserved || c.has_reserved_atom();
    h = mix(h, c.hash());
  }
  if (k == Kind::Box) {
    n->rank = index;
    n->has_ibox = true;
  }
  if (k == Kind::UBox) n->has_ubox = true;
  n->hash = h;
  return Formula(std::move(n));
}

std::size_t Formula::arity() const {
  return node_->kids.size();
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw SyntaxError("empty atom name");
  return make(Kind::Atom, -1, std::move(name), {});
}

Formula Formula::bot() {
  static const Formula f = make(Kind::Bot, -1, "", {});
  return f;
}

Formula Formula::top() {
  static const Formula f = make(Kind::Top, -1, "", {});
  return f;
}

Formula Formula::neg(Formula a) {
  return make(Kind::Neg, -1, "", {std::move(a)});
}

namespace {
void check_binary_sort(const Formula& a, const Formula& b) {
  if ((a.has_indexed_box() && b.has_plain_box()) || (a.has_plain_box() && b.has_indexed_box()))
    throw SortError("formula mixes indexed and plain boxes");
}
}  // namespace

Formula Formula::conj(Formula a, Formula b) {
  check_binary_sort(a, b);
  return make(Kind::And, -1, "", {std::move(a), std::move(b)});
}

Formula Formula::disj(Formula a, Formula b) {
  check_binary_sort(a, b);
  return make(Kind::Or, -1, "", {std::move(a), std::move(b)});
}

Formula Formula::imp(Formula a, Formula b) {
  check_binary_sort(a, b);
  return make(Kind::Imp, -1, "", {std::move(a), std::move(b)});
}

Formula Formula::box(int n, Formula a) {
  if (n < 0) throw NestingError("negative box index " + std::to_string(n));
  if (a.has_plain_box()) throw SortError("indexed box over a plain box");
  if (n <= a.rank())
    throw NestingError("[" + std::to_string(n) + "] applied to a formula of rank " +
                       std::to_string(a.rank()) + ": " + to_string(a));
  return make(Kind::Box, n, "", {std::move(a)});
}

Formula Formula::ubox(Formula a) {
  if (a.has_indexed_box()) throw SortError("plain box over an indexed box");
  return make(Kind::UBox, -1, "", {std::move(a)});
}

int compare(const Formula& a, const Formula& b) {
  if (a.same(b)) return 0;
  if (a.complexity() != b.complexity()) return a.complexity() < b.complexity() ? -1 : 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (a.kind() == Kind::Atom) {
    int c = a.name().compare(b.name());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    const Formula& x = i == 0 ? a.left() : a.right();
    const Formula& y = i == 0 ? b.left() : b.right();
    if (int c = compare(x, y); c != 0) return c;
  }
  return 0;
}

int rank(std::span<const Formula> fs) {
  int r = -1;
  for (const auto& f : fs) r = std::max(r, f.rank());
  return r;
}

int q_rank(std::span<const Formula> fs) {
  int r = -1;
  for (const auto& f : fs) r = std::max(r, f.q_rank());
  return r;
}

Formula big_and(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}

Formula big_or(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::bot();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disj(acc, fs[i]);
  return acc;
}

Formula subst_atoms(const Formula& a, const std::map<std::string, Formula>& m) {
  if (m.empty()) return a;
  switch (a.kind()) {
    case Kind::Atom: {
      auto it = m.find(a.name());
      return it == m.end() ? a : it->second;
    }
    case Kind::Bot:
    case Kind::Top:
      return a;
    case Kind::Neg:
      return Formula::neg(subst_atoms(a.child(), m));
    case Kind::And:
      return Formula::conj(subst_atoms(a.left(), m), subst_atoms(a.right(), m));
    case Kind::Or:
      return Formula::disj(subst_atoms(a.left(), m), subst_atoms(a.right(), m));
    case Kind::Imp:
      return Formula::imp(subst_atoms(a.left(), m), subst_atoms(a.right(), m));
    case Kind::Box:
      return Formula::box(a.index(), subst_atoms(a.child(), m));
    case Kind::UBox:
      return Formula::ubox(subst_atoms(a.child(), m));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RawFormula parse_all() {
    RawFormula f = parse_imp();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError("syntax error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return s_.substr(pos_, tok.size()) == tok;
  }

  bool eat(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  RawFormula parse_imp() {
    RawFormula lhs = parse_or();
    if (eat("->")) {
      RawFormula rhs = parse_imp();
      return RawFormula{Kind::Imp, -1, "", {std::move(lhs), std::move(rhs)}};
    }
    return lhs;
  }

  RawFormula parse_or() {
    RawFormula acc = parse_and();
    while (eat("|")) {
      RawFormula rhs = parse_and();
      acc = RawFormula{Kind::Or, -1, "", {std::move(acc), std::move(rhs)}};
    }
    return acc;
  }

  RawFormula parse_and() {
    RawFormula acc = parse_unary();
    while (eat("&")) {
      RawFormula rhs = parse_unary();
      acc = RawFormula{Kind::And, -1, "", {std::move(acc), std::move(rhs)}};
    }
    return acc;
  }

  RawFormula parse_unary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '-' && !peek("->")) {
      ++pos_;
      return RawFormula{Kind::Neg, -1, "", {parse_unary()}};
    }
    if (c == '[') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string digits(s_.substr(start, pos_ - start));
      if (!eat("]")) fail("expected ']'");
      if (digits.empty()) return RawFormula{Kind::UBox, -1, "", {parse_unary()}};
      if (digits.size() > 9) fail("box index too large");
      return RawFormula{Kind::Box, std::stoi(digits), "", {parse_unary()}};
    }
    if (c == '(') {
      ++pos_;
      RawFormula inner = parse_imp();
      if (!eat(")")) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      if (word == "bot") return RawFormula{Kind::Bot, -1, "", {}};
      if (word == "top") return RawFormula{Kind::Top, -1, "", {}};
      return RawFormula{Kind::Atom, -1, std::move(word), {}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// rank of a raw tree, or nullopt-like sentinel when it already fails.
int raw_rank(const RawFormula& r, bool& ok) {
  int best = -1;
  for (const auto& k : r.kids) best = std::max(best, raw_rank(k, ok));
  if (r.kind == Kind::UBox) ok = false;
  if (r.kind == Kind::Box) {
    if (r.index <= best) ok = false;
    best = std::max(best, r.index);
  }
  return best;
}

}  // namespace

RawFormula parse_raw(std::string_view text) {
  return Parser(text).parse_all();
}

bool is_wff_h(const RawFormula& raw) {
  bool ok = true;
  raw_rank(raw, ok);
  return ok;
}

Formula build(const RawFormula& r) {
  switch (r.kind) {
    case Kind::Atom:
      return Formula::atom(r.name);
    case Kind::Bot:
      return Formula::bot();
    case Kind::Top:
      return Formula::top();
    case Kind::Neg:
      return Formula::neg(build(r.kids[0]));
    case Kind::And:
      return Formula::conj(build(r.kids[0]), build(r.kids[1]));
    case Kind::Or:
      return Formula::disj(build(r.kids[0]), build(r.kids[1]));
    case Kind::Imp:
      return Formula::imp(build(r.kids[0]), build(r.kids[1]));
    case Kind::Box:
      return Formula::box(r.index, build(r.kids[0]));
    case Kind::UBox:
      return Formula::ubox(build(r.kids[0]));
  }
  throw SyntaxError("bad raw tree");
}

Formula parse_formula(std::string_view text) {
  return build(parse_raw(text));
}

Formula parse_h(std::string_view text) {
  Formula f = parse_formula(text);
  if (f.has_plain_box()) throw SortError("expected an indexed formula, found a plain box");
  return f;
}

Formula parse_u(std::string_view text) {
  Formula f = parse_formula(text);
  if (f.has_indexed_box()) throw SortError("expected a uni-modal formula, found an indexed box");
  return f;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int prec(Kind k) {
  switch (k) {
    case Kind::Imp:
      return 1;
    case Kind::Or:
      return 2;
    case Kind::And:
      return 3;
    default:
      return 4;
  }
}

template <typename Node, typename KidsFn, typename InfoFn>
void render(const Node& f, std::string& out, KidsFn kids, InfoFn info) {
  auto [kind, index, name] = info(f);
  auto sub = [&](const Node& c, bool paren) {
    if (paren) out += '(';
    render(c, out, kids, info);
    if (paren) out += ')';
  };
  switch (kind) {
    case Kind::Atom:
      out += name;
      return;
    case Kind::Bot:
      out += "bot";
      return;
    case Kind::Top:
      out += "top";
      return;
    case Kind::Neg:
    case Kind::Box:
    case Kind::UBox: {
      if (kind == Kind::Neg) out += '-';
      else if (kind == Kind::Box) out += "[" + std::to_string(index) + "]";
      else out += "[]";
      const Node& c = kids(f, 0);
      sub(c, prec(std::get<0>(info(c))) < 4);
      return;
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Imp: {
      int p = prec(kind);
      const Node& l = kids(f, 0);
      const Node& r = kids(f, 1);
      int pl = prec(std::get<0>(info(l)));
      int pr = prec(std::get<0>(info(r)));
      bool right_assoc = kind == Kind::Imp;
      sub(l, right_assoc ? pl <= p : pl < p);
      out += kind == Kind::And ? " & " : (kind == Kind::Or ? " | " : " -> ");
      sub(r, right_assoc ? pr < p : pr <= p);
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& a) {
  std::string out;
  render(
      a, out, [](const Formula& f, int i) -> const Formula& { return i == 0 ? f.left() : f.right(); },
      [](const Formula& f) { return std::tuple<Kind, int, std::string>(f.kind(), f.index(), f.name()); });
  return out;
}

std::string to_string(const RawFormula& a) {
  std::string out;
  render(
      a, out, [](const RawFormula& f, int i) -> const RawFormula& { return f.kids[static_cast<std::size_t>(i)]; },
      [](const RawFormula& f) { return std::tuple<Kind, int, std::string>(f.kind, f.index, f.name); });
  return out;
}

}  // namespace hml
