#include "kpt/expr.hpp"

#include <cctype>

#include "kpt/paths.hpp"

namespace kpt {

ExprPtr Expr::rational(const mpq_class& literal) {
  mpq_class v = literal;
  v.canonicalize();
  if (v < 0) throw ExprError("rational literals are non-negative");
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Rational;
  e->value = v;
  return e;
}

ExprPtr Expr::p(std::string vertex) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::P;
  e->name = std::move(vertex);
  return e;
}

ExprPtr Expr::s(std::string path) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::S;
  e->name = std::move(path);
  return e;
}

ExprPtr Expr::adj(ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Adj;
  e->lhs = std::move(x);
  return e;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Add;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
  if (a->kind == Kind::Rational) return scale(a->value, std::move(b));
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Mul;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::scale(const mpq_class& factor, ExprPtr x) {
  mpq_class t = factor;
  t.canonicalize();
  if (t < 0 && t != -1) throw ExprError("scale factors are -1 or non-negative");
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Scale;
  e->value = t;
  e->lhs = std::move(x);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  auto same = [](const ExprPtr& x, const ExprPtr& y) { return (!x && !y) || (x && y && *x == *y); };
  switch (a.kind) {
    case Expr::Kind::Rational: return a.value == b.value;
    case Expr::Kind::P:
    case Expr::Kind::S: return a.name == b.name;
    case Expr::Kind::Adj: return same(a.lhs, b.lhs);
    case Expr::Kind::Scale: return a.value == b.value && same(a.lhs, b.lhs);
    case Expr::Kind::Add:
    case Expr::Kind::Mul: return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  ExprPtr run() {
    auto e = sum();
    skip();
    if (i_ != t_.size()) fail("unexpected '" + std::string(1, t_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExprError(what + " at position " + std::to_string(i_ + 1));
  }
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool keyword(std::string_view w) {
    skip();
    if (t_.substr(i_, w.size()) != w) return false;
    auto j = i_ + w.size();
    while (j < t_.size() && std::isspace(static_cast<unsigned char>(t_[j]))) ++j;
    if (j >= t_.size() || t_[j] != '(') return false;
    i_ = j + 1;
    return true;
  }

  ExprPtr sum() {
    auto e = term();
    for (;;) {
      if (eat('+'))
        e = Expr::add(e, term());
      else if (eat('-'))
        e = Expr::add(e, Expr::neg(term()));
      else
        return e;
    }
  }
  ExprPtr term() {
    if (eat('-')) return Expr::neg(term());
    auto e = factor();
    while (eat('*')) e = Expr::mul(e, factor());
    return e;
  }
  std::string raw_name() {
    skip();
    auto start = i_;
    while (i_ < t_.size() && t_[i_] != ')') ++i_;
    auto s = std::string(t_.substr(start, i_ - start));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) fail("empty name");
    expect(')');
    return s;
  }
  ExprPtr factor() {
    skip();
    if (i_ >= t_.size()) fail("unexpected end of expression");
    const char c = t_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (keyword("adj")) {
      auto e = sum();
      expect(')');
      return Expr::adj(e);
    }
    if (keyword("p")) return Expr::p(raw_name());
    if (keyword("s")) return Expr::s(raw_name());
    if (eat('(')) {
      auto e = sum();
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
  ExprPtr number() {
    auto digits = [&] {
      auto start = i_;
      while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
      if (start == i_) fail("expected digits");
      return std::string(t_.substr(start, i_ - start));
    };
    auto num = digits();
    std::string den = "1";
    if (i_ < t_.size() && t_[i_] == '/') {
      ++i_;
      den = digits();
    }
    mpz_class d(den);
    if (d == 0) fail("zero denominator");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Expr::rational(q);
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

bool is_atom(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Rational:
    case Expr::Kind::P:
    case Expr::Kind::S:
    case Expr::Kind::Adj: return true;
    default: return false;
  }
}

bool is_neg(const Expr& e) { return e.kind == Expr::Kind::Scale && e.value == -1; }

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Rational: return e.value.get_str();
    case Expr::Kind::P: return "p(" + e.name + ")";
    case Expr::Kind::S: return "s(" + e.name + ")";
    case Expr::Kind::Adj: return "adj(" + print_expr(*e.lhs) + ")";
    case Expr::Kind::Add: {
      const auto& b = *e.rhs;
      if (is_neg(b)) {
        const auto& t = *b.lhs;
        auto inner = t.kind == Expr::Kind::Add || is_neg(t) ? paren(print_expr(t)) : print_expr(t);
        return print_expr(*e.lhs) + " - " + inner;
      }
      auto right = b.kind == Expr::Kind::Add ? paren(print_expr(b)) : print_expr(b);
      return print_expr(*e.lhs) + " + " + right;
    }
    case Expr::Kind::Mul: {
      const auto& a = *e.lhs;
      const auto& b = *e.rhs;
      auto left = a.kind == Expr::Kind::Add || is_neg(a) ? paren(print_expr(a)) : print_expr(a);
      auto right = is_atom(b) ? print_expr(b) : paren(print_expr(b));
      return left + "*" + right;
    }
    case Expr::Kind::Scale: {
      const auto& x = *e.lhs;
      if (is_neg(e)) {
        auto inner = x.kind == Expr::Kind::Add || is_neg(x) ? paren(print_expr(x)) : print_expr(x);
        return "-" + inner;
      }
      return e.value.get_str() + "*" + (is_atom(x) ? print_expr(x) : paren(print_expr(x)));
    }
  }
  return "";
}

namespace {

Path path_literal(const KGraph& g, const std::string& lit) {
  if (!lit.empty() && lit.find('.') == std::string::npos && !g.find_edge(lit)) {
    if (auto v = g.find_vertex(lit)) return vertex_path(g, *v);
  }
  std::vector<Edge> word;
  std::size_t start = 0;
  for (;;) {
    auto dot = lit.find('.', start);
    auto id = lit.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto e = g.find_edge(id);
    if (!e) throw ExprError("unknown edge '" + id + "'");
    word.push_back(*e);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  try {
    return make_path(g, word);
  } catch (const std::exception& ex) {
    throw ExprError("path " + lit + " does not compose: " + ex.what());
  }
}

}  // namespace

Element evaluate(const Expr& e, const KGraph& g) {
  switch (e.kind) {
    case Expr::Kind::Rational:
      if (e.value == 0) return Element(g);
      throw ExprError("a bare scalar " + e.value.get_str() + " is not an element of the algebra");
    case Expr::Kind::P: {
      auto v = g.find_vertex(e.name);
      if (!v) throw ExprError("unknown vertex '" + e.name + "'");
      return unit(g, *v);
    }
    case Expr::Kind::S: return gen(g, path_literal(g, e.name));
    case Expr::Kind::Adj: return involution(evaluate(*e.lhs, g));
    case Expr::Kind::Add: return add(evaluate(*e.lhs, g), evaluate(*e.rhs, g));
    case Expr::Kind::Mul: return mul(evaluate(*e.lhs, g), evaluate(*e.rhs, g));
    case Expr::Kind::Scale: return scale(e.value, evaluate(*e.lhs, g));
  }
  return Element(g);
}

Element evaluate(std::string_view text, const KGraph& g) { return evaluate(*parse_expr(text), g); }

}  // namespace kpt
