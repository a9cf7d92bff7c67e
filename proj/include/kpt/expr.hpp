#pragma once

// A small expression language for algebra elements.
//
//   sum     := term (('+' | '-') term)*
//   term    := '-' term | product
//   product := factor ('*' factor)*
//   factor  := RATIONAL | 'p(' vertex ')' | 's(' edge ('.' edge)* ')'
//            | 'adj(' sum ')' | '(' sum ')'
//
// "a - b" reads as a + (-1)*b and a product whose left factor is a rational
// literal is a Scale node. Rational literals are non-negative: "3" or "3/4".

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "kpt/kgraph.hpp"
#include "kpt/kp_algebra.hpp"

namespace kpt {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Rational, P, S, Adj, Add, Mul, Scale };
  Kind kind = Kind::Rational;
  mpq_class value;   // Rational, Scale
  std::string name;  // P: vertex name; S: path literal
  ExprPtr lhs, rhs;  // Adj uses lhs; Scale scales lhs

  static ExprPtr rational(const mpq_class& v);
  static ExprPtr p(std::string vertex);
  static ExprPtr s(std::string path);
  static ExprPtr adj(ExprPtr x);
  static ExprPtr add(ExprPtr a, ExprPtr b);
  /// Scale(v, b) when a is a rational literal, else Mul(a, b).
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr scale(const mpq_class& t, ExprPtr x);
  static ExprPtr neg(ExprPtr x) { return scale(-1, std::move(x)); }
};

bool operator==(const Expr& a, const Expr& b);

/// Throws ExprError with the offending position.
ExprPtr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

/// Throws ExprError for unknown vertices or edges, paths that do not compose,
/// and bare nonzero scalars.
Element evaluate(const Expr& e, const KGraph& g);
Element evaluate(std::string_view text, const KGraph& g);

}  // namespace kpt
