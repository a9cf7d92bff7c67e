#pragma once

// Exact arithmetic in the Kumjian-Pask algebra KP_Q(Lambda).
//
// An Element is a finite rational combination of monomials s_mu s_nu*. Every
// Element is kept with all right legs nu of one common degree (its right
// degree); sums and products are raised to the join of the right degrees
// using p_v = sum_{lambda in v Lambda^n} s_lambda s_lambda*. Fixed-degree
// monomials are linearly independent, so an Element is zero iff it has no terms.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kpt/kgraph.hpp"
#include "kpt/vertex_set.hpp"

namespace kpt {

using Scalar = mpq_class;

/// s_mu s_nu* with s(mu) = s(nu). Degree-zero legs are vertices.
struct Monomial {
  Path mu;
  Path nu;

  Vertex vertex() const { return mu.source; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.mu == b.mu && a.nu == b.nu; }
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Terms = std::map<Monomial, Scalar, MonomialLess>;

class Element {
 public:
  explicit Element(const KGraph& g) : g_(&g) {}
  /// Sums the given terms and raises every right leg to the join of their degrees.
  Element(const KGraph& g, const std::vector<std::pair<Monomial, Scalar>>& terms);

  const KGraph& graph() const { return *g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree shared by all right legs; nullopt for zero.
  std::optional<Degree> right_degree() const;
  /// Coefficient of s_mu s_nu* in this representation (0 if absent).
  Scalar coefficient(const Monomial& m) const;

 private:
  friend Element raise(const Element& a, const Degree& m);
  const KGraph* g_;
  Terms terms_;
};

Element unit(const KGraph& g, Vertex v);
Element gen(const KGraph& g, const Path& lambda);
Element gen_star(const KGraph& g, const Path& lambda);
/// c s_mu s_nu*; throws std::invalid_argument unless s(mu) = s(nu).
Element monomial(const KGraph& g, const Path& mu, const Path& nu, const Scalar& c = 1);

/// Throw std::invalid_argument when the elements belong to different graphs.
Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Scalar& t, const Element& a);
Element mul(const Element& a, const Element& b);
Element involution(const Element& a);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element operator*(const Scalar& t, const Element& a) { return scale(t, a); }

struct ExtensionPair {
  Path gamma;
  Path eta;
};

/// All (gamma, eta) with nu gamma = alpha eta of degree d(nu) v d(alpha), so
/// that s_nu* s_alpha = sum s_gamma s_eta*. Empty when r(nu) != r(alpha).
std::vector<ExtensionPair> common_extensions(const KGraph& g, const Path& nu, const Path& alpha);

/// The same element with every right leg of degree exactly m. Throws
/// std::invalid_argument unless m dominates the right degree.
Element normal_form(const Element& a, const Degree& m);

bool equals(const Element& a, const Element& b);

/// Terms with d(mu) - d(nu) = n.
Element graded_component(const Element& a, const DegreeDelta& n);

struct CompressResult {
  Element value;           // s_mu* a s_nu
  Element zero_component;  // its 0-graded part
  Scalar coefficient;      // r_{mu,nu}
  bool matches = false;    // zero_component == r_{mu,nu} p_{s(mu)}
  bool nonzero = false;
};

/// Throws std::invalid_argument unless s_mu s_nu* is a monomial of a.
CompressResult compress(const Path& mu, const Element& a, const Path& nu);

/// sum of p_v over the ranges of all legs of a.
Element local_unit(const Element& a);

/// Membership in the graded ideal I_H. Throws std::invalid_argument unless H
/// is hereditary and saturated.
bool in_graded_ideal(const Element& a, const VertexSet& h);
/// Membership in the socle; throws std::runtime_error when the line points
/// could not be decided within the depth bound.
bool in_socle(const Element& a);

/// e_{i,j} for the line point v: s of the segment of its infinite path
/// between i e_1 and j e_1 (adjoint when j < i, a vertex projection when i = j).
/// Throws std::invalid_argument unless v is a certified line point.
Element matrix_unit(const KGraph& g, Vertex v, int i, int j);

/// "2*s(f)adj(s(f)) - p(v)", or "0".
std::string to_text(const Element& a);
/// JSON array of {coeff, mu, nu, vertex} in serialization order.
std::string to_json(const Element& a);
/// Terms in serialization order: by degrees, then edge names, then vertex name.
std::vector<std::pair<Monomial, Scalar>> ordered_terms(const Element& a);

}  // namespace kpt
