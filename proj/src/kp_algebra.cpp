#include "kpt/kp_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "kpt/analysis.hpp"
#include "kpt/closure.hpp"
#include "kpt/paths.hpp"

namespace kpt {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  return std::tie(a.mu.degree, a.nu.degree, a.mu.word, a.nu.word, a.mu.range, a.nu.range) <
         std::tie(b.mu.degree, b.nu.degree, b.mu.word, b.nu.word, b.mu.range, b.nu.range);
}

namespace {

void same_graph(const Element& a, const Element& b) {
  if (&a.graph() != &b.graph()) throw std::invalid_argument("elements belong to different graphs");
}

void accumulate(Terms& t, const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = t.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

// s_alpha s_beta* = sum_{lambda in s(beta) Lambda^{m - d(beta)}} s_{alpha lambda} s_{(beta lambda)*}
template <class F>
void raise_monomial(const KGraph& g, const Monomial& x, const Degree& m, F&& emit) {
  if (x.nu.degree == m) {
    emit(x);
    return;
  }
  for (const auto& lambda : enumerate_paths(g, x.nu.source, m - x.nu.degree))
    emit(Monomial{compose(g, x.mu, lambda), compose(g, x.nu, lambda)});
}

std::string leg(const KGraph& g, const Path& p) { return path_name(g, p); }

std::vector<std::string> edge_names(const KGraph& g, const Path& p) {
  std::vector<std::string> out;
  for (auto e : p.word) out.push_back(g.name(e));
  return out;
}

}  // namespace

Element::Element(const KGraph& g, const std::vector<std::pair<Monomial, Scalar>>& terms) : g_(&g) {
  std::optional<Degree> m;
  for (const auto& [x, c] : terms)
    if (c != 0) m = m ? join(*m, x.nu.degree) : x.nu.degree;
  if (!m) return;
  for (const auto& [x, c] : terms) {
    if (c == 0) continue;
    raise_monomial(g, x, *m, [&](const Monomial& y) { accumulate(terms_, y, c); });
  }
}

std::optional<Degree> Element::right_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.nu.degree;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Element raise(const Element& a, const Degree& m) {
  Element out(a.graph());
  for (const auto& [x, c] : a.terms_)
    raise_monomial(a.graph(), x, m, [&](const Monomial& y) { accumulate(out.terms_, y, c); });
  return out;
}

Element unit(const KGraph& g, Vertex v) {
  auto p = vertex_path(g, v);
  return Element(g, {{Monomial{p, p}, Scalar(1)}});
}

Element gen(const KGraph& g, const Path& lambda) {
  return Element(g, {{Monomial{lambda, vertex_path(g, lambda.source)}, Scalar(1)}});
}

Element gen_star(const KGraph& g, const Path& lambda) {
  return Element(g, {{Monomial{vertex_path(g, lambda.source), lambda}, Scalar(1)}});
}

Element monomial(const KGraph& g, const Path& mu, const Path& nu, const Scalar& c) {
  if (mu.source != nu.source) throw std::invalid_argument("monomial legs must share their source vertex");
  return Element(g, {{Monomial{mu, nu}, c}});
}

Element add(const Element& a, const Element& b) {
  same_graph(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<std::pair<Monomial, Scalar>> t(a.terms().begin(), a.terms().end());
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return Element(a.graph(), t);
}

Element scale(const Scalar& t, const Element& a) {
  if (t == 0 || a.is_zero()) return Element(a.graph());
  std::vector<std::pair<Monomial, Scalar>> out;
  for (const auto& [x, c] : a.terms()) out.emplace_back(x, t * c);
  return Element(a.graph(), out);
}

Element sub(const Element& a, const Element& b) { return add(a, scale(-1, b)); }

std::vector<ExtensionPair> common_extensions(const KGraph& g, const Path& nu, const Path& alpha) {
  std::vector<ExtensionPair> out;
  if (nu.range != alpha.range) return out;
  const auto top = join(nu.degree, alpha.degree);
  for (const auto& gamma : enumerate_paths(g, nu.source, top - nu.degree)) {
    auto [head, tail] = factor(g, compose(g, nu, gamma), alpha.degree);
    if (head == alpha) out.push_back({gamma, tail});
  }
  return out;
}

Element mul(const Element& a, const Element& b) {
  same_graph(a, b);
  const auto& g = a.graph();
  if (a.is_zero() || b.is_zero()) return Element(g);
  std::map<std::pair<Path, Path>, std::vector<ExtensionPair>> cache;
  std::vector<std::pair<Monomial, Scalar>> out;
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) {
      if (x.nu.range != y.mu.range) continue;
      auto key = std::pair{x.nu, y.mu};
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, common_extensions(g, x.nu, y.mu)).first;
      for (const auto& [gamma, eta] : it->second)
        out.emplace_back(Monomial{compose(g, x.mu, gamma), compose(g, y.nu, eta)}, c * d);
    }
  return Element(g, out);
}

Element involution(const Element& a) {
  std::vector<std::pair<Monomial, Scalar>> out;
  for (const auto& [x, c] : a.terms()) out.emplace_back(Monomial{x.nu, x.mu}, c);
  return Element(a.graph(), out);
}

Element normal_form(const Element& a, const Degree& m) {
  if (a.is_zero()) return a;
  if (m.k() != a.graph().k() || !a.right_degree()->leq(m))
    throw std::invalid_argument("degree " + m.str() + " does not dominate the right legs (degree " +
                                a.right_degree()->str() + ")");
  return raise(a, m);
}

bool equals(const Element& a, const Element& b) {
  same_graph(a, b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto m = join(*a.right_degree(), *b.right_degree());
  return raise(a, m).terms() == raise(b, m).terms();
}

Element graded_component(const Element& a, const DegreeDelta& n) {
  std::vector<std::pair<Monomial, Scalar>> out;
  for (const auto& [x, c] : a.terms())
    if (difference(x.mu.degree, x.nu.degree) == n) out.emplace_back(x, c);
  return Element(a.graph(), out);
}

CompressResult compress(const Path& mu, const Element& a, const Path& nu) {
  const auto& g = a.graph();
  const Monomial target{mu, nu};
  auto r = a.coefficient(target);
  if (r == 0)
    throw std::invalid_argument("s(" + leg(g, mu) + ")adj(s(" + leg(g, nu) + ")) is not a monomial of the element");
  auto value = mul(mul(gen_star(g, mu), a), gen(g, nu));
  auto zero = graded_component(value, DegreeDelta(g.k()));
  auto expected = scale(r, unit(g, mu.source));
  CompressResult out{value, zero, r, equals(zero, expected), !value.is_zero()};
  return out;
}

Element local_unit(const Element& a) {
  const auto& g = a.graph();
  std::vector<Vertex> w;
  for (const auto& [x, c] : a.terms()) {
    w.push_back(x.mu.range);
    w.push_back(x.nu.range);
  }
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  Element u(g);
  for (auto v : w) u = add(u, unit(g, v));
  return u;
}

bool in_graded_ideal(const Element& a, const VertexSet& h) {
  if (&h.graph() != &a.graph()) throw std::invalid_argument("vertex set belongs to a different graph");
  if (!is_hereditary(h) || !is_saturated(h)) throw std::invalid_argument("vertex set is not saturated hereditary");
  for (const auto& [x, c] : a.terms())
    if (!h.contains(x.vertex())) return false;
  return true;
}

bool in_socle(const Element& a) {
  const auto lp = line_points(a.graph());
  if (!lp.complete()) throw std::runtime_error("line points undecided within the depth bound");
  return in_graded_ideal(a, socle_vertices(a.graph(), lp));
}

Element matrix_unit(const KGraph& g, Vertex v, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("matrix unit indices must be non-negative");
  auto cert = is_line_point(g, v);
  if (cert.verdict != Truth::Yes) throw std::invalid_argument(g.name(v) + " is not a certified line point");
  const auto& x = *cert.path;
  auto at = [&](int t) {
    Degree d(g.k());
    d[0] = t;
    return d;
  };
  if (i < j) return gen(g, segment(g, x, at(i), at(j)));
  if (j < i) return gen_star(g, segment(g, x, at(j), at(i)));
  return unit(g, point_at(g, v, at(j)));
}

std::vector<std::pair<Monomial, Scalar>> ordered_terms(const Element& a) {
  const auto& g = a.graph();
  using Key = std::tuple<Degree, Degree, std::vector<std::string>, std::vector<std::string>, std::string>;
  std::vector<std::pair<Key, std::pair<Monomial, Scalar>>> rows;
  for (const auto& [x, c] : a.terms())
    rows.push_back({Key{x.mu.degree, x.nu.degree, edge_names(g, x.mu), edge_names(g, x.nu), g.name(x.mu.range)},
                    {x, c}});
  std::sort(rows.begin(), rows.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  std::vector<std::pair<Monomial, Scalar>> out;
  for (auto& r : rows) out.push_back(std::move(r.second));
  return out;
}

std::string to_text(const Element& a) {
  if (a.is_zero()) return "0";
  const auto& g = a.graph();
  std::string out;
  bool first = true;
  for (const auto& [x, c] : ordered_terms(a)) {
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    Scalar mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    if (x.mu.is_vertex() && x.nu.is_vertex())
      out += "p(" + g.name(x.mu.range) + ")";
    else if (x.nu.is_vertex())
      out += "s(" + leg(g, x.mu) + ")";
    else if (x.mu.is_vertex())
      out += "adj(s(" + leg(g, x.nu) + "))";
    else
      out += "s(" + leg(g, x.mu) + ")adj(s(" + leg(g, x.nu) + "))";
  }
  return out;
}

std::string to_json(const Element& a) {
  const auto& g = a.graph();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [x, c] : ordered_terms(a)) {
    nlohmann::ordered_json t;
    t["coeff"] = c.get_str();
    t["mu"] = edge_names(g, x.mu);
    t["nu"] = edge_names(g, x.nu);
    t["vertex"] = g.name(x.vertex());
    arr.push_back(t);
  }
  return arr.dump();
}

}  // namespace kpt
