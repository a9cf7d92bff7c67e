#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "kpt/analysis.hpp"
#include "kpt/closure.hpp"
#include "kpt/kp_algebra.hpp"
#include "random_graphs.hpp"

using namespace kpt;
using namespace kpt::testing;

namespace {

Element sum_ss_star(const KGraph& g, Vertex v, const Degree& n) {
  Element sum(g);
  for (const auto& l : enumerate_paths(g, v, n)) sum = sum + gen(g, l) * gen_star(g, l);
  return sum;
}

// Random combination of monomials with right legs of degree at most 1 in each color.
Element random_element(const KGraph& g, Rng& rng) {
  std::vector<Path> paths;
  for (auto v : g.vertices())
    for (const auto& d : {Degree::zero(g.k()), Degree::unit(g.k(), 1), Degree::ones(g.k())})
      for (auto& p : enumerate_paths(g, v, d)) paths.push_back(p);
  std::vector<std::pair<Monomial, Scalar>> terms;
  const int n = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < n; ++i) {
    const auto& mu = paths[std::uniform_int_distribution<std::size_t>(0, paths.size() - 1)(rng)];
    std::vector<const Path*> nus;
    for (const auto& p : paths)
      if (p.source == mu.source) nus.push_back(&p);
    const auto* nu = nus[std::uniform_int_distribution<std::size_t>(0, nus.size() - 1)(rng)];
    terms.emplace_back(Monomial{mu, *nu}, Scalar(std::uniform_int_distribution<int>(-3, 3)(rng), 2));
  }
  return Element(g, terms);
}

}  // namespace

TEST_CASE("vertex projections") {
  auto g = graph("t5.json");
  const auto& G = *g;
  auto pw = unit(G, G.vertex("w")), pu = unit(G, G.vertex("u1"));
  auto f = gen(G, path_of(G, {"f"}));
  CHECK(equals(pw * pw, pw));
  CHECK((pw * pu).is_zero());
  CHECK(equals(pw * f, f));
  CHECK(equals(f * pu, f));
  CHECK((pu * f).is_zero());
}

TEST_CASE("linear structure") {
  auto g = graph("t5.json");
  const auto& G = *g;
  auto pw = unit(G, G.vertex("w"));
  CHECK(equals(pw + Element(G), pw));
  CHECK(scale(0, pw).is_zero());
  CHECK(equals(scale(2, pw) + scale(3, pw), scale(5, pw)));
  CHECK((pw - pw).is_zero());
}

TEST_CASE("common extensions") {
  auto t5 = graph("t5.json");
  auto f = path_of(*t5, {"f"}), g = path_of(*t5, {"g"});
  CHECK(common_extensions(*t5, f, g).empty());
  auto same = common_extensions(*t5, f, f);
  REQUIRE(same.size() == 1);
  CHECK(same[0].gamma.is_vertex());
  CHECK(same[0].eta == vertex_path(*t5, f.source));

  auto one = graph("builtin:onevertex:2:1,1");
  auto b = path_of(*one, {"b"}), r = path_of(*one, {"r"});
  auto ext = common_extensions(*one, b, r);
  REQUIRE(ext.size() == 1);
  CHECK(compose(*one, b, ext[0].gamma) == compose(*one, r, ext[0].eta));
  CHECK(one->name(ext[0].gamma.word[0]) == "r");
  CHECK(one->name(ext[0].eta.word[0]) == "b");
}

TEST_CASE("products of generators") {
  auto t1 = graph("t1.json");
  auto e = path_of(*t1, {"e"});
  CHECK(equals(gen_star(*t1, e) * gen(*t1, e), unit(*t1, t1->vertex("v"))));

  auto t5 = graph("t5.json");
  const auto& G = *t5;
  auto f = path_of(G, {"f"}), g = path_of(G, {"g"});
  CHECK((gen_star(G, f) * gen(G, g)).is_zero());
  CHECK(equals(gen(G, f) * gen_star(G, f) + gen(G, g) * gen_star(G, g), unit(G, G.vertex("w"))));
  CHECK(sub(unit(G, G.vertex("w")), sum_ss_star(G, G.vertex("w"), Degree{3})).is_zero());
  CHECK_FALSE(unit(G, G.vertex("w")).is_zero());
  CHECK(equals(gen(G, f) * unit(G, f.source), gen(G, f)));
}

TEST_CASE("involution") {
  auto g = graph("t5.json");
  const auto& G = *g;
  auto f = path_of(G, {"f", "a"});
  CHECK(equals(involution(unit(G, G.vertex("w"))), unit(G, G.vertex("w"))));
  CHECK(equals(involution(gen(G, f)), gen_star(G, f)));
  Rng rng(21);
  for (const auto& s : corpus(8, 4, 4, 4)) {
    auto k = KGraph::build(s);
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(*k, rng), b = random_element(*k, rng);
      CHECK(equals(involution(involution(a)), a));
      CHECK(equals(involution(a * b), involution(b) * involution(a)));
    }
  }
}

TEST_CASE("normal form") {
  auto t1 = graph("t1.json");
  auto e = path_of(*t1, {"e"});
  CHECK(to_text(normal_form(unit(*t1, t1->vertex("v")), Degree{1})) == to_text(gen(*t1, e) * gen_star(*t1, e)));
  auto t5 = graph("t5.json");
  CHECK(to_text(normal_form(unit(*t5, t5->vertex("w")), Degree{1})) == "s(f)adj(s(f)) + s(g)adj(s(g))");
  auto legs = gen(*t5, path_of(*t5, {"f"})) * gen_star(*t5, path_of(*t5, {"f"}));
  CHECK(to_text(normal_form(legs, Degree{1})) == to_text(legs));
  CHECK_THROWS_AS(normal_form(legs, Degree{0}), std::invalid_argument);

  Rng rng(4);
  for (const auto& s : corpus(9, 4, 4, 4)) {
    auto g = KGraph::build(s);
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(*g, rng);
      auto m = Degree::ones(g->k()) + Degree::unit(g->k(), 1);
      auto nf = normal_form(a, m);
      CHECK(equals(nf, a));
      for (const auto& [x, c] : nf.terms()) CHECK(x.nu.degree == m);
      CHECK(to_text(normal_form(nf, m)) == to_text(nf));
    }
  }
}

TEST_CASE("graded components") {
  auto one = graph("builtin:onevertex:2:1,1");
  const auto& G = *one;
  auto x = gen(G, path_of(G, {"b"})) * gen_star(G, path_of(G, {"r"}));
  CHECK(equals(graded_component(x, DegreeDelta::parse("(1,-1)")), x));
  CHECK(graded_component(x, DegreeDelta::parse("(0,0)")).is_zero());
  auto v = unit(G, G.vertex("v"));
  CHECK(equals(graded_component(v, DegreeDelta(2)), v));

  auto t5 = graph("t5.json");
  auto f = path_of(*t5, {"f"});
  auto ff = gen(*t5, f) * gen_star(*t5, f);
  CHECK(equals(graded_component(ff + gen(*t5, f), DegreeDelta(1)), ff));

  Rng rng(6);
  for (const auto& s : corpus(12, 3, 3, 4)) {
    auto g = KGraph::build(s);
    auto a = random_element(*g, rng);
    std::set<DegreeDelta> grades;
    for (const auto& [m, c] : a.terms()) grades.insert(difference(m.mu.degree, m.nu.degree));
    Element total(*g);
    for (const auto& n : grades) total = total + graded_component(a, n);
    CHECK(equals(total, a));
  }
}

TEST_CASE("compress") {
  auto t5 = graph("t5.json");
  const auto& G = *t5;
  auto f = path_of(G, {"f"}), g = path_of(G, {"g"});
  auto a = scale(2, gen(G, f) * gen_star(G, f)) + scale(3, gen(G, g) * gen_star(G, g));
  auto r = compress(f, a, f);
  CHECK(to_text(r.value) == "2*p(u1)");
  CHECK(r.matches);
  CHECK(r.nonzero);
  CHECK(r.coefficient == 2);
  CHECK_THROWS_AS(compress(f, a, g), std::invalid_argument);

  auto w = vertex_path(G, G.vertex("w"));
  CHECK(equals(compress(w, unit(G, G.vertex("w")), w).value, unit(G, G.vertex("w"))));

  auto t1 = graph("t1.json");
  auto e = path_of(*t1, {"e"});
  CHECK(equals(compress(e, gen(*t1, e) * gen_star(*t1, e), e).value, unit(*t1, t1->vertex("v"))));
}

TEST_CASE("local units") {
  auto t5 = graph("t5.json");
  const auto& G = *t5;
  auto pw = unit(G, G.vertex("w"));
  CHECK(equals(local_unit(pw), pw));
  auto f = gen(G, path_of(G, {"f"}));
  CHECK(equals(local_unit(f), pw + unit(G, G.vertex("u1"))));
  CHECK(local_unit(Element(G)).is_zero());
  Rng rng(13);
  for (const auto& s : corpus(14, 3, 3, 4)) {
    auto g = KGraph::build(s);
    auto a = random_element(*g, rng);
    auto u = local_unit(a);
    CHECK(equals(u * a, a));
    CHECK(equals(a * u, a));
  }
}

TEST_CASE("graded ideals and the socle") {
  auto t5 = graph("t5.json");
  const auto& G = *t5;
  auto h = VertexSet::of(G, {G.vertex("u1")});
  auto f = path_of(G, {"f"});
  CHECK(in_graded_ideal(gen(G, f) * gen_star(G, f), h));
  CHECK_FALSE(in_graded_ideal(unit(G, G.vertex("w")), h));
  CHECK(in_graded_ideal(Element(G), h));
  CHECK_THROWS(in_graded_ideal(unit(G, G.vertex("w")), VertexSet::of(G, {G.vertex("w")})));
  CHECK_FALSE(in_socle(unit(G, G.vertex("w"))));
  CHECK(in_socle(Element(G)));

  auto omega = graph("builtin:omega:1");
  auto x = enumerate_paths(*omega, omega->lattice_vertex(Degree{0}), Degree{2})[0];
  CHECK(in_socle(gen(*omega, x) + gen_star(*omega, x)));
}

TEST_CASE("matrix units") {
  auto omega = graph("builtin:omega:1");
  const auto& G = *omega;
  auto v = G.lattice_vertex(Degree{0});
  auto e = [&](int i, int j) { return matrix_unit(G, v, i, j); };
  CHECK(equals(e(2, 2), unit(G, G.lattice_vertex(Degree{2}))));
  CHECK(equals(e(0, 1) * e(1, 2), e(0, 2)));
  CHECK((e(0, 1) * e(2, 3)).is_zero());
  CHECK(equals(involution(e(1, 3)), e(3, 1)));
  CHECK_THROWS(matrix_unit(*graph("t1.json"), Vertex{0}, 0, 1));

  auto comb = graph("builtin:comb:2");
  for (const char* rep : {"t1", "c2@1"}) {
    auto w = comb->vertex(rep);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) CHECK(equals(matrix_unit(*comb, w, i, j) * matrix_unit(*comb, w, j, l), matrix_unit(*comb, w, i, l)));
  }
}

TEST_CASE("text and json output") {
  auto t5 = graph("t5.json");
  const auto& G = *t5;
  auto f = path_of(G, {"f"});
  CHECK(to_text(Element(G)) == "0");
  CHECK(to_text(scale(2, gen(G, f) * gen_star(G, f)) - unit(G, G.vertex("u1"))) == "-s(a)adj(s(a)) + 2*s(f)adj(s(f))");
  CHECK(to_json(gen(G, f)).find("\"mu\"") != std::string::npos);
}

TEST_CASE("multiplication is associative on random monomial triples") {
  Rng rng(31);
  for (const auto& s : corpus(32, 2, 2, 4)) {
    auto g = KGraph::build(s);
    const auto& G = *g;
    std::vector<Path> paths;
    for (auto v : G.vertices())
      for (const auto& d : {Degree::zero(G.k()), Degree::unit(G.k(), 1), Degree::unit(G.k(), G.k()), Degree::ones(G.k())})
        for (auto& p : enumerate_paths(G, v, d)) paths.push_back(p);
    auto monomial_at = [&](std::optional<Vertex> range) {
      std::vector<const Path*> mus, nus;
      for (const auto& p : paths)
        if (!range || p.range == *range) mus.push_back(&p);
      if (mus.empty())
        for (const auto& p : paths) mus.push_back(&p);
      const auto* mu = mus[std::uniform_int_distribution<std::size_t>(0, mus.size() - 1)(rng)];
      for (const auto& p : paths)
        if (p.source == mu->source) nus.push_back(&p);
      const auto* nu = nus[std::uniform_int_distribution<std::size_t>(0, nus.size() - 1)(rng)];
      return std::make_pair(monomial(G, *mu, *nu), nu->range);
    };
    for (int t = 0; t < 500; ++t) {
      auto [x, rx] = monomial_at(std::nullopt);
      auto [y, ry] = monomial_at(rx);
      auto [z, rz] = monomial_at(ry);
      CHECK(equals(mul(mul(x, y), z), mul(x, mul(y, z))));
    }
  }
}
