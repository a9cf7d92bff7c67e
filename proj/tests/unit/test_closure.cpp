#include <doctest.h>

#include "helpers.hpp"
#include "kpt/analysis.hpp"
#include "kpt/closure.hpp"
#include "kpt/validate.hpp"
#include "random_graphs.hpp"

using namespace kpt;
using namespace kpt::testing;

namespace {

VertexSet named(const KGraph& g, std::initializer_list<const char*> names) {
  std::vector<Vertex> vs;
  for (auto n : names) vs.push_back(g.vertex(n));
  return VertexSet::of(g, vs);
}

}  // namespace

TEST_CASE("closures on T5") {
  auto g = graph("t5.json");
  const auto& G = *g;
  CHECK(hereditary_closure(VertexSet(G)).empty());
  CHECK(hereditary_closure(named(G, {"w"})).is_all());
  CHECK(saturated_hereditary_closure(named(G, {"u1"})) == named(G, {"u1"}));
  CHECK(saturated_hereditary_closure(named(G, {"u1", "u2"})).is_all());
  CHECK(is_hereditary(named(G, {"u1"})));
  CHECK_FALSE(is_hereditary(named(G, {"w"})));
  CHECK_FALSE(is_saturated(named(G, {"u1", "u2"})));
}

TEST_CASE("closures on lattice and level graphs") {
  auto omega = graph("builtin:omega:1");
  auto origin = VertexSet::of(*omega, {omega->lattice_vertex(Degree{0})});
  CHECK(hereditary_closure(origin).is_all());

  auto comb = graph("builtin:comb:2");
  CHECK(saturated_hereditary_closure(line_points(*comb).set).is_all());
  auto c2 = VertexSet::of(*comb, {comb->vertex("c2@1")});
  auto h = hereditary_closure(c2);
  CHECK(h.contains(comb->vertex("c2@5")));
  CHECK_FALSE(h.contains(comb->vertex("c1@5")));
  CHECK_FALSE(h.is_bounded());
}

TEST_CASE("connect witness") {
  auto g = graph("t5.json");
  const auto& G = *g;
  auto w = named(G, {"u1", "u2"});
  auto p = connect_witness(G, G.vertex("w"), w);
  CHECK(path_name(G, p) == "f");
  CHECK(connect_witness(G, G.vertex("u1"), w).is_vertex());

  auto comb = graph("builtin:comb:2");
  auto lp = line_points(*comb).set;
  auto q = connect_witness(*comb, comb->vertex("t2"), lp);
  CHECK(q.range == comb->vertex("t2"));
  CHECK(lp.contains(q.source));
}

TEST_CASE("quotient graphs") {
  auto g = graph("t5.json");
  const auto& G = *g;
  CHECK(to_json(quotient_graph(G, VertexSet(G))) == to_json(load_graph_spec(data_path("t5.json"))));
  auto q = std::get<FiniteSkeleton>(quotient_graph(G, named(G, {"u1"})));
  CHECK(q.vertices == std::vector<std::string>{"w", "u2"});
  std::vector<std::string> edges;
  for (const auto& e : q.edges) edges.push_back(e.id);
  CHECK(edges == std::vector<std::string>{"g", "c"});
  CHECK(validate_presentation(q).ok());
}

TEST_CASE("closure agrees with the subset scan on random graphs") {
  for (const auto& s : corpus(17, 8, 8, 4)) {
    auto g = KGraph::build(s);
    auto all = all_saturated_hereditary(*g);
    for (const auto& h : all) {
      CHECK(is_hereditary(to_set(*g, h)));
      CHECK(is_saturated(to_set(*g, h)));
    }
    const auto n = g->vertex_count();
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::vector<bool> w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = (bits >> i) & 1u;
      auto c = saturated_hereditary_closure(to_set(*g, w));
      CHECK(c == to_set(*g, brute_closure(*g, w)));
      CHECK(saturated_hereditary_closure(c) == c);
    }
  }
}
