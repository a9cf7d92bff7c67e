#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "kpt/validate.hpp"
#include "random_graphs.hpp"

using namespace kpt;
using namespace kpt::testing;

TEST_CASE("omega paths are determined by their endpoints") {
  auto g1 = graph("builtin:omega:1");
  const auto& G = *g1;
  auto x = enumerate_paths(G, G.lattice_vertex(Degree{0}), Degree{1});
  REQUIRE(x.size() == 1);
  auto y = enumerate_paths(G, G.lattice_vertex(Degree{1}), Degree{1});
  REQUIRE(y.size() == 1);
  auto xy = compose(G, x[0], y[0]);
  CHECK(xy.range == G.lattice_vertex(Degree{0}));
  CHECK(xy.source == G.lattice_vertex(Degree{2}));

  auto three = enumerate_paths(G, G.lattice_vertex(Degree{0}), Degree{3})[0];
  auto [head, tail] = factor(G, three, Degree{1});
  CHECK(head.source == G.lattice_vertex(Degree{1}));
  CHECK(tail.range == G.lattice_vertex(Degree{1}));
  CHECK(tail.source == G.lattice_vertex(Degree{3}));

  auto g2 = graph("builtin:omega:2");
  CHECK(count_paths(*g2, g2->lattice_vertex(Degree{0, 0}), Degree{1, 1}) == 1);
}

TEST_CASE("vertex paths are identities") {
  auto g = graph("t5.json");
  auto f = path_of(*g, {"f"});
  CHECK(compose(*g, vertex_path(*g, f.range), f) == f);
  CHECK(compose(*g, f, vertex_path(*g, f.source)) == f);
  auto [head, tail] = factor(*g, f, Degree{0});
  CHECK(head == vertex_path(*g, f.range));
  CHECK(tail == f);
  auto zero = enumerate_paths(*g, g->vertex("w"), Degree{0});
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_vertex());
}

TEST_CASE("enumerate paths on T5") {
  auto g = graph("t5.json");
  auto paths = enumerate_paths(*g, g->vertex("w"), Degree{1});
  std::set<std::string> names;
  for (const auto& p : paths) names.insert(path_name(*g, p));
  CHECK(names == std::set<std::string>{"f", "g"});
  CHECK(count_paths(*g, g->vertex("w"), Degree{3}) == 2);
  CHECK_THROWS(compose(*g, path_of(*g, {"f"}), path_of(*g, {"g"})));
}

TEST_CASE("one-vertex 2-graph composes through its square") {
  auto g = graph("builtin:onevertex:2:1,1");
  const auto& G = *g;
  auto b = path_of(G, {"b"}), r = path_of(G, {"r"});
  auto br = compose(G, b, r);
  CHECK(br.degree == Degree{1, 1});
  CHECK(compose(G, r, b) == br);
  CHECK(path_name(G, br) == "b.r");
  auto [head, tail] = factor(G, br, Degree{0, 1});
  CHECK(head == r);
  CHECK(tail == b);
  CHECK(compose(G, head, tail) == br);
  auto rb = refactor(G, br, {2, 1});
  CHECK(G.name(rb[0]) == "r");
  CHECK(G.name(rb[1]) == "b");
  CHECK(refactor(G, br, {1, 2}) == br.word);
}

TEST_CASE("refactoring (1,1) paths round-trips on random 2-graphs") {
  Rng rng(11);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    auto g = KGraph::build(random_2graph(rng));
    for (auto v : g->vertices())
      for (const auto& l : enumerate_paths(*g, v, Degree{1, 1})) {
        auto swapped = refactor(*g, l, {2, 1});
        CHECK(g->info(swapped[0]).color == 2);
        CHECK(reorder(*g, swapped, {1, 2}) == l.word);
        ++checked;
      }
  }
  CHECK(checked > 0);
}

TEST_CASE("validation") {
  CHECK(validate_presentation(load_graph_spec("builtin:onevertex:2:1,1")).ok());
  CHECK(validate_presentation(load_graph_spec("builtin:comb:2")).ok());
  CHECK(validate_presentation(load_graph_spec(data_path("comb2.json"))).ok());
  auto broken = validate_presentation(load_graph_spec(data_path("broken_square.json")));
  REQUIRE_FALSE(broken.ok());
  for (const auto& v : broken.violations) CHECK(v.kind == ViolationKind::NonBijectiveSquare);

  FiniteSkeleton s;
  s.k = 1;
  s.vertices = {"a", "b"};
  s.edges = {{"e", 1, "a", "b"}};
  auto r = validate_presentation(s);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations[0].kind == ViolationKind::SourceExists);
  s.edges.push_back({"x", 1, "b", "nowhere"});
  bool dangling = false;
  for (const auto& v : validate_presentation(s).violations) dangling |= v.kind == ViolationKind::DanglingEndpoint;
  CHECK(dangling);
}

TEST_CASE("random corpus graphs validate") {
  for (const auto& s : corpus(3, 10, 10)) CHECK(validate_presentation(s).ok());
}

TEST_CASE("graph spec input") {
  CHECK_THROWS_AS(load_graph_spec(data_path("malformed.json")), SpecError);
  CHECK_THROWS_AS(load_graph_spec(data_path("missing.json")), SpecError);
  CHECK_THROWS_AS(load_graph_spec("builtin:omega:0"), SpecError);
  CHECK_THROWS_AS(load_graph_spec("builtin:nothing:1"), SpecError);
  CHECK_THROWS_AS(parse_graph_json("{\"format_version\": 1, \"kind\": \"mystery\"}"), SpecError);

  for (const char* spec : {"t1.json", "t5.json", "comb2.json"}) {
    auto p = load_graph_spec(data_path(spec));
    CHECK(to_json(parse_graph_json(to_json(p))) == to_json(p));
  }
  for (const char* uri : {"builtin:omega:2", "builtin:comb:3", "builtin:onevertex:2:2,2"}) {
    auto p = load_graph_spec(uri);
    CHECK(to_json(parse_graph_json(to_json(p))) == to_json(p));
  }
}

TEST_CASE("dot export") {
  auto dot = to_dot(*graph("t5.json"));
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 3 + 4 + 2);
  CHECK(dot.find("\"w\" -> \"u1\"") != std::string::npos);
  CHECK(to_dot(*graph("builtin:comb:2"), 3) == read_file(std::string(KPT_GOLDEN) + "/comb2.dot"));
}
