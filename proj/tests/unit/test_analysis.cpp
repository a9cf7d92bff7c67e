#include <doctest.h>

#include "helpers.hpp"
#include "kpt/analysis.hpp"
#include "kpt/closure.hpp"

using namespace kpt;
using namespace kpt::testing;

TEST_CASE("unique paths") {
  auto t1 = graph("t1.json");
  auto u = unique_path(*t1, t1->vertex("v"));
  REQUIRE(u.status == UniquePathResult::Status::Deterministic);
  REQUIRE(u.path);
  CHECK(u.path->kind == InfinitePathDescriptor::Kind::EventuallyPeriodic);

  auto t5 = graph("t5.json");
  auto b = unique_path(*t5, t5->vertex("w"));
  REQUIRE(b.status == UniquePathResult::Status::Branch);
  CHECK(*b.branch_degree == Degree{1});
  CHECK(b.branch_paths.size() == 2);

  auto omega = graph("builtin:omega:2");
  auto r = unique_path(*omega, omega->lattice_vertex(Degree{1, 0}));
  REQUIRE(r.path);
  CHECK(r.path->kind == InfinitePathDescriptor::Kind::RankCertified);
  CHECK(point_at(*omega, omega->lattice_vertex(Degree{1, 0}), Degree{2, 3}) == omega->lattice_vertex(Degree{3, 3}));
}

TEST_CASE("line points") {
  auto omega = graph("builtin:omega:1");
  CHECK(is_line_point(*omega, omega->lattice_vertex(Degree{0})).verdict == Truth::Yes);

  auto t1 = graph("t1.json");
  auto c = is_line_point(*t1, t1->vertex("v"));
  CHECK(c.verdict == Truth::No);
  CHECK(c.reason == LinePointCertificate::Reason::Periodic);
  CHECK(*c.p == Degree{0});
  CHECK(*c.q == Degree{1});

  auto one = graph("builtin:onevertex:2:2,3");
  CHECK(is_line_point(*one, one->vertex("v")).verdict == Truth::No);

  CHECK(line_points(*graph("t5.json")).set.empty());
  CHECK(line_points(*graph("builtin:omega:3")).set.is_all());
  auto comb = graph("builtin:comb:3");
  auto lp = line_points(*comb);
  CHECK(lp.complete());
  CHECK(lp.set.contains(comb->vertex("t1")));
  CHECK(lp.set.contains(comb->vertex("c2@4")));
  CHECK_FALSE(lp.set.contains(comb->vertex("t2")));
}

TEST_CASE("line point equivalence and classes") {
  auto omega = graph("builtin:omega:2");
  auto e = line_point_equivalent(*omega, omega->lattice_vertex(Degree{2, 0}), omega->lattice_vertex(Degree{0, 1}));
  CHECK(e.truth == Truth::Yes);
  CHECK(line_point_classes(*omega).classes.size() == 1);

  auto comb = graph("builtin:comb:2");
  CHECK(line_point_equivalent(*comb, comb->vertex("c1@2"), comb->vertex("c2@2")).truth == Truth::No);
  CHECK(line_point_equivalent(*comb, comb->vertex("t1"), comb->vertex("c1@3")).truth == Truth::Yes);
  for (int n = 1; n <= 4; ++n)
    CHECK(line_point_classes(*graph("builtin:comb:" + std::to_string(n))).classes.size() == static_cast<std::size_t>(n));
  CHECK(line_point_classes(*graph("t5.json")).classes.empty());
}

TEST_CASE("socle verdicts") {
  auto one = graph("builtin:onevertex:2:1,1");
  CHECK(socle_vertices(*one).empty());
  CHECK(socle_is_zero(*one).truth == Truth::Yes);
  auto s = is_semisimple(*one);
  CHECK(s.truth == Truth::No);
  CHECK(s.witness.vertices == std::vector<Vertex>{one->vertex("v")});

  auto omega = graph("builtin:omega:1");
  CHECK(socle_vertices(*omega).is_all());
  auto z = socle_is_zero(*omega);
  CHECK(z.truth == Truth::No);
  CHECK(z.witness.vertices == std::vector<Vertex>{omega->lattice_vertex(Degree{0})});
  CHECK(is_semisimple(*omega).truth == Truth::Yes);
  CHECK(socle_essential(*omega).truth == Truth::Yes);

  CHECK(socle_is_zero(*graph("t5.json")).truth == Truth::Yes);
  CHECK(socle_vertices(*graph("t1.json")).empty());
  CHECK(socle_essential(*graph("t1.json")).truth == Truth::No);
  for (int n = 1; n <= 3; ++n) CHECK(is_semisimple(*graph("builtin:comb:" + std::to_string(n))).truth == Truth::Yes);
}

TEST_CASE("cofinality and aperiodicity") {
  CHECK(is_cofinal_and_aperiodic(*graph("builtin:omega:1")).truth == Truth::Yes);
  CHECK(is_cofinal_and_aperiodic(*graph("builtin:comb:2")).truth == Truth::No);
  CHECK(is_cofinal_and_aperiodic(*graph("t1.json")).truth == Truth::No);
  CHECK(has_no_periodic_paths(*graph("builtin:comb:2")).truth == Truth::Yes);
  CHECK(has_no_periodic_paths(*graph("t5.json")).truth == Truth::No);
}
