#include "kpt/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "block.hpp"
#include "kpt/paths.hpp"

namespace kpt {

namespace {

constexpr std::size_t kMaxSearch = 200000;

std::vector<Edge> all_edges(const KGraph& g, Vertex v) {
  std::vector<Edge> out;
  for (int c = 1; c <= g.k(); ++c)
    for (auto e : g.edges_at(v, c)) out.push_back(e);
  return out;
}

// The unique path of degree n at a deterministic vertex (first edge by name
// wherever there is a choice).
Path walk(const KGraph& g, Vertex base, const Degree& n) {
  Path p = vertex_path(g, base);
  p.degree = n;
  for (int c : canonical_colors(n)) {
    auto e = g.edges_at(p.source, c).front();
    p.word.push_back(e);
    p.source = g.source(e);
  }
  return p;
}

Degree scaled(const Degree& d, std::int64_t t) {
  Degree out(d.k());
  for (int i = 0; i < d.k(); ++i) out[i] = d[i] * t;
  return out;
}

bool branches_somewhere(const KGraph& g, const VertexSet& t) {
  auto branches = [&](Vertex v) {
    for (int c = 1; c <= g.k(); ++c)
      if (g.out_degree(v, c) != 1) return true;
    return false;
  };
  switch (g.kind()) {
    case GraphKind::Finite:
      for (auto v : t.members())
        if (branches(v)) return true;
      return false;
    case GraphKind::Level: {
      for (auto v : g.core_vertices())
        if (t.contains(v) && branches(v)) return true;
      const detail::Block block(g);
      std::vector<VertexSet::Mask> masks = t.prefix();
      masks.insert(masks.end(), t.cycle().begin(), t.cycle().end());
      for (const auto& m : masks)
        for (std::size_t type = 0; type < block.width; ++type)
          if (m[type])
            for (int c = 1; c <= g.k(); ++c)
              if (block.degree(type, c) != 1) return true;
      return false;
    }
    case GraphKind::Lattice:
      return false;
  }
  return false;
}

// Shortest path (by edge count) from v to the first vertex satisfying `stop`.
std::optional<std::pair<Vertex, std::vector<Edge>>> bfs_to(const KGraph& g, Vertex v,
                                                            const std::function<bool(Vertex)>& stop) {
  std::map<Vertex, std::pair<Vertex, Edge>> pred;
  std::set<Vertex> seen{v};
  std::deque<Vertex> queue{v};
  while (!queue.empty() && seen.size() < kMaxSearch) {
    auto u = queue.front();
    queue.pop_front();
    if (stop(u)) {
      std::vector<Edge> word;
      for (auto x = u; x != v;) {
        auto [prev, e] = pred.at(x);
        word.push_back(e);
        x = prev;
      }
      std::reverse(word.begin(), word.end());
      return std::pair{u, word};
    }
    for (auto e : all_edges(g, u)) {
      auto s = g.source(e);
      if (seen.insert(s).second) {
        pred.emplace(s, std::pair{u, e});
        queue.push_back(s);
      }
    }
  }
  return std::nullopt;
}

Degree degree_of(const KGraph& g, const std::vector<Edge>& word) {
  Degree d(g.k());
  for (auto e : word) d[g.color(e) - 1] += 1;
  return d;
}

InfinitePathDescriptor eventually_periodic(const KGraph& g, Vertex v, const Degree& p, const Degree& q) {
  InfinitePathDescriptor x;
  x.base = v;
  x.kind = InfinitePathDescriptor::Kind::EventuallyPeriodic;
  x.prefix = walk(g, v, p);
  x.cycle = walk(g, x.prefix->source, q - p);
  x.p = p;
  x.q = q;
  return x;
}

std::optional<InfinitePathDescriptor> level_rank1(const KGraph& g, Vertex v) {
  // k = 1: follow successors. A block type seen again one or more levels
  // deeper means the walk descends forever; the same vertex again means it cycles.
  std::map<Vertex, std::int64_t> seen_vertex;
  std::map<std::size_t, std::pair<std::int64_t, std::int64_t>> seen_type;  // type -> (step, level)
  auto u = v;
  for (std::int64_t step = 0;; ++step) {
    if (auto it = seen_vertex.find(u); it != seen_vertex.end())
      return eventually_periodic(g, v, Degree{it->second}, Degree{step});
    seen_vertex.emplace(u, step);
    if (auto pos = g.block_position(u)) {
      if (auto it = seen_type.find(pos->type); it != seen_type.end() && it->second.second < pos->level) {
        InfinitePathDescriptor x;
        x.base = v;
        x.kind = InfinitePathDescriptor::Kind::RankCertified;
        x.successor_rule = "unique successor inside the periodic block from step " + std::to_string(it->second.first);
        x.rank = "block level, +" + std::to_string(pos->level - it->second.second) + " every " +
                 std::to_string(step - it->second.first) + " steps";
        return x;
      }
      seen_type.emplace(pos->type, std::pair{step, pos->level});
    }
    u = g.source(g.edges_at(u, 1).front());
  }
}

std::optional<InfinitePathDescriptor> search_revisit(const KGraph& g, Vertex v, int bound) {
  const int k = g.k();
  std::vector<Degree> rays{Degree::ones(k)};
  if (k > 1)
    for (int c = 1; c <= k; ++c) rays.push_back(Degree::unit(k, c));
  for (const auto& d : rays) {
    std::map<Vertex, std::int64_t> seen;
    auto u = v;
    for (std::int64_t t = 0; t <= bound; ++t) {
      if (auto it = seen.find(u); it != seen.end())
        return eventually_periodic(g, v, scaled(d, it->second), scaled(d, t));
      seen.emplace(u, t);
      u = point_at(g, u, d);
    }
  }
  // Degrees in order of total size; x(m) from x(m - e_c).
  std::map<Degree, Vertex> x{{Degree(k), v}};
  std::map<Vertex, Degree> first{{v, Degree(k)}};
  std::vector<Degree> layer{Degree(k)};
  for (int total = 1; total <= bound && x.size() < kMaxSearch; ++total) {
    std::set<Degree> next;
    for (const auto& m : layer)
      for (int c = 1; c <= k; ++c) next.insert(m + Degree::unit(k, c));
    layer.assign(next.begin(), next.end());
    for (const auto& m : layer) {
      int c = 1;
      while (m.at_color(c) == 0) ++c;
      auto prev = x.at(m - Degree::unit(k, c));
      auto u = g.source(g.edges_at(prev, c).front());
      x.emplace(m, u);
      if (auto it = first.find(u); it != first.end()) {
        InfinitePathDescriptor d;
        d.base = v;
        if (it->second.leq(m)) return eventually_periodic(g, v, it->second, m);
        d.kind = InfinitePathDescriptor::Kind::ShiftPeriodic;
        d.p = it->second;
        d.q = m;
        return d;
      }
      first.emplace(u, m);
    }
  }
  return std::nullopt;
}

}  // namespace

int default_depth_bound() {
  if (const char* env = std::getenv("KPT_DEPTH_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 1000000) return static_cast<int>(v);
  }
  return 64;
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "yes";
    case Truth::No: return "no";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

Vertex point_at(const KGraph& g, Vertex base, const Degree& m) { return walk(g, base, m).source; }

Path segment(const KGraph& g, const InfinitePathDescriptor& x, const Degree& m, const Degree& n) {
  if (!m.leq(n)) throw std::invalid_argument("segment needs m <= n");
  auto whole = walk(g, x.base, n);
  return factor(g, whole, m).second;
}

UniquePathResult unique_path(const KGraph& g, Vertex v, int depth_bound) {
  UniquePathResult r;
  r.bound = depth_bound;
  const auto tv = hereditary_closure(VertexSet::of(g, {v}));
  if (branches_somewhere(g, tv)) {
    auto hit = bfs_to(g, v, [&](Vertex u) {
      for (int c = 1; c <= g.k(); ++c)
        if (g.out_degree(u, c) >= 2) return true;
      return false;
    });
    if (!hit) return r;
    auto [u, word] = *hit;
    int c = 1;
    while (g.out_degree(u, c) < 2) ++c;
    auto es = g.edges_at(u, c);
    auto w1 = word, w2 = word;
    w1.push_back(es[0]);
    w2.push_back(es[1]);
    r.status = UniquePathResult::Status::Branch;
    r.branch_degree = degree_of(g, w1);
    r.branch_paths = {make_path(g, w1), make_path(g, w2)};
    return r;
  }
  r.status = UniquePathResult::Status::Deterministic;
  switch (g.kind()) {
    case GraphKind::Lattice: {
      InfinitePathDescriptor x;
      x.base = v;
      x.kind = InfinitePathDescriptor::Kind::RankCertified;
      x.successor_rule = "x(m) = " + g.name(v) + " + m";
      x.rank = "coordinate sum";
      r.path = x;
      break;
    }
    case GraphKind::Level:
      if (g.k() == 1) {
        r.path = level_rank1(g, v);
        break;
      }
      [[fallthrough]];
    case GraphKind::Finite:
      r.path = search_revisit(g, v, g.is_finite() ? static_cast<int>(g.vertex_count()) + 1 : depth_bound);
      break;
  }
  if (!r.path) r.status = UniquePathResult::Status::Unknown;
  return r;
}

LinePointCertificate is_line_point(const KGraph& g, Vertex v, int depth_bound) {
  LinePointCertificate c;
  c.vertex = v;
  c.bound = depth_bound;
  auto u = unique_path(g, v, depth_bound);
  switch (u.status) {
    case UniquePathResult::Status::Branch:
      c.verdict = Truth::No;
      c.reason = LinePointCertificate::Reason::Branch;
      c.m = u.branch_degree;
      c.branch = u.branch_paths;
      break;
    case UniquePathResult::Status::Deterministic:
      c.path = u.path;
      if (u.path->aperiodic()) {
        c.verdict = Truth::Yes;
        c.reason = LinePointCertificate::Reason::Line;
      } else {
        c.verdict = Truth::No;
        c.reason = LinePointCertificate::Reason::Periodic;
        c.p = u.path->p;
        c.q = u.path->q;
        c.revisited = point_at(g, v, *c.p);
      }
      break;
    case UniquePathResult::Status::Unknown:
      c.verdict = Truth::Unknown;
      c.reason = LinePointCertificate::Reason::Bound;
      break;
  }
  return c;
}

LinePoints line_points(const KGraph& g, int depth_bound) {
  LinePoints lp{VertexSet(g), {}, {}};
  switch (g.kind()) {
    case GraphKind::Lattice:
      lp.set = VertexSet::all(g);
      lp.certificates.push_back(is_line_point(g, g.lattice_vertex(Degree(g.k())), depth_bound));
      return lp;
    case GraphKind::Finite: {
      std::vector<Vertex> yes;
      for (auto v : g.vertices()) {
        lp.certificates.push_back(is_line_point(g, v, depth_bound));
        if (lp.certificates.back().verdict == Truth::Yes) yes.push_back(v);
        if (lp.certificates.back().verdict == Truth::Unknown) lp.unknown.push_back(v);
      }
      lp.set = VertexSet::of(g, yes);
      return lp;
    }
    case GraphKind::Level: {
      VertexSet::Mask core(g.core_vertices().size(), false);
      for (auto v : g.core_vertices()) {
        lp.certificates.push_back(is_line_point(g, v, depth_bound));
        core[v.index] = lp.certificates.back().verdict == Truth::Yes;
        if (lp.certificates.back().verdict == Truth::Unknown) lp.unknown.push_back(v);
      }
      VertexSet::Mask block(g.block_types().size(), false);
      for (std::size_t t = 0; t < block.size(); ++t) {
        auto v = g.block_vertex(g.first_block_level(), t);
        lp.certificates.push_back(is_line_point(g, v, depth_bound));
        block[t] = lp.certificates.back().verdict == Truth::Yes;
        if (lp.certificates.back().verdict == Truth::Unknown) lp.unknown.push_back(v);
      }
      lp.set = VertexSet::level(g, core, {}, {block});
      return lp;
    }
  }
  return lp;
}

Verdict3 line_point_equivalent(const KGraph& g, Vertex v, Vertex w, int depth_bound) {
  for (auto x : {v, w})
    if (is_line_point(g, x, depth_bound).verdict != Truth::Yes)
      throw std::invalid_argument("vertex " + g.name(x) + " is not a certified line point");
  Witness wit;
  if (g.kind() == GraphKind::Lattice) {
    auto a = g.lattice_coords(v), b = g.lattice_coords(w);
    auto j = join(a, b);
    wit.vertices = {g.lattice_vertex(j)};
    wit.m = j - a;
    wit.n = j - b;
    return Verdict3::yes(wit);
  }
  const auto tw = hereditary_closure(VertexSet::of(g, {w}));
  const auto tv = hereditary_closure(VertexSet::of(g, {v}));
  if (tv.intersect(tw).empty()) {
    wit.vertices = {v, w};
    wit.note = "the unique paths never meet";
    return Verdict3::no(wit);
  }
  auto from_v = bfs_to(g, v, [&](Vertex u) { return tw.contains(u); });
  if (!from_v) return Verdict3::unknown(depth_bound, "meeting vertex not found within search limit");
  auto meet = from_v->first;
  auto from_w = bfs_to(g, w, [&](Vertex u) { return u == meet; });
  if (!from_w) return Verdict3::unknown(depth_bound, "meeting vertex not found within search limit");
  wit.vertices = {meet};
  wit.m = degree_of(g, from_v->second);
  wit.n = degree_of(g, from_w->second);
  return Verdict3::yes(wit);
}

ClassPartition line_point_classes(const KGraph& g, const LinePoints& lp) {
  ClassPartition out;
  out.complete = lp.complete();
  if (lp.set.empty()) {
    if (!out.complete) out.note = "line points undecided at some vertices";
    return out;
  }
  if (g.kind() == GraphKind::Lattice) {
    auto origin = g.lattice_vertex(Degree(g.k()));
    out.classes.push_back({origin, lp.set, saturated_hereditary_closure(VertexSet::of(g, {origin}))});
    return out;
  }
  std::vector<Vertex> candidates;
  if (g.kind() == GraphKind::Finite) {
    candidates = lp.set.members();
  } else {
    for (auto v : g.core_vertices())
      if (lp.set.contains(v)) candidates.push_back(v);
    // Every class has a member within one block width of the first block level.
    const auto width = static_cast<std::int64_t>(g.block_types().size());
    for (std::int64_t l = 0; l <= width; ++l)
      for (std::size_t t = 0; t < g.block_types().size(); ++t) {
        auto v = g.block_vertex(g.first_block_level() + l, t);
        if (lp.set.contains(v)) candidates.push_back(v);
      }
    out.note = "representatives searched down to block level " + std::to_string(g.first_block_level() + width);
  }
  std::vector<VertexSet> reach;
  for (auto v : candidates) {
    const auto tv = hereditary_closure(VertexSet::of(g, {v}));
    bool placed = false;
    for (std::size_t i = 0; i < out.classes.size() && !placed; ++i)
      placed = !tv.intersect(reach[i]).empty();
    if (placed) continue;
    auto closure = saturated_hereditary_closure(VertexSet::of(g, {v}));
    out.classes.push_back({v, lp.set.intersect(closure), closure});
    reach.push_back(tv);
  }
  return out;
}

ClassPartition line_point_classes(const KGraph& g) { return line_point_classes(g, line_points(g)); }

VertexSet socle_vertices(const KGraph& g, const LinePoints& lp) {
  (void)g;
  return saturated_hereditary_closure(lp.set);
}

VertexSet socle_vertices(const KGraph& g) { return socle_vertices(g, line_points(g)); }

Verdict3 socle_is_zero(const KGraph& g, const LinePoints& lp) {
  if (auto v = lp.set.some_member()) {
    Witness w;
    w.vertices = {*v};
    w.note = "line point " + g.name(*v);
    return Verdict3::no(w);
  }
  if (!lp.complete()) return Verdict3::unknown(lp.certificates.empty() ? 0 : lp.certificates.front().bound,
                                               "line points undecided at some vertices");
  Witness w;
  w.note = "no line points";
  return Verdict3::yes(w);
}

Verdict3 socle_is_zero(const KGraph& g) { return socle_is_zero(g, line_points(g)); }

Verdict3 is_semisimple(const KGraph& g, const LinePoints& lp) {
  auto s = socle_vertices(g, lp);
  if (s.is_all()) {
    Witness w;
    w.note = "closure of the line points is every vertex";
    return Verdict3::yes(w);
  }
  if (!lp.complete()) return Verdict3::unknown(lp.certificates.front().bound, "line points undecided at some vertices");
  Witness w;
  if (auto v = s.some_non_member()) w.vertices = {*v};
  w.note = "vertex outside the closure of the line points";
  return Verdict3::no(w);
}

Verdict3 is_semisimple(const KGraph& g) { return is_semisimple(g, line_points(g)); }

Verdict3 socle_essential(const KGraph&, const LinePoints& lp) {
  auto r = backward_reach(lp.set);
  if (r.is_all()) {
    Witness w;
    w.note = "every vertex connects to a line point";
    return Verdict3::yes(w);
  }
  if (!lp.complete()) return Verdict3::unknown(lp.certificates.front().bound, "line points undecided at some vertices");
  Witness w;
  if (auto v = r.some_non_member()) w.vertices = {*v};
  w.note = "vertex with no path to a line point";
  return Verdict3::no(w);
}

Verdict3 socle_essential(const KGraph& g) { return socle_essential(g, line_points(g)); }

namespace {

// Finite graphs: cofinality is decided on the graph of degree-(1,...,1)
// paths, whose cycles carry every infinite path.
std::optional<Verdict3> finite_cofinality(const KGraph& g) {
  const auto n = g.vertex_count();
  auto reach = [&](Vertex v, bool diagonal, bool strict) {
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue;
    auto push_succ = [&](Vertex u) {
      std::vector<Vertex> succ;
      if (diagonal)
        for (const auto& p : enumerate_paths(g, u, Degree::ones(g.k()))) succ.push_back(p.source);
      else
        for (auto e : all_edges(g, u)) succ.push_back(g.source(e));
      for (auto s : succ)
        if (!seen[s.index]) {
          seen[s.index] = true;
          queue.push_back(s);
        }
    };
    if (strict) {
      push_succ(v);
    } else {
      seen[v.index] = true;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      push_succ(u);
    }
    return seen;
  };
  std::vector<Vertex> tails;
  for (auto v : g.vertices())
    if (reach(v, true, true)[v.index]) tails.push_back(v);
  for (auto v : g.vertices()) {
    auto r = reach(v, false, false);
    for (auto t : tails)
      if (!r[t.index]) {
        Witness w;
        w.vertices = {v, t};
        w.note = "not cofinal: " + g.name(v) + " has no path to the infinite paths cycling through " + g.name(t);
        return Verdict3::no(w);
      }
  }
  return std::nullopt;
}

// k = 1 finite graphs: a vertex has an aperiodic infinite path iff it reaches
// a strongly connected component that is more than a single cycle.
std::optional<Verdict3> finite_aperiodicity1(const KGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<bool>> r(n);
  for (auto v : g.vertices()) {
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{v};
    seen[v.index] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto e : g.edges_at(u, 1))
        if (!seen[g.source(e).index]) {
          seen[g.source(e).index] = true;
          queue.push_back(g.source(e));
        }
    }
    r[v.index] = seen;
  }
  std::vector<bool> rich(n, false);
  for (auto v : g.vertices()) {
    int inside = 0;
    for (auto e : g.edges_at(v, 1))
      if (r[g.source(e).index][v.index]) ++inside;
    if (inside >= 2)
      for (auto u : g.vertices())
        if (r[v.index][u.index] && r[u.index][v.index]) rich[u.index] = true;
  }
  for (auto v : g.vertices()) {
    bool ok = false;
    for (std::size_t u = 0; u < n && !ok; ++u) ok = rich[u] && r[v.index][u];
    if (!ok) {
      Witness w;
      w.vertices = {v};
      w.note = "not aperiodic: every infinite path from " + g.name(v) + " is eventually periodic";
      return Verdict3::no(w);
    }
  }
  return std::nullopt;
}

// A vertex on a cycle of a level presentation: in the core, or in the first
// block level using edges that stay inside the level.
std::optional<Vertex> level_cycle_vertex(const KGraph& g) {
  const auto core = g.core_vertices();
  for (auto v : core) {
    std::set<Vertex> seen;
    std::deque<Vertex> queue{v};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto e : all_edges(g, u)) {
        auto s = g.source(e);
        if (g.block_position(s)) continue;
        if (s == v) return v;
        if (seen.insert(s).second) queue.push_back(s);
      }
    }
  }
  const detail::Block block(g);
  for (std::size_t t = 0; t < block.width; ++t) {
    std::set<std::size_t> seen;
    std::deque<std::size_t> queue{t};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (const auto& e : block.out[x]) {
        if (e.offset != 0) continue;
        if (e.source == t) return g.block_vertex(g.first_block_level(), t);
        if (seen.insert(e.source).second) queue.push_back(e.source);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict3 has_no_periodic_paths(const KGraph& g, int depth_bound) {
  switch (g.kind()) {
    case GraphKind::Lattice: {
      Witness w;
      w.note = "every infinite path is a translate of the identity path, whose vertices are distinct";
      return Verdict3::yes(w);
    }
    case GraphKind::Finite:
      for (auto v : g.vertices()) {
        auto x = search_revisit(g, v, static_cast<int>(g.vertex_count()) + 1);
        if (x && x->p && x->q) {
          Witness w;
          w.vertices = {point_at(g, v, *x->p)};
          w.m = x->p;
          w.n = x->q;
          w.note = "a finite graph always carries a periodic infinite path";
          return Verdict3::no(w);
        }
      }
      break;
    case GraphKind::Level:
      if (auto v = level_cycle_vertex(g)) {
        if (g.k() == 1) {
          Witness w;
          w.vertices = {*v};
          w.note = "the cycle at " + g.name(*v) + " repeats forever";
          return Verdict3::no(w);
        }
      } else if (g.k() == 1) {
        Witness w;
        w.note = "no cycles: every infinite path descends through the block levels";
        return Verdict3::yes(w);
      }
      break;
  }
  return Verdict3::unknown(depth_bound, "periodic paths not decided");
}

Verdict3 is_cofinal_and_aperiodic(const KGraph& g, int depth_bound) {
  const auto lp = line_points(g, depth_bound);
  const auto classes = line_point_classes(g, lp);
  if (classes.classes.size() >= 2) {
    Witness w;
    w.vertices = {classes.classes[1].representative, classes.classes[0].representative};
    w.note = "not cofinal: " + g.name(w.vertices[0]) + " never reaches the infinite path at " + g.name(w.vertices[1]);
    return Verdict3::no(w);
  }
  if (classes.classes.size() == 1 && is_semisimple(g, lp).truth == Truth::Yes) {
    Witness w;
    w.vertices = {classes.classes[0].representative};
    w.note = "semisimple with a single line-point class";
    return Verdict3::yes(w);
  }
  if (g.kind() == GraphKind::Finite) {
    if (auto v = finite_cofinality(g)) return *v;
  }
  for (const auto& c : lp.certificates)
    if (c.reason == LinePointCertificate::Reason::Periodic) {
      Witness w;
      w.vertices = {c.vertex};
      w.m = c.p;
      w.n = c.q;
      w.note = "not aperiodic: the only infinite path at " + g.name(c.vertex) + " is periodic";
      return Verdict3::no(w);
    }
  if (g.kind() == GraphKind::Finite) {
    if (g.k() == 1) {
      if (auto v = finite_aperiodicity1(g)) return *v;
      Witness w;
      w.note = "cofinal, and every vertex reaches a component with two distinct cycles";
      return Verdict3::yes(w);
    }
    return Verdict3::unknown(depth_bound, "aperiodicity of finite higher-rank graphs is not decided");
  }
  if (g.kind() == GraphKind::Level) {
    // Block vertices never reach shallower levels or the core, so an
    // infinite path trapped on a cycle defeats cofinality.
    if (auto v = level_cycle_vertex(g)) {
      Witness w;
      w.vertices = {g.block_vertex(g.first_block_level() + 1, 0), *v};
      w.note = "not cofinal: " + g.name(w.vertices[0]) + " cannot reach the infinite path cycling at " + g.name(*v);
      return Verdict3::no(w);
    }
  }
  return Verdict3::unknown(depth_bound, "cofinality and aperiodicity not settled by the bounded probe");
}

}  // namespace kpt
