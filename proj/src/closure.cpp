#include "kpt/closure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "block.hpp"
#include "kpt/paths.hpp"

namespace kpt {

namespace {

using Mask = VertexSet::Mask;
using detail::Block;

enum class Rule { Saturate, Reach };

// Whether a vertex with the given edges joins the set under `rule`, where
// `member(edge)` says whether the edge's source is already in the set.
template <class Edges, class Member, class ColorOf>
bool rule_holds(Rule rule, int k, const Edges& edges, Member member, ColorOf color_of) {
  if (rule == Rule::Reach) return std::any_of(edges.begin(), edges.end(), member);
  for (int c = 1; c <= k; ++c) {
    bool any = false, all = true;
    for (const auto& e : edges) {
      if (color_of(e) != c) continue;
      any = true;
      if (!member(e)) {
        all = false;
        break;
      }
    }
    if (any && all) return true;
  }
  return false;
}

std::vector<Edge> all_edges(const KGraph& g, Vertex v) {
  std::vector<Edge> out;
  for (int c = 1; c <= g.k(); ++c)
    for (auto e : g.edges_at(v, c)) out.push_back(e);
  return out;
}

Mask mask_or(Mask a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
  return a;
}

// ---- finite graphs ----

VertexSet finite_hereditary(const VertexSet& w) {
  const auto& g = w.graph();
  std::vector<bool> in(g.vertex_count(), false);
  std::deque<Vertex> queue;
  for (auto v : w.members()) {
    in[v.index] = true;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto e : all_edges(g, v)) {
      auto s = g.source(e);
      if (!in[s.index]) {
        in[s.index] = true;
        queue.push_back(s);
      }
    }
  }
  std::vector<Vertex> vs;
  for (std::uint32_t i = 0; i < in.size(); ++i)
    if (in[i]) vs.push_back(Vertex{i});
  return VertexSet::of(g, vs);
}

VertexSet finite_lfp(const VertexSet& seed, Rule rule) {
  const auto& g = seed.graph();
  std::vector<bool> in(g.vertex_count(), false);
  for (auto v : seed.members()) in[v.index] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto v : g.vertices()) {
      if (in[v.index]) continue;
      auto edges = all_edges(g, v);
      if (rule_holds(
              rule, g.k(), edges, [&](Edge e) { return in[g.source(e).index]; },
              [&](Edge e) { return g.color(e); })) {
        in[v.index] = true;
        changed = true;
      }
    }
  }
  std::vector<Vertex> vs;
  for (std::uint32_t i = 0; i < in.size(); ++i)
    if (in[i]) vs.push_back(Vertex{i});
  return VertexSet::of(g, vs);
}

// ---- level presentations ----

VertexSet level_hereditary(const VertexSet& w) {
  const auto& g = w.graph();
  const Block block(g);
  const auto first = g.first_block_level();
  const auto core_n = g.core_vertices().size();

  Mask core = w.core_mask();
  Mask inject(block.width, false);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < core_n; ++i)
    if (core[i]) queue.push_back(i);
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (auto e : all_edges(g, Vertex{i})) {
      auto s = g.source(e);
      if (auto pos = g.block_position(s)) {
        inject[pos->type] = true;
      } else if (!core[s.index]) {
        core[s.index] = true;
        queue.push_back(s.index);
      }
    }
  }

  auto close0 = [&](Mask m) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 0; t < block.width; ++t) {
        if (!m[t]) continue;
        for (const auto& e : block.out[t])
          if (e.offset == 0 && !m[e.source]) m[e.source] = changed = true;
      }
    }
    return m;
  };
  auto step1 = [&](const Mask& m) {
    Mask n(block.width, false);
    for (std::size_t t = 0; t < block.width; ++t)
      if (m[t])
        for (const auto& e : block.out[t])
          if (e.offset == 1) n[e.source] = true;
    return n;
  };

  const auto p = w.prefix().size();
  const auto c = w.cycle().size();
  std::vector<Mask> seq;
  std::map<std::pair<Mask, std::size_t>, std::size_t> seen;
  for (std::size_t i = 0;; ++i) {
    auto level = first + static_cast<std::int64_t>(i);
    Mask cur = close0(mask_or(w.mask_at(level), i == 0 ? inject : step1(seq.back())));
    if (i >= p) {
      auto key = std::pair{cur, (i - p) % c};
      if (auto it = seen.find(key); it != seen.end()) {
        std::vector<Mask> prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(it->second));
        std::vector<Mask> cycle(seq.begin() + static_cast<std::ptrdiff_t>(it->second), seq.end());
        return VertexSet::level(g, core, prefix, cycle);
      }
      seen.emplace(key, i);
    }
    seq.push_back(cur);
  }
}

VertexSet level_lfp(const VertexSet& seed, Rule rule) {
  const auto& g = seed.graph();
  const Block block(g);
  const int k = g.k();
  const auto p = seed.prefix().size();
  const auto c = seed.cycle().size();
  auto color_of = [](const detail::BlockEdge& e) { return e.color; };

  // Levels from first + p on repeat with period c, and membership there
  // only depends on deeper levels, so solve on the folded cycle.
  std::vector<Mask> cycle = seed.cycle();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t phase = 0; phase < c; ++phase)
      for (std::size_t t = 0; t < block.width; ++t) {
        if (cycle[phase][t]) continue;
        auto member = [&](const detail::BlockEdge& e) {
          return static_cast<bool>(cycle[(phase + static_cast<std::size_t>(e.offset)) % c][e.source]);
        };
        if (rule_holds(rule, k, block.out[t], member, color_of)) cycle[phase][t] = changed = true;
      }
  }
  std::vector<Mask> prefix = seed.prefix();
  for (std::size_t i = p; i-- > 0;) {
    const Mask next = i + 1 < p ? prefix[i + 1] : cycle[0];
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t t = 0; t < block.width; ++t) {
        if (prefix[i][t]) continue;
        auto member = [&](const detail::BlockEdge& e) {
          return static_cast<bool>(e.offset == 0 ? prefix[i][e.source] : next[e.source]);
        };
        if (rule_holds(rule, k, block.out[t], member, color_of)) prefix[i][t] = changed = true;
      }
    }
  }
  const Mask top = p > 0 ? prefix[0] : cycle[0];
  Mask core = seed.core_mask();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t i = 0; i < core.size(); ++i) {
      if (core[i]) continue;
      auto edges = all_edges(g, Vertex{i});
      auto member = [&](Edge e) {
        auto s = g.source(e);
        if (auto pos = g.block_position(s)) return static_cast<bool>(top[pos->type]);
        return static_cast<bool>(core[s.index]);
      };
      if (rule_holds(rule, k, edges, member, [&](Edge e) { return g.color(e); })) core[i] = changed = true;
    }
  }
  return VertexSet::level(g, core, prefix, cycle);
}

// ---- Omega_k ----

VertexSet lattice_hereditary(const VertexSet& w) {
  auto gens = w.points();
  gens.insert(gens.end(), w.cones().begin(), w.cones().end());
  return VertexSet::lattice(w.graph(), {}, gens);
}

VertexSet lattice_lfp(const VertexSet& seed, Rule rule) {
  const auto& g = seed.graph();
  if (seed.empty()) return seed;
  if (rule == Rule::Saturate || !seed.cones().empty()) return VertexSet::all(g);
  std::set<Degree> down;
  for (const auto& p : seed.points()) {
    std::function<void(Degree, int)> go = [&](Degree x, int i) {
      if (i == g.k()) {
        down.insert(x);
        return;
      }
      for (std::int64_t t = 0; t <= p[i]; ++t) {
        x[i] = t;
        go(x, i + 1);
      }
    };
    go(Degree(g.k()), 0);
  }
  return VertexSet::lattice(g, {down.begin(), down.end()}, {});
}

VertexSet lfp(const VertexSet& seed, Rule rule) {
  switch (seed.graph().kind()) {
    case GraphKind::Finite:
      return finite_lfp(seed, rule);
    case GraphKind::Level:
      return level_lfp(seed, rule);
    case GraphKind::Lattice:
      return lattice_lfp(seed, rule);
  }
  return seed;
}

// ---- quotients ----

FiniteSkeleton skeleton_of(const KGraph& g) {
  if (auto* s = std::get_if<FiniteSkeleton>(&g.presentation())) return *s;
  const auto& b = std::get<BuiltinFamily>(g.presentation());
  return expand(std::get<OneVertexFamily>(b));
}

Presentation finite_quotient(const KGraph& g, const VertexSet& h) {
  const auto s = skeleton_of(g);
  FiniteSkeleton q;
  q.k = s.k;
  auto out = [&](const std::string& name) { return !h.contains(g.vertex(name)); };
  for (const auto& v : s.vertices)
    if (out(v)) q.vertices.push_back(v);
  std::set<std::string> kept;
  for (const auto& e : s.edges)
    if (out(e.source)) {
      q.edges.push_back(e);
      kept.insert(e.id);
    }
  for (const auto& sq : s.squares)
    if (kept.count(sq.left[0]) && kept.count(sq.left[1]) && kept.count(sq.right[0]) && kept.count(sq.right[1]))
      q.squares.push_back(sq);
  return q;
}

Presentation level_quotient(const KGraph& g, const VertexSet& h) {
  const auto& l = g.level_data();
  const Block block(g);
  const auto first = static_cast<std::int64_t>(l.first_block_level());
  const auto p = static_cast<std::int64_t>(h.prefix().size());
  const auto period = static_cast<std::int64_t>(h.cycle().size());
  const auto new_first = first + p;

  auto type_name = [&](std::size_t type, std::int64_t phase) {
    return period == 1 ? l.block_vertices[type] : l.block_vertices[type] + "#" + std::to_string(phase);
  };
  auto tmpl_name = [&](std::size_t tmpl, std::int64_t phase) {
    return period == 1 ? l.block_edges[tmpl].id : l.block_edges[tmpl].id + "#" + std::to_string(phase);
  };
  // Name in the quotient of an old vertex / old edge.
  auto vertex_name = [&](Vertex v) -> std::string {
    auto pos = g.block_position(v);
    if (!pos || pos->level < new_first) return g.name(v);
    auto j = pos->level - new_first;
    return type_name(pos->type, j % period) + "@" + std::to_string(new_first + j / period);
  };
  auto edge_name = [&](const std::string& old) -> std::string {
    auto e = g.edge(old);
    auto r = g.range(e);
    auto pos = g.block_position(r);
    if (!pos || pos->level < new_first) return old;
    auto at = old.rfind('@');
    auto tmpl = old.substr(0, at);
    std::size_t t = 0;
    while (l.block_edges[t].id != tmpl) ++t;
    auto j = pos->level - new_first;
    return tmpl_name(t, j % period) + "@" + std::to_string(new_first + j / period);
  };
  auto kept = [&](const std::string& old) { return !h.contains(g.source(g.edge(old))); };

  LevelPresentation q;
  q.k = l.k;
  for (const auto& level : l.core_levels) {
    q.core_levels.emplace_back();
    for (const auto& v : level)
      if (!h.contains(g.vertex(v))) q.core_levels.back().push_back(v);
  }
  for (std::int64_t lv = first; lv < new_first; ++lv) {
    q.core_levels.emplace_back();
    for (std::size_t t = 0; t < block.width; ++t) {
      auto v = g.block_vertex(lv, t);
      if (!h.contains(v)) q.core_levels.back().push_back(g.name(v));
    }
  }
  // Edges with range in the new core: old core and glue edges, and block
  // edges at the absorbed prefix levels.
  std::vector<Vertex> new_core;
  for (auto v : g.core_vertices()) new_core.push_back(v);
  for (std::int64_t lv = first; lv < new_first; ++lv)
    for (std::size_t t = 0; t < block.width; ++t) new_core.push_back(g.block_vertex(lv, t));
  for (auto v : new_core) {
    if (h.contains(v)) continue;
    for (int c = 1; c <= g.k(); ++c)
      for (auto e : g.edges_at(v, c)) {
        auto s = g.source(e);
        if (h.contains(s)) continue;
        auto spos = g.block_position(s);
        EdgeDecl d{g.name(e), c, g.name(v), vertex_name(s)};
        if (spos && spos->level >= new_first) {
          d.source = type_name(spos->type, 0);
          q.glue_edges.push_back(d);
        } else {
          q.core_edges.push_back(d);
        }
      }
  }
  for (std::size_t t = 0; t < block.width; ++t) {
    for (std::int64_t phase = 0; phase < period; ++phase) {
      if (h.cycle()[static_cast<std::size_t>(phase)][t]) continue;
      q.block_vertices.push_back(type_name(t, phase));
    }
  }
  for (std::size_t t = 0; t < block.width; ++t)
    for (const auto& e : block.out[t])
      for (std::int64_t phase = 0; phase < period; ++phase) {
        auto sphase = phase + e.offset;
        if (h.cycle()[static_cast<std::size_t>(sphase % period)][e.source]) continue;
        q.block_edges.push_back({tmpl_name(e.tmpl, phase), e.color, type_name(t, phase),
                                 type_name(e.source, sphase % period), sphase >= period ? 1 : 0});
      }
  std::set<std::string> new_templates;
  for (const auto& e : q.block_edges) new_templates.insert(e.id);
  for (const auto& sq : l.block_squares) {
    std::size_t ids[4];
    const std::string names[4] = {sq.left[0], sq.left[1], sq.right[0], sq.right[1]};
    for (int i = 0; i < 4; ++i) {
      ids[i] = 0;
      while (l.block_edges[ids[i]].id != names[i]) ++ids[i];
    }
    for (std::int64_t phase = 0; phase < period; ++phase) {
      auto pa = phase, pb = (phase + l.block_edges[ids[0]].source_offset) % period;
      auto pc = phase, pd = (phase + l.block_edges[ids[2]].source_offset) % period;
      SquareDecl d{{tmpl_name(ids[0], pa), tmpl_name(ids[1], pb)}, {tmpl_name(ids[2], pc), tmpl_name(ids[3], pd)}};
      if (new_templates.count(d.left[0]) && new_templates.count(d.left[1]) && new_templates.count(d.right[0]) &&
          new_templates.count(d.right[1]))
        q.block_squares.push_back(d);
    }
    // The same template square at each absorbed prefix level.
    for (std::int64_t lv = first; lv < new_first; ++lv) {
      const std::string a = names[0] + "@" + std::to_string(lv);
      const std::string b = names[1] + "@" + std::to_string(lv + l.block_edges[ids[0]].source_offset);
      const std::string c = names[2] + "@" + std::to_string(lv);
      const std::string d = names[3] + "@" + std::to_string(lv + l.block_edges[ids[2]].source_offset);
      if (kept(a) && kept(b) && kept(c) && kept(d))
        q.core_squares.push_back({{edge_name(a), edge_name(b)}, {edge_name(c), edge_name(d)}});
    }
  }
  for (const auto& sq : l.core_squares) {
    if (kept(sq.left[0]) && kept(sq.left[1]) && kept(sq.right[0]) && kept(sq.right[1]))
      q.core_squares.push_back(
          {{edge_name(sq.left[0]), edge_name(sq.left[1])}, {edge_name(sq.right[0]), edge_name(sq.right[1])}});
  }
  return q;
}

}  // namespace

VertexSet hereditary_closure(const VertexSet& w) {
  switch (w.graph().kind()) {
    case GraphKind::Finite:
      return finite_hereditary(w);
    case GraphKind::Level:
      return level_hereditary(w);
    case GraphKind::Lattice:
      return lattice_hereditary(w);
  }
  return w;
}

VertexSet saturated_hereditary_closure(const VertexSet& w) { return lfp(hereditary_closure(w), Rule::Saturate); }

VertexSet backward_reach(const VertexSet& target) { return lfp(target, Rule::Reach); }

bool is_hereditary(const VertexSet& h) { return hereditary_closure(h) == h; }

bool is_saturated(const VertexSet& h) { return lfp(h, Rule::Saturate) == h; }

Path connect_witness(const KGraph& g, Vertex v, const VertexSet& w, int depth_bound) {
  const auto hered = hereditary_closure(w);
  if (hered.contains(v)) return vertex_path(g, v);
  if (!saturated_hereditary_closure(w).contains(v))
    throw std::invalid_argument("vertex " + g.name(v) + " is not in the saturated closure");
  for (int depth = std::min(4, std::max(depth_bound, 1));; depth = std::min(depth * 2, std::max(depth_bound, 1))) {
    // Window: vertices within `depth` edges of v. Vertices on the boundary
    // only count through membership in the hereditary closure.
    std::map<Vertex, int> dist{{v, 0}};
    std::vector<Vertex> order{v};
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto u = order[i];
      if (dist[u] == depth) continue;
      for (auto e : all_edges(g, u)) {
        auto s = g.source(e);
        if (dist.emplace(s, dist[u] + 1).second) order.push_back(s);
      }
    }
    std::map<Vertex, int> stratum;
    std::map<Vertex, int> chosen_color;
    for (auto u : order)
      if (hered.contains(u)) stratum[u] = 0;
    for (int n = 1;; ++n) {
      std::vector<std::pair<Vertex, int>> added;
      for (auto u : order) {
        if (stratum.count(u) || dist[u] == depth) continue;
        for (int c = 1; c <= g.k(); ++c) {
          auto edges = g.edges_at(u, c);
          bool ok = !edges.empty() && std::all_of(edges.begin(), edges.end(), [&](Edge e) {
            auto it = stratum.find(g.source(e));
            return it != stratum.end() && it->second < n;
          });
          if (ok) {
            added.push_back({u, c});
            break;
          }
        }
      }
      if (added.empty()) break;
      for (auto [u, c] : added) {
        stratum[u] = n;
        chosen_color[u] = c;
      }
    }
    if (stratum.count(v)) {
      std::vector<Edge> word;
      for (auto u = v; stratum[u] > 0;) {
        auto e = g.edges_at(u, chosen_color[u]).front();
        word.push_back(e);
        u = g.source(e);
      }
      return make_path(g, word);
    }
    if (depth >= depth_bound) break;
  }
  throw std::runtime_error("no connecting path from " + g.name(v) + " within depth " + std::to_string(depth_bound));
}

Presentation quotient_graph(const KGraph& g, const VertexSet& h) {
  if (!is_hereditary(h)) throw std::invalid_argument("quotient needs a hereditary vertex set");
  if (!is_saturated(h)) throw std::invalid_argument("quotient needs a saturated vertex set");
  switch (g.kind()) {
    case GraphKind::Finite:
      return finite_quotient(g, h);
    case GraphKind::Level:
      return level_quotient(g, h);
    case GraphKind::Lattice:
      if (h.empty()) return g.presentation();
      if (h.is_all()) return FiniteSkeleton{g.k(), {}, {}, {}};
      throw std::invalid_argument("unsupported lattice quotient");
  }
  return g.presentation();
}

}  // namespace kpt
