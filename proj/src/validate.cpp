#include "kpt/validate.hpp"

#include <set>
#include <stdexcept>
#include <unordered_set>

#include "kpt/paths.hpp"

namespace kpt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct RawChecker {
  int k = 1;
  std::vector<Violation> out;

  void dangling(const std::string& what) { out.push_back({ViolationKind::DanglingEndpoint, what}); }

  void color(const std::string& id, int c) {
    if (c < 1 || c > k) dangling("edge " + id + " has color " + std::to_string(c) + " outside 1.." + std::to_string(k));
  }

  void unique(std::unordered_set<std::string>& seen, const std::string& id, const char* what) {
    if (!seen.insert(id).second) dangling(std::string("duplicate ") + what + " id " + id);
  }

  void squares(const std::vector<SquareDecl>& sq, const std::unordered_set<std::string>& edges, bool allow_levels) {
    for (const auto& s : sq)
      for (const auto* name : {&s.left[0], &s.left[1], &s.right[0], &s.right[1]})
        if (!edges.count(*name) && !(allow_levels && name->find('@') != std::string::npos))
          dangling("square refers to undeclared edge " + *name);
  }

  void skeleton(const FiniteSkeleton& s) {
    k = s.k;
    if (k < 1) return dangling("k must be at least 1");
    std::unordered_set<std::string> vs, es;
    for (const auto& v : s.vertices) unique(vs, v, "vertex");
    for (const auto& e : s.edges) {
      unique(es, e.id, "edge");
      color(e.id, e.color);
      if (!vs.count(e.range)) dangling("edge " + e.id + " has undeclared range " + e.range);
      if (!vs.count(e.source)) dangling("edge " + e.id + " has undeclared source " + e.source);
    }
    squares(s.squares, es, false);
  }

  void level(const LevelPresentation& l) {
    k = l.k;
    if (k < 1) return dangling("k must be at least 1");
    std::unordered_set<std::string> core, block, es;
    for (const auto& lvl : l.core_levels)
      for (const auto& v : lvl) unique(core, v, "vertex");
    for (const auto& v : l.block_vertices) {
      unique(block, v, "block vertex");
      if (core.count(v)) dangling("duplicate vertex id " + v);
    }
    if (l.block_vertices.empty()) dangling("periodic block has no vertices");
    for (const auto& e : l.core_edges) {
      unique(es, e.id, "edge");
      color(e.id, e.color);
      if (!core.count(e.range)) dangling("edge " + e.id + " has undeclared range " + e.range);
      if (!core.count(e.source)) dangling("edge " + e.id + " has undeclared source " + e.source);
    }
    for (const auto& e : l.glue_edges) {
      unique(es, e.id, "edge");
      color(e.id, e.color);
      if (!core.count(e.range)) dangling("glue edge " + e.id + " has undeclared core range " + e.range);
      if (!block.count(e.source)) dangling("glue edge " + e.id + " has undeclared block source " + e.source);
    }
    std::unordered_set<std::string> templates;
    for (const auto& e : l.block_edges) {
      unique(es, e.id, "edge");
      templates.insert(e.id);
      color(e.id, e.color);
      if (!block.count(e.range)) dangling("block edge " + e.id + " has undeclared range " + e.range);
      if (!block.count(e.source)) dangling("block edge " + e.id + " has undeclared source " + e.source);
      if (e.source_offset != 0 && e.source_offset != 1)
        dangling("block edge " + e.id + " has source_offset " + std::to_string(e.source_offset));
    }
    squares(l.block_squares, templates, false);
    squares(l.core_squares, es, true);
  }
};

std::string word_str(const KGraph& g, const std::vector<Edge>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + g.name(w[i]);
  return s;
}

std::optional<std::vector<Edge>> swap_at(const KGraph& g, std::vector<Edge> w, std::size_t i) {
  auto sq = g.square(w[i], w[i + 1]);
  if (!sq) return std::nullopt;
  w[i] = sq->first;
  w[i + 1] = sq->second;
  return w;
}

std::vector<Vertex> check_set(const KGraph& g) {
  switch (g.kind()) {
    case GraphKind::Finite:
      return g.vertices();
    case GraphKind::Level: {
      auto out = g.core_vertices();
      for (int l = g.first_block_level(); l <= g.first_block_level() + 1; ++l)
        for (std::size_t t = 0; t < g.block_types().size(); ++t) out.push_back(g.block_vertex(l, t));
      return out;
    }
    case GraphKind::Lattice: {
      std::vector<Vertex> out;
      for (int mask = 0; mask < (1 << g.k()); ++mask) {
        Degree c(g.k());
        for (int i = 0; i < g.k(); ++i) c[i] = (mask >> i) & 1;
        out.push_back(g.lattice_vertex(c));
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonBijectiveSquare: return "non-bijective-square";
    case ViolationKind::CubeFailure: return "cube-failure";
    case ViolationKind::SourceExists: return "source-exists";
    case ViolationKind::NotRowFinite: return "not-row-finite";
    case ViolationKind::DanglingEndpoint: return "dangling-endpoint";
  }
  return "unknown";
}

ValidationReport validate_graph(const KGraph& g) {
  ValidationReport r;
  for (const auto& c : g.square_conflicts()) r.violations.push_back({ViolationKind::NonBijectiveSquare, c});
  const int k = g.k();
  auto vs = check_set(g);
  for (auto v : vs) {
    for (int c = 1; c <= k; ++c)
      if (g.out_degree(v, c) == 0)
        r.violations.push_back(
            {ViolationKind::SourceExists, "vertex " + g.name(v) + " receives no edge of color " + std::to_string(c)});
  }
  // Every two-colored 2-path needs a square; the stored table is symmetric
  // and conflict-free, so existence everywhere makes each square a bijection.
  for (auto v : vs) {
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) {
        if (i == j) continue;
        for (auto e : g.edges_at(v, i))
          for (auto f : g.edges_at(g.source(e), j)) {
            auto sq = g.square(e, f);
            if (!sq) {
              r.violations.push_back({ViolationKind::NonBijectiveSquare, "no square for " + word_str(g, {e, f})});
              continue;
            }
            auto back = g.square(sq->first, sq->second);
            if (!back || back->first != e || back->second != f)
              r.violations.push_back({ViolationKind::NonBijectiveSquare,
                                      "square for " + word_str(g, {e, f}) + " is not inverted by its image"});
          }
      }
  }
  if (k >= 3 && r.ok()) {
    for (auto v : vs)
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
          for (int l = j + 1; l <= k; ++l)
            for (auto e : g.edges_at(v, i))
              for (auto f : g.edges_at(g.source(e), j))
                for (auto h : g.edges_at(g.source(f), l)) {
                  std::vector<Edge> w{e, f, h};
                  // ijl -> ilj -> lij -> lji  versus  ijl -> jil -> jli -> lji
                  auto a = swap_at(g, w, 1);
                  if (a) a = swap_at(g, *a, 0);
                  if (a) a = swap_at(g, *a, 1);
                  auto b = swap_at(g, w, 0);
                  if (b) b = swap_at(g, *b, 1);
                  if (b) b = swap_at(g, *b, 0);
                  if (!a || !b || *a != *b)
                    r.violations.push_back(
                        {ViolationKind::CubeFailure,
                         "cube at " + word_str(g, w) + ": " + (a ? word_str(g, *a) : std::string("?")) + " vs " +
                             (b ? word_str(g, *b) : std::string("?"))});
                }
  }
  return r;
}

ValidationReport validate_presentation(const Presentation& p) {
  RawChecker raw;
  std::visit(overloaded{
                 [&](const FiniteSkeleton& s) { raw.skeleton(s); },
                 [&](const LevelPresentation& l) { raw.level(l); },
                 [&](const BuiltinFamily&) {},
             },
             p);
  if (!raw.out.empty()) return ValidationReport{raw.out};
  try {
    auto g = KGraph::build(p);
    return validate_graph(*g);
  } catch (const std::exception& e) {
    return ValidationReport{{{ViolationKind::DanglingEndpoint, e.what()}}};
  }
}

}  // namespace kpt
