#include "kpt/kgraph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace kpt {

namespace {

enum class EdgeKind { Plain, Glue, Block, Lattice };

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "name@level" -> (name, level)
std::optional<std::pair<std::string, std::int64_t>> split_at_level(std::string_view s) {
  auto at = s.rfind('@');
  if (at == std::string_view::npos) return std::nullopt;
  auto level = parse_int(s.substr(at + 1));
  if (!level) return std::nullopt;
  return std::pair{std::string(s.substr(0, at)), *level};
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string lattice_vertex_name(const Degree& coords) {
  std::string out;
  for (int i = 0; i < coords.k(); ++i) {
    if (i) out += "_";
    out += std::to_string(coords[i]);
  }
  return out;
}

struct KGraph::Impl {
  struct VRec {
    std::string name;
    std::int64_t level = -1;  // block level, or -1 for finite/core/lattice vertices
    std::size_t local = 0;    // declaration index, core index or block type
    std::vector<std::int64_t> coords;
    bool expanded = false;
    std::vector<std::vector<Edge>> out;  // per color, sorted by name
  };
  struct ERec {
    std::string name;
    EdgeInfo info;
    EdgeKind kind = EdgeKind::Plain;
    std::size_t local = 0;  // block template index
    std::int64_t level = -1;
  };

  const KGraph* owner = nullptr;
  bool lazy = false;
  mutable std::mutex mu;
  std::deque<VRec> vs;
  std::deque<ERec> es;
  std::unordered_map<std::string, std::uint32_t> vname;
  std::unordered_map<std::string, std::uint32_t> ename;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>> squares;

  // Level presentations.
  LevelPresentation level;
  std::vector<int> core_level_of;
  std::unordered_map<std::string, std::size_t> block_index;
  std::unordered_map<std::string, std::size_t> template_index;
  std::unordered_map<std::string, std::string> plain_edge_range;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> template_squares;
  std::map<std::pair<std::int64_t, std::size_t>, std::uint32_t> block_lookup;

  // Lattice.
  std::map<std::vector<std::int64_t>, std::uint32_t> lattice_lookup;

  std::unique_lock<std::mutex> guard() const {
    return lazy ? std::unique_lock<std::mutex>(mu) : std::unique_lock<std::mutex>();
  }

  int k() const { return owner->k_; }

  std::uint32_t add_vertex(VRec rec) {
    auto id = static_cast<std::uint32_t>(vs.size());
    if (!vname.emplace(rec.name, id).second) throw std::invalid_argument("duplicate vertex id '" + rec.name + "'");
    rec.out.resize(static_cast<std::size_t>(k()));
    vs.push_back(std::move(rec));
    return id;
  }

  std::uint32_t add_edge(ERec rec) {
    auto id = static_cast<std::uint32_t>(es.size());
    if (!ename.emplace(rec.name, id).second) throw std::invalid_argument("duplicate edge id '" + rec.name + "'");
    es.push_back(std::move(rec));
    return id;
  }

  void sort_out(VRec& v) {
    for (auto& list : v.out)
      std::sort(list.begin(), list.end(), [&](Edge a, Edge b) { return es[a.index].name < es[b.index].name; });
  }

  // Level helpers (lock held).
  std::uint32_t block_vertex_locked(std::int64_t l, std::size_t type) {
    if (l < level.first_block_level()) throw std::out_of_range("block level below the core");
    auto key = std::pair{l, type};
    if (auto it = block_lookup.find(key); it != block_lookup.end()) return it->second;
    VRec rec;
    rec.name = level.block_vertices.at(type) + "@" + std::to_string(l);
    rec.level = l;
    rec.local = type;
    auto id = add_vertex(std::move(rec));
    block_lookup.emplace(key, id);
    return id;
  }

  std::uint32_t level_vertex_by_name(const std::string& name, std::int64_t first_level) {
    if (auto it = vname.find(name); it != vname.end()) return it->second;
    if (auto it = block_index.find(name); it != block_index.end()) return block_vertex_locked(first_level, it->second);
    throw std::invalid_argument("unknown vertex '" + name + "'");
  }

  std::uint32_t lattice_vertex_locked(const std::vector<std::int64_t>& c) {
    if (auto it = lattice_lookup.find(c); it != lattice_lookup.end()) return it->second;
    VRec rec;
    rec.name = lattice_vertex_name(Degree(c));
    rec.coords = c;
    auto id = add_vertex(std::move(rec));
    lattice_lookup.emplace(c, id);
    return id;
  }

  void expand(std::uint32_t vid) {
    if (vs[vid].expanded) return;
    const auto kind = owner->kind_;
    if (kind == GraphKind::Lattice) {
      auto coords = vs[vid].coords;
      auto vname_copy = vs[vid].name;
      for (int c = 1; c <= k(); ++c) {
        auto next = coords;
        next[static_cast<std::size_t>(c - 1)] += 1;
        auto src = lattice_vertex_locked(next);
        ERec e;
        e.name = "c" + std::to_string(c) + "@" + vname_copy;
        e.info = {c, Vertex{vid}, Vertex{src}};
        e.kind = EdgeKind::Lattice;
        auto eid = add_edge(std::move(e));
        vs[vid].out[static_cast<std::size_t>(c - 1)].push_back(Edge{eid});
      }
    } else if (kind == GraphKind::Level) {
      if (vs[vid].level < 0) {
        const auto& name = vs[vid].name;
        auto first = level.first_block_level();
        auto add_plain = [&](const EdgeDecl& d, EdgeKind ek) {
          auto src = level_vertex_by_name(d.source, first);
          ERec e;
          e.name = d.id;
          e.info = {d.color, Vertex{vid}, Vertex{src}};
          e.kind = ek;
          auto eid = add_edge(std::move(e));
          vs[vid].out[static_cast<std::size_t>(d.color - 1)].push_back(Edge{eid});
        };
        for (const auto& d : level.core_edges)
          if (d.range == name) add_plain(d, EdgeKind::Plain);
        for (const auto& d : level.glue_edges)
          if (d.range == name) add_plain(d, EdgeKind::Glue);
      } else {
        auto l = vs[vid].level;
        auto type = vs[vid].local;
        for (std::size_t t = 0; t < level.block_edges.size(); ++t) {
          const auto& d = level.block_edges[t];
          if (block_index.at(d.range) != type) continue;
          auto src = block_vertex_locked(l + d.source_offset, block_index.at(d.source));
          ERec e;
          e.name = d.id + "@" + std::to_string(l);
          e.info = {d.color, Vertex{vid}, Vertex{src}};
          e.kind = EdgeKind::Block;
          e.local = t;
          e.level = l;
          auto eid = add_edge(std::move(e));
          vs[vid].out[static_cast<std::size_t>(d.color - 1)].push_back(Edge{eid});
        }
      }
    }
    sort_out(vs[vid]);
    vs[vid].expanded = true;
  }

  std::optional<std::uint32_t> find_vertex_locked(std::string_view name) {
    if (auto it = vname.find(std::string(name)); it != vname.end()) return it->second;
    const auto kind = owner->kind_;
    if (kind == GraphKind::Level) {
      auto parsed = split_at_level(name);
      if (!parsed) return std::nullopt;
      auto it = block_index.find(parsed->first);
      if (it == block_index.end() || parsed->second < level.first_block_level()) return std::nullopt;
      return block_vertex_locked(parsed->second, it->second);
    }
    if (kind == GraphKind::Lattice) {
      std::vector<std::int64_t> coords;
      std::size_t start = 0;
      std::string s(name);
      while (true) {
        auto pos = s.find('_', start);
        auto v = parse_int(std::string_view(s).substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (!v || *v < 0) return std::nullopt;
        coords.push_back(*v);
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      if (static_cast<int>(coords.size()) != k()) return std::nullopt;
      return lattice_vertex_locked(coords);
    }
    return std::nullopt;
  }

  std::optional<std::uint32_t> find_edge_locked(std::string_view name) {
    if (auto it = ename.find(std::string(name)); it != ename.end()) return it->second;
    const auto kind = owner->kind_;
    if (kind == GraphKind::Level) {
      if (auto it = plain_edge_range.find(std::string(name)); it != plain_edge_range.end()) {
        expand(vname.at(it->second));
      } else {
        auto parsed = split_at_level(name);
        if (!parsed) return std::nullopt;
        auto t = template_index.find(parsed->first);
        if (t == template_index.end() || parsed->second < level.first_block_level()) return std::nullopt;
        auto range_type = block_index.at(level.block_edges[t->second].range);
        expand(block_vertex_locked(parsed->second, range_type));
      }
    } else if (kind == GraphKind::Lattice) {
      if (name.size() < 4 || name[0] != 'c') return std::nullopt;
      auto at = name.find('@');
      if (at == std::string_view::npos) return std::nullopt;
      auto color = parse_int(name.substr(1, at - 1));
      if (!color || *color < 1 || *color > k()) return std::nullopt;
      auto v = find_vertex_locked(name.substr(at + 1));
      if (!v) return std::nullopt;
      expand(*v);
    } else {
      return std::nullopt;
    }
    if (auto it = ename.find(std::string(name)); it != ename.end()) return it->second;
    return std::nullopt;
  }

  void record_square(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d,
                     std::vector<std::string>& conflicts) {
    auto put = [&](std::pair<std::uint32_t, std::uint32_t> from, std::pair<std::uint32_t, std::uint32_t> to) {
      auto [it, fresh] = squares.emplace(from, to);
      if (!fresh && it->second != to)
        conflicts.push_back(es[from.first].name + "." + es[from.second].name + " maps to both " +
                            es[it->second.first].name + "." + es[it->second.second].name + " and " +
                            es[to.first].name + "." + es[to.second].name);
    };
    put({a, b}, {c, d});
    put({c, d}, {a, b});
  }

  bool square_shape_ok(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const {
    const auto& A = es[a].info;
    const auto& B = es[b].info;
    const auto& C = es[c].info;
    const auto& D = es[d].info;
    return A.color != B.color && A.color == D.color && B.color == C.color && A.source == B.range &&
           C.source == D.range && A.range == C.range && B.source == D.source;
  }
};

KGraph::KGraph(Presentation p) : presentation_(std::move(p)), impl_(std::make_unique<Impl>()) {
  impl_->owner = this;
}

KGraph::~KGraph() = default;

std::shared_ptr<const KGraph> KGraph::build(const Presentation& p) {
  std::shared_ptr<KGraph> g(new KGraph(p));
  auto& im = *g->impl_;
  g->k_ = rank_of(p);
  if (g->k_ < 1) throw std::invalid_argument("k must be at least 1");

  auto check_color = [&](int c, const std::string& id) {
    if (c < 1 || c > g->k_)
      throw std::invalid_argument("edge '" + id + "' has color " + std::to_string(c) + " outside 1.." +
                                  std::to_string(g->k_));
  };

  auto build_finite = [&](const FiniteSkeleton& s) {
    g->kind_ = GraphKind::Finite;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      Impl::VRec rec;
      rec.name = s.vertices[i];
      rec.local = i;
      rec.expanded = true;
      im.add_vertex(std::move(rec));
    }
    for (const auto& d : s.edges) {
      check_color(d.color, d.id);
      auto r = im.vname.find(d.range);
      auto src = im.vname.find(d.source);
      if (r == im.vname.end() || src == im.vname.end())
        throw std::invalid_argument("edge '" + d.id + "' refers to an undeclared vertex");
      Impl::ERec e;
      e.name = d.id;
      e.info = {d.color, Vertex{r->second}, Vertex{src->second}};
      auto eid = im.add_edge(std::move(e));
      im.vs[r->second].out[static_cast<std::size_t>(d.color - 1)].push_back(Edge{eid});
    }
    for (auto& v : im.vs) im.sort_out(v);
    for (const auto& sq : s.squares) {
      std::array<std::uint32_t, 4> ids{};
      const std::array<std::string, 4> names{sq.left[0], sq.left[1], sq.right[0], sq.right[1]};
      for (std::size_t i = 0; i < 4; ++i) {
        auto it = im.ename.find(names[i]);
        if (it == im.ename.end()) throw std::invalid_argument("square refers to undeclared edge '" + names[i] + "'");
        ids[i] = it->second;
      }
      if (!im.square_shape_ok(ids[0], ids[1], ids[2], ids[3])) {
        g->square_conflicts_.push_back("square " + names[0] + "." + names[1] + " = " + names[2] + "." + names[3] +
                                       " does not match edge colors and endpoints");
        continue;
      }
      im.record_square(ids[0], ids[1], ids[2], ids[3], g->square_conflicts_);
    }
  };

  std::visit(overloaded{
                 [&](const FiniteSkeleton& s) { build_finite(s); },
                 [&](const LevelPresentation& l) {
                   g->kind_ = GraphKind::Level;
                   im.lazy = true;
                   im.level = l;
                 },
                 [&](const BuiltinFamily& b) {
                   std::visit(overloaded{
                                  [&](const OmegaFamily&) {
                                    g->kind_ = GraphKind::Lattice;
                                    im.lazy = true;
                                  },
                                  [&](const CombFamily& c) {
                                    g->kind_ = GraphKind::Level;
                                    im.lazy = true;
                                    im.level = expand(c);
                                  },
                                  [&](const OneVertexFamily& f) { build_finite(expand(f)); },
                              },
                              b);
                 },
             },
             p);

  if (g->kind_ == GraphKind::Level) {
    const auto& l = im.level;
    for (std::size_t lvl = 0; lvl < l.core_levels.size(); ++lvl) {
      for (const auto& name : l.core_levels[lvl]) {
        Impl::VRec rec;
        rec.name = name;
        rec.local = im.core_level_of.size();
        im.add_vertex(std::move(rec));
        im.core_level_of.push_back(static_cast<int>(lvl));
      }
    }
    for (std::size_t t = 0; t < l.block_vertices.size(); ++t) {
      if (im.vname.count(l.block_vertices[t]) || !im.block_index.emplace(l.block_vertices[t], t).second)
        throw std::invalid_argument("duplicate vertex id '" + l.block_vertices[t] + "'");
    }
    if (l.block_vertices.empty()) throw std::invalid_argument("level presentation needs a non-empty periodic block");
    auto need_core = [&](const std::string& v, const std::string& id) {
      if (!im.vname.count(v)) throw std::invalid_argument("edge '" + id + "' refers to an undeclared vertex");
    };
    auto need_block = [&](const std::string& v, const std::string& id) {
      if (!im.block_index.count(v)) throw std::invalid_argument("edge '" + id + "' refers to an undeclared vertex");
    };
    std::unordered_map<std::string, int> seen;
    auto unique_edge = [&](const std::string& id) {
      if (seen[id]++) throw std::invalid_argument("duplicate edge id '" + id + "'");
    };
    for (const auto& d : l.core_edges) {
      unique_edge(d.id);
      check_color(d.color, d.id);
      need_core(d.range, d.id);
      need_core(d.source, d.id);
      im.plain_edge_range[d.id] = d.range;
    }
    for (const auto& d : l.glue_edges) {
      unique_edge(d.id);
      check_color(d.color, d.id);
      need_core(d.range, d.id);
      need_block(d.source, d.id);
      im.plain_edge_range[d.id] = d.range;
    }
    for (std::size_t t = 0; t < l.block_edges.size(); ++t) {
      const auto& d = l.block_edges[t];
      unique_edge(d.id);
      check_color(d.color, d.id);
      need_block(d.range, d.id);
      need_block(d.source, d.id);
      if (d.source_offset != 0 && d.source_offset != 1)
        throw std::invalid_argument("block edge '" + d.id + "' must have source_offset 0 or 1");
      im.template_index[d.id] = t;
    }
    for (const auto& sq : l.block_squares) {
      std::array<std::size_t, 4> t{};
      const std::array<std::string, 4> names{sq.left[0], sq.left[1], sq.right[0], sq.right[1]};
      for (std::size_t i = 0; i < 4; ++i) {
        auto it = im.template_index.find(names[i]);
        if (it == im.template_index.end())
          throw std::invalid_argument("block square refers to undeclared block edge '" + names[i] + "'");
        t[i] = it->second;
      }
      const auto& A = l.block_edges[t[0]];
      const auto& B = l.block_edges[t[1]];
      const auto& C = l.block_edges[t[2]];
      const auto& D = l.block_edges[t[3]];
      bool ok = A.color != B.color && A.color == D.color && B.color == C.color && A.source == B.range &&
                C.source == D.range && A.range == C.range && B.source == D.source &&
                A.source_offset + B.source_offset == C.source_offset + D.source_offset;
      if (!ok) {
        g->square_conflicts_.push_back("square " + names[0] + "." + names[1] + " = " + names[2] + "." + names[3] +
                                       " does not match edge colors and endpoints");
        continue;
      }
      auto put = [&](std::pair<std::size_t, std::size_t> from, std::pair<std::size_t, std::size_t> to) {
        auto [it, fresh] = im.template_squares.emplace(from, to);
        if (!fresh && it->second != to)
          g->square_conflicts_.push_back(l.block_edges[from.first].id + "." + l.block_edges[from.second].id +
                                         " maps to two different squares");
      };
      put({t[0], t[1]}, {t[2], t[3]});
      put({t[2], t[3]}, {t[0], t[1]});
    }
    for (const auto& sq : l.core_squares) {
      std::array<std::uint32_t, 4> ids{};
      const std::array<std::string, 4> names{sq.left[0], sq.left[1], sq.right[0], sq.right[1]};
      for (std::size_t i = 0; i < 4; ++i) {
        auto e = im.find_edge_locked(names[i]);
        if (!e) throw std::invalid_argument("square refers to undeclared edge '" + names[i] + "'");
        ids[i] = *e;
      }
      if (!im.square_shape_ok(ids[0], ids[1], ids[2], ids[3])) {
        g->square_conflicts_.push_back("square " + names[0] + "." + names[1] + " = " + names[2] + "." + names[3] +
                                       " does not match edge colors and endpoints");
        continue;
      }
      im.record_square(ids[0], ids[1], ids[2], ids[3], g->square_conflicts_);
    }
  }
  return g;
}

std::optional<Vertex> KGraph::find_vertex(std::string_view name) const {
  auto lock = impl_->guard();
  if (auto v = impl_->find_vertex_locked(name)) return Vertex{*v};
  return std::nullopt;
}

Vertex KGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

std::optional<Edge> KGraph::find_edge(std::string_view name) const {
  auto lock = impl_->guard();
  if (auto e = impl_->find_edge_locked(name)) return Edge{*e};
  return std::nullopt;
}

Edge KGraph::edge(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw std::invalid_argument("unknown edge '" + std::string(name) + "'");
}

std::string KGraph::name(Vertex v) const {
  auto lock = impl_->guard();
  return impl_->vs.at(v.index).name;
}

std::string KGraph::name(Edge e) const {
  auto lock = impl_->guard();
  return impl_->es.at(e.index).name;
}

EdgeInfo KGraph::info(Edge e) const {
  auto lock = impl_->guard();
  return impl_->es.at(e.index).info;
}

std::span<const Edge> KGraph::edges_at(Vertex v, int color) const {
  if (color < 1 || color > k_) throw std::out_of_range("color out of range");
  auto lock = impl_->guard();
  impl_->expand(v.index);
  const auto& list = impl_->vs.at(v.index).out[static_cast<std::size_t>(color - 1)];
  return {list.data(), list.size()};
}

std::optional<std::pair<Edge, Edge>> KGraph::square(Edge e, Edge f) const {
  auto lock = impl_->guard();
  auto& im = *impl_;
  if (auto it = im.squares.find({e.index, f.index}); it != im.squares.end())
    return std::pair{Edge{it->second.first}, Edge{it->second.second}};
  if (kind_ == GraphKind::Finite) return std::nullopt;
  const auto& E = im.es.at(e.index);
  const auto& F = im.es.at(f.index);
  if (E.info.source != F.info.range || E.info.color == F.info.color) return std::nullopt;
  if (kind_ == GraphKind::Lattice) {
    auto coords = im.vs[E.info.range.index].coords;
    auto first = im.find_edge_locked("c" + std::to_string(F.info.color) + "@" + im.vs[E.info.range.index].name);
    auto next = coords;
    next[static_cast<std::size_t>(F.info.color - 1)] += 1;
    auto mid = im.lattice_vertex_locked(next);
    auto second = im.find_edge_locked("c" + std::to_string(E.info.color) + "@" + im.vs[mid].name);
    return std::pair{Edge{*first}, Edge{*second}};
  }
  if (E.kind != EdgeKind::Block || F.kind != EdgeKind::Block) return std::nullopt;
  auto it = im.template_squares.find({E.local, F.local});
  if (it == im.template_squares.end()) return std::nullopt;
  const auto& l = im.level;
  auto level = E.level;
  const auto& t1 = l.block_edges[it->second.first];
  auto a = im.find_edge_locked(t1.id + "@" + std::to_string(level));
  auto b = im.find_edge_locked(l.block_edges[it->second.second].id + "@" + std::to_string(level + t1.source_offset));
  if (!a || !b) return std::nullopt;
  return std::pair{Edge{*a}, Edge{*b}};
}

std::vector<Vertex> KGraph::vertices() const {
  if (kind_ != GraphKind::Finite) throw std::logic_error("vertices() needs a finite graph");
  std::vector<Vertex> out;
  for (std::uint32_t i = 0; i < impl_->vs.size(); ++i) out.push_back(Vertex{i});
  return out;
}

std::size_t KGraph::vertex_count() const {
  if (kind_ != GraphKind::Finite) throw std::logic_error("vertex_count() needs a finite graph");
  return impl_->vs.size();
}

int KGraph::first_block_level() const {
  if (kind_ != GraphKind::Level) throw std::logic_error("not a level presentation");
  return impl_->level.first_block_level();
}

const LevelPresentation& KGraph::level_data() const {
  if (kind_ != GraphKind::Level) throw std::logic_error("not a level presentation");
  return impl_->level;
}

std::vector<Vertex> KGraph::core_vertices() const {
  if (kind_ != GraphKind::Level) throw std::logic_error("not a level presentation");
  std::vector<Vertex> out;
  for (std::uint32_t i = 0; i < impl_->core_level_of.size(); ++i) out.push_back(Vertex{i});
  return out;
}

const std::vector<std::string>& KGraph::block_types() const {
  if (kind_ != GraphKind::Level) throw std::logic_error("not a level presentation");
  return impl_->level.block_vertices;
}

Vertex KGraph::block_vertex(std::int64_t level, std::size_t type) const {
  if (kind_ != GraphKind::Level) throw std::logic_error("not a level presentation");
  auto lock = impl_->guard();
  return Vertex{impl_->block_vertex_locked(level, type)};
}

std::optional<BlockPosition> KGraph::block_position(Vertex v) const {
  if (kind_ != GraphKind::Level) return std::nullopt;
  auto lock = impl_->guard();
  const auto& rec = impl_->vs.at(v.index);
  if (rec.level < 0) return std::nullopt;
  return BlockPosition{rec.level, rec.local};
}

int KGraph::core_level(Vertex v) const {
  if (kind_ != GraphKind::Level) throw std::logic_error("not a level presentation");
  auto lock = impl_->guard();
  const auto& rec = impl_->vs.at(v.index);
  if (rec.level >= 0) throw std::logic_error("not a core vertex");
  return impl_->core_level_of.at(rec.local);
}

Vertex KGraph::lattice_vertex(const Degree& coords) const {
  if (kind_ != GraphKind::Lattice) throw std::logic_error("not a lattice graph");
  if (coords.k() != k_) throw std::invalid_argument("coordinate rank mismatch");
  auto lock = impl_->guard();
  return Vertex{impl_->lattice_vertex_locked(coords.coords())};
}

Degree KGraph::lattice_coords(Vertex v) const {
  if (kind_ != GraphKind::Lattice) throw std::logic_error("not a lattice graph");
  auto lock = impl_->guard();
  return Degree(impl_->vs.at(v.index).coords);
}

}  // namespace kpt
