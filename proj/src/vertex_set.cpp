#include "kpt/vertex_set.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kpt {

namespace {

constexpr std::size_t kMaxAbsorbBox = 200000;

bool mask_empty(const VertexSet::Mask& m) { return std::none_of(m.begin(), m.end(), [](bool b) { return b; }); }
bool mask_full(const VertexSet::Mask& m) { return std::all_of(m.begin(), m.end(), [](bool b) { return b; }); }

bool above_any(const Degree& x, const std::vector<Degree>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Degree& g) { return g.leq(x); });
}

// Visits every x with lo <= x <= hi componentwise; stops when f returns false.
bool for_box(const Degree& lo, const Degree& hi, const std::function<bool(const Degree&)>& f) {
  Degree x = lo;
  const int k = lo.k();
  while (true) {
    if (!f(x)) return false;
    int i = 0;
    while (i < k && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == k) return true;
    x[i] += 1;
  }
}

}  // namespace

VertexSet::VertexSet(const KGraph& g) : g_(&g) {
  switch (g.kind()) {
    case GraphKind::Finite:
      core_.assign(g.vertex_count(), false);
      break;
    case GraphKind::Level:
      core_.assign(g.core_vertices().size(), false);
      cycle_.assign(1, Mask(g.block_types().size(), false));
      break;
    case GraphKind::Lattice:
      break;
  }
}

VertexSet VertexSet::all(const KGraph& g) {
  VertexSet s(g);
  std::fill(s.core_.begin(), s.core_.end(), true);
  if (g.kind() == GraphKind::Level) s.cycle_.assign(1, Mask(g.block_types().size(), true));
  if (g.kind() == GraphKind::Lattice) s.cones_ = {Degree(g.k())};
  return s;
}

VertexSet VertexSet::of(const KGraph& g, const std::vector<Vertex>& vs) {
  VertexSet s(g);
  switch (g.kind()) {
    case GraphKind::Finite:
      for (auto v : vs) s.core_.at(v.index) = true;
      break;
    case GraphKind::Level: {
      const auto first = g.first_block_level();
      for (auto v : vs) {
        if (auto pos = g.block_position(v)) {
          auto i = static_cast<std::size_t>(pos->level - first);
          while (s.prefix_.size() <= i) s.prefix_.push_back(Mask(g.block_types().size(), false));
          s.prefix_[i][pos->type] = true;
        } else {
          s.core_.at(v.index) = true;
        }
      }
      break;
    }
    case GraphKind::Lattice:
      for (auto v : vs) s.points_.push_back(g.lattice_coords(v));
      break;
  }
  s.canonicalize();
  return s;
}

VertexSet VertexSet::level(const KGraph& g, Mask core, std::vector<Mask> prefix, std::vector<Mask> cycle) {
  if (g.kind() != GraphKind::Level) throw std::logic_error("not a level presentation");
  if (cycle.empty()) throw std::invalid_argument("periodic part needs at least one mask");
  VertexSet s(g);
  if (core.size() != s.core_.size()) throw std::invalid_argument("core mask size mismatch");
  s.core_ = std::move(core);
  s.prefix_ = std::move(prefix);
  s.cycle_ = std::move(cycle);
  s.canonicalize();
  return s;
}

VertexSet VertexSet::lattice(const KGraph& g, std::vector<Degree> points, std::vector<Degree> cones) {
  if (g.kind() != GraphKind::Lattice) throw std::logic_error("not a lattice graph");
  VertexSet s(g);
  s.points_ = std::move(points);
  s.cones_ = std::move(cones);
  s.canonicalize();
  return s;
}

void VertexSet::canonicalize() {
  if (g_->kind() == GraphKind::Level) {
    const auto n = cycle_.size();
    for (std::size_t p = 1; p <= n; ++p) {
      if (n % p) continue;
      bool ok = true;
      for (std::size_t i = p; i < n && ok; ++i) ok = cycle_[i] == cycle_[i % p];
      if (ok) {
        cycle_.resize(p);
        break;
      }
    }
    while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
      std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
      prefix_.pop_back();
    }
  } else if (g_->kind() == GraphKind::Lattice) {
    const int k = g_->k();
    std::vector<Degree> candidates = cones_;
    for (const auto& f : points_) {
      if (above_any(f, cones_)) continue;
      Degree hi = f;
      for (const auto& g : cones_)
        for (int i = 0; i < k; ++i) hi[i] = std::max(hi[i], g[i]);
      std::size_t box = 1;
      for (int i = 0; i < k; ++i) {
        hi[i] += 1;
        box *= static_cast<std::size_t>(hi[i] - f[i] + 1);
      }
      if (box > kMaxAbsorbBox) continue;
      bool absorbed = for_box(f, hi, [&](const Degree& x) {
        if (above_any(x, cones_)) return true;
        for (int i = 0; i < k; ++i)
          if (x[i] == hi[i]) return false;
        return std::find(points_.begin(), points_.end(), x) != points_.end();
      });
      if (absorbed) candidates.push_back(f);
    }
    std::vector<Degree> minimal;
    for (const auto& c : candidates) {
      bool dominated = false;
      for (const auto& o : candidates)
        if (o != c && o.leq(c)) dominated = true;
      if (!dominated && std::find(minimal.begin(), minimal.end(), c) == minimal.end()) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    cones_ = minimal;
    std::vector<Degree> pts;
    for (const auto& p : points_)
      if (!above_any(p, cones_)) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    points_ = pts;
  }
}

VertexSet::Mask VertexSet::mask_at(std::int64_t level) const {
  auto i = static_cast<std::size_t>(level - g_->first_block_level());
  if (i < prefix_.size()) return prefix_[i];
  return cycle_[(i - prefix_.size()) % cycle_.size()];
}

bool VertexSet::contains(Vertex v) const {
  switch (g_->kind()) {
    case GraphKind::Finite:
      return core_.at(v.index);
    case GraphKind::Level:
      if (auto pos = g_->block_position(v)) return mask_at(pos->level)[pos->type];
      return core_.at(v.index);
    case GraphKind::Lattice: {
      auto c = g_->lattice_coords(v);
      return above_any(c, cones_) || std::find(points_.begin(), points_.end(), c) != points_.end();
    }
  }
  return false;
}

bool VertexSet::empty() const {
  switch (g_->kind()) {
    case GraphKind::Finite:
      return mask_empty(core_);
    case GraphKind::Level:
      return mask_empty(core_) && std::all_of(prefix_.begin(), prefix_.end(), mask_empty) &&
             std::all_of(cycle_.begin(), cycle_.end(), mask_empty);
    case GraphKind::Lattice:
      return points_.empty() && cones_.empty();
  }
  return true;
}

bool VertexSet::is_all() const {
  switch (g_->kind()) {
    case GraphKind::Finite:
      return mask_full(core_);
    case GraphKind::Level:
      return mask_full(core_) && std::all_of(prefix_.begin(), prefix_.end(), mask_full) &&
             std::all_of(cycle_.begin(), cycle_.end(), mask_full);
    case GraphKind::Lattice:
      return above_any(Degree(g_->k()), cones_);
  }
  return false;
}

bool VertexSet::is_bounded() const {
  switch (g_->kind()) {
    case GraphKind::Finite:
      return true;
    case GraphKind::Level:
      return std::all_of(cycle_.begin(), cycle_.end(), mask_empty);
    case GraphKind::Lattice:
      return cones_.empty();
  }
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  if (!is_bounded()) throw std::logic_error("members() of an infinite vertex set");
  std::vector<Vertex> out;
  switch (g_->kind()) {
    case GraphKind::Finite:
      for (std::uint32_t i = 0; i < core_.size(); ++i)
        if (core_[i]) out.push_back(Vertex{i});
      break;
    case GraphKind::Level:
      for (std::uint32_t i = 0; i < core_.size(); ++i)
        if (core_[i]) out.push_back(Vertex{i});
      for (std::size_t l = 0; l < prefix_.size(); ++l)
        for (std::size_t t = 0; t < prefix_[l].size(); ++t)
          if (prefix_[l][t]) out.push_back(g_->block_vertex(g_->first_block_level() + static_cast<std::int64_t>(l), t));
      break;
    case GraphKind::Lattice:
      for (const auto& p : points_) out.push_back(g_->lattice_vertex(p));
      break;
  }
  return out;
}

std::optional<Vertex> VertexSet::some_member() const {
  switch (g_->kind()) {
    case GraphKind::Finite:
    case GraphKind::Level: {
      for (std::uint32_t i = 0; i < core_.size(); ++i)
        if (core_[i]) return Vertex{i};
      if (g_->kind() == GraphKind::Finite) return std::nullopt;
      const auto first = g_->first_block_level();
      const auto span = prefix_.size() + cycle_.size();
      for (std::size_t l = 0; l < span; ++l) {
        auto m = mask_at(first + static_cast<std::int64_t>(l));
        for (std::size_t t = 0; t < m.size(); ++t)
          if (m[t]) return g_->block_vertex(first + static_cast<std::int64_t>(l), t);
      }
      return std::nullopt;
    }
    case GraphKind::Lattice:
      if (!cones_.empty()) return g_->lattice_vertex(cones_.front());
      if (!points_.empty()) return g_->lattice_vertex(points_.front());
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Vertex> VertexSet::some_non_member() const {
  if (g_->kind() != GraphKind::Lattice) return complement().some_member();
  if (is_all()) return std::nullopt;
  const int k = g_->k();
  Degree hi(k);
  for (const auto& g : cones_)
    for (int i = 0; i < k; ++i) hi[i] = std::max(hi[i], g[i]);
  for (const auto& p : points_)
    for (int i = 0; i < k; ++i) hi[i] = std::max(hi[i], p[i]);
  for (int i = 0; i < k; ++i) hi[i] += 1;
  std::optional<Degree> found;
  for_box(Degree(k), hi, [&](const Degree& x) {
    if (above_any(x, cones_) || std::find(points_.begin(), points_.end(), x) != points_.end()) return true;
    found = x;
    return false;
  });
  if (!found) return std::nullopt;
  return g_->lattice_vertex(*found);
}

bool VertexSet::subset_of(const VertexSet& o) const { return intersect(o) == *this; }

bool operator==(const VertexSet& a, const VertexSet& b) {
  return a.g_ == b.g_ && a.core_ == b.core_ && a.prefix_ == b.prefix_ && a.cycle_ == b.cycle_ &&
         a.points_ == b.points_ && a.cones_ == b.cones_;
}

namespace {

template <class Op>
VertexSet::Mask combine(const VertexSet::Mask& a, const VertexSet::Mask& b, Op op) {
  VertexSet::Mask out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

}  // namespace

VertexSet VertexSet::unite(const VertexSet& o) const {
  if (g_ != o.g_) throw std::invalid_argument("vertex sets of different graphs");
  if (g_->kind() == GraphKind::Lattice) {
    auto pts = points_;
    pts.insert(pts.end(), o.points_.begin(), o.points_.end());
    auto cones = cones_;
    cones.insert(cones.end(), o.cones_.begin(), o.cones_.end());
    return lattice(*g_, pts, cones);
  }
  VertexSet s(*g_);
  s.core_ = combine(core_, o.core_, std::logical_or<>());
  if (g_->kind() == GraphKind::Level) {
    auto p = std::max(prefix_.size(), o.prefix_.size());
    auto c = std::lcm(cycle_.size(), o.cycle_.size());
    s.prefix_.clear();
    s.cycle_.clear();
    const auto first = g_->first_block_level();
    for (std::size_t i = 0; i < p + c; ++i) {
      auto l = first + static_cast<std::int64_t>(i);
      (i < p ? s.prefix_ : s.cycle_).push_back(combine(mask_at(l), o.mask_at(l), std::logical_or<>()));
    }
  }
  s.canonicalize();
  return s;
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
  if (g_ != o.g_) throw std::invalid_argument("vertex sets of different graphs");
  if (g_->kind() == GraphKind::Lattice) {
    std::vector<Degree> pts;
    for (const auto& p : points_)
      if (o.contains(g_->lattice_vertex(p))) pts.push_back(p);
    for (const auto& p : o.points_)
      if (contains(g_->lattice_vertex(p))) pts.push_back(p);
    std::vector<Degree> cones;
    for (const auto& a : cones_)
      for (const auto& b : o.cones_) cones.push_back(join(a, b));
    return lattice(*g_, pts, cones);
  }
  VertexSet s(*g_);
  s.core_ = combine(core_, o.core_, std::logical_and<>());
  if (g_->kind() == GraphKind::Level) {
    auto p = std::max(prefix_.size(), o.prefix_.size());
    auto c = std::lcm(cycle_.size(), o.cycle_.size());
    s.prefix_.clear();
    s.cycle_.clear();
    const auto first = g_->first_block_level();
    for (std::size_t i = 0; i < p + c; ++i) {
      auto l = first + static_cast<std::int64_t>(i);
      (i < p ? s.prefix_ : s.cycle_).push_back(combine(mask_at(l), o.mask_at(l), std::logical_and<>()));
    }
  }
  s.canonicalize();
  return s;
}

VertexSet VertexSet::complement() const {
  if (g_->kind() == GraphKind::Lattice) {
    if (empty()) return all(*g_);
    if (is_all()) return VertexSet(*g_);
    throw std::logic_error("complement of a proper lattice vertex set is not representable");
  }
  VertexSet s = *this;
  s.core_.flip();
  for (auto& m : s.prefix_) m.flip();
  for (auto& m : s.cycle_) m.flip();
  s.canonicalize();
  return s;
}

std::string VertexSet::describe() const {
  std::string out = "{";
  auto add = [&](const std::string& s) {
    if (out.size() > 1) out += ", ";
    out += s;
  };
  switch (g_->kind()) {
    case GraphKind::Finite:
      for (auto v : members()) add(g_->name(v));
      break;
    case GraphKind::Level: {
      for (std::uint32_t i = 0; i < core_.size(); ++i)
        if (core_[i]) add(g_->name(Vertex{i}));
      if (std::all_of(prefix_.begin(), prefix_.end(), mask_empty) &&
          std::all_of(cycle_.begin(), cycle_.end(), mask_empty))
        break;
      auto mask_str = [&](const Mask& m) {
        std::string s = "[";
        for (std::size_t t = 0; t < m.size(); ++t)
          if (m[t]) s += (s.size() > 1 ? "," : "") + g_->block_types()[t];
        return s + "]";
      };
      std::string block = "block from level " + std::to_string(g_->first_block_level()) + ":";
      for (const auto& m : prefix_) block += " " + mask_str(m);
      block += prefix_.empty() ? " repeat" : " then repeat";
      for (const auto& m : cycle_) block += " " + mask_str(m);
      if (out.size() > 1) out += "; ";
      out += block;
      break;
    }
    case GraphKind::Lattice: {
      for (const auto& p : points_) add(lattice_vertex_name(p));
      if (!cones_.empty()) {
        if (out.size() > 1) out += "; ";
        out += "above";
        for (std::size_t i = 0; i < cones_.size(); ++i) out += (i ? ", " : " ") + lattice_vertex_name(cones_[i]);
      }
      break;
    }
  }
  return out + "}";
}

}  // namespace kpt
