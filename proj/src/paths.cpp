#include "kpt/paths.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kpt {

Path vertex_path(const KGraph& g, Vertex v) { return Path{v, v, Degree(g.k()), {}}; }

Path edge_path(const KGraph& g, Edge e) {
  auto info = g.info(e);
  return Path{info.range, info.source, Degree::unit(g.k(), info.color), {e}};
}

std::vector<int> canonical_colors(const Degree& d) {
  std::vector<int> out;
  for (int c = 1; c <= d.k(); ++c)
    for (std::int64_t i = 0; i < d.at_color(c); ++i) out.push_back(c);
  return out;
}

std::vector<Edge> reorder(const KGraph& g, std::vector<Edge> word, const std::vector<int>& colors) {
  if (word.size() != colors.size()) throw std::invalid_argument("color word length does not match the path");
  std::vector<int> have;
  have.reserve(word.size());
  for (auto e : word) have.push_back(g.color(e));
  {
    auto a = have, b = colors;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("color word is not a permutation of the path's colors");
  }
  for (std::size_t p = 0; p < word.size(); ++p) {
    std::size_t q = p;
    while (have[q] != colors[p]) ++q;
    for (; q > p; --q) {
      auto sq = g.square(word[q - 1], word[q]);
      if (!sq)
        throw std::runtime_error("no factorization square for " + g.name(word[q - 1]) + "." + g.name(word[q]));
      word[q - 1] = sq->first;
      word[q] = sq->second;
      std::swap(have[q - 1], have[q]);
    }
  }
  return word;
}

Path make_path(const KGraph& g, const std::vector<Edge>& word) {
  if (word.empty()) throw std::invalid_argument("make_path needs at least one edge");
  Degree d(g.k());
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto info = g.info(word[i]);
    d[info.color - 1] += 1;
    if (i + 1 < word.size() && info.source != g.range(word[i + 1]))
      throw std::invalid_argument("edges " + g.name(word[i]) + " and " + g.name(word[i + 1]) + " do not compose");
  }
  Path p;
  p.range = g.range(word.front());
  p.source = g.source(word.back());
  p.degree = d;
  p.word = reorder(g, word, canonical_colors(d));
  return p;
}

Path compose(const KGraph& g, const Path& lambda, const Path& mu) {
  if (lambda.source != mu.range)
    throw std::invalid_argument("cannot compose: source " + g.name(lambda.source) + " differs from range " +
                                g.name(mu.range));
  if (lambda.is_vertex()) return mu;
  if (mu.is_vertex()) return lambda;
  std::vector<Edge> word = lambda.word;
  word.insert(word.end(), mu.word.begin(), mu.word.end());
  auto d = lambda.degree + mu.degree;
  return Path{lambda.range, mu.source, d, reorder(g, std::move(word), canonical_colors(d))};
}

std::pair<Path, Path> factor(const KGraph& g, const Path& lambda, const Degree& m) {
  if (!m.leq(lambda.degree))
    throw std::invalid_argument("cannot factor at " + m.str() + ": not below " + lambda.degree.str());
  auto rest = lambda.degree - m;
  auto colors = canonical_colors(m);
  auto tail_colors = canonical_colors(rest);
  colors.insert(colors.end(), tail_colors.begin(), tail_colors.end());
  auto word = reorder(g, lambda.word, colors);
  auto split = static_cast<std::ptrdiff_t>(m.total());
  Path head{lambda.range, lambda.range, m, {word.begin(), word.begin() + split}};
  if (!head.is_vertex()) head.source = g.source(head.word.back());
  Path tail{head.source, lambda.source, rest, {word.begin() + split, word.end()}};
  return {head, tail};
}

std::vector<Edge> refactor(const KGraph& g, const Path& lambda, const std::vector<int>& colors) {
  return reorder(g, lambda.word, colors);
}

std::vector<Path> enumerate_paths(const KGraph& g, Vertex v, const Degree& n) {
  if (n.k() != g.k()) throw std::invalid_argument("degree rank mismatch");
  auto colors = canonical_colors(n);
  std::vector<Path> out;
  std::vector<Edge> word;
  std::function<void(Vertex, std::size_t)> go = [&](Vertex at, std::size_t i) {
    if (i == colors.size()) {
      out.push_back(Path{v, at, n, word});
      return;
    }
    for (auto e : g.edges_at(at, colors[i])) {
      word.push_back(e);
      go(g.source(e), i + 1);
      word.pop_back();
    }
  };
  go(v, 0);
  return out;
}

std::size_t count_paths(const KGraph& g, Vertex v, const Degree& n) {
  auto colors = canonical_colors(n);
  std::function<std::size_t(Vertex, std::size_t)> go = [&](Vertex at, std::size_t i) -> std::size_t {
    if (i == colors.size()) return 1;
    std::size_t total = 0;
    for (auto e : g.edges_at(at, colors[i])) total += go(g.source(e), i + 1);
    return total;
  };
  return go(v, 0);
}

std::string path_name(const KGraph& g, const Path& p) {
  if (p.is_vertex()) return g.name(p.range);
  std::string out;
  for (std::size_t i = 0; i < p.word.size(); ++i) {
    if (i) out += ".";
    out += g.name(p.word[i]);
  }
  return out;
}

}  // namespace kpt
