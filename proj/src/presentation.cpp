#include "kpt/presentation.hpp"

#include <stdexcept>

namespace kpt {

namespace {

constexpr const char* kColorLetters = "brgymcop";

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

int rank_of(const Presentation& p) {
  return std::visit(overloaded{
                        [](const FiniteSkeleton& s) { return s.k; },
                        [](const LevelPresentation& l) { return l.k; },
                        [](const BuiltinFamily& b) {
                          return std::visit(overloaded{
                                                [](const OmegaFamily& o) { return o.k; },
                                                [](const CombFamily&) { return 1; },
                                                [](const OneVertexFamily& f) { return f.k; },
                                            },
                                            b);
                        },
                    },
                    p);
}

std::string one_vertex_edge_name(int k, int color, int index, int count) {
  std::string base = k <= 8 ? std::string(1, kColorLetters[color - 1]) : "x" + std::to_string(color) + "_";
  return count == 1 ? base : base + std::to_string(index);
}

FiniteSkeleton expand(const OneVertexFamily& f) {
  if (f.k < 1) throw std::invalid_argument("onevertex: k must be positive");
  if (static_cast<int>(f.sizes.size()) != f.k)
    throw std::invalid_argument("onevertex: expected " + std::to_string(f.k) + " edge counts");
  FiniteSkeleton s;
  s.k = f.k;
  s.vertices = {"v"};
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(f.k));
  for (int c = 1; c <= f.k; ++c) {
    int count = f.sizes[static_cast<std::size_t>(c - 1)];
    if (count < 0) throw std::invalid_argument("onevertex: negative edge count");
    for (int a = 1; a <= count; ++a) {
      auto name = one_vertex_edge_name(f.k, c, a, count);
      names[static_cast<std::size_t>(c - 1)].push_back(name);
      s.edges.push_back({name, c, "v", "v"});
    }
  }
  std::size_t pair_index = 0;
  for (int i = 1; i <= f.k; ++i) {
    for (int j = i + 1; j <= f.k; ++j, ++pair_index) {
      const auto& ei = names[static_cast<std::size_t>(i - 1)];
      const auto& ej = names[static_cast<std::size_t>(j - 1)];
      const int ni = static_cast<int>(ei.size());
      const int nj = static_cast<int>(ej.size());
      std::vector<int> perm;
      if (pair_index < f.permutations.size() && !f.permutations[pair_index].empty())
        perm = f.permutations[pair_index];
      else
        for (int t = 0; t < ni * nj; ++t) perm.push_back(t);
      if (static_cast<int>(perm.size()) != ni * nj)
        throw std::invalid_argument("onevertex: permutation for colors (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") must have " + std::to_string(ni * nj) + " entries");
      for (int a = 0; a < ni; ++a) {
        for (int b = 0; b < nj; ++b) {
          int image = perm[static_cast<std::size_t>(a * nj + b)];
          if (image < 0 || image >= ni * nj) throw std::invalid_argument("onevertex: permutation entry out of range");
          int a2 = image / nj;
          int b2 = image % nj;
          s.squares.push_back({{ei[static_cast<std::size_t>(a)], ej[static_cast<std::size_t>(b)]},
                               {ej[static_cast<std::size_t>(b2)], ei[static_cast<std::size_t>(a2)]}});
        }
      }
    }
  }
  return s;
}

LevelPresentation expand(const CombFamily& f) {
  if (f.n < 1) throw std::invalid_argument("comb: n must be positive");
  LevelPresentation l;
  l.k = 1;
  l.core_levels.emplace_back();
  for (int i = 1; i <= f.n; ++i) {
    const auto t = "t" + std::to_string(i);
    const auto c = "c" + std::to_string(i);
    l.core_levels[0].push_back(t);
    l.block_vertices.push_back(c);
    l.block_edges.push_back({"d" + std::to_string(i), 1, c, c, 1});
    l.glue_edges.push_back({"g" + std::to_string(i), 1, t, c});
  }
  // The spine alternates direction: every even top vertex receives an edge
  // from each of its horizontal neighbours.
  for (int i = 2; i <= f.n; i += 2) {
    for (int j : {i - 1, i + 1}) {
      if (j > f.n) continue;
      l.core_edges.push_back({"h" + std::to_string(i) + "_" + std::to_string(j), 1, "t" + std::to_string(i),
                              "t" + std::to_string(j)});
    }
  }
  return l;
}

std::string describe(const Presentation& p) {
  return std::visit(
      overloaded{
          [](const FiniteSkeleton& s) {
            return "skeleton(k=" + std::to_string(s.k) + ", " + std::to_string(s.vertices.size()) + " vertices)";
          },
          [](const LevelPresentation& l) {
            return "level(k=" + std::to_string(l.k) + ", " + std::to_string(l.core_levels.size()) + " core levels, " +
                   std::to_string(l.block_vertices.size()) + " block vertices)";
          },
          [](const BuiltinFamily& b) {
            return std::visit(overloaded{
                                  [](const OmegaFamily& o) { return "builtin:omega:" + std::to_string(o.k); },
                                  [](const CombFamily& c) { return "builtin:comb:" + std::to_string(c.n); },
                                  [](const OneVertexFamily& f) {
                                    std::string s = "builtin:onevertex:" + std::to_string(f.k) + ":";
                                    for (std::size_t i = 0; i < f.sizes.size(); ++i)
                                      s += (i ? "," : "") + std::to_string(f.sizes[i]);
                                    return s;
                                  },
                              },
                              b);
          },
      },
      p);
}

}  // namespace kpt
