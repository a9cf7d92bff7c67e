#pragma once

// Type-level view of the repeating block of a level presentation.

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "kpt/kgraph.hpp"

namespace kpt::detail {

struct BlockEdge {
  std::size_t tmpl = 0;
  int color = 1;
  std::size_t range = 0;
  std::size_t source = 0;
  int offset = 1;
};

struct Block {
  std::size_t width = 0;
  std::vector<std::vector<BlockEdge>> out;  // by range type

  explicit Block(const KGraph& g) {
    const auto& l = g.level_data();
    width = l.block_vertices.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t t = 0; t < width; ++t) index[l.block_vertices[t]] = t;
    out.resize(width);
    for (std::size_t i = 0; i < l.block_edges.size(); ++i) {
      const auto& d = l.block_edges[i];
      BlockEdge e{i, d.color, index.at(d.range), index.at(d.source), d.source_offset};
      out[e.range].push_back(e);
    }
  }

  std::size_t degree(std::size_t type, int color) const {
    std::size_t n = 0;
    for (const auto& e : out[type])
      if (e.color == color) ++n;
    return n;
  }
};

}  // namespace kpt::detail
