#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "kpt/graph_io.hpp"
#include "kpt/kgraph.hpp"
#include "kpt/paths.hpp"

namespace kpt::testing {

inline std::string data_path(const std::string& name) { return std::string(KPT_TEST_DATA) + "/" + name; }

inline std::shared_ptr<const KGraph> graph(const std::string& file_or_uri) {
  auto spec = file_or_uri.rfind("builtin:", 0) == 0 ? file_or_uri : data_path(file_or_uri);
  return KGraph::build(load_graph_spec(spec));
}

inline Path path_of(const KGraph& g, const std::vector<std::string>& names) {
  std::vector<Edge> word;
  for (const auto& n : names) word.push_back(g.edge(n));
  return make_path(g, word);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace kpt::testing
