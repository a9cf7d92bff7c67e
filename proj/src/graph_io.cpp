#include "kpt/graph_io.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kpt/paths.hpp"

namespace kpt {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_field(const json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_string()) throw SpecError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int int_field(const json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_number_integer()) throw SpecError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw SpecError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw SpecError(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

EdgeDecl edge_decl(const json& j) {
  return EdgeDecl{str_field(j, "id"), int_field(j, "color"), str_field(j, "range"), str_field(j, "source")};
}

std::vector<EdgeDecl> edge_list(const json& parent, const char* key) {
  std::vector<EdgeDecl> out;
  if (!parent.contains(key)) return out;
  const auto& arr = parent.at(key);
  if (!arr.is_array()) throw SpecError(std::string(key) + " must be an array");
  for (const auto& e : arr) out.push_back(edge_decl(e));
  return out;
}

std::vector<SquareDecl> square_list(const json& parent, const char* key) {
  std::vector<SquareDecl> out;
  if (!parent.contains(key)) return out;
  const auto& arr = parent.at(key);
  if (!arr.is_array()) throw SpecError(std::string(key) + " must be an array");
  for (const auto& s : arr) {
    auto left = string_list(need(s, "left"), "square left");
    auto right = string_list(need(s, "right"), "square right");
    if (left.size() != 2 || right.size() != 2) throw SpecError("squares need two edges on each side");
    out.push_back({{left[0], left[1]}, {right[0], right[1]}});
  }
  return out;
}

void check_unique(const std::vector<std::string>& ids, const char* what) {
  std::set<std::string> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second) throw SpecError(std::string("duplicate ") + what + " id '" + id + "'");
}

void check_colors(const std::vector<EdgeDecl>& edges, int k) {
  for (const auto& e : edges)
    if (e.color < 1 || e.color > k)
      throw SpecError("edge '" + e.id + "' has color " + std::to_string(e.color) + " outside 1.." + std::to_string(k));
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw SpecError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

OneVertexFamily one_vertex_from_json(const json& params) {
  OneVertexFamily f;
  f.k = int_field(params, "k");
  const auto& sizes = need(params, "sizes");
  if (!sizes.is_array()) throw SpecError("sizes must be an array");
  for (const auto& s : sizes) {
    if (!s.is_number_integer()) throw SpecError("sizes must be integers");
    f.sizes.push_back(s.get<int>());
  }
  if (params.contains("permutations")) {
    for (const auto& p : params.at("permutations")) {
      std::vector<int> perm;
      for (const auto& x : p) perm.push_back(x.get<int>());
      f.permutations.push_back(perm);
    }
  }
  return f;
}

void check_one_vertex(const OneVertexFamily& f) {
  if (f.k < 1) throw SpecError("onevertex: k must be positive");
  if (static_cast<int>(f.sizes.size()) != f.k) throw SpecError("onevertex: need one edge count per color");
  for (int n : f.sizes)
    if (n < 1) throw SpecError("onevertex: edge counts must be positive");
  try {
    expand(f);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

ojson edge_ojson(const EdgeDecl& e) {
  ojson j;
  j["id"] = e.id;
  j["color"] = e.color;
  j["range"] = e.range;
  j["source"] = e.source;
  return j;
}

ojson squares_ojson(const std::vector<SquareDecl>& sq) {
  ojson arr = ojson::array();
  for (const auto& s : sq) {
    ojson j;
    j["left"] = {s.left[0], s.left[1]};
    j["right"] = {s.right[0], s.right[1]};
    arr.push_back(j);
  }
  return arr;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Presentation parse_graph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("graph spec must be a JSON object");
  try {
    if (j.contains("format_version") && int_field(j, "format_version") != kFormatVersion)
      throw SpecError("unsupported format_version " + std::to_string(j.at("format_version").get<int>()));
    const auto kind = str_field(j, "kind");
    if (kind == "family") {
      const auto& fam = need(j, "family");
      const auto name = str_field(fam, "name");
      const json params = fam.contains("params") ? fam.at("params") : json::object();
      if (name == "omega") {
        OmegaFamily o{int_field(params, "k")};
        if (o.k < 1) throw SpecError("omega: k must be positive");
        return BuiltinFamily{o};
      }
      if (name == "comb") {
        CombFamily c{int_field(params, "n")};
        if (c.n < 1) throw SpecError("comb: n must be positive");
        return BuiltinFamily{c};
      }
      if (name == "onevertex") {
        auto f = one_vertex_from_json(params);
        check_one_vertex(f);
        return BuiltinFamily{f};
      }
      throw SpecError("unknown family '" + name + "'");
    }
    const int k = int_field(j, "k");
    if (k < 1) throw SpecError("k must be positive");
    if (kind == "skeleton") {
      FiniteSkeleton s;
      s.k = k;
      s.vertices = string_list(need(j, "vertices"), "vertices");
      s.edges = edge_list(j, "edges");
      s.squares = square_list(j, "squares");
      check_unique(s.vertices, "vertex");
      std::vector<std::string> ids;
      for (const auto& e : s.edges) ids.push_back(e.id);
      check_unique(ids, "edge");
      check_colors(s.edges, k);
      return s;
    }
    if (kind == "level") {
      LevelPresentation l;
      l.k = k;
      const auto& lv = need(j, "level");
      const auto& core = need(lv, "core_levels");
      if (!core.is_array()) throw SpecError("core_levels must be an array");
      for (const auto& level : core) l.core_levels.push_back(string_list(level, "core level"));
      l.core_edges = edge_list(j, "edges");
      l.core_squares = square_list(j, "squares");
      const auto& block = need(lv, "periodic_block");
      l.block_vertices = string_list(need(block, "vertices"), "block vertices");
      if (block.contains("edges")) {
        for (const auto& e : block.at("edges")) {
          BlockEdgeDecl d{str_field(e, "id"), int_field(e, "color"), str_field(e, "range"), str_field(e, "source"), 1};
          if (e.contains("source_offset")) d.source_offset = int_field(e, "source_offset");
          l.block_edges.push_back(d);
        }
      }
      l.glue_edges = edge_list(block, "glue");
      l.block_squares = square_list(block, "squares");
      std::vector<std::string> vids, eids;
      for (const auto& lvl : l.core_levels) vids.insert(vids.end(), lvl.begin(), lvl.end());
      vids.insert(vids.end(), l.block_vertices.begin(), l.block_vertices.end());
      check_unique(vids, "vertex");
      for (const auto& e : l.core_edges) eids.push_back(e.id);
      for (const auto& e : l.glue_edges) eids.push_back(e.id);
      for (const auto& e : l.block_edges) {
        eids.push_back(e.id);
        if (e.color < 1 || e.color > k) throw SpecError("edge '" + e.id + "' has color outside 1.." + std::to_string(k));
      }
      check_unique(eids, "edge");
      check_colors(l.core_edges, k);
      check_colors(l.glue_edges, k);
      if (l.block_vertices.empty()) throw SpecError("periodic_block needs at least one vertex");
      return l;
    }
    throw SpecError("unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw SpecError(std::string("schema error: ") + e.what());
  }
}

Presentation parse_builtin_uri(const std::string& uri) {
  std::vector<std::string> parts;
  {
    std::stringstream ss(uri);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
  }
  if (parts.size() < 3 || parts[0] != "builtin") throw SpecError("bad builtin URI '" + uri + "'");
  auto single = [&](const char* what) {
    auto v = parse_int_list(parts[2], what);
    if (v.size() != 1 || v[0] < 1) throw SpecError(std::string("bad ") + what + " in '" + uri + "'");
    return v[0];
  };
  if (parts[1] == "omega" && parts.size() == 3) return BuiltinFamily{OmegaFamily{single("rank")}};
  if (parts[1] == "comb" && parts.size() == 3) return BuiltinFamily{CombFamily{single("column count")}};
  if (parts[1] == "onevertex" && (parts.size() == 4 || parts.size() == 5)) {
    OneVertexFamily f;
    f.k = single("rank");
    f.sizes = parse_int_list(parts[3], "edge count");
    if (parts.size() == 5) {
      std::stringstream ss(parts[4]);
      std::string pair;
      while (std::getline(ss, pair, ';')) f.permutations.push_back(pair.empty() ? std::vector<int>{}
                                                                               : parse_int_list(pair, "permutation"));
    }
    check_one_vertex(f);
    return BuiltinFamily{f};
  }
  throw SpecError("bad builtin URI '" + uri + "'");
}

Presentation load_graph_spec(const std::string& path_or_uri) {
  if (path_or_uri.rfind("builtin:", 0) == 0) return parse_builtin_uri(path_or_uri);
  std::ifstream in(path_or_uri);
  if (!in) throw SpecError("cannot read '" + path_or_uri + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (buf.str().find_first_not_of(" \t\r\n") == std::string::npos) throw SpecError("empty graph spec '" + path_or_uri + "'");
  return parse_graph_json(buf.str());
}

std::string to_json(const Presentation& p) {
  ojson j;
  j["format_version"] = kFormatVersion;
  std::visit(overloaded{
                 [&](const FiniteSkeleton& s) {
                   j["k"] = s.k;
                   j["kind"] = "skeleton";
                   j["vertices"] = s.vertices;
                   j["edges"] = ojson::array();
                   for (const auto& e : s.edges) j["edges"].push_back(edge_ojson(e));
                   j["squares"] = squares_ojson(s.squares);
                 },
                 [&](const LevelPresentation& l) {
                   j["k"] = l.k;
                   j["kind"] = "level";
                   j["edges"] = ojson::array();
                   for (const auto& e : l.core_edges) j["edges"].push_back(edge_ojson(e));
                   j["squares"] = squares_ojson(l.core_squares);
                   ojson block;
                   block["vertices"] = l.block_vertices;
                   block["edges"] = ojson::array();
                   for (const auto& e : l.block_edges) {
                     auto ej = edge_ojson({e.id, e.color, e.range, e.source});
                     ej["source_offset"] = e.source_offset;
                     block["edges"].push_back(ej);
                   }
                   block["glue"] = ojson::array();
                   for (const auto& e : l.glue_edges) block["glue"].push_back(edge_ojson(e));
                   block["squares"] = squares_ojson(l.block_squares);
                   j["level"]["core_levels"] = l.core_levels;
                   j["level"]["periodic_block"] = block;
                 },
                 [&](const BuiltinFamily& b) {
                   j["kind"] = "family";
                   std::visit(overloaded{
                                  [&](const OmegaFamily& o) {
                                    j["family"]["name"] = "omega";
                                    j["family"]["params"]["k"] = o.k;
                                  },
                                  [&](const CombFamily& c) {
                                    j["family"]["name"] = "comb";
                                    j["family"]["params"]["n"] = c.n;
                                  },
                                  [&](const OneVertexFamily& f) {
                                    j["family"]["name"] = "onevertex";
                                    j["family"]["params"]["k"] = f.k;
                                    j["family"]["params"]["sizes"] = f.sizes;
                                    j["family"]["params"]["permutations"] = f.permutations;
                                  },
                              },
                              b);
                 },
             },
             p);
  return j.dump(2) + "\n";
}

std::string to_dot(const KGraph& g, int depth) {
  std::vector<Vertex> shown;
  switch (g.kind()) {
    case GraphKind::Finite:
      shown = g.vertices();
      break;
    case GraphKind::Level: {
      shown = g.core_vertices();
      for (int l = 0; l < depth; ++l)
        for (std::size_t t = 0; t < g.block_types().size(); ++t)
          shown.push_back(g.block_vertex(g.first_block_level() + l, t));
      break;
    }
    case GraphKind::Lattice: {
      std::function<void(Degree, int, std::int64_t)> go = [&](Degree c, int i, std::int64_t left) {
        if (i == g.k()) {
          shown.push_back(g.lattice_vertex(c));
          return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
          c[i] = x;
          go(c, i + 1, left - x);
        }
      };
      go(Degree(g.k()), 0, depth);
      break;
    }
  }
  std::set<Vertex> in(shown.begin(), shown.end());
  std::ostringstream out;
  out << "digraph " << quoted(g.label()) << " {\n";
  for (auto v : shown) out << "  " << quoted(g.name(v)) << ";\n";
  for (auto v : shown)
    for (int c = 1; c <= g.k(); ++c)
      for (auto e : g.edges_at(v, c)) {
        auto s = g.source(e);
        if (!in.count(s)) continue;
        out << "  " << quoted(g.name(v)) << " -> " << quoted(g.name(s)) << " [label=\"c" << c
            << "\", tooltip=" << quoted(g.name(e)) << "];\n";
      }
  out << "}\n";
  return out.str();
}

}  // namespace kpt
