#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "plabic/geometry.hpp"
#include "plabic/graph.hpp"
#include "plabic/measurement.hpp"
#include "plabic/positroid.hpp"

namespace plabic {

using Json = nlohmann::json;

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

namespace detail {

template <typename T>
T json_get(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

inline Json subset_json(Subset s) { return s.elements(); }

inline Subset subset_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::ParseError, "a subset is an array of indices");
  Subset s;
  for (const auto& x : j) {
    require(x.is_number_integer(), ErrorCode::ParseError, "subset entries must be integers");
    const int e = x.get<int>();
    require(e >= 1 && e <= kMaxGroundSet, ErrorCode::ParseError, "subset entry out of range");
    require(!s.contains(e), ErrorCode::ParseError, "repeated subset entry");
    s.insert(e);
  }
  return s;
}

inline std::vector<Subset> subsets_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::ParseError, "expected an array of subsets");
  std::vector<Subset> out;
  for (const auto& s : j) out.push_back(subset_from_json(s));
  return out;
}

inline int infer_n(const Json& j, const std::vector<Subset>& sets) {
  if (j.is_object() && j.contains("n")) return json_get<int>(j, "n");
  int n = 0;
  for (Subset s : sets) n = std::max(n, s.max_element());
  return n;
}

}  // namespace detail

// ---- decorated permutations, necklaces, positroids -------------------------

inline Json to_json(const DecoratedPermutation& w) {
  Json colors = Json::object();
  for (const auto& [point, color] : w.fixed_colors()) colors[std::to_string(point)] = color;
  return Json{{"n", w.n()}, {"w", w.images()}, {"colors", colors}};
}

inline DecoratedPermutation permutation_from_json(const Json& j) {
  const auto images = detail::json_get<std::vector<int>>(j, "w");
  if (j.contains("n"))
    require(detail::json_get<int>(j, "n") == static_cast<int>(images.size()), ErrorCode::SizeMismatch,
            "n does not match the length of w");
  std::map<int, int> colors;
  if (j.contains("colors")) {
    const Json& c = j.at("colors");
    require(c.is_object(), ErrorCode::ParseError, "colors must be an object");
    for (const auto& [key, value] : c.items()) {
      require(value.is_number_integer(), ErrorCode::ParseError, "colors are 0 or 1");
      try {
        colors[std::stoi(key)] = value.get<int>();
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "color key '" + key + "' is not an index");
      }
    }
  }
  return DecoratedPermutation(images, colors);
}

inline Json to_json(const GrassmannNecklace& J) {
  Json sets = Json::array();
  for (Subset s : J.sets()) sets.push_back(detail::subset_json(s));
  return Json{{"k", J.k()}, {"n", J.n()}, {"necklace", sets}};
}

/// Accepts {"n":..,"necklace":[[..],..]} or a bare array J_1..J_n.
inline GrassmannNecklace necklace_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : (j.contains("necklace") ? j.at("necklace") : j);
  const auto sets = detail::subsets_from_json(arr);
  require(!sets.empty(), ErrorCode::EmptyInput, "empty necklace");
  const int n = j.is_object() && j.contains("n") ? detail::json_get<int>(j, "n") : static_cast<int>(sets.size());
  return GrassmannNecklace(sets.front().size(), n, sets);
}

inline Json to_json(const Positroid& m) {
  Json bases = Json::array();
  for (Subset s : m.bases) bases.push_back(detail::subset_json(s));
  return Json{{"k", m.k}, {"n", m.n}, {"bases", bases}};
}

/// Accepts {"n":..,"bases":[[..],..]} or a bare array of bases (n inferred).
inline Positroid positroid_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : (j.contains("bases") ? j.at("bases") : j);
  const auto sets = detail::subsets_from_json(arr);
  return make_collection(detail::infer_n(j, sets), sets);
}

// ---- graphs -----------------------------------------------------------------

inline Json to_json(const GrassmannianGraph& g) {
  Json vertices = Json::array();
  Json rotations = Json::object();
  for (int v = 0; v < g.vertex_slots(); ++v) {
    if (!g.vertex_alive(v)) continue;
    if (g.is_boundary(v)) vertices.push_back({{"id", v}, {"boundary", g.boundary_index(v)}});
    else vertices.push_back({{"id", v}, {"h", g.helicity(v)}});
    rotations[std::to_string(v)] = g.rotation(v);
  }
  Json edges = Json::array();
  for (int e : g.edges()) edges.push_back({2 * e, 2 * e + 1});
  return Json{{"n", g.n()}, {"vertices", vertices}, {"rotations", rotations}, {"edges", edges}};
}

/// Reads the graph format back. Vertex ids and half-edge ids may be arbitrary
/// integers; boundary vertices carry "boundary": i, internal ones "h".
inline GrassmannianGraph graph_from_json(const Json& j) {
  const int n = detail::json_get<int>(j, "n");
  require(n >= 1 && n <= kMaxGroundSet, ErrorCode::InvalidInput, "n must be between 1 and 31");
  const Json& verts = j.contains("vertices") ? j.at("vertices") : Json();
  require(verts.is_array(), ErrorCode::ParseError, "missing vertex list");
  GrassmannianGraph g(n);
  std::map<int, int> vmap;
  std::vector<char> seen_boundary(n + 1, 0);
  for (const auto& v : verts) {
    const int id = detail::json_get<int>(v, "id");
    require(!vmap.count(id), ErrorCode::ParseError, "duplicate vertex id " + std::to_string(id));
    if (v.contains("boundary")) {
      const int i = detail::json_get<int>(v, "boundary");
      require(i >= 1 && i <= n && !seen_boundary[i], ErrorCode::InvalidInput, "bad boundary index");
      seen_boundary[i] = 1;
      vmap[id] = g.boundary_vertex(i);
    } else {
      vmap[id] = g.add_vertex(detail::json_get<int>(v, "h"));
    }
  }
  for (int i = 1; i <= n; ++i)
    require(seen_boundary[i], ErrorCode::InvalidInput, "boundary vertex " + std::to_string(i) + " missing");
  const Json& edges = j.contains("edges") ? j.at("edges") : Json();
  require(edges.is_array(), ErrorCode::ParseError, "missing edge list");
  std::map<int, int> hmap;
  for (const auto& e : edges) {
    require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
            ErrorCode::ParseError, "an edge is a pair of half-edge ids");
    const int a = e[0].get<int>(), b = e[1].get<int>();
    require(a != b && !hmap.count(a) && !hmap.count(b), ErrorCode::ParseError, "half-edge ids must be unique");
    const int ne = g.add_detached_edge(0, 0);
    hmap[a] = 2 * ne;
    hmap[b] = 2 * ne + 1;
  }
  const Json& rot = j.contains("rotations") ? j.at("rotations") : Json();
  require(rot.is_object(), ErrorCode::ParseError, "missing rotations");
  std::vector<char> placed(g.half_edge_slots(), 0);
  for (const auto& [key, list] : rot.items()) {
    int id = 0;
    try {
      id = std::stoi(key);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "rotation key '" + key + "' is not a vertex id");
    }
    require(vmap.count(id), ErrorCode::InvalidInput, "rotation for unknown vertex " + key);
    require(list.is_array(), ErrorCode::ParseError, "rotation must be an array");
    std::vector<int> halves;
    for (const auto& h : list) {
      require(h.is_number_integer() && hmap.count(h.get<int>()), ErrorCode::InvalidInput, "unknown half-edge in rotation");
      const int mapped = hmap.at(h.get<int>());
      require(!placed[mapped], ErrorCode::InvalidInput, "half-edge placed twice");
      placed[mapped] = 1;
      halves.push_back(mapped);
    }
    g.set_rotation(vmap.at(id), halves);
  }
  for (char p : placed) require(p, ErrorCode::InvalidInput, "half-edge missing from every rotation");
  g.validate();
  return g;
}

// ---- Plücker data -------------------------------------------------------------

inline Json to_json(const PluckerVector& p) {
  Json coords = Json::object();
  for (const auto& [I, value] : p.coords) coords[I.label()] = to_string(value);
  return Json{{"k", p.k}, {"n", p.n}, {"coords", coords}};
}

inline PluckerVector plucker_from_json(const Json& j) {
  PluckerVector p;
  p.k = detail::json_get<int>(j, "k");
  p.n = detail::json_get<int>(j, "n");
  require(j.contains("coords") && j.at("coords").is_object(), ErrorCode::ParseError, "missing coords");
  for (const auto& [key, value] : j.at("coords").items()) {
    require(value.is_string(), ErrorCode::ParseError, "coordinates are strings \"p/q\"");
    p.coords[parse_subset_label(key)] = parse_rational(value.get<std::string>());
  }
  return p;
}

inline Json to_json(const VertexPluckerData& data) {
  Json out = Json::object();
  for (const auto& [v, coords] : data.at) {
    Json c = Json::object();
    for (const auto& [J, value] : coords) c[J.label()] = to_string(value);
    out[std::to_string(v)] = c;
  }
  return Json{{"vertices", out}};
}

// ---- tilings and membranes ------------------------------------------------------

inline Json to_json(const PlanarTiling& t, const CyclicProjection& pi) {
  Json points = Json::object();
  for (Subset s : t.labels()) {
    const Point2 p = pi(s);
    points[s.label()] = {to_string(p.x), to_string(p.y)};
  }
  Json cells = Json::array();
  for (const auto& c : t.cells) {
    Json labels = Json::array();
    for (Subset s : c.corners) labels.push_back(s.label());
    cells.push_back({{"labels", labels}, {"h", c.h}});
  }
  return Json{{"k", t.k}, {"n", t.n}, {"points", points}, {"cells", cells}};
}

inline PlanarTiling tiling_from_json(const Json& j) {
  PlanarTiling t;
  t.k = detail::json_get<int>(j, "k");
  t.n = detail::json_get<int>(j, "n");
  require(j.contains("cells") && j.at("cells").is_array(), ErrorCode::ParseError, "missing cells");
  for (const auto& c : j.at("cells")) {
    PlanarTiling::Cell cell;
    cell.h = detail::json_get<int>(c, "h");
    for (const auto& label : detail::json_get<std::vector<std::string>>(c, "labels"))
      cell.corners.push_back(parse_subset_label(label));
    t.cells.push_back(std::move(cell));
  }
  return t;
}

inline Json to_json(const Membrane& m) {
  Json verts = Json::array();
  for (Subset s : m.vertices) verts.push_back(s.label());
  Json tris = Json::array();
  for (const auto& t : m.triangles) tris.push_back({t[0].label(), t[1].label(), t[2].label()});
  Json boundary = Json::array();
  for (const auto& [a, b] : m.boundary) boundary.push_back({a.label(), b.label()});
  return Json{{"k", m.k}, {"n", m.n}, {"vertices", verts}, {"triangles", tris}, {"boundary", boundary}, {"area", m.area()}};
}

inline Json error_json(const Error& e) {
  return Json{{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}};
}

}  // namespace plabic
