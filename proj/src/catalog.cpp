#include "tkr/catalog.hpp"

#include <algorithm>
#include <map>

#include "tkr/errors.hpp"

namespace tkr {

namespace {

// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string join_digits(const std::string& prefix, const std::vector<int>& verts) {
  std::string id = prefix;
  for (int v : verts) id += std::to_string(v);
  return id;
}

// Simplicial complex from an explicit facet-closed list of vertex subsets per
// dimension; boundary signs alternate over omitted vertices.
CellComplex build_simplicial(const std::string& name,
                             const std::vector<std::vector<std::vector<int>>>& cells_by_dim,
                             const std::vector<std::string>& prefixes) {
  int k = static_cast<int>(cells_by_dim.size()) - 1;
  std::vector<std::vector<std::string>> ids(k + 1);
  std::vector<std::map<std::vector<int>, int>> index(k + 1);
  for (int j = 0; j <= k; ++j)
    for (const auto& s : cells_by_dim[j]) {
      index[j][s] = static_cast<int>(ids[j].size());
      ids[j].push_back(join_digits(prefixes[j], s));
    }
  std::vector<IntMat> bds;
  for (int j = 1; j <= k; ++j) {
    IntMat m(ids[j - 1].size(), ids[j].size());
    for (std::size_t c = 0; c < cells_by_dim[j].size(); ++c) {
      const auto& s = cells_by_dim[j][c];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        auto it = index[j - 1].find(face);
        if (it == index[j - 1].end()) fail("DimensionMismatch", "missing simplicial face");
        m.at(it->second, c) = drop % 2 == 0 ? 1 : -1;
      }
    }
    bds.push_back(std::move(m));
  }
  return CellComplex(name, std::move(ids), std::move(bds));
}

// One-vertex surface presentations: each 1-cell is a loop at the vertex
// (coefficient zero plus a hint), 2-cells attach by word exponent sums.
CellComplex one_vertex_surface(const std::string& name, const std::vector<std::string>& edges,
                               const std::vector<std::string>& faces,
                               const std::vector<std::vector<long long>>& exponent_sums,
                               const std::vector<std::vector<int>>& zero_incidences) {
  IntMat d1(1, edges.size());
  IncidenceHints h1;
  for (std::size_t j = 0; j < edges.size(); ++j) h1.insert({0, static_cast<int>(j)});
  IntMat d2(edges.size(), faces.size());
  IncidenceHints h2;
  for (std::size_t c = 0; c < faces.size(); ++c) {
    for (std::size_t r = 0; r < edges.size(); ++r) d2.at(r, c) = exponent_sums[c][r];
    for (int r : zero_incidences[c]) h2.insert({r, static_cast<int>(c)});
  }
  return CellComplex(name, {{"v"}, edges, faces}, {std::move(d1), std::move(d2)},
                     {std::move(h1), std::move(h2)});
}

CellComplex make_s2vs1() {
  return one_vertex_surface("s2vs1", {"e"}, {"sigma"}, {{0}}, {{0}});
}

CellComplex make_s2vs2() {
  return one_vertex_surface("s2vs2", {"e"}, {"sigma", "sigmap"}, {{0}, {1}}, {{0}, {}});
}

CellComplex make_rp2() {
  return one_vertex_surface("rp2", {"e"}, {"sigma"}, {{2}}, {{}});
}

CellComplex make_torus() {
  return one_vertex_surface("torus", {"a", "b"}, {"sigma"}, {{0, 0}}, {{0, 1}});
}

CellComplex make_klein_bottle() {
  return one_vertex_surface("klein-bottle", {"a", "b"}, {"sigma"}, {{2, 0}}, {{1}});
}

CellComplex make_disc() {
  return one_vertex_surface("disc", {"e"}, {"sigma"}, {{1}}, {{}});
}

// Sphere as two vertices joined by a bar, a loop at each vertex, and three
// 2-cells: two discs over the loops and an outer cell whose attaching walk
// also runs back and forth along the bar.
CellComplex make_sphere_three_cells() {
  IntMat d1 = IntMat::from_rows({{0, -1, 0}, {0, 1, 0}});
  IncidenceHints h1{{0, 0}, {1, 2}};
  IntMat d2 = IntMat::from_rows({{1, 0, -1}, {0, 0, 0}, {0, 1, -1}});
  IncidenceHints h2{{1, 2}};
  return CellComplex("sphere-three-cells", {{"p", "q"}, {"a", "b", "c"}, {"sigma1", "sigma2", "sigmaoo"}},
                     {std::move(d1), std::move(d2)}, {std::move(h1), std::move(h2)});
}

CellComplex make_sphere_three_cells_deleted() {
  IntMat d1 = IntMat::from_rows({{0, -1, 0}, {0, 1, 0}});
  IncidenceHints h1{{0, 0}, {1, 2}};
  IntMat d2 = IntMat::from_rows({{-1}, {0}, {-1}});
  IncidenceHints h2{{1, 0}};
  return CellComplex("sphere-three-cells-deleted", {{"p", "q"}, {"a", "b", "c"}, {"sigmaoo"}},
                     {std::move(d1), std::move(d2)}, {std::move(h1), std::move(h2)});
}

CellComplex make_tetrahedron_boundary() {
  std::vector<std::vector<std::vector<int>>> cells(3);
  for (int j = 0; j <= 2; ++j) cells[j] = subsets_of_size(4, j + 1);
  return build_simplicial("tetrahedron-boundary", cells, {"v", "e", "t"});
}

CellComplex make_octahedron_surface() {
  // Vertices 0..5 are +x,-x,+y,-y,+z,-z; one triangle per octant.
  std::vector<std::vector<int>> triangles;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5}) triangles.push_back({x, y, z});
  std::sort(triangles.begin(), triangles.end());
  std::vector<std::vector<int>> edges;
  for (const auto& t : triangles) {
    edges.push_back({t[0], t[1]});
    edges.push_back({t[0], t[2]});
    edges.push_back({t[1], t[2]});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::vector<int>> verts;
  for (int v = 0; v < 6; ++v) verts.push_back({v});
  CellComplex raw = build_simplicial("octahedron-surface", {verts, edges, triangles}, {"", "", ""});

  // Rebuild with axis names instead of bare digits.
  static const char* vnames[] = {"px", "mx", "py", "my", "pz", "mz"};
  std::vector<std::vector<std::string>> ids(3);
  for (int v = 0; v < 6; ++v) ids[0].push_back(vnames[v]);
  for (const auto& e : edges) ids[1].push_back(std::string(vnames[e[0]]) + vnames[e[1]]);
  for (const auto& t : triangles)
    ids[2].push_back(std::string(vnames[t[0]]) + vnames[t[1]] + vnames[t[2]]);
  return CellComplex("octahedron-surface", std::move(ids), {raw.boundary(1), raw.boundary(2)});
}

CellComplex make_cube_surface() {
  // Vertex id vXYZ encodes coordinates; edge id e<axis><other two coords>.
  std::vector<std::string> vids;
  for (int x : {0, 1})
    for (int y : {0, 1})
      for (int z : {0, 1})
        vids.push_back("v" + std::to_string(x) + std::to_string(y) + std::to_string(z));
  auto vindex = [](int x, int y, int z) { return x * 4 + y * 2 + z; };

  struct Edge {
    std::string id;
    int tail, head;
  };
  std::vector<Edge> edges;
  for (int y : {0, 1})
    for (int z : {0, 1})
      edges.push_back({"ex" + std::to_string(y) + std::to_string(z), vindex(0, y, z), vindex(1, y, z)});
  for (int x : {0, 1})
    for (int z : {0, 1})
      edges.push_back({"ey" + std::to_string(x) + std::to_string(z), vindex(x, 0, z), vindex(x, 1, z)});
  for (int x : {0, 1})
    for (int y : {0, 1})
      edges.push_back({"ez" + std::to_string(x) + std::to_string(y), vindex(x, y, 0), vindex(x, y, 1)});

  IntMat d1(8, edges.size());
  std::vector<std::string> eids;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    eids.push_back(edges[j].id);
    d1.at(edges[j].tail, j) -= 1;
    d1.at(edges[j].head, j) += 1;
  }

  struct Face {
    std::string id;
    std::vector<int> cycle;  // vertex indices around the quad
  };
  std::vector<Face> faces = {
      {"fx0", {vindex(0, 0, 0), vindex(0, 0, 1), vindex(0, 1, 1), vindex(0, 1, 0)}},
      {"fx1", {vindex(1, 0, 0), vindex(1, 0, 1), vindex(1, 1, 1), vindex(1, 1, 0)}},
      {"fy0", {vindex(0, 0, 0), vindex(0, 0, 1), vindex(1, 0, 1), vindex(1, 0, 0)}},
      {"fy1", {vindex(0, 1, 0), vindex(0, 1, 1), vindex(1, 1, 1), vindex(1, 1, 0)}},
      {"fz0", {vindex(0, 0, 0), vindex(0, 1, 0), vindex(1, 1, 0), vindex(1, 0, 0)}},
      {"fz1", {vindex(0, 0, 1), vindex(0, 1, 1), vindex(1, 1, 1), vindex(1, 0, 1)}},
  };
  IntMat d2(edges.size(), faces.size());
  std::vector<std::string> fids;
  for (std::size_t c = 0; c < faces.size(); ++c) {
    fids.push_back(faces[c].id);
    const auto& cyc = faces[c].cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], w = cyc[(i + 1) % cyc.size()];
      bool found = false;
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (edges[j].tail == u && edges[j].head == w) {
          d2.at(j, c) += 1;
          found = true;
          break;
        }
        if (edges[j].tail == w && edges[j].head == u) {
          d2.at(j, c) -= 1;
          found = true;
          break;
        }
      }
      if (!found) fail("DimensionMismatch", "cube face cycle step is not an edge");
    }
  }
  return CellComplex("cube-surface", {std::move(vids), std::move(eids), std::move(fids)},
                     {std::move(d1), std::move(d2)});
}

// Theta graph on the sphere: two vertices, three parallel edges, three bigons.
CellComplex make_theta_complex() {
  IntMat d1 = IntMat::from_rows({{-1, -1, -1}, {1, 1, 1}});
  IntMat d2 = IntMat::from_rows({{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}});
  return CellComplex("theta-complex", {{"p", "q"}, {"a", "b", "c"}, {"fab", "fbc", "fca"}},
                     {std::move(d1), std::move(d2)});
}

// Its planar dual: a triangle with inner and outer face.
CellComplex make_triangle_complex() {
  IntMat d1 = IntMat::from_rows({{-1, -1, 0}, {0, 1, -1}, {1, 0, 1}});
  IntMat d2 = IntMat::from_rows({{-1, 1}, {1, -1}, {1, -1}});
  return CellComplex("triangle-complex", {{"A", "B", "C"}, {"da", "db", "dc"}, {"P", "Q"}},
                     {std::move(d1), std::move(d2)});
}

bool parse_simplex_skeleton(const std::string& name, int& n, int& k) {
  const std::string prefix = "simplex-skeleton(";
  if (name.rfind(prefix, 0) != 0 || name.back() != ')') return false;
  std::string inner = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  auto comma = inner.find(',');
  if (comma == std::string::npos) return false;
  try {
    n = std::stoi(inner.substr(0, comma));
    k = std::stoi(inner.substr(comma + 1));
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

CellComplex simplex_skeleton(int n, int k) {
  if (n < 1 || n > 9 || k < 0 || k >= n)
    fail("OutOfRange", "simplex-skeleton needs 1 <= n <= 9 and 0 <= k < n");
  std::vector<std::vector<std::vector<int>>> cells(k + 1);
  for (int j = 0; j <= k; ++j) cells[j] = subsets_of_size(n, j + 1);
  std::vector<std::string> prefixes(k + 1, "s");
  return build_simplicial("simplex-skeleton(" + std::to_string(n) + "," + std::to_string(k) + ")",
                          cells, prefixes);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "s2vs1",
      "s2vs2",
      "sphere-three-cells",
      "sphere-three-cells-deleted",
      "rp2",
      "torus",
      "klein-bottle",
      "disc",
      "tetrahedron-boundary",
      "cube-surface",
      "octahedron-surface",
      "theta-complex",
      "triangle-complex",
  };
  return names;
}

bool is_builtin_name(const std::string& name) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return true;
  int n, k;
  return parse_simplex_skeleton(name, n, k);
}

BuiltinInfo builtin(const std::string& name) {
  if (name == "s2vs1") return {make_s2vs1(), ManifoldKind::closed_orientable};
  if (name == "s2vs2") return {make_s2vs2(), ManifoldKind::none};
  if (name == "sphere-three-cells")
    return {make_sphere_three_cells(), ManifoldKind::closed_orientable};
  if (name == "sphere-three-cells-deleted")
    return {make_sphere_three_cells_deleted(), ManifoldKind::none};
  if (name == "rp2") return {make_rp2(), ManifoldKind::other};
  if (name == "torus") return {make_torus(), ManifoldKind::closed_orientable};
  if (name == "klein-bottle") return {make_klein_bottle(), ManifoldKind::other};
  if (name == "disc") return {make_disc(), ManifoldKind::other};
  if (name == "tetrahedron-boundary")
    return {make_tetrahedron_boundary(), ManifoldKind::closed_orientable};
  if (name == "cube-surface") return {make_cube_surface(), ManifoldKind::closed_orientable};
  if (name == "octahedron-surface")
    return {make_octahedron_surface(), ManifoldKind::closed_orientable};
  if (name == "theta-complex") return {make_theta_complex(), ManifoldKind::closed_orientable};
  if (name == "triangle-complex")
    return {make_triangle_complex(), ManifoldKind::closed_orientable};
  int n, k;
  if (parse_simplex_skeleton(name, n, k)) {
    ManifoldKind kind = ManifoldKind::none;
    if (k == n - 2 && n >= 3) kind = ManifoldKind::closed_orientable;
    else if (k == n - 1 && n >= 2) kind = ManifoldKind::other;
    return {simplex_skeleton(n, k), kind};
  }
  fail("UnknownName", "no builtin complex named '" + name + "'");
}

}  // namespace tkr
