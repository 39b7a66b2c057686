#include "tkr/random_complex.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace tkr {

namespace {

// mt19937_64 output is specified bit-for-bit; modulo keeps draws portable
// (the bias is irrelevant here, determinism is not).
struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}
  std::uint64_t next(std::uint64_t n) { return rng() % n; }
};

struct Forest {
  std::vector<int> parent;        // union-find
  std::vector<int> parent_vertex; // BFS tree: predecessor vertex
  std::vector<int> parent_edge;   // edge to predecessor
  std::vector<int> parent_sign;   // +1 if that edge points toward the vertex

  explicit Forest(int n) : parent(n), parent_vertex(n, -1), parent_edge(n, -1), parent_sign(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
};

}  // namespace

CellComplex random_two_complex(std::uint64_t seed) {
  Draw draw(seed);
  const int nv = 2 + static_cast<int>(draw.next(4));  // 2..5 vertices
  const int ne = 2 + static_cast<int>(draw.next(5));  // 2..6 edges

  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < ne; ++e) {
    int u = static_cast<int>(draw.next(nv));
    int v = static_cast<int>(draw.next(nv));
    edges.push_back({u, v});
  }

  // Spanning forest; every non-forest edge (loops included) closes a cycle.
  Forest forest(nv);
  std::vector<bool> in_forest(ne, false);
  for (int e = 0; e < ne; ++e) {
    auto [u, v] = edges[e];
    if (u == v) continue;
    int ru = forest.find(u), rv = forest.find(v);
    if (ru == rv) continue;
    forest.parent[ru] = rv;
    in_forest[e] = true;
  }
  // Root each tree and record predecessor chains by repeated scanning.
  std::vector<bool> reached(nv, false);
  for (int v = 0; v < nv; ++v)
    if (forest.find(v) == v) reached[v] = true;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int e = 0; e < ne; ++e) {
      if (!in_forest[e]) continue;
      auto [u, v] = edges[e];
      if (reached[u] && !reached[v]) {
        forest.parent_vertex[v] = u;
        forest.parent_edge[v] = e;
        forest.parent_sign[v] = 1;  // edge points u -> v, toward v
        reached[v] = true;
        progressed = true;
      } else if (reached[v] && !reached[u]) {
        forest.parent_vertex[u] = v;
        forest.parent_edge[u] = e;
        forest.parent_sign[u] = -1;
        reached[u] = true;
        progressed = true;
      }
    }
  }

  // Signed path from a vertex up to its root, as an edge-coefficient vector.
  auto path_to_root = [&](int v, std::vector<long long>& coef, long long scale) {
    while (forest.parent_edge[v] >= 0) {
      coef[forest.parent_edge[v]] += scale * forest.parent_sign[v];
      v = forest.parent_vertex[v];
    }
  };

  std::vector<std::vector<long long>> cycles;
  for (int e = 0; e < ne; ++e) {
    if (in_forest[e]) continue;
    std::vector<long long> coef(ne, 0);
    auto [u, v] = edges[e];
    coef[e] += 1;
    if (u != v) {
      // Close the cycle: each chain telescopes to (vertex - root), so the
      // combination e - chain(v) + chain(u) has zero boundary.
      path_to_root(v, coef, -1);
      path_to_root(u, coef, 1);
    }
    cycles.push_back(std::move(coef));
  }

  const int nf = static_cast<int>(draw.next(9));  // 0..8 two-cells
  std::vector<std::vector<long long>> faces;
  for (int f = 0; f < nf; ++f) {
    std::vector<long long> coef(ne, 0);
    if (!cycles.empty()) {
      int picks = 1 + static_cast<int>(draw.next(2));
      for (int p = 0; p < picks; ++p) {
        const auto& cyc = cycles[draw.next(cycles.size())];
        long long scale = static_cast<long long>(draw.next(5)) - 2;  // -2..2
        for (int e = 0; e < ne; ++e) coef[e] += scale * cyc[e];
      }
    }
    faces.push_back(std::move(coef));
  }

  std::vector<std::vector<std::string>> ids(3);
  for (int v = 0; v < nv; ++v) ids[0].push_back("v" + std::to_string(v));
  for (int e = 0; e < ne; ++e) ids[1].push_back("e" + std::to_string(e));
  for (int f = 0; f < nf; ++f) ids[2].push_back("f" + std::to_string(f));

  IntMat d1(nv, ne);
  IncidenceHints h1;
  for (int e = 0; e < ne; ++e) {
    auto [u, v] = edges[e];
    if (u == v) {
      h1.insert({u, e});
    } else {
      d1.at(u, e) -= 1;
      d1.at(v, e) += 1;
    }
  }
  IntMat d2(ne, nf);
  for (int f = 0; f < nf; ++f)
    for (int e = 0; e < ne; ++e) d2.at(e, f) = faces[f][e];

  return CellComplex("random-" + std::to_string(seed), std::move(ids),
                     {std::move(d1), std::move(d2)}, {std::move(h1), IncidenceHints{}});
}

}  // namespace tkr
