#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qmaps/planar_map.hpp"

namespace qmaps {

// Groups of parallel edges (same endpoint pair).  A pair of parallel edges
// is a 2-cycle; bundles drive the simple-block decomposition.
struct EdgeBundles {
  std::vector<int> bundle_of_edge;            // edge -> bundle id, -1 if solo
  std::vector<std::vector<int>> bundle_edges;  // bundle id -> edge ids
};

inline std::uint64_t vertex_pair_key(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v;
}

inline EdgeBundles edge_bundles(const PlanarMap& m) {
  EdgeBundles out;
  out.bundle_of_edge.assign(m.edge_count(), -1);
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  buckets.reserve(m.edge_count() * 2);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (d > m.twin(d)) continue;
    buckets[vertex_pair_key(m.tail(d), m.head(d), m.vertex_count())].push_back(m.edge_of(d));
  }
  for (auto& [key, edges] : buckets) {
    if (edges.size() < 2) continue;
    int id = static_cast<int>(out.bundle_edges.size());
    for (int e : edges) out.bundle_of_edge[e] = id;
    out.bundle_edges.push_back(std::move(edges));
  }
  return out;
}

inline bool has_parallel_edges(const PlanarMap& m) {
  return !edge_bundles(m).bundle_edges.empty();
}

// Poles (u,w) joined by >= 2 internally disjoint length-2 paths, with the
// middle vertices ("spokes").  Every simple 4-cycle of a simple bipartite map
// is a pair of spokes of some pole pair.
struct PolePair {
  int u, w;
  std::vector<int> spokes;
};

inline std::vector<PolePair> pole_pairs(const PlanarMap& m) {
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  const int V = m.vertex_count();
  std::vector<int> nbrs;
  for (int x = 0; x < V; ++x) {
    nbrs.clear();
    int d0 = m.vertex_dart(x);
    int d = d0;
    do {
      nbrs.push_back(m.head(d));
      d = m.next(d);
    } while (d != d0);
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        buckets[vertex_pair_key(nbrs[i], nbrs[j], V)].push_back(x);
  }
  std::vector<PolePair> out;
  for (auto& [key, spokes] : buckets) {
    if (spokes.size() < 2) continue;
    PolePair p;
    p.u = static_cast<int>(key / V);
    p.w = static_cast<int>(key % V);
    p.spokes = std::move(spokes);
    out.push_back(std::move(p));
  }
  return out;
}

namespace detail {

// Normalized keys of the diagonal pairs of each quadrangular face, used to
// test whether a 4-cycle bounds a face.
inline std::unordered_set<std::uint64_t> facial_quad_keys(const PlanarMap& m) {
  std::unordered_set<std::uint64_t> keys;
  const int V = m.vertex_count();
  auto quad_key = [&](int a, int b, int c, int d) {
    if (a > c) std::swap(a, c);
    if (b > d) std::swap(b, d);
    std::uint64_t poles = vertex_pair_key(a, c, V);
    std::uint64_t spokes = vertex_pair_key(b, d, V);
    return poles * (static_cast<std::uint64_t>(V) * V) + spokes;
  };
  for (int f = 0; f < m.face_count(); ++f) {
    if (m.face_degree(f) != 4) continue;
    auto orbit = m.face_orbit(f);
    int v0 = m.tail(orbit[0]), v1 = m.tail(orbit[1]), v2 = m.tail(orbit[2]), v3 = m.tail(orbit[3]);
    if (v0 == v2 || v1 == v3) continue;  // boundary revisits a vertex
    keys.insert(quad_key(v0, v1, v2, v3));
    keys.insert(quad_key(v1, v2, v3, v0));
  }
  return keys;
}

// True iff every simple 4-cycle bounds a face.  Assumes no parallel edges.
inline bool all_4cycles_facial(const PlanarMap& m) {
  auto keys = facial_quad_keys(m);
  const int V = m.vertex_count();
  auto quad_key = [&](int a, int c, int b, int d) {
    std::uint64_t poles = vertex_pair_key(a, c, V);
    std::uint64_t spokes = vertex_pair_key(b, d, V);
    return poles * (static_cast<std::uint64_t>(V) * V) + spokes;
  };
  for (const PolePair& p : pole_pairs(m)) {
    const auto& s = p.spokes;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!keys.count(quad_key(p.u, p.w, s[i], s[j]))) return false;
  }
  return true;
}

}  // namespace detail

inline MapClass classify(const PlanarMap& m) {
  int hex_faces = 0, quad_faces = 0;
  for (int f = 0; f < m.face_count(); ++f) {
    int deg = m.face_degree(f);
    if (deg == 4)
      ++quad_faces;
    else if (deg == 6)
      ++hex_faces;
    else
      return MapClass::Other;
  }
  if (hex_faces == 0) {
    if (has_parallel_edges(m)) return MapClass::GeneralQuadrangulation;
    // irreducible: at least four faces and every simple 4-cycle facial
    if (m.face_count() >= 4 && detail::all_4cycles_facial(m))
      return MapClass::IrreducibleQuadrangulation;
    return MapClass::SimpleQuadrangulation;
  }
  if (hex_faces == 1 && m.face_degree(m.root_face()) == 6) {
    // irreducible quadrangulation of the hexagon; the >= 4 total faces
    // convention mirrors the one for irreducible quadrangulations
    if (m.face_count() >= 4 && !has_parallel_edges(m) && detail::all_4cycles_facial(m))
      return MapClass::IrreducibleHexagon;
  }
  return MapClass::Other;
}

}  // namespace qmaps
