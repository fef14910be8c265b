#pragma once

#include <vector>

#include "qmaps/planar_map.hpp"

namespace qmaps {

// A planar map realized inside a host map by a dart subset (closed under
// twin) plus a root dart from the subset.  Two submaps are re-rooting
// equivalent iff their dart subsets coincide.
struct Submap {
  const PlanarMap* host = nullptr;
  std::vector<char> darts;  // mask over host darts
  int root = -1;

  int dart_count() const {
    int c = 0;
    for (char b : darts) c += b;
    return c;
  }
  bool rerooting_equivalent(const Submap& other) const { return darts == other.darts; }
};

// The submap as a standalone map, with dart translations in both directions.
struct InducedMap {
  PlanarMap map;
  std::vector<int> to_host;    // local dart -> host dart
  std::vector<int> from_host;  // host dart -> local dart (-1 outside)
};

inline InducedMap induced_map(const PlanarMap& host, const std::vector<char>& mask,
                              int root_host) {
  InducedMap out;
  out.from_host.assign(host.dart_count(), -1);
  for (int d = 0; d < host.dart_count(); ++d)
    if (mask[d]) {
      if (!mask[host.twin(d)]) throw MapError("submap darts not closed under twin");
      out.from_host[d] = static_cast<int>(out.to_host.size());
      out.to_host.push_back(d);
    }
  if (root_host < 0 || root_host >= host.dart_count() || !mask[root_host])
    throw MapError("submap root outside dart subset");
  const int n = static_cast<int>(out.to_host.size());
  std::vector<int> twin(n), next(n);
  for (int local = 0; local < n; ++local) {
    int d = out.to_host[local];
    twin[local] = out.from_host[host.twin(d)];
    int e = host.next(d);
    while (!mask[e]) e = host.next(e);
    next[local] = out.from_host[e];
  }
  out.map = PlanarMap(n, std::move(twin), std::move(next), out.from_host[root_host]);
  return out;
}

inline InducedMap induced_map(const Submap& s) { return induced_map(*s.host, s.darts, s.root); }

// Regions of the host cut out by a submap: host faces are flooded without
// crossing submap edges.  region_of_subface[g] is the region lying inside
// face g of the induced map.
struct SubmapRegions {
  std::vector<int> region_of_face;     // host face -> region id
  std::vector<int> region_of_subface;  // induced-map face -> region id
  int count = 0;
};

inline SubmapRegions submap_regions(const PlanarMap& host, const InducedMap& ind) {
  SubmapRegions out;
  out.region_of_face.assign(host.face_count(), -1);
  std::vector<char> sub_edge(host.edge_count(), 0);
  for (int d : ind.to_host) sub_edge[host.edge_of(d)] = 1;
  for (int f = 0; f < host.face_count(); ++f) {
    if (out.region_of_face[f] != -1) continue;
    int id = out.count++;
    std::vector<int> stack{f};
    out.region_of_face[f] = id;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      for (int d : host.face_orbit(g)) {
        if (sub_edge[host.edge_of(d)]) continue;
        int h = host.face_of(host.twin(d));
        if (out.region_of_face[h] == -1) {
          out.region_of_face[h] = id;
          stack.push_back(h);
        }
      }
    }
  }
  // face g of the induced map: take any of its darts, the host face right of
  // that host dart lies in g's region
  out.region_of_subface.assign(ind.map.face_count(), -1);
  for (int local = 0; local < ind.map.dart_count(); ++local) {
    int g = ind.map.face_of(local);
    if (out.region_of_subface[g] == -1)
      out.region_of_subface[g] = out.region_of_face[host.face_of(ind.to_host[local])];
  }
  return out;
}

}  // namespace qmaps
