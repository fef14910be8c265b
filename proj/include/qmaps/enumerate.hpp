#pragma once

#include <algorithm>
#include <unordered_set>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmaps/planar_map.hpp"

namespace qmaps {

// Exhaustive enumeration of rooted bipartite maps whose root face (right of
// the root dart) has degree `root_face_degree` and whose remaining faces are
// all quadrangular.
//
// Maps are grown face by face.  Unfinished faces ("holes") are stored as
// their boundary walks, with the hole to the right of every dart.  The face
// completed at each step is the one to the right of the least-id dart on any
// hole, so the construction path of a finished map is uniquely replayable
// from the map itself: every rooted isomorphism class is emitted exactly
// once and no dedup pass is needed.
//
// While a face is under construction the rest of its hole is kept as a
// linear boundary walk B running from the face's current head vertex back
// around to the tail of the starting dart.  The face extends by
//   - consuming the front dart of B,
//   - a fresh edge to a brand-new vertex, whose twin is pushed onto the
//     front of B (walking back over it later gives pendant-edge bounces), or
//   - a fresh edge attaching at corner k of B, which pinches off B[0..k)
//     plus the twin as a finished hole.
// The face closes either by a consume whose head is the starting tail (the
// leftover of B becomes one hole) or by a fresh edge to the start corner.
class PeelingEnumerator {
 public:
  // With simple_only set, branches that force a parallel edge or a pendant
  // vertex are cut: simple quadrangulations with at least two faces have
  // neither, and this shrinks the search tree by orders of magnitude.
  PeelingEnumerator(int quad_faces, int root_face_degree, bool simple_only = false)
      : target_faces_(quad_faces + (root_face_degree == 4 ? 0 : 1)),
        root_degree_(root_face_degree),
        // the root face is one of the quad faces when its degree is 4
        target_edges_(root_face_degree == 4 ? 2 * quad_faces : 2 * quad_faces + 3),
        simple_only_(simple_only && quad_faces >= 2) {
    if (root_face_degree != 4 && root_face_degree != 6)
      throw std::invalid_argument("root face degree must be 4 or 6");
    if (quad_faces < 1) throw std::invalid_argument("need at least one quadrangular face");
  }

  void run(const std::function<void(const PlanarMap&)>& emit) {
    emit_ = &emit;
    tail_ = {0, 1};
    head_ = {1, 0};
    color_ = {0, 1};
    faces_.clear();
    holes_.clear();
    holes_.push_back({0, 1});
    fresh_vertex_.clear();
    adjacency_.clear();
    if (simple_only_) adjacency_.insert(adj_key(0, 1));
    next_dart_ = 2;
    built_ = 0;
    face_first_dart_ = 2;
    complete_next_face();
    emit_ = nullptr;
  }

 private:
  using Walk = std::vector<int>;

  void complete_next_face() {
    if (holes_.empty()) {
      if (built_ == target_faces_ && next_dart_ / 2 == target_edges_) emit_map();
      return;
    }
    if (built_ >= target_faces_) return;
    long need = 0;
    for (const Walk& h : holes_) need += std::max<long>(1, (static_cast<long>(h.size()) + 3) / 4);
    if (built_ + need > target_faces_) return;

    int hi = 0, p0 = 0, best = 1 << 30;
    for (std::size_t h = 0; h < holes_.size(); ++h)
      for (std::size_t i = 0; i < holes_[h].size(); ++i)
        if (holes_[h][i] < best) {
          best = holes_[h][i];
          hi = static_cast<int>(h);
          p0 = static_cast<int>(i);
        }
    std::swap(holes_[hi], holes_.back());
    Walk hole = std::move(holes_.back());
    holes_.pop_back();
    std::rotate(hole.begin(), hole.begin() + p0, hole.end());

    int d0 = hole[0];
    Walk rest(hole.begin() + 1, hole.end());
    face_.clear();
    face_.push_back(d0);
    int t = (built_ == 0) ? root_degree_ : 4;
    face_first_dart_ = next_dart_;
    extend_face(rest, t, head_[d0], tail_[d0]);

    holes_.push_back(std::move(hole));
    std::swap(holes_[hi], holes_.back());
  }

  // `B` runs from the current head vertex `v` back to `root_tail`.
  void extend_face(const Walk& B, int t, int v, int root_tail) {
    const int placed = static_cast<int>(face_.size());
    if (placed == t) {
      if (v == root_tail && B.empty()) descend();
      return;
    }
    const bool last = (placed + 1 == t);

    if (!B.empty() && !(simple_only_ && B.front() >= face_first_dart_)) {
      // consume the front boundary dart (in simple mode never a twin pushed
      // by this same face: walking an edge twice in one face makes a pendant)
      int e = B.front();
      face_.push_back(e);
      if (last) {
        if (head_[e] == root_tail) {
          Walk leftover(B.begin() + 1, B.end());
          if (leftover.empty()) {
            descend();
          } else {
            holes_.push_back(std::move(leftover));
            descend();
            holes_.pop_back();
          }
        }
      } else {
        Walk rest(B.begin() + 1, B.end());
        extend_face(rest, t, head_[e], root_tail);
      }
      face_.pop_back();
    }

    if (next_dart_ / 2 >= target_edges_) return;

    {  // fresh edge to a brand-new vertex
      int g = new_edge(v, -1);
      face_.push_back(g);
      Walk grown;
      grown.reserve(B.size() + 1);
      grown.push_back(g ^ 1);
      grown.insert(grown.end(), B.begin(), B.end());
      extend_face(grown, t, head_[g], root_tail);
      face_.pop_back();
      drop_edge();
    }

    // fresh edge attaching at corner k of B; k = |B| is the start corner
    // (vertex root_tail), which the face may touch mid-walk or close at
    const int K = static_cast<int>(B.size());
    for (int k = 1; k <= K; ++k) {
      if (last && k != K) continue;  // a closing fresh edge must land at the start corner
      int w = (k == K) ? root_tail : tail_[B[k]];
      if (w == v || color_[w] == color_[v]) continue;
      if (simple_only_ && adjacency_.count(adj_key(v, w))) continue;
      int g = new_edge(v, w);
      face_.push_back(g);
      Walk pinched(B.begin(), B.begin() + k);
      pinched.push_back(g ^ 1);
      holes_.push_back(std::move(pinched));
      if (last) {
        descend();
      } else {
        Walk rest(B.begin() + k, B.end());
        extend_face(rest, t, w, root_tail);
      }
      holes_.pop_back();
      face_.pop_back();
      drop_edge();
    }
  }

  void descend() {
    faces_.push_back(face_);
    ++built_;
    Walk face_backup = std::move(face_);
    int first_dart_backup = face_first_dart_;
    complete_next_face();
    face_first_dart_ = first_dart_backup;
    face_ = std::move(face_backup);
    --built_;
    faces_.pop_back();
  }

  int new_edge(int from, int to) {
    int g = next_dart_;
    next_dart_ += 2;
    if (to == -1) {
      to = static_cast<int>(color_.size());
      color_.push_back(1 - color_[from]);
      fresh_vertex_.push_back(true);
    } else {
      fresh_vertex_.push_back(false);
    }
    if (simple_only_) adjacency_.insert(adj_key(from, to));
    tail_.push_back(from);
    head_.push_back(to);
    tail_.push_back(to);
    head_.push_back(from);
    return g;
  }

  void drop_edge() {
    next_dart_ -= 2;
    if (simple_only_) adjacency_.erase(adj_key(tail_[next_dart_], head_[next_dart_]));
    if (fresh_vertex_.back()) color_.pop_back();
    fresh_vertex_.pop_back();
    tail_.resize(next_dart_);
    head_.resize(next_dart_);
  }

  static std::uint64_t adj_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  void emit_map() {
    const int n = next_dart_;
    std::vector<int> sigma(n, -1), twin(n), next(n, -1);
    for (int d = 0; d < n; ++d) twin[d] = d ^ 1;
    for (const auto& face : faces_)
      for (std::size_t k = 0; k < face.size(); ++k)
        sigma[face[k]] = face[(k + 1) % face.size()];
    for (int d = 0; d < n; ++d) {
      if (sigma[d] == -1) throw std::logic_error("enumerator: dart missing from all faces");
      next[d ^ 1] = sigma[d];  // sigma = next∘twin
    }
    PlanarMap m(n, std::move(twin), std::move(next), 0);
    (*emit_)(m);
  }

  int target_faces_, root_degree_, target_edges_;
  bool simple_only_ = false;
  const std::function<void(const PlanarMap&)>* emit_ = nullptr;
  std::vector<int> tail_, head_;
  std::vector<std::uint8_t> color_;
  std::vector<bool> fresh_vertex_;
  std::vector<Walk> holes_;
  std::vector<std::vector<int>> faces_;
  Walk face_;
  std::unordered_set<std::uint64_t> adjacency_;
  int next_dart_ = 2;
  int built_ = 0;
  int face_first_dart_ = 2;
};

// --- enumeration tables -------------------------------------------------------

enum class MapClassTag {
  General,            // rooted quadrangulations, size = face count
  Simple,             // no 2-cycles
  Irreducible,        // simple, >= 4 faces, every 4-cycle facial
  IrreducibleHexagon  // hexagonal root face, size = quadrangular face count
};

inline const char* to_string(MapClassTag t) {
  switch (t) {
    case MapClassTag::General: return "general";
    case MapClassTag::Simple: return "simple";
    case MapClassTag::Irreducible: return "irreducible";
    case MapClassTag::IrreducibleHexagon: return "irreducible-hexagon";
  }
  return "?";
}

struct EnumerationTable {
  MapClassTag tag;
  int n = 0;
  long long count = 0;
  std::vector<std::string> canonical;  // sorted canonical serializations
};

struct EnumerationBudget {
  int general_max = 7;
  int hexagon_max = 10;
};

MapClass classify(const PlanarMap& m);  // classify.hpp

inline void enumerate_maps(MapClassTag tag, int n,
                           const std::function<void(const PlanarMap&)>& emit,
                           EnumerationBudget budget = {}) {
  bool hexagon = tag == MapClassTag::IrreducibleHexagon;
  int limit = hexagon ? budget.hexagon_max : budget.general_max;
  if (n < 1 || n > limit) throw std::runtime_error("enumeration budget exceeded");
  bool simple_only = tag != MapClassTag::General;
  PeelingEnumerator gen(n, hexagon ? 6 : 4, simple_only);
  gen.run([&](const PlanarMap& m) {
    switch (tag) {
      case MapClassTag::General: break;
      case MapClassTag::Simple: {
        MapClass c = classify(m);
        if (c != MapClass::SimpleQuadrangulation && c != MapClass::IrreducibleQuadrangulation)
          return;
        break;
      }
      case MapClassTag::Irreducible:
        if (classify(m) != MapClass::IrreducibleQuadrangulation) return;
        break;
      case MapClassTag::IrreducibleHexagon:
        if (classify(m) != MapClass::IrreducibleHexagon) return;
        break;
    }
    emit(m);
  });
}

inline EnumerationTable enumerate_class(MapClassTag tag, int n, EnumerationBudget budget = {},
                                        bool keep_maps = true) {
  EnumerationTable table;
  table.tag = tag;
  table.n = n;
  long long count = 0;
  enumerate_maps(
      tag, n,
      [&](const PlanarMap& m) {
        ++count;
        if (keep_maps) table.canonical.push_back(canonical_serialize(m));
      },
      budget);
  if (keep_maps) {
    std::sort(table.canonical.begin(), table.canonical.end());
    for (std::size_t i = 1; i < table.canonical.size(); ++i)
      if (table.canonical[i] == table.canonical[i - 1])
        throw std::logic_error("enumerator produced a duplicate rooted map");
  }
  table.count = count;
  return table;
}

}  // namespace qmaps
