#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmaps/classify.hpp"
#include "qmaps/enumerate.hpp"
#include "qmaps/planar_map.hpp"
#include "qmaps/rng.hpp"

namespace qmaps {

namespace detail {

// Uniform Dyck path of length 2n via the cycle lemma: shuffle n up-steps and
// n+1 down-steps, rotate to start right after the first prefix minimum, drop
// the final down-step.
inline std::vector<std::int8_t> uniform_dyck_path(int n, Rng& rng) {
  std::vector<std::int8_t> steps(2 * n + 1, -1);
  for (int i = 0; i < n; ++i) steps[i] = 1;
  for (int i = 2 * n; i > 0; --i) std::swap(steps[i], steps[rng.draw_int(i + 1)]);
  int sum = 0, min_sum = 1, min_pos = -1;
  for (int i = 0; i <= 2 * n; ++i) {
    sum += steps[i];
    if (sum < min_sum) {
      min_sum = sum;
      min_pos = i;
    }
  }
  std::vector<std::int8_t> dyck;
  dyck.reserve(2 * n);
  for (int i = 1; i <= 2 * n; ++i) dyck.push_back(steps[(min_pos + i) % (2 * n + 1)]);
  return dyck;
}

struct LabeledTreeContour {
  // one corner per contour step, 2n in total
  std::vector<int> vertex;  // corner -> tree vertex
  std::vector<int> label;
  int n_vertices = 0;
};

inline LabeledTreeContour labeled_contour(const std::vector<std::int8_t>& dyck, Rng& rng) {
  LabeledTreeContour c;
  const int steps = static_cast<int>(dyck.size());
  std::vector<int> vstack{0};
  std::vector<int> vlabel{0};
  c.n_vertices = 1;
  for (int i = 0; i < steps; ++i) {
    c.vertex.push_back(vstack.back());
    c.label.push_back(vlabel[vstack.back()]);
    if (dyck[i] == 1) {
      int child = c.n_vertices++;
      int inc = rng.draw_int(3) - 1;
      vlabel.push_back(vlabel[vstack.back()] + inc);
      vstack.push_back(child);
    } else {
      vstack.pop_back();
    }
  }
  return c;
}

// successor of each corner: the next corner (cyclically) with label one less;
// corners of minimal label keep -1 (they connect to the added vertex)
inline std::vector<int> corner_successors(const std::vector<int>& label) {
  const int m = static_cast<int>(label.size());
  std::vector<int> succ(m, -1);
  int lo = *std::min_element(label.begin(), label.end());
  int hi = *std::max_element(label.begin(), label.end());
  std::vector<std::vector<int>> pending(hi - lo + 2);
  auto visit = [&](int j, bool collect) {
    int L = label[j] - lo;
    for (int i : pending[L + 1]) succ[i] = j;
    pending[L + 1].clear();
    if (collect) pending[L].push_back(j);
  };
  for (int j = 0; j < m; ++j) visit(j, true);
  for (int j = 0; j < m; ++j) visit(j, false);
  return succ;
}

}  // namespace detail

struct PointedSample {
  PlanarMap map;
  int star_vertex;                // the marked vertex added by the construction
  std::vector<int> vertex_label;  // contour labels per map vertex; star = min-1
};

// Uniform rooted quadrangulation with n faces, built through the tree
// bijection: a uniformly labeled plane tree with n edges plus a sign bit maps
// to a rooted quadrangulation with a marked vertex, and forgetting the mark
// leaves the uniform distribution.  The construction is validated in tests
// against exhaustive enumeration (exact chi-square at small n) and against
// the label-distance identity d(star, u) = label(u) - min + 1.
inline PointedSample sample_quadrangulation_pointed(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("need n >= 1 faces");
  auto dyck = detail::uniform_dyck_path(n, rng);
  auto contour = detail::labeled_contour(dyck, rng);
  auto succ = detail::corner_successors(contour.label);
  bool flip_root = rng.draw_bool();

  const int m = 2 * n;  // corners; one arc per corner
  // arc i has darts 2i (at corner i) and 2i+1 (at succ(i) or the marked vertex)
  std::vector<std::vector<int>> sources(m);  // corner -> arcs landing there
  std::vector<int> star_sources;             // arcs landing at the marked vertex
  for (int i = 0; i < m; ++i) {
    if (succ[i] == -1)
      star_sources.push_back(i);
    else
      sources[succ[i]].push_back(i);
  }

  const int tree_vertices = contour.n_vertices;
  std::vector<std::vector<int>> corners_of(tree_vertices);
  for (int i = 0; i < m; ++i) corners_of[contour.vertex[i]].push_back(i);

  std::vector<int> next(2 * m, -1), twin(2 * m);
  for (int i = 0; i < m; ++i) {
    twin[2 * i] = 2 * i + 1;
    twin[2 * i + 1] = 2 * i;
  }
  auto close_rotation = [&](const std::vector<int>& darts) {
    for (std::size_t k = 0; k < darts.size(); ++k)
      next[darts[k]] = darts[(k + 1) % darts.size()];
  };
  for (int v = 0; v < tree_vertices; ++v) {
    std::vector<int> rot;
    for (int c : corners_of[v]) {
      // incoming arcs sorted nearest source first, then the outgoing arc
      std::vector<int> in = sources[c];
      std::sort(in.begin(), in.end(), [&](int a, int b) {
        return (c - a + m) % m < (c - b + m) % m;
      });
      for (int j : in) rot.push_back(2 * j + 1);
      rot.push_back(2 * c);
    }
    close_rotation(rot);
  }
  {
    std::vector<int> rot;
    for (int j : star_sources) rot.push_back(2 * j + 1);
    close_rotation(rot);
  }
  int root = flip_root ? 1 : 0;

  PointedSample out{PlanarMap(2 * m, std::move(twin), std::move(next), root), -1, {}};
  int min_label = *std::min_element(contour.label.begin(), contour.label.end());
  out.star_vertex = out.map.vertex_of(2 * star_sources.front() + 1);
  out.vertex_label.assign(out.map.vertex_count(), min_label - 1);
  for (int c = 0; c < m; ++c) out.vertex_label[out.map.vertex_of(2 * c)] = contour.label[c];
  return out;
}

inline PlanarMap sample_quadrangulation(int n, Rng& rng) {
  return sample_quadrangulation_pointed(n, rng).map;
}

inline PlanarMap sample_quadrangulation(int n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_quadrangulation(n, rng);
}

// Uniform sampler over a small enumerated class.
class EnumeratedSampler {
 public:
  EnumeratedSampler(MapClassTag tag, int n, EnumerationBudget budget = {}) {
    table_ = enumerate_class(tag, n, budget);
    if (table_.count == 0) throw std::runtime_error("class is empty at this size");
  }
  const EnumerationTable& table() const { return table_; }
  PlanarMap sample(Rng& rng) const {
    return deserialize(table_.canonical[rng.draw_int(static_cast<int>(table_.count))]);
  }

 private:
  EnumerationTable table_;
};

inline PlanarMap sample_irreducible_hexagon_small(int quad_faces, Rng& rng,
                                                  EnumerationBudget budget = {}) {
  EnumeratedSampler s(MapClassTag::IrreducibleHexagon, quad_faces, budget);
  return s.sample(rng);
}

}  // namespace qmaps
