#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmaps {

struct MapError : std::runtime_error {
  explicit MapError(const std::string& what) : std::runtime_error(what) {}
};

enum class MapClass {
  GeneralQuadrangulation,
  SimpleQuadrangulation,
  IrreducibleQuadrangulation,
  IrreducibleHexagon,
  Other,
};

inline const char* to_string(MapClass c) {
  switch (c) {
    case MapClass::GeneralQuadrangulation: return "general-quadrangulation";
    case MapClass::SimpleQuadrangulation: return "simple-quadrangulation";
    case MapClass::IrreducibleQuadrangulation: return "irreducible-quadrangulation";
    case MapClass::IrreducibleHexagon: return "irreducible-hexagon";
    case MapClass::Other: return "other";
  }
  return "other";
}

// Rooted combinatorial map of the sphere as dart permutations.
//
// Darts are dense integers.  `twin` is a fixed-point-free involution pairing
// the two darts of each edge; `next` is the rotation at the origin vertex of
// each dart.  Face cycles are the orbits of sigma = next∘twin, and the face
// orbit containing a dart is the face to the RIGHT of that dart; in
// particular face_of(root) is the root face.  The face to the left of d is
// face_of(twin(d)).
//
// Immutable after construction; all operations are pure.
class PlanarMap {
 public:
  PlanarMap() = default;

  PlanarMap(int darts, std::vector<int> twin, std::vector<int> next, int root)
      : darts_(darts), twin_(std::move(twin)), next_(std::move(next)), root_(root) {
    validate_permutations();
    build_orbits();
    validate_connected_and_euler();
  }

  int dart_count() const { return darts_; }
  int root() const { return root_; }
  int twin(int d) const { return twin_[d]; }
  int next(int d) const { return next_[d]; }
  int prev(int d) const { return prev_[d]; }
  // Next dart along the boundary of the face to the right of d.
  int face_next(int d) const { return next_[twin_[d]]; }

  int tail(int d) const { return vertex_of_[d]; }
  int head(int d) const { return vertex_of_[twin_[d]]; }
  int vertex_of(int d) const { return vertex_of_[d]; }
  int face_of(int d) const { return face_of_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }

  int vertex_count() const { return n_vertices_; }
  int edge_count() const { return darts_ / 2; }
  int face_count() const { return n_faces_; }

  int vertex_dart(int v) const { return vertex_dart_[v]; }
  int face_dart(int f) const { return face_dart_[f]; }
  int vertex_degree(int v) const { return vertex_degree_[v]; }
  int face_degree(int f) const { return face_degree_[f]; }
  int root_face() const { return face_of_[root_]; }

  const std::vector<int>& twin_perm() const { return twin_; }
  const std::vector<int>& next_perm() const { return next_; }

  // Darts of the sigma-orbit of face f, starting at face_dart(f).
  std::vector<int> face_orbit(int f) const {
    std::vector<int> out;
    out.reserve(face_degree_[f]);
    int d0 = face_dart_[f];
    int d = d0;
    do {
      out.push_back(d);
      d = face_next(d);
    } while (d != d0);
    return out;
  }

  // Boundary of face f as a closed dart walk with f on the LEFT of every
  // dart (the orientation whose interior is f).
  std::vector<int> face_boundary_left(int f) const {
    std::vector<int> orbit = face_orbit(f);
    std::vector<int> out;
    out.reserve(orbit.size());
    for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) out.push_back(twin_[*it]);
    return out;
  }

  std::vector<int> vertex_orbit(int v) const {
    std::vector<int> out;
    out.reserve(vertex_degree_[v]);
    int d0 = vertex_dart_[v];
    int d = d0;
    do {
      out.push_back(d);
      d = next_[d];
    } while (d != d0);
    return out;
  }

  bool operator==(const PlanarMap& o) const {
    return darts_ == o.darts_ && root_ == o.root_ && twin_ == o.twin_ && next_ == o.next_;
  }

 private:
  void validate_permutations() {
    if (darts_ <= 0 || darts_ % 2 != 0) throw MapError("dart count must be even and positive");
    if (static_cast<int>(twin_.size()) != darts_ || static_cast<int>(next_.size()) != darts_)
      throw MapError("twin/next length must equal dart count");
    if (root_ < 0 || root_ >= darts_) throw MapError("root dart out of range");
    std::vector<char> seen(darts_, 0);
    for (int d = 0; d < darts_; ++d) {
      int t = twin_[d];
      if (t < 0 || t >= darts_) throw MapError("twin entry out of range");
      if (t == d) throw MapError("twin has a fixed point");
      if (twin_[t] != d) throw MapError("twin is not an involution");
      int nx = next_[d];
      if (nx < 0 || nx >= darts_) throw MapError("next entry out of range");
      if (seen[nx]) throw MapError("next is not a permutation");
      seen[nx] = 1;
    }
    prev_.assign(darts_, -1);
    for (int d = 0; d < darts_; ++d) prev_[next_[d]] = d;
  }

  void build_orbits() {
    vertex_of_.assign(darts_, -1);
    n_vertices_ = 0;
    for (int d = 0; d < darts_; ++d) {
      if (vertex_of_[d] != -1) continue;
      int v = n_vertices_++;
      vertex_dart_.push_back(d);
      int deg = 0;
      int e = d;
      do {
        vertex_of_[e] = v;
        ++deg;
        e = next_[e];
      } while (e != d);
      vertex_degree_.push_back(deg);
    }
    face_of_.assign(darts_, -1);
    n_faces_ = 0;
    for (int d = 0; d < darts_; ++d) {
      if (face_of_[d] != -1) continue;
      int f = n_faces_++;
      face_dart_.push_back(d);
      int deg = 0;
      int e = d;
      do {
        face_of_[e] = f;
        ++deg;
        e = face_next(e);
      } while (e != d);
      face_degree_.push_back(deg);
    }
    edge_of_.assign(darts_, -1);
    int eid = 0;
    for (int d = 0; d < darts_; ++d)
      if (edge_of_[d] == -1) {
        edge_of_[d] = eid;
        edge_of_[twin_[d]] = eid;
        ++eid;
      }
  }

  void validate_connected_and_euler() {
    std::vector<char> reach(darts_, 0);
    std::vector<int> stack{0};
    reach[0] = 1;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      for (int e : {twin_[d], next_[d]})
        if (!reach[e]) {
          reach[e] = 1;
          stack.push_back(e);
        }
    }
    for (int d = 0; d < darts_; ++d)
      if (!reach[d]) throw MapError("map is not connected");
    if (n_vertices_ - darts_ / 2 + n_faces_ != 2)
      throw MapError("Euler characteristic is not 2 (not a sphere map)");
  }

  int darts_ = 0;
  std::vector<int> twin_, next_, prev_;
  int root_ = 0;
  std::vector<int> vertex_of_, face_of_, edge_of_;
  std::vector<int> vertex_dart_, face_dart_;
  std::vector<int> vertex_degree_, face_degree_;
  int n_vertices_ = 0, n_faces_ = 0;
};

inline PlanarMap build_map(int darts, std::vector<int> twin, std::vector<int> next, int root) {
  return PlanarMap(darts, std::move(twin), std::move(next), root);
}

inline PlanarMap reroot(const PlanarMap& m, int dart) {
  if (dart < 0 || dart >= m.dart_count()) throw MapError("reroot: invalid dart");
  return PlanarMap(m.dart_count(), m.twin_perm(), m.next_perm(), dart);
}

inline std::vector<std::pair<int, int>> face_degrees(const PlanarMap& m) {
  std::vector<std::pair<int, int>> out;
  out.reserve(m.face_count());
  for (int f = 0; f < m.face_count(); ++f) out.emplace_back(f, m.face_degree(f));
  return out;
}

// --- canonical bi-coloring -------------------------------------------------

struct Bicoloring {
  // 0 = black, 1 = white; root dart runs black-to-white.
  std::vector<std::uint8_t> color;
  bool black(int v) const { return color[v] == 0; }
};

inline Bicoloring canonical_bicoloring(const PlanarMap& m) {
  Bicoloring bc;
  bc.color.assign(m.vertex_count(), 255);
  std::queue<int> q;
  int v0 = m.tail(m.root());
  bc.color[v0] = 0;
  q.push(v0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int d : m.vertex_orbit(v)) {
      int u = m.head(d);
      if (bc.color[u] == 255) {
        bc.color[u] = static_cast<std::uint8_t>(1 - bc.color[v]);
        q.push(u);
      } else if (bc.color[u] == bc.color[v]) {
        throw MapError("map is not bipartite");
      }
    }
  }
  return bc;
}

// --- canonical order ---------------------------------------------------------

// Breadth-first exploration with rotation priority, starting from the root
// dart: when a dart d is processed, the darts at head(d) are discovered in
// rotation order starting at twin(d).  First-visit ranks induce total orders
// on darts (= oriented edges), vertices, edges and faces.
struct CanonicalOrder {
  std::vector<int> dart_rank;    // dart -> rank
  std::vector<int> dart_order;   // rank -> dart
  std::vector<int> vertex_rank;  // vertex -> rank
  std::vector<int> edge_rank;
  std::vector<int> face_rank;
  std::vector<int> vertex_order, edge_order, face_order;
};

inline CanonicalOrder canonical_order(const PlanarMap& m) {
  CanonicalOrder co;
  const int n = m.dart_count();
  co.dart_rank.assign(n, -1);
  co.dart_order.reserve(n);
  auto discover = [&](int d) {
    if (co.dart_rank[d] == -1) {
      co.dart_rank[d] = static_cast<int>(co.dart_order.size());
      co.dart_order.push_back(d);
    }
  };
  discover(m.root());
  for (std::size_t i = 0; i < co.dart_order.size(); ++i) {
    int d = co.dart_order[i];
    int a = m.twin(d);
    int e = a;
    do {
      discover(e);
      e = m.next(e);
    } while (e != a);
  }
  auto rank_by_first = [&](int count, auto id_of, std::vector<int>& rank, std::vector<int>& order) {
    rank.assign(count, -1);
    for (int d : co.dart_order) {
      int x = id_of(d);
      if (rank[x] == -1) {
        rank[x] = static_cast<int>(order.size());
        order.push_back(x);
      }
    }
  };
  rank_by_first(m.vertex_count(), [&](int d) { return m.vertex_of(d); }, co.vertex_rank, co.vertex_order);
  rank_by_first(m.edge_count(), [&](int d) { return m.edge_of(d); }, co.edge_rank, co.edge_order);
  rank_by_first(m.face_count(), [&](int d) { return m.face_of(d); }, co.face_rank, co.face_order);
  return co;
}

// Relabel darts by canonical rank.  Two rooted maps are isomorphic iff their
// canonical relabelings are identical.
inline PlanarMap canonical_relabel(const PlanarMap& m) {
  CanonicalOrder co = canonical_order(m);
  const int n = m.dart_count();
  std::vector<int> twin(n), next(n);
  for (int d = 0; d < n; ++d) {
    twin[co.dart_rank[d]] = co.dart_rank[m.twin(d)];
    next[co.dart_rank[d]] = co.dart_rank[m.next(d)];
  }
  return PlanarMap(n, std::move(twin), std::move(next), 0);
}

// --- serialization -----------------------------------------------------------

inline std::string serialize(const PlanarMap& m) {
  std::ostringstream os;
  os << "PMAP 1 " << m.dart_count() << ' ' << m.root() << '\n';
  os << "twin:";
  for (int d = 0; d < m.dart_count(); ++d) os << ' ' << m.twin(d);
  os << '\n' << "next:";
  for (int d = 0; d < m.dart_count(); ++d) os << ' ' << m.next(d);
  os << '\n';
  return os.str();
}

inline std::string canonical_serialize(const PlanarMap& m) { return serialize(canonical_relabel(m)); }

inline bool are_isomorphic(const PlanarMap& a, const PlanarMap& b) {
  if (a.dart_count() != b.dart_count()) return false;
  return canonical_serialize(a) == canonical_serialize(b);
}

namespace detail {

class StrictParser {
 public:
  StrictParser(const std::string& text) : text_(text) {}

  void expect(const std::string& token) {
    if (text_.compare(pos_, token.size(), token) != 0)
      fail("expected \"" + token + "\"");
    pos_ += token.size();
  }

  int parse_int() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start) fail("expected integer");
    try {
      return std::stoi(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
    return 0;
  }

  void expect_end() {
    if (pos_ != text_.size()) fail("trailing data");
  }

  [[noreturn]] void fail(const std::string& msg) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw MapError("PMAP parse error at line " + std::to_string(line) + ", column " +
                   std::to_string(col) + ": " + msg);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PlanarMap deserialize(const std::string& text) {
  detail::StrictParser p(text);
  p.expect("PMAP 1 ");
  int darts = p.parse_int();
  p.expect(" ");
  int root = p.parse_int();
  p.expect("\ntwin:");
  std::vector<int> twin, next;
  twin.reserve(darts > 0 ? darts : 0);
  for (int i = 0; i < darts; ++i) {
    p.expect(" ");
    twin.push_back(p.parse_int());
  }
  p.expect("\nnext:");
  for (int i = 0; i < darts; ++i) {
    p.expect(" ");
    next.push_back(p.parse_int());
  }
  p.expect("\n");
  p.expect_end();
  return PlanarMap(darts, std::move(twin), std::move(next), root);
}

// --- distances ----------------------------------------------------------------

inline std::vector<int> bfs_distances(const PlanarMap& m, int source) {
  if (source < 0 || source >= m.vertex_count()) throw MapError("bfs_distances: invalid vertex");
  std::vector<int> dist(m.vertex_count(), -1);
  std::vector<int> frontier{source}, nxt;
  dist[source] = 0;
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    nxt.clear();
    for (int v : frontier) {
      int d0 = m.vertex_dart(v);
      int d = d0;
      do {
        int u = m.head(d);
        if (dist[u] == -1) {
          dist[u] = level;
          nxt.push_back(u);
        }
        d = m.next(d);
      } while (d != d0);
    }
    frontier.swap(nxt);
  }
  return dist;
}

// --- cycles and sides -----------------------------------------------------------

// A cycle is a closed walk of darts; it is simple if it visits every vertex at
// most once (2-cycles made of parallel edges qualify).
inline void check_simple_cycle(const PlanarMap& m, const std::vector<int>& cycle) {
  if (cycle.size() < 2) throw MapError("cycle too short");
  std::set<int> verts;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int d = cycle[i];
    if (d < 0 || d >= m.dart_count()) throw MapError("cycle: invalid dart");
    int dn = cycle[(i + 1) % cycle.size()];
    if (m.head(d) != m.tail(dn)) throw MapError("cycle: darts do not chain");
    if (!verts.insert(m.tail(d)).second) throw MapError("cycle is not simple");
  }
  if (cycle.size() == 2 && m.edge_of(cycle[0]) == m.edge_of(cycle[1]))
    throw MapError("cycle is not simple");  // an edge walked back and forth
}

// Partition of the faces into the two Jordan sides of a simple cycle.  The
// first side contains the face to the right of the first cycle dart.
inline std::pair<std::vector<int>, std::vector<int>> cycle_sides(const PlanarMap& m,
                                                                 const std::vector<int>& cycle) {
  check_simple_cycle(m, cycle);
  std::vector<char> on_cycle(m.dart_count() / 2, 0);
  for (int d : cycle) on_cycle[m.edge_of(d)] = 1;
  std::vector<int> side_of(m.face_count(), -1);
  auto flood = [&](int f0, int tag) {
    std::vector<int> stack{f0};
    side_of[f0] = tag;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int d : m.face_orbit(f)) {
        if (on_cycle[m.edge_of(d)]) continue;
        int g = m.face_of(m.twin(d));
        if (side_of[g] == -1) {
          side_of[g] = tag;
          stack.push_back(g);
        }
      }
    }
  };
  flood(m.face_of(cycle[0]), 0);
  int other = m.face_of(m.twin(cycle[0]));
  if (side_of[other] == -1) flood(other, 1);
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int f = 0; f < m.face_count(); ++f) {
    if (side_of[f] == 0)
      out.first.push_back(f);
    else if (side_of[f] == 1)
      out.second.push_back(f);
    else
      throw MapError("cycle does not separate the sphere into two sides");
  }
  return out;
}

// True iff for every edge of the cycle, canonically oriented black-to-white,
// all parallel edges with the same endpoints lie on the left side of that
// orientation.
inline bool is_rightmost_cycle(const PlanarMap& m, const std::vector<int>& cycle) {
  Bicoloring bc = canonical_bicoloring(m);
  auto sides = cycle_sides(m, cycle);
  std::vector<char> in_first(m.face_count(), 0);
  for (int f : sides.first) in_first[f] = 1;
  std::vector<char> cyc_edge(m.edge_count(), 0);
  for (int d : cycle) cyc_edge[m.edge_of(d)] = 1;

  // endpoint pair -> edges
  std::map<std::pair<int, int>, std::vector<int>> bundles;
  for (int d = 0; d < m.dart_count(); ++d) {
    if (d > m.twin(d)) continue;
    int u = m.tail(d), v = m.head(d);
    bundles[{std::min(u, v), std::max(u, v)}].push_back(d);
  }
  for (int d : cycle) {
    int cd = bc.black(m.tail(d)) ? d : m.twin(d);
    bool left_is_first = in_first[m.face_of(m.twin(cd))] != 0;
    int u = m.tail(d), v = m.head(d);
    for (int pd : bundles[{std::min(u, v), std::max(u, v)}]) {
      if (cyc_edge[m.edge_of(pd)]) continue;
      bool side_first = in_first[m.face_of(pd)] != 0;
      if (side_first != left_is_first) return false;
    }
  }
  return true;
}

}  // namespace qmaps
