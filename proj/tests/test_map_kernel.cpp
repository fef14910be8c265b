#include <algorithm>
#include <set>

#include "doctest.h"
#include "qmaps/classify.hpp"
#include "qmaps/enumerate.hpp"
#include "qmaps/planar_map.hpp"

using namespace qmaps;

namespace {

// path a-b-c rooted a->b; darts 0:a->b 1:b->a 2:b->c 3:c->b
PlanarMap two_edge_path() { return build_map(4, {1, 0, 3, 2}, {0, 2, 1, 3}, 0); }

// simple cycle a-b-c-d rooted a->b
PlanarMap four_cycle() {
  return build_map(8, {1, 0, 3, 2, 5, 4, 7, 6}, {7, 2, 1, 4, 3, 6, 5, 0}, 0);
}

// triple edge a-b with one pendant inside each lens; a 3-face quadrangulation
// with rotation a:(0,4,2), b:(1,3,5) so the lenses are (e1,e2),(e2,e3),(e3,e1)
PlanarMap triple_edge_with_pendants() {
  // edges: e1=0/1, e2=2/3, e3=4/5 between a,b; pendants p1=6/7 (lens e1e2,
  // at b), p2=8/9 (lens e2e3, at b), p3=10/11 (lens e3e1, at b)
  std::vector<int> twin{1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10};
  std::vector<int> next(12);
  // rotation at a: 0 -> 4 -> 2 -> 0
  next[0] = 4;
  next[4] = 2;
  next[2] = 0;
  // rotation at b: 1 -> 6 -> 3 -> 8 -> 5 -> 10 -> 1 (pendant dart between lenses)
  next[1] = 6;
  next[6] = 3;
  next[3] = 8;
  next[8] = 5;
  next[5] = 10;
  next[10] = 1;
  // pendant tips
  next[7] = 7;
  next[9] = 9;
  next[11] = 11;
  return build_map(12, std::move(twin), std::move(next), 0);
}

std::vector<int> floyd_warshall_row(const PlanarMap& m, int src) {
  const int V = m.vertex_count();
  const int INF = 1 << 20;
  std::vector<std::vector<int>> d(V, std::vector<int>(V, INF));
  for (int v = 0; v < V; ++v) d[v][v] = 0;
  for (int dd = 0; dd < m.dart_count(); ++dd) d[m.tail(dd)][m.head(dd)] = 1;
  for (int k = 0; k < V; ++k)
    for (int i = 0; i < V; ++i)
      for (int j = 0; j < V; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d[src];
}

PlanarMap relabel_darts(const PlanarMap& m, const std::vector<int>& perm) {
  const int n = m.dart_count();
  std::vector<int> twin(n), next(n);
  for (int d = 0; d < n; ++d) {
    twin[perm[d]] = perm[m.twin(d)];
    next[perm[d]] = perm[m.next(d)];
  }
  return PlanarMap(n, std::move(twin), std::move(next), perm[m.root()]);
}

}  // namespace

TEST_SUITE("map_kernel") {
  TEST_CASE("build_map validates and computes orbits") {
    PlanarMap p = two_edge_path();
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2);
    CHECK(p.face_count() == 1);
    CHECK(face_degrees(p) == std::vector<std::pair<int, int>>{{0, 4}});

    CHECK_THROWS_AS(build_map(4, {0, 1, 2, 3}, {0, 2, 1, 3}, 0), MapError);  // fixed points
    CHECK_THROWS_AS(build_map(4, {1, 0, 3, 2}, {0, 0, 1, 3}, 0), MapError);  // not a permutation
    CHECK_THROWS_AS(build_map(4, {1, 0, 3, 2}, {1, 0, 3, 2}, 0), MapError);  // disconnected
  }

  TEST_CASE("Euler and degree-sum identities hold on every small map") {
    for (int n = 1; n <= 3; ++n) {
      enumerate_maps(MapClassTag::General, n, [&](const PlanarMap& m) {
        CHECK(m.vertex_count() - m.edge_count() + m.face_count() == 2);
        int fsum = 0, vsum = 0;
        for (int f = 0; f < m.face_count(); ++f) fsum += m.face_degree(f);
        for (int v = 0; v < m.vertex_count(); ++v) vsum += m.vertex_degree(v);
        CHECK(fsum == 2 * m.edge_count());
        CHECK(vsum == 2 * m.edge_count());
      });
    }
  }

  TEST_CASE("classification of basic maps") {
    CHECK(classify(four_cycle()) == MapClass::SimpleQuadrangulation);
    CHECK(classify(two_edge_path()) == MapClass::SimpleQuadrangulation);
    CHECK(classify(triple_edge_with_pendants()) == MapClass::GeneralQuadrangulation);
  }

  TEST_CASE("canonical bicoloring orients the root black-to-white") {
    PlanarMap p = two_edge_path();
    Bicoloring bc = canonical_bicoloring(p);
    CHECK(bc.black(p.tail(0)));
    CHECK(!bc.black(p.head(0)));
    CHECK(bc.black(p.head(2)));  // c has the root tail's color

    Bicoloring rev = canonical_bicoloring(reroot(p, 1));
    for (int v = 0; v < 3; ++v) CHECK(bc.black(v) == !rev.black(v));

    Bicoloring cyc = canonical_bicoloring(four_cycle());
    CHECK(cyc.black(0) == cyc.black(2));
    CHECK(cyc.black(1) == cyc.black(3));
    CHECK(cyc.black(0) != cyc.black(1));
  }

  TEST_CASE("canonical order starts at the root and is isomorphism-invariant") {
    for (int n = 1; n <= 3; ++n) {
      enumerate_maps(MapClassTag::General, n, [&](const PlanarMap& m) {
        CanonicalOrder co = canonical_order(m);
        CHECK(co.dart_order[0] == m.root());
        // relabel darts by an arbitrary permutation: canonical form unchanged
        std::vector<int> perm(m.dart_count());
        for (int d = 0; d < m.dart_count(); ++d)
          perm[d] = (7 * d + 3) % m.dart_count();
        std::set<int> dedup(perm.begin(), perm.end());
        if (dedup.size() == perm.size())
          CHECK(canonical_serialize(m) == canonical_serialize(relabel_darts(m, perm)));
      });
    }
  }

  TEST_CASE("rerooting generally changes the canonical order") {
    PlanarMap c = four_cycle();
    CHECK(canonical_serialize(c) != canonical_serialize(reroot(c, 2)));
    CHECK(are_isomorphic(reroot(c, 0), c));
  }

  TEST_CASE("reroot round trips") {
    PlanarMap p = two_edge_path();
    CHECK(reroot(p, p.root()) == p);
    CHECK(reroot(reroot(p, 2), 0) == p);
    CHECK_THROWS_AS(reroot(p, 99), MapError);
    // the i-th oriented edge in canonical order is recoverable
    CanonicalOrder co = canonical_order(p);
    for (int i = 0; i < p.dart_count(); ++i)
      CHECK(canonical_order(reroot(p, co.dart_order[i])).dart_order[0] == co.dart_order[i]);
  }

  TEST_CASE("bfs distances match a Floyd-Warshall oracle") {
    CHECK(bfs_distances(four_cycle(), 0) == std::vector<int>{0, 1, 2, 1});
    CHECK(bfs_distances(two_edge_path(), 0) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(bfs_distances(two_edge_path(), 5), MapError);
    for (int n = 1; n <= 3; ++n) {
      enumerate_maps(MapClassTag::General, n, [&](const PlanarMap& m) {
        for (int v = 0; v < m.vertex_count(); ++v)
          CHECK(bfs_distances(m, v) == floyd_warshall_row(m, v));
      });
    }
  }

  TEST_CASE("cycle sides partition the faces") {
    PlanarMap c = four_cycle();
    auto sides = cycle_sides(c, {0, 2, 4, 6});
    CHECK(sides.first.size() + sides.second.size() == 2);
    CHECK((sides.first.size() == 1 || sides.second.size() == 1));

    // non-simple input is rejected
    CHECK_THROWS_AS(cycle_sides(c, {0, 1}), MapError);

    // a domino 6-cycle on the cube splits the faces 2 + 4
    auto cube_table = enumerate_class(MapClassTag::Irreducible, 6);
    PlanarMap cube = deserialize(cube_table.canonical[0]);
    bool found = false;
    // boundary of the union of the two faces adjacent to edge of dart 0
    int f1 = cube.face_of(0), f2 = cube.face_of(cube.twin(0));
    std::vector<int> walk;
    for (int d : cube.face_orbit(f1))
      if (cube.edge_of(d) != cube.edge_of(0)) walk.push_back(d);
    // stitch the second face's arc starting where the first ends
    std::vector<int> walk2;
    for (int d : cube.face_orbit(f2))
      if (cube.edge_of(d) != cube.edge_of(0)) walk2.push_back(d);
    // rotate walk2 so it chains after walk
    for (std::size_t r = 0; r < walk2.size(); ++r) {
      std::vector<int> rotated(walk2.begin() + r, walk2.end());
      rotated.insert(rotated.end(), walk2.begin(), walk2.begin() + r);
      if (cube.tail(rotated.front()) == cube.head(walk.back())) {
        std::vector<int> cycle = walk;
        cycle.insert(cycle.end(), rotated.begin(), rotated.end());
        if (cube.head(cycle.back()) == cube.tail(cycle.front())) {
          auto s = cycle_sides(cube, cycle);
          std::set<std::size_t> sizes{s.first.size(), s.second.size()};
          CHECK(sizes == std::set<std::size_t>{2, 4});
          found = true;
        }
      }
    }
    CHECK(found);
  }

  TEST_CASE("rightmost cycles") {
    // every cycle of a simple map is rightmost
    PlanarMap c = four_cycle();
    CHECK(is_rightmost_cycle(c, {0, 2, 4, 6}));

    // triple edge: a 2-cycle with the third parallel edge on its right
    PlanarMap t = triple_edge_with_pendants();
    // cycle through e1 (dart 0) and back through e2 (dart 3)
    CHECK_FALSE(is_rightmost_cycle(t, {0, 3}));
  }

  TEST_CASE("PMAP serialization round trips bit-exactly") {
    PlanarMap p = two_edge_path();
    std::string s = serialize(p);
    CHECK(s == "PMAP 1 4 0\ntwin: 1 0 3 2\nnext: 0 2 1 3\n");
    CHECK(deserialize(s) == p);
    CHECK(serialize(deserialize(s)) == s);

    CHECK_THROWS_WITH_AS(deserialize("PMAP 1 4 0\ntwin: 1 0 3\nnext: 0 2 1 3\n"),
                         doctest::Contains("line 2"), MapError);
    CHECK_THROWS_AS(deserialize("PMAP 2 4 0\ntwin: 1 0 3 2\nnext: 0 2 1 3\n"), MapError);
    CHECK_THROWS_AS(deserialize(s + "\n"), MapError);  // extra trailing newline
  }

  TEST_CASE("canonical serialization separates isomorphism classes") {
    // all maps with <= 4 faces: serializations collide iff isomorphic
    std::set<std::string> seen;
    long long total = 0;
    for (int n = 1; n <= 4; ++n) {
      enumerate_maps(MapClassTag::General, n, [&](const PlanarMap& m) {
        seen.insert(canonical_serialize(m));
        ++total;
      });
    }
    CHECK(total == 2 + 9 + 54 + 378);
    CHECK(static_cast<long long>(seen.size()) == total);
  }
}
