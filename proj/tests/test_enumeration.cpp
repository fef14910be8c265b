#include <map>
#include <set>

#include "doctest.h"
#include "qmaps/classify.hpp"
#include "qmaps/enumerate.hpp"

using namespace qmaps;

namespace {

// rooted quadrangulations with n faces: 2 * 3^n * (2n)! / (n! * (n+2)!)
long long tutte_count(int n) {
  long double v = 2.0L;
  for (int i = 0; i < n; ++i) v *= 3.0L;
  for (int i = 1; i <= 2 * n; ++i) v *= i;
  for (int i = 1; i <= n; ++i) v /= i;
  for (int i = 1; i <= n + 2; ++i) v /= i;
  return static_cast<long long>(v + 0.5L);
}

// irreducible quadrangulations of the hexagon, by interior vertex count:
// 6/((k+2)(k+1)) * C(2k,k)
long long fps_count(int k) {
  long double v = 6.0L;
  for (int i = 1; i <= 2 * k; ++i) v *= i;
  for (int i = 1; i <= k; ++i) v /= static_cast<long double>(i) * i;
  v /= static_cast<long double>(k + 2) * (k + 1);
  return static_cast<long long>(v + 0.5L);
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("general quadrangulation counts match the classical formula") {
    CHECK(tutte_count(1) == 2);
    CHECK(tutte_count(6) == 24057);
    for (int n = 1; n <= 5; ++n) {
      auto table = enumerate_class(MapClassTag::General, n, {}, false);
      CHECK_MESSAGE(table.count == tutte_count(n), "n = ", n);
    }
  }

  TEST_CASE("every enumerated map is a valid quadrangulation with n faces") {
    for (int n = 1; n <= 4; ++n) {
      enumerate_maps(MapClassTag::General, n, [&](const PlanarMap& m) {
        REQUIRE(m.face_count() == n);
        REQUIRE(m.edge_count() == 2 * n);
        REQUIRE(m.vertex_count() == n + 2);
        for (int f = 0; f < m.face_count(); ++f) REQUIRE(m.face_degree(f) == 4);
      });
    }
  }

  TEST_CASE("smallest irreducible quadrangulation is the cube, counted once") {
    auto t4 = enumerate_class(MapClassTag::Irreducible, 4, {}, false);
    auto t5 = enumerate_class(MapClassTag::Irreducible, 5, {}, false);
    auto t6 = enumerate_class(MapClassTag::Irreducible, 6);
    CHECK(t4.count == 0);
    CHECK(t5.count == 0);
    CHECK(t6.count == 1);
    PlanarMap cube = deserialize(t6.canonical[0]);
    CHECK(classify(cube) == MapClass::IrreducibleQuadrangulation);
    CHECK(cube.vertex_count() == 8);
    for (int v = 0; v < cube.vertex_count(); ++v) CHECK(cube.vertex_degree(v) == 3);
  }

  TEST_CASE("hexagon-class counts match the closed formula with offset -2") {
    // quad-face count m corresponds to formula argument m-2
    std::map<int, long long> expected;
    for (int m = 3; m <= 6; ++m) expected[m] = fps_count(m - 2);
    CHECK(expected[3] == 2);
    CHECK(expected[4] == 3);
    CHECK(expected[5] == 6);
    CHECK(expected[6] == 14);
    for (int m = 2; m <= 6; ++m) {
      auto table = enumerate_class(MapClassTag::IrreducibleHexagon, m, {}, false);
      if (m == 2) {
        // three faces in total: excluded by the >= 4 faces convention
        CHECK(table.count == 0);
      } else {
        CHECK_MESSAGE(table.count == expected[m], "m = ", m);
      }
    }
  }

  TEST_CASE("enumeration is duplicate-free under rooted isomorphism") {
    auto table = enumerate_class(MapClassTag::General, 3);
    std::set<std::string> uniq(table.canonical.begin(), table.canonical.end());
    CHECK(uniq.size() == table.canonical.size());
    CHECK(table.count == 54);
  }

  TEST_CASE("budget overruns are rejected") {
    CHECK_THROWS_AS(enumerate_class(MapClassTag::General, 8), std::runtime_error);
    CHECK_THROWS_AS(enumerate_class(MapClassTag::IrreducibleHexagon, 11), std::runtime_error);
  }
}
