#include <doctest.h>

#include <set>

#include "zigzag/gadgets.hpp"

using namespace zigzag;

TEST_CASE("bipyramid structure") {
  for (int n : {3, 4, 5, 8}) {
    SurfaceComplex bp = bipyramid(n);
    CHECK(bp.vertex_count() == static_cast<std::size_t>(n + 2));
    CHECK(bp.edge_count() == static_cast<std::size_t>(3 * n));
    CHECK(bp.face_count() == static_cast<std::size_t>(2 * n));
    CHECK(bp.euler_characteristic() == 2);
    CHECK(bp.orientable());
    CHECK(bp.degree("a") == static_cast<std::size_t>(n));
    CHECK_FALSE(bp.has_edge(Edge("a", "b")));
  }
  CHECK_THROWS_AS(bipyramid(2), DomainError);
}

TEST_CASE("bipyramid zigzag counts follow the parity law") {
  for (int n = 3; n <= 12; ++n) {
    std::size_t want = n % 2 == 1 ? 1 : (n % 4 == 2 ? 2 : 4);
    CHECK(enumerate_zigzags(bipyramid(n)).count() == want);
  }
}

TEST_CASE("bipyramid orientation directs the base cycle") {
  for (int n : {4, 5, 6, 7, 8}) {
    SurfaceComplex bp = bipyramid(n);
    ZigzagSet zs = enumerate_zigzags(bp);
    ZOrientation tau = bipyramid_orientation(bp, zs);
    CHECK(is_z_homogeneous(bp, zs, tau));
    EdgeTyping typing = edge_types(bp, zs, tau);
    CHECK(typing.count(EdgeType::II) == static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      VertexId u = "v" + std::to_string(i);
      VertexId w = "v" + std::to_string(i % n + 1);
      CHECK(typing.direction.at(Edge(u, w)) == DirectedEdge{u, w});
    }
  }
}

TEST_CASE("eulerian triangulation rejects bad input") {
  // Edge a-b traversed in opposite directions by the two cycles.
  CHECK_THROWS_AS(triangulate_eulerian({{"a", "b", "c"}, {"b", "a", "c"}}),
                  StructureError);
  // Edge covered once.
  CHECK_THROWS_AS(triangulate_eulerian({{"a", "b", "c"}, {"a", "b", "d"}}),
                  StructureError);
  // Apex name collides with a cycle vertex.
  CHECK_THROWS_AS(triangulate_eulerian({{"a", "b", "c"}, {"a", "b", "c"}}, {"a", "x"}),
                  DomainError);
}

TEST_CASE("gamma parameter validation") {
  CHECK_THROWS_AS(gamma(0, 2, 2, 2), DomainError);
  CHECK_THROWS_AS(gamma(1, 2, 1, 2), DomainError);
}

TEST_CASE("gamma complex of Example type") {
  auto [c, tau] = gamma(2, 3, 4, 5);
  CHECK(c.vertex_count() == 16);
  CHECK(c.edge_count() == 42);
  CHECK(c.face_count() == 28);
  CHECK(c.euler_characteristic() == 2);
  ZigzagSet zs = enumerate_zigzags(c);
  CHECK(zs.count() == 2);
  CHECK(is_z_homogeneous(c, zs, tau));
  // The type-II edges are exactly the four pole-to-pole paths, directed.
  EdgeTyping typing = edge_types(c, zs, tau);
  CHECK(typing.count(EdgeType::II) == 14);
  CHECK(typing.direction.at(Edge("a", "v0")) == DirectedEdge{"a", "v0"});
  CHECK(typing.direction.at(Edge("v0", "b")) == DirectedEdge{"v0", "b"});
  CHECK(typing.direction.at(Edge("b", "v1")) == DirectedEdge{"b", "v1"});
}

TEST_CASE("catalog invariants") {
  const auto& cat = gadget_catalog();
  REQUIRE(cat.size() == 11);
  std::set<MonodromyClass> covered;
  for (const Gadget& g : cat) {
    covered.insert(g.cls);
    CHECK(g.complex.euler_characteristic() == 2);
    CHECK(g.complex.orientable());
    for (bool rev : {false, true}) {
      const Gadget::Variant& v = g.variant(rev);
      CHECK(classify(v.monodromy) == g.cls);
      CHECK(is_z_homogeneous(g.complex, g.zigzags, v.tau));
      CHECK_FALSE(g.complex.has_edge(Edge(v.pair.v1, v.pair.v3)));
      CHECK(is_essential(g.complex, g.zigzags, v.tau, v.typing, v.pair));
    }
    CHECK(static_cast<int>(g.zigzags.count()) == class_zigzag_count(g.cls));
  }
  // Everything except the two classes that cannot occur in z-homogeneous
  // triangulations.
  CHECK(covered.size() == 11);
  CHECK_FALSE(covered.contains(MonodromyClass::K7));
  CHECK_FALSE(covered.contains(MonodromyClass::K8));
}
