#include "zigzag/gadgets.hpp"

#include <algorithm>
#include <set>

namespace zigzag {

SurfaceComplex bipyramid(int n) {
  if (n < 3) throw DomainError("bipyramid needs n >= 3");
  auto base = [](int i, int n_) { return "v" + std::to_string((i % n_) + 1); };
  std::vector<Face> faces;
  for (int i = 0; i < n; ++i) {
    faces.push_back(Face({"a", base(i, n), base(i + 1, n)}));
    faces.push_back(Face({"b", base(i + 1, n), base(i, n)}));
  }
  return SurfaceComplex(std::move(faces));
}

ZOrientation bipyramid_orientation(const SurfaceComplex& bp, const ZigzagSet& zs) {
  const DirectedEdge want{"v1", "v2"};
  for (const ZOrientation& tau : find_homogeneous_orientations(bp, zs)) {
    for (const ZOrientation& cand : {tau, tau.reversed()}) {
      const EdgeTyping typing = edge_types(bp, zs, cand);
      auto it = typing.direction.find(Edge("v1", "v2"));
      if (it != typing.direction.end() && it->second == want) return cand;
    }
  }
  throw StructureError("no homogeneous orientation directs the bipyramid base v1 -> v2");
}

std::pair<SurfaceComplex, ZOrientation> triangulate_eulerian(
    const std::vector<std::vector<VertexId>>& cycles,
    const std::vector<VertexId>& apex_names) {
  if (cycles.empty()) throw StructureError("no face cycles given");
  if (!apex_names.empty() && apex_names.size() != cycles.size())
    throw DomainError("need one apex name per face cycle");

  // Every undirected edge must be covered by exactly two cycle slots, both
  // times in its digraph direction.
  std::map<Edge, std::vector<DirectedEdge>> cover;
  std::set<VertexId> cycle_vertices;
  for (const auto& cycle : cycles) {
    if (cycle.size() < 3) throw StructureError("face cycle shorter than 3");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      DirectedEdge d{cycle[i], cycle[(i + 1) % cycle.size()]};
      cover[Edge(d)].push_back(d);
      cycle_vertices.insert(d.tail);
    }
  }
  std::set<DirectedEdge> digraph;
  for (const auto& [e, ds] : cover) {
    if (ds.size() != 2)
      throw StructureError("edge " + to_string(e) + " covered by " +
                           std::to_string(ds.size()) + " cycle slots, expected 2");
    if (ds[0] != ds[1])
      throw StructureError("edge " + to_string(e) +
                           " traversed in opposite directions; faces are not directed cycles of one digraph");
    digraph.insert(ds[0]);
  }

  std::vector<Face> faces;
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    VertexId apex = apex_names.empty() ? "w" + std::to_string(j + 1) : apex_names[j];
    if (cycle_vertices.contains(apex))
      throw DomainError("apex name '" + apex + "' collides with a cycle vertex");
    const auto& cycle = cycles[j];
    for (std::size_t i = 0; i < cycle.size(); ++i)
      faces.push_back(Face({apex, cycle[i], cycle[(i + 1) % cycle.size()]}));
  }
  SurfaceComplex c(std::move(faces));

  const ZigzagSet zs = enumerate_zigzags(c);
  std::vector<ZOrientation> matches;
  for (const ZOrientation& tau : find_homogeneous_orientations(c, zs)) {
    for (const ZOrientation& cand : {tau, tau.reversed()}) {
      const EdgeTyping typing = edge_types(c, zs, cand);
      std::set<DirectedEdge> two;
      for (const auto& [e, d] : typing.direction) two.insert(d);
      if (two == digraph) matches.push_back(cand);
    }
  }
  if (matches.size() != 1)
    throw StructureError("expected a unique orientation with the given type-II edges, found " +
                         std::to_string(matches.size()));
  return {std::move(c), matches.front()};
}

std::pair<SurfaceComplex, ZOrientation> gamma(int p1, int p2, int p3, int p4) {
  const std::array<int, 4> p{p1, p2, p3, p4};
  int unit_paths = 0;
  for (int pi : p) {
    if (pi < 1) throw DomainError("path lengths must be positive");
    if (pi == 1) ++unit_paths;
  }
  if (unit_paths > 1) throw DomainError("at most one of the four paths may be a single edge");

  // Paths alternate direction: P1, P3 run a -> b; P2, P4 run b -> a.
  // Interior vertices are numbered consecutively along each path.
  int next = 0;
  std::array<std::vector<VertexId>, 4> path;
  for (int i = 0; i < 4; ++i) {
    path[i].push_back(i % 2 == 0 ? "a" : "b");
    for (int j = 0; j < p[i] - 1; ++j) path[i].push_back("v" + std::to_string(next++));
    path[i].push_back(i % 2 == 0 ? "b" : "a");
  }

  // Each disk boundary is one a->b path followed by the interior of one
  // b->a path.
  auto disk = [&](int fwd, int back) {
    std::vector<VertexId> cycle(path[fwd].begin(), path[fwd].end() - 1);
    cycle.insert(cycle.end(), path[back].begin(), path[back].end() - 1);
    return cycle;
  };
  const std::vector<std::vector<VertexId>> cycles = {disk(0, 1), disk(2, 1),
                                                     disk(2, 3), disk(0, 3)};
  return triangulate_eulerian(cycles, {"v12", "v23", "v34", "v14"});
}

namespace {

Gadget::Variant make_variant(const SurfaceComplex& c, const ZigzagSet& zs,
                             ZOrientation tau, const VertexId& v1, const VertexId& v2,
                             const VertexId& v3) {
  EdgeTyping typing = edge_types(c, zs, tau);
  auto pair = find_special_pair(c, typing, v1, v2, v3);
  if (!pair)
    throw CatalogError("special pair (" + v1 + "," + v2 + "," + v3 + ") not found");
  Perm4 mp = z_monodromy(c, typing, *pair);
  return {std::move(tau), std::move(typing), std::move(*pair), mp};
}

Gadget make_gadget(std::string name, SurfaceComplex c, ZOrientation tau,
                   const VertexId& v1, const VertexId& v2, const VertexId& v3,
                   MonodromyClass expected) {
  ZigzagSet zs = enumerate_zigzags(c);
  Gadget::Variant fwd = make_variant(c, zs, tau, v1, v2, v3);
  Gadget::Variant bwd = make_variant(c, zs, fwd.tau.reversed(), v3, v2, v1);

  auto fail = [&](const std::string& what) {
    throw CatalogError("gadget '" + name + "': " + what);
  };
  if (c.euler_characteristic() != 2) fail("not a sphere");
  if (!is_z_homogeneous(c, zs, fwd.tau)) fail("orientation is not z-homogeneous");
  if (classify(fwd.monodromy) != expected || classify(bwd.monodromy) != expected)
    fail("monodromy class mismatch: got " + to_string(classify(fwd.monodromy)) +
         ", expected " + to_string(expected));
  if (!is_essential(c, zs, fwd.tau, fwd.typing, fwd.pair)) fail("pair is not essential");
  if (c.has_edge(Edge(v1, v3))) fail("pair endpoints are adjacent");

  return Gadget{std::move(name), std::move(c), std::move(zs), expected,
                std::move(fwd), std::move(bwd)};
}

Gadget make_bipyramid_gadget(int n, MonodromyClass expected) {
  SurfaceComplex c = bipyramid(n);
  ZigzagSet zs = enumerate_zigzags(c);
  ZOrientation tau = bipyramid_orientation(c, zs);
  return make_gadget("bp" + std::to_string(n), std::move(c), std::move(tau),
                     "v1", "v2", "v3", expected);
}

}  // namespace

const std::vector<Gadget>& gadget_catalog() {
  static const std::vector<Gadget> catalog = [] {
    std::vector<Gadget> out;
    out.push_back(make_bipyramid_gadget(6, MonodromyClass::K0));
    out.push_back(make_bipyramid_gadget(5, MonodromyClass::K1));
    out.push_back(make_bipyramid_gadget(4, MonodromyClass::K2));
    out.push_back(make_bipyramid_gadget(7, MonodromyClass::K3));

    auto [g2345, tau2345] = gamma(2, 3, 4, 5);
    out.push_back(make_gadget("g2345-k4", g2345, tau2345, "v0", "b", "v1", MonodromyClass::K4));
    out.push_back(make_gadget("g2345-k5", g2345, tau2345, "a", "v0", "b", MonodromyClass::K5));
    out.push_back(make_gadget("g2345-k11", g2345, tau2345, "b", "v6", "v7", MonodromyClass::K11));
    out.push_back(make_gadget("g2345-k12", g2345, tau2345, "b", "v1", "v2", MonodromyClass::K12));

    auto [g2434, tau2434] = gamma(2, 4, 3, 4);
    out.push_back(make_gadget("g2434-k6", g2434, tau2434, "v0", "b", "v1", MonodromyClass::K6));
    out.push_back(make_gadget("g2434-k9", g2434, tau2434, "b", "v1", "v2", MonodromyClass::K9));
    out.push_back(make_gadget("g2434-k10", g2434, tau2434, "v1", "v2", "v3", MonodromyClass::K10));
    return out;
  }();
  return catalog;
}

}  // namespace zigzag
