#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zigzag/engine.hpp"
#include "zigzag/monodromy.hpp"
#include "zigzag/perm4.hpp"
#include "zigzag/surface.hpp"

namespace zigzag {

/// n-gonal bipyramid: base cycle v1..vn plus apexes a and b.
SurfaceComplex bipyramid(int n);

/// Canonical z-homogeneous orientation of a bipyramid, chosen so the base is
/// directed v1 -> v2 -> ... -> vn.
ZOrientation bipyramid_orientation(const SurfaceComplex& bp, const ZigzagSet& zs);

/// Cones an apex into each face of an embedded Eulerian digraph whose faces
/// are directed cycles, and returns the unique z-orientation whose type-II
/// edges are exactly the input edges with their directions. `apex_names`
/// optionally names the added vertices, one per cycle.
std::pair<SurfaceComplex, ZOrientation> triangulate_eulerian(
    const std::vector<std::vector<VertexId>>& cycles,
    const std::vector<VertexId>& apex_names = {});

/// Spherical triangulation with two poles a, b joined by four paths of
/// p1..p4 edges, apexes coned into the four disks. Vertex naming: interior
/// path vertices v0, v1, ... numbered along each path in its direction
/// (paths alternate a->b, b->a), apexes v12, v23, v34, v14.
std::pair<SurfaceComplex, ZOrientation> gamma(int p1, int p2, int p3, int p4);

/// A verified building block for the knotting procedure: a spherical
/// z-homogeneous triangulation with an essential special pair whose
/// endpoints are non-adjacent. Both the canonical orientation and its
/// reversal are precomputed since gluing may use either.
struct Gadget {
  std::string name;
  SurfaceComplex complex;
  ZigzagSet zigzags;
  MonodromyClass cls;

  struct Variant {
    ZOrientation tau;
    EdgeTyping typing;
    SpecialPair pair;
    Perm4 monodromy;
  };
  Variant forward;   // pair as named in the catalog
  Variant backward;  // reversed orientation, pair reversed

  const Variant& variant(bool reversed) const { return reversed ? backward : forward; }
};

/// The verified catalog covering classes K_0..K_6 and K_9..K_12.
const std::vector<Gadget>& gadget_catalog();

}  // namespace zigzag
