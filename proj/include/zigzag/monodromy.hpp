#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zigzag/engine.hpp"
#include "zigzag/perm4.hpp"
#include "zigzag/surface.hpp"

namespace zigzag {

/// A directed two-edge path v1 -> v2 -> v3 in the type-II subgraph, together
/// with its side decomposition at v2. The two pair edges split the rotation
/// at v2 into two arcs of faces; the arc following e1 in the stored rotation
/// is the + side. side_face holds (F+1, F+2, F-1, F-2): F(d,i) contains e_i
/// and lies on side d.
struct SpecialPair {
  VertexId v1, v2, v3;
  std::array<int, 4> side_face{-1, -1, -1, -1};
  std::vector<int> plus_faces;   // the full + arc, from e1 to e2
  std::vector<int> minus_faces;  // the full - arc, from e2 to e1

  DirectedEdge e1() const { return {v1, v2}; }
  DirectedEdge e2() const { return {v2, v3}; }
  /// Label -> (directed edge, side face); labels 1..4 are e+1, e+2, e-1, e-2.
  DirectedEdge edge_of_label(int label) const;
  int face_of_label(int label) const { return side_face[label - 1]; }
};

std::vector<SpecialPair> find_special_pairs(const SurfaceComplex& c,
                                            const EdgeTyping& typing);

std::optional<SpecialPair> find_special_pair(const SurfaceComplex& c,
                                             const EdgeTyping& typing,
                                             const VertexId& v1, const VertexId& v2,
                                             const VertexId& v3);

/// First-return permutation of the four split edges of P under zigzag
/// traversal, computed by walking the zigzags of the complex itself.
Perm4 z_monodromy(const SurfaceComplex& c, const EdgeTyping& typing,
                  const SpecialPair& p);

/// Number of zigzag pairs of tau traversing e1 or e2; computed from the
/// monodromy and cross-checked against direct counting.
int zigzags_through_pair(const SurfaceComplex& c, const ZigzagSet& zs,
                         const ZOrientation& tau, const EdgeTyping& typing,
                         const SpecialPair& p);

bool is_essential(const SurfaceComplex& c, const ZigzagSet& zs,
                  const ZOrientation& tau, const EdgeTyping& typing,
                  const SpecialPair& p);

}  // namespace zigzag
