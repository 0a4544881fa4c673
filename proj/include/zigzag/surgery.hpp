#pragma once

#include <array>

#include "zigzag/engine.hpp"
#include "zigzag/monodromy.hpp"
#include "zigzag/perm4.hpp"
#include "zigzag/surface.hpp"

namespace zigzag {

/// Result of splitting a special pair open: the middle vertex and both pair
/// edges are doubled and a 4-gonal face closes the cut. All other faces are
/// unchanged triangles.
struct OpenedComplex {
  SurfaceComplex complex;
  VertexId v2_plus;
  VertexId v2_minus;
  /// labels[k-1] is the directed split edge with label k (e+1, e+2, e-1, e-2).
  std::array<DirectedEdge, 4> labels;
  int hole_face = -1;  // index of the 4-gon in complex.faces()
};

OpenedComplex open_pair(const SurfaceComplex& c, const SpecialPair& p);

/// The two boundary identifications of a pair of 4-gon holes that send
/// labelled directed edges to labelled directed edges.
enum class GlueKind { direct, swap };

/// Label permutation realized by a gluing: identity for direct, (13)(24) for
/// swap.
const Perm4& glue_perm(GlueKind g);

/// True iff at least one pair has non-adjacent endpoints, which rules out
/// multi-edges in the glued complex.
bool check_star(const SurfaceComplex& ca, const SpecialPair& pa,
                const SurfaceComplex& cb, const SpecialPair& pb);

struct SumResult {
  SurfaceComplex complex;
  ZigzagSet zigzags;
  ZOrientation tau;
  EdgeTyping typing;
  /// The four glued split edges in the result, in label order of side A.
  std::array<Edge, 4> seam;
};

/// Connected sum along two special pairs. Vertices of `cb` are renamed with
/// a deterministic suffix before gluing. The returned orientation is the one
/// under which every surviving edge keeps its type and direction; failure to
/// reconstruct it is a GlueError.
SumResult connected_sum(const SurfaceComplex& ca, const EdgeTyping& ta,
                        const SpecialPair& pa, const SurfaceComplex& cb,
                        const EdgeTyping& tb, const SpecialPair& pb, GlueKind g);

/// Number of zigzag pairs through the glued edges of a prospective sum:
/// cycle count of g^-1 * M_Pb * g * M_Pa.
int predicted_merge_count(const Perm4& mpa, const Perm4& mpb, GlueKind g);

}  // namespace zigzag
