#pragma once

#include <string>
#include <vector>

#include "zigzag/gadgets.hpp"
#include "zigzag/surgery.hpp"

namespace zigzag {

struct KnotStep {
  VertexId v1, v2, v3;        // host pair glued at this step
  Perm4 monodromy;            // raw M_P of the host pair
  MonodromyClass cls;
  std::string gadget;
  VertexId g1, g2, g3;        // gadget pair as used
  GlueKind glue = GlueKind::direct;
  bool gadget_tau_reversed = false;
  int zigzags_before = 0;
  int zigzags_after = 0;
};

struct ComplexSummary {
  std::size_t vertices = 0, edges = 0, faces = 0;
  int euler = 0;
  std::size_t zigzag_pairs = 0;
  bool homogeneous = false;
};

struct KnottingTrace {
  ComplexSummary initial;
  ComplexSummary final;
  std::vector<KnotStep> steps;
};

struct KnotResult {
  SurfaceComplex complex;
  ZigzagSet zigzags;
  ZOrientation tau;
  KnottingTrace trace;
};

/// First special pair (in canonical order) crossed by at least two zigzags.
SpecialPair select_pair(const SurfaceComplex& c, const ZigzagSet& zs,
                        const ZOrientation& tau, const EdgeTyping& typing);

struct GadgetChoice {
  const Gadget* gadget = nullptr;
  GlueKind glue = GlueKind::direct;
  bool tau_reversed = false;
};

/// First catalog entry (x gluing x orientation flag) whose composition with
/// the given monodromy is a 4-cycle, so that gluing merges all zigzags
/// through the pair into one.
GadgetChoice select_gadget(const Perm4& mp);

/// Repeatedly glues spherical gadgets at special pairs until the complex is
/// z-knotted; preserves the surface and z-homogeneity.
KnotResult knot(const SurfaceComplex& c, const ZOrientation& tau);

}  // namespace zigzag
