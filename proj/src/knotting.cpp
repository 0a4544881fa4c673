#include "zigzag/knotting.hpp"

#include <utility>

namespace zigzag {

namespace {

ComplexSummary summarize(const SurfaceComplex& c, const ZigzagSet& zs,
                         const ZOrientation& tau) {
  return {c.vertices().size(), c.edges().size(), c.face_count(),
          c.euler_characteristic(), zs.count(), is_z_homogeneous(c, zs, tau)};
}

}  // namespace

SpecialPair select_pair(const SurfaceComplex& c, const ZigzagSet& zs,
                        const ZOrientation& tau, const EdgeTyping& typing) {
  for (const SpecialPair& p : find_special_pairs(c, typing))
    if (zigzags_through_pair(c, zs, tau, typing, p) >= 2) return p;
  throw SelectionError("no special pair is crossed by more than one zigzag");
}

GadgetChoice select_gadget(const Perm4& mp) {
  for (const Gadget& g : gadget_catalog())
    for (bool rev : {false, true})
      for (GlueKind glue : {GlueKind::direct, GlueKind::swap})
        if (predicted_merge_count(mp, g.variant(rev).monodromy, glue) == 1)
          return {&g, glue, rev};
  throw GadgetSearchError("no catalog gadget merges the zigzags through this pair");
}

KnotResult knot(const SurfaceComplex& c, const ZOrientation& tau) {
  SurfaceComplex cur = c;
  ZigzagSet zs = enumerate_zigzags(cur);
  ZOrientation t = tau;
  if (!is_z_homogeneous(cur, zs, t))
    throw StructureError("knotting requires a z-homogeneous orientation");

  KnottingTrace trace;
  trace.initial = summarize(cur, zs, t);
  const int euler = cur.euler_characteristic();
  const bool orient = cur.orientable();

  std::size_t guard = 4 * cur.edges().size() + 8;
  while (zs.count() > 1) {
    if (trace.steps.size() >= guard)
      throw LoopGuard("knotting did not terminate within the step budget");

    EdgeTyping typing = edge_types(cur, zs, t);
    SpecialPair p = select_pair(cur, zs, t, typing);
    Perm4 mp = z_monodromy(cur, typing, p);
    GadgetChoice choice = select_gadget(mp);
    const Gadget::Variant& gv = choice.gadget->variant(choice.tau_reversed);

    KnotStep step{p.v1,
                  p.v2,
                  p.v3,
                  mp,
                  classify(mp),
                  choice.gadget->name,
                  gv.pair.v1,
                  gv.pair.v2,
                  gv.pair.v3,
                  choice.glue,
                  choice.tau_reversed,
                  static_cast<int>(zs.count()),
                  0};

    SumResult sum = connected_sum(cur, typing, p, choice.gadget->complex,
                                  gv.typing, gv.pair, choice.glue);
    if (sum.complex.euler_characteristic() != euler ||
        sum.complex.orientable() != orient)
      throw GlueError("gluing changed the underlying surface");
    if (sum.zigzags.count() >= zs.count())
      throw LoopGuard("gluing did not reduce the number of zigzags");

    step.zigzags_after = static_cast<int>(sum.zigzags.count());
    trace.steps.push_back(std::move(step));
    cur = std::move(sum.complex);
    zs = std::move(sum.zigzags);
    t = std::move(sum.tau);
  }

  trace.final = summarize(cur, zs, t);
  return {std::move(cur), std::move(zs), std::move(t), std::move(trace)};
}

}  // namespace zigzag
