#include "zigzag/surgery.hpp"

#include <algorithm>
#include <set>

namespace zigzag {

namespace {

struct SplitFaces {
  VertexId v2_plus;
  VertexId v2_minus;
  std::vector<Face> faces;  // all faces of c with the middle vertex renamed
};

VertexId fresh_name(VertexId base, const std::set<VertexId>& taken) {
  while (taken.contains(base)) base += "'";
  return base;
}

SplitFaces split_pair(const SurfaceComplex& c, const SpecialPair& p) {
  std::set<VertexId> taken(c.vertices().begin(), c.vertices().end());
  SplitFaces out;
  out.v2_plus = fresh_name(p.v2 + "+", taken);
  taken.insert(out.v2_plus);
  out.v2_minus = fresh_name(p.v2 + "-", taken);

  const std::set<int> plus(p.plus_faces.begin(), p.plus_faces.end());
  const std::set<int> minus(p.minus_faces.begin(), p.minus_faces.end());
  for (std::size_t fi = 0; fi < c.face_count(); ++fi) {
    std::vector<VertexId> bd = c.faces()[fi].boundary();
    for (VertexId& v : bd) {
      if (v != p.v2) continue;
      if (plus.contains(static_cast<int>(fi)))
        v = out.v2_plus;
      else if (minus.contains(static_cast<int>(fi)))
        v = out.v2_minus;
      else
        throw StructureError("face at the middle vertex belongs to neither side arc");
    }
    out.faces.emplace_back(std::move(bd));
  }
  return out;
}

std::array<DirectedEdge, 4> split_labels(const SpecialPair& p, const SplitFaces& sf) {
  return {DirectedEdge{p.v1, sf.v2_plus}, DirectedEdge{sf.v2_plus, p.v3},
          DirectedEdge{p.v1, sf.v2_minus}, DirectedEdge{sf.v2_minus, p.v3}};
}

}  // namespace

OpenedComplex open_pair(const SurfaceComplex& c, const SpecialPair& p) {
  SplitFaces sf = split_pair(c, p);
  const Face hole({p.v1, sf.v2_plus, p.v3, sf.v2_minus});
  sf.faces.push_back(hole);
  OpenedComplex out{SurfaceComplex(std::move(sf.faces)), sf.v2_plus, sf.v2_minus,
                    split_labels(p, sf), -1};
  const auto& faces = out.complex.faces();
  out.hole_face = static_cast<int>(
      std::lower_bound(faces.begin(), faces.end(), hole) - faces.begin());
  return out;
}

const Perm4& glue_perm(GlueKind g) {
  static const Perm4 id = Perm4::identity();
  return g == GlueKind::direct ? id : side_swap_perm();
}

bool check_star(const SurfaceComplex& ca, const SpecialPair& pa,
                const SurfaceComplex& cb, const SpecialPair& pb) {
  return !ca.has_edge(Edge(pa.v1, pa.v3)) || !cb.has_edge(Edge(pb.v1, pb.v3));
}

int predicted_merge_count(const Perm4& mpa, const Perm4& mpb, GlueKind g) {
  const Perm4& gp = glue_perm(g);
  return (gp.inverse() * mpb * gp * mpa).cycle_count();
}

SumResult connected_sum(const SurfaceComplex& ca, const EdgeTyping& ta,
                        const SpecialPair& pa, const SurfaceComplex& cb,
                        const EdgeTyping& tb, const SpecialPair& pb, GlueKind g) {
  if (!check_star(ca, pa, cb, pb))
    throw StarViolation("both special pairs close into 3-cycles; gluing would create a multi-edge");

  const SplitFaces sa = split_pair(ca, pa);
  const SplitFaces sb = split_pair(cb, pb);

  // Rename the glued-in complex: boundary vertices map onto their images on
  // side A, all others get a deterministic fresh suffix.
  std::set<VertexId> a_names(ca.vertices().begin(), ca.vertices().end());
  a_names.insert(sa.v2_plus);
  a_names.insert(sa.v2_minus);

  std::map<VertexId, VertexId> rename;
  rename[pb.v1] = pa.v1;
  rename[pb.v3] = pa.v3;
  rename[sb.v2_plus] = g == GlueKind::direct ? sa.v2_plus : sa.v2_minus;
  rename[sb.v2_minus] = g == GlueKind::direct ? sa.v2_minus : sa.v2_plus;

  std::vector<VertexId> interior;
  for (const VertexId& v : cb.vertices())
    if (v != pb.v1 && v != pb.v2 && v != pb.v3) interior.push_back(v);
  int suffix = 0;
  bool clean = false;
  while (!clean) {
    ++suffix;
    clean = true;
    for (const VertexId& v : interior)
      if (a_names.contains(v + "#" + std::to_string(suffix))) {
        clean = false;
        break;
      }
  }
  for (const VertexId& v : interior) rename[v] = v + "#" + std::to_string(suffix);

  auto renamed = [&](const VertexId& v) {
    auto it = rename.find(v);
    return it == rename.end() ? v : it->second;
  };

  std::vector<Face> faces = sa.faces;
  for (const Face& f : sb.faces) {
    std::vector<VertexId> bd;
    for (const VertexId& v : f.boundary()) bd.push_back(renamed(v));
    faces.emplace_back(std::move(bd));
  }
  SurfaceComplex sum(std::move(faces));

  // Expected typing of the sum: every edge keeps the type and direction it
  // carried on its side, with split edges type II along the split.
  std::map<Edge, std::optional<DirectedEdge>> expected;
  auto record = [&](const Edge& renamed_edge, const Edge& original,
                    const EdgeTyping& typing, const auto& rename_fn) {
    std::optional<DirectedEdge> want;
    auto it = typing.direction.find(original);
    if (it != typing.direction.end())
      want = DirectedEdge{rename_fn(it->second.tail), rename_fn(it->second.head)};
    auto [slot, inserted] = expected.emplace(renamed_edge, want);
    if (!inserted && slot->second != want)
      throw GlueError("edge " + to_string(renamed_edge) +
                      " inherits conflicting types from the two sides");
  };
  auto unsplit_a = [&](const VertexId& v) {
    return (v == sa.v2_plus || v == sa.v2_minus) ? pa.v2 : v;
  };
  for (const Face& f : sa.faces)
    for (const Edge& e : f.edges()) {
      // Directions inherited from side A: the original middle vertex maps to
      // whichever split copy this edge uses.
      auto fn = [&](const VertexId& v) {
        if (v != pa.v2) return v;
        return e.touches(sa.v2_plus) ? sa.v2_plus : sa.v2_minus;
      };
      record(e, Edge(unsplit_a(e.a), unsplit_a(e.b)), ta, fn);
    }

  std::map<VertexId, VertexId> back_b;  // renamed vertex -> original b vertex
  for (const VertexId& v : cb.vertices())
    if (v != pb.v2) back_b[renamed(v)] = v;
  back_b[renamed(sb.v2_plus)] = pb.v2;
  back_b[renamed(sb.v2_minus)] = pb.v2;
  std::map<VertexId, VertexId> fwd_b;  // original b vertex -> renamed; pb.v2 ambiguous
  for (const auto& [post, pre] : back_b)
    if (pre != pb.v2) fwd_b[pre] = post;
  for (const Face& f : sb.faces) {
    std::vector<VertexId> bd;
    for (const VertexId& v : f.boundary()) bd.push_back(renamed(v));
    const Face rf(bd);
    for (const Edge& e : rf.edges()) {
      const Edge original(back_b.at(e.a), back_b.at(e.b));
      // Directions of b-side edges: map endpoints forward; split endpoints
      // are recovered from the renamed edge itself.
      auto fn = [&](const VertexId& v) {
        if (v == pb.v2) return e.a == renamed(sb.v2_plus) || e.b == renamed(sb.v2_plus)
                                   ? renamed(sb.v2_plus)
                                   : renamed(sb.v2_minus);
        return fwd_b.at(v);
      };
      record(e, original, tb, fn);
    }
  }

  // Reconstruct the z-orientation: per zigzag pair, exactly one member must
  // traverse every inherited type-II edge in its inherited direction.
  ZigzagSet zs = enumerate_zigzags(sum);
  ZOrientation tau(zs.count());
  for (std::size_t i = 0; i < zs.count(); ++i) {
    auto consistent = [&](const Zigzag& z) {
      for (const DirectedEdge& d : z.edges()) {
        const auto& want = expected.at(Edge(d));
        if (want && *want != d) return false;
      }
      return true;
    };
    const bool fwd_ok = consistent(zs.pairs()[i].fwd);
    const bool rev_ok = consistent(zs.pairs()[i].rev);
    if (fwd_ok == rev_ok)
      throw GlueError(fwd_ok ? "zigzag orientation underdetermined after gluing"
                             : "no orientation of a zigzag matches the inherited edge directions");
    tau.bits[i] = rev_ok;
  }

  EdgeTyping typing = edge_types(sum, zs, tau);
  for (const Edge& e : sum.edges()) {
    const auto& want = expected.at(e);
    const bool is_two = typing.is_type_two(e);
    if (want.has_value() != is_two ||
        (want && typing.direction.at(e) != *want))
      throw GlueError("edge " + to_string(e) + " changed type or direction in the sum");
  }
  if (!is_z_homogeneous(sum, zs, tau))
    throw GlueError("glued complex is not z-homogeneous");

  const auto labels = split_labels(pa, sa);
  SumResult out{std::move(sum), std::move(zs), std::move(tau), std::move(typing),
                {Edge(labels[0]), Edge(labels[1]), Edge(labels[2]), Edge(labels[3])}};
  return out;
}

}  // namespace zigzag
