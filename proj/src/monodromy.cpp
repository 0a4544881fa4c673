#include "zigzag/monodromy.hpp"

#include <algorithm>

namespace zigzag {

DirectedEdge SpecialPair::edge_of_label(int label) const {
  switch (label) {
    case 1:
    case 3:
      return e1();
    case 2:
    case 4:
      return e2();
    default:
      throw DomainError("label out of range");
  }
}

namespace {

SpecialPair make_pair(const SurfaceComplex& c, const VertexId& v1, const VertexId& v2,
                      const VertexId& v3) {
  SpecialPair p;
  p.v1 = v1;
  p.v2 = v2;
  p.v3 = v3;

  const VertexRotation& rot = c.rotation(v2);
  const std::size_t d = rot.degree();
  const Edge e1(v1, v2), e2(v2, v3);
  std::size_t i1 = std::find(rot.edges.begin(), rot.edges.end(), e1) - rot.edges.begin();
  std::size_t i2 = std::find(rot.edges.begin(), rot.edges.end(), e2) - rot.edges.begin();
  if (i1 == d || i2 == d)
    throw IncidenceError("pair edges not incident to middle vertex '" + v2 + "'");

  // + side: faces strictly between e1 and e2 following the stored rotation;
  // - side: the remaining arc, from e2 back to e1.
  for (std::size_t i = i1; i != i2; i = (i + 1) % d) p.plus_faces.push_back(rot.faces[i]);
  for (std::size_t i = i2; i != i1; i = (i + 1) % d) p.minus_faces.push_back(rot.faces[i]);

  if (p.plus_faces.size() < 2 || p.minus_faces.size() < 2)
    throw StructureError("pair side arc with a single face; face would contain both pair edges");

  p.side_face = {p.plus_faces.front(), p.plus_faces.back(), p.minus_faces.back(),
                 p.minus_faces.front()};
  // Four side faces must be pairwise distinct.
  auto sf = p.side_face;
  std::sort(sf.begin(), sf.end());
  if (std::adjacent_find(sf.begin(), sf.end()) != sf.end())
    throw StructureError("side faces of special pair are not pairwise distinct");
  return p;
}

}  // namespace

std::vector<SpecialPair> find_special_pairs(const SurfaceComplex& c,
                                            const EdgeTyping& typing) {
  // Outgoing type-II edges per vertex, in deterministic (map) order.
  std::map<VertexId, std::vector<VertexId>> outgoing, incoming;
  for (const auto& [e, d] : typing.direction) {
    outgoing[d.tail].push_back(d.head);
    incoming[d.head].push_back(d.tail);
  }
  std::vector<SpecialPair> out;
  for (auto& [v2, heads] : outgoing) {
    std::sort(heads.begin(), heads.end());
    auto& tails = incoming[v2];
    std::sort(tails.begin(), tails.end());
    for (const VertexId& v1 : tails)
      for (const VertexId& v3 : heads) out.push_back(make_pair(c, v1, v2, v3));
  }
  std::sort(out.begin(), out.end(), [](const SpecialPair& x, const SpecialPair& y) {
    return std::tie(x.v1, x.v2, x.v3) < std::tie(y.v1, y.v2, y.v3);
  });
  return out;
}

std::optional<SpecialPair> find_special_pair(const SurfaceComplex& c,
                                             const EdgeTyping& typing,
                                             const VertexId& v1, const VertexId& v2,
                                             const VertexId& v3) {
  auto dir = [&](const VertexId& a, const VertexId& b) {
    auto it = typing.direction.find(Edge(a, b));
    return it != typing.direction.end() && it->second == DirectedEdge{a, b};
  };
  if (!c.has_edge(Edge(v1, v2)) || !c.has_edge(Edge(v2, v3))) return std::nullopt;
  if (!dir(v1, v2) || !dir(v2, v3)) return std::nullopt;
  return make_pair(c, v1, v2, v3);
}

Perm4 z_monodromy(const SurfaceComplex& c, const EdgeTyping& typing,
                  const SpecialPair& p) {
  // Sanity: the pair must run along tau-directions.
  for (const DirectedEdge& d : {p.e1(), p.e2()}) {
    auto it = typing.direction.find(Edge(d));
    if (it == typing.direction.end() || it->second != d)
      throw MonodromyError("pair edge " + to_string(d) + " is not a tau-directed type-II edge");
  }

  const std::size_t limit = 4 * c.edge_count() + 1;
  std::array<int, 4> images{};
  for (int label = 1; label <= 4; ++label) {
    ZigzagState s{p.edge_of_label(label), p.face_of_label(label)};
    int image = 0;
    for (std::size_t step = 0; step < limit; ++step) {
      const int entered_through = s.face;
      s = zigzag_step(c, s);
      const Edge under(s.edge);
      int j = 0;
      if (under == Edge(p.e1()))
        j = 1;
      else if (under == Edge(p.e2()))
        j = 2;
      else
        continue;
      if (s.edge != p.edge_of_label(j))
        throw MonodromyError("zigzag met pair edge " + to_string(under) +
                             " against its tau-direction");
      // The side of arrival is read off the face through which the zigzag
      // entered the edge.
      if (entered_through == p.face_of_label(j))
        image = j;  // + side
      else if (entered_through == p.face_of_label(j + 2))
        image = j + 2;  // - side
      else
        throw MonodromyError("zigzag arrived at a pair edge through a non-side face");
      break;
    }
    if (image == 0)
      throw MonodromyError("zigzag traversal did not return to the pair");
    images[label - 1] = image;
  }

  try {
    return Perm4::from_images(images);
  } catch (const std::invalid_argument&) {
    throw MonodromyError("z-monodromy is not a bijection");
  }
}

int zigzags_through_pair(const SurfaceComplex& c, const ZigzagSet& zs,
                         const ZOrientation& tau, const EdgeTyping& typing,
                         const SpecialPair& p) {
  const Perm4 mp = z_monodromy(c, typing, p);
  const int predicted = (side_swap_perm() * mp).cycle_count();

  int direct = 0;
  for (const Zigzag* z : selected_zigzags(zs, tau))
    if (z->traverses(Edge(p.e1())) || z->traverses(Edge(p.e2()))) ++direct;

  if (direct != predicted)
    throw MonodromyError("zigzag count through pair disagrees with monodromy: " +
                         std::to_string(direct) + " vs " + std::to_string(predicted));
  return predicted;
}

bool is_essential(const SurfaceComplex& c, const ZigzagSet& zs,
                  const ZOrientation& tau, const EdgeTyping& typing,
                  const SpecialPair& p) {
  return zigzags_through_pair(c, zs, tau, typing, p) ==
         static_cast<int>(zs.count());
}

}  // namespace zigzag
