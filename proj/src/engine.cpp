#include "zigzag/engine.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace zigzag {

ZigzagState zigzag_step(const SurfaceComplex& c, const ZigzagState& s) {
  const Face& f = c.faces()[s.face];
  const auto& bd = f.boundary();
  const std::size_t n = bd.size();
  // Read the boundary in the direction in which tail immediately precedes
  // head; the next boundary edge continues the zigzag.
  std::size_t j = std::find(bd.begin(), bd.end(), s.edge.head) - bd.begin();
  if (j == n)
    throw IncidenceError("state face does not contain edge head '" + s.edge.head + "'");
  VertexId next;
  if (bd[(j + n - 1) % n] == s.edge.tail)
    next = bd[(j + 1) % n];
  else if (bd[(j + 1) % n] == s.edge.tail)
    next = bd[(j + n - 1) % n];
  else
    throw IncidenceError("state face does not contain edge " + to_string(s.edge));
  DirectedEdge e{s.edge.head, next};
  return {e, c.other_face(Edge(e), s.face)};
}

namespace {

std::vector<DirectedEdge> minimal_rotation(std::vector<DirectedEdge> seq) {
  const std::size_t n = seq.size();
  std::vector<DirectedEdge> best = seq;
  for (std::size_t start = 1; start < n; ++start) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    if (seq < best) best = seq;
  }
  return best;
}

}  // namespace

Zigzag::Zigzag(std::vector<ZigzagState> states) : states_(std::move(states)) {
  key_ = minimal_rotation(edges());
}

std::vector<DirectedEdge> Zigzag::edges() const {
  std::vector<DirectedEdge> out;
  out.reserve(states_.size());
  for (const ZigzagState& s : states_) out.push_back(s.edge);
  return out;
}

bool Zigzag::traverses(const Edge& e) const {
  for (const ZigzagState& s : states_)
    if (Edge(s.edge) == e) return true;
  return false;
}

ZigzagSet enumerate_zigzags(const SurfaceComplex& c) {
  std::set<ZigzagState> visited;
  std::vector<ZigzagPair> pairs;

  auto orbit_from = [&](const ZigzagState& seed) {
    std::vector<ZigzagState> orbit;
    ZigzagState s = seed;
    do {
      orbit.push_back(s);
      visited.insert(s);
      s = zigzag_step(c, s);
    } while (s != seed);
    return orbit;
  };

  // Seed states in deterministic order: edges sorted, both directions, both
  // faces.
  for (const Edge& e : c.edges()) {
    for (const DirectedEdge& d : {DirectedEdge{e.a, e.b}, DirectedEdge{e.b, e.a}}) {
      auto fs = c.faces_of(e);
      std::sort(fs.begin(), fs.end());
      for (int fi : fs) {
        ZigzagState seed{d, fi};
        if (visited.contains(seed)) continue;
        Zigzag fwd(orbit_from(seed));

        // The reversal orbit: if seed steps to (e1, f1), the reversed zigzag
        // traverses -e1 and then continues through the seed face.
        ZigzagState after = zigzag_step(c, seed);
        ZigzagState rseed{after.edge.reversed(), seed.face};
        if (visited.contains(rseed))
          throw StructureError("zigzag reversal already consumed; orbit pairing broken");
        Zigzag rev(orbit_from(rseed));

        if (fwd.key() == rev.key())
          throw StructureError("self-reversed zigzag found; this cannot happen");
        if (rev.key() < fwd.key()) std::swap(fwd, rev);
        pairs.push_back(ZigzagPair{std::move(fwd), std::move(rev)});
      }
    }
  }

  std::sort(pairs.begin(), pairs.end(),
            [](const ZigzagPair& x, const ZigzagPair& y) { return x.key() < y.key(); });
  return ZigzagSet(std::move(pairs));
}

bool is_z_knotted(const SurfaceComplex& c) { return enumerate_zigzags(c).count() == 1; }

ZOrientation ZOrientation::reversed() const {
  ZOrientation out = *this;
  for (auto& b : out.bits) b ^= 1;
  return out;
}

std::string ZOrientation::to_bitstring() const {
  std::string s;
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

ZOrientation ZOrientation::from_bitstring(const std::string& s) {
  ZOrientation tau;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ParseError("tau bits must be 0 or 1");
    tau.bits.push_back(ch == '1');
  }
  return tau;
}

const Zigzag& representative(const ZigzagPair& p, bool reversed) {
  return reversed ? p.rev : p.fwd;
}

std::vector<const Zigzag*> selected_zigzags(const ZigzagSet& zs, const ZOrientation& tau) {
  if (tau.bits.size() != zs.count())
    throw DomainError("orientation has " + std::to_string(tau.bits.size()) +
                      " bits for " + std::to_string(zs.count()) + " zigzag pairs");
  std::vector<const Zigzag*> out;
  out.reserve(zs.count());
  for (std::size_t i = 0; i < zs.count(); ++i)
    out.push_back(&representative(zs.pairs()[i], tau.bits[i]));
  return out;
}

std::size_t EdgeTyping::count(EdgeType t) const {
  std::size_t n = 0;
  for (const auto& [e, et] : type)
    if (et == t) ++n;
  return n;
}

EdgeTyping edge_types(const SurfaceComplex& c, const ZigzagSet& zs, const ZOrientation& tau) {
  std::map<Edge, std::vector<DirectedEdge>> traversals;
  for (const Zigzag* z : selected_zigzags(zs, tau))
    for (const DirectedEdge& d : z->edges()) traversals[Edge(d)].push_back(d);

  EdgeTyping typing;
  for (const Edge& e : c.edges()) {
    const auto it = traversals.find(e);
    if (it == traversals.end() || it->second.size() != 2)
      throw StructureError("edge " + to_string(e) +
                           " is not double-covered by the z-orientation");
    const auto& [d1, d2] = std::pair(it->second[0], it->second[1]);
    if (d1 == d2) {
      typing.type[e] = EdgeType::II;
      typing.direction[e] = d1;
    } else {
      typing.type[e] = EdgeType::I;
    }
  }
  return typing;
}

std::vector<FaceType> face_types(const SurfaceComplex& c, const EdgeTyping& typing) {
  std::vector<FaceType> out;
  out.reserve(c.face_count());
  for (const Face& f : c.faces()) {
    if (f.size() != 3)
      throw DomainError("face types are defined for triangulations only");
    std::vector<Edge> two;
    for (const Edge& e : f.edges())
      if (typing.is_type_two(e)) two.push_back(e);
    if (two.size() == 1) {
      out.push_back(FaceType::I);
    } else if (two.size() == 3) {
      // The three directed edges must form a directed cycle: every face
      // vertex has one incoming and one outgoing edge.
      std::map<VertexId, int> out_deg, in_deg;
      for (const Edge& e : two) {
        const DirectedEdge& d = typing.direction.at(e);
        ++out_deg[d.tail];
        ++in_deg[d.head];
      }
      for (const VertexId& v : f.boundary())
        if (out_deg[v] != 1 || in_deg[v] != 1)
          throw StructureError("type-II edges of a face do not form a directed cycle");
      out.push_back(FaceType::II);
    } else {
      throw StructureError("face with " + std::to_string(two.size()) +
                           " type-II edges; expected 1 or 3");
    }
  }
  return out;
}

bool is_z_homogeneous(const SurfaceComplex& c, const ZigzagSet& zs, const ZOrientation& tau) {
  const EdgeTyping typing = edge_types(c, zs, tau);
  for (const Zigzag* z : selected_zigzags(zs, tau)) {
    const auto edges = z->edges();
    const std::size_t n = edges.size();
    if (n % 3 != 0) return false;
    bool ok = false;
    for (std::size_t offset = 0; offset < 3 && !ok; ++offset) {
      ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        const bool want_two = (i % 3 == offset);
        if (typing.is_type_two(Edge(edges[i])) != want_two) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<ZOrientation> find_homogeneous_orientations(const SurfaceComplex& c,
                                                        const ZigzagSet& zs,
                                                        std::size_t guard) {
  const std::size_t k = zs.count();
  if (k > guard)
    throw TooManyZigzags("complex has " + std::to_string(k) +
                         " zigzag pairs, guard is " + std::to_string(guard));
  std::vector<ZOrientation> out;
  const std::size_t scan = std::size_t{1} << (k - 1);
  for (std::size_t mask = 0; mask < scan; ++mask) {
    ZOrientation tau(k);
    for (std::size_t i = 1; i < k; ++i) tau.bits[i] = (mask >> (i - 1)) & 1;
    if (is_z_homogeneous(c, zs, tau)) out.push_back(tau);
  }
  return out;
}

TypeTwoSubgraph type_II_subgraph(const SurfaceComplex&, const EdgeTyping& typing) {
  TypeTwoSubgraph g;
  std::map<VertexId, int> balance;
  std::set<VertexId> vset;
  for (const auto& [e, d] : typing.direction) {
    g.edges.push_back(d);
    ++balance[d.tail];
    --balance[d.head];
    vset.insert(d.tail);
    vset.insert(d.head);
  }
  for (const auto& [v, b] : balance)
    if (b != 0)
      throw StructureError("type-II subgraph unbalanced at vertex '" + v + "'");
  // Weak connectivity.
  if (!vset.empty()) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const DirectedEdge& d : g.edges) {
      adj[d.tail].push_back(d.head);
      adj[d.head].push_back(d.tail);
    }
    std::set<VertexId> reached;
    std::queue<VertexId> queue;
    queue.push(*vset.begin());
    reached.insert(*vset.begin());
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop();
      for (const VertexId& w : adj[v])
        if (reached.insert(w).second) queue.push(w);
    }
    if (reached.size() != vset.size())
      throw StructureError("type-II subgraph is not weakly connected");
  }
  g.vertices.assign(vset.begin(), vset.end());
  return g;
}

}  // namespace zigzag
