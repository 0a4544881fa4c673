#include "zigzag/surface.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <utility>

namespace zigzag {

Edge::Edge(VertexId x, VertexId y) {
  if (x == y) throw ValidationError("loop edge at vertex '" + x + "'");
  if (x < y) {
    a = std::move(x);
    b = std::move(y);
  } else {
    a = std::move(y);
    b = std::move(x);
  }
}

VertexId Edge::other(const VertexId& v) const {
  if (v == a) return b;
  if (v == b) return a;
  throw IncidenceError("vertex '" + v + "' is not an endpoint of " + to_string(*this));
}

std::string to_string(const DirectedEdge& e) { return e.tail + ">" + e.head; }

std::string to_string(const Edge& e) { return e.a + "-" + e.b; }

namespace {

// Lexicographically minimal representative over all rotations of the cycle
// and of its reversal.
std::vector<VertexId> canonical_cycle(const std::vector<VertexId>& cycle) {
  const std::size_t n = cycle.size();
  std::vector<VertexId> best;
  for (int dir : {1, -1}) {
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<VertexId> cand(n);
      for (std::size_t i = 0; i < n; ++i)
        cand[i] = cycle[(start + n + dir * static_cast<long>(i)) % n];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

}  // namespace

Face::Face(std::vector<VertexId> boundary) {
  if (boundary.size() < 3)
    throw ValidationError("face boundary has fewer than 3 vertices");
  std::set<VertexId> seen(boundary.begin(), boundary.end());
  if (seen.size() != boundary.size())
    throw ValidationError("face boundary repeats a vertex");
  boundary_ = canonical_cycle(boundary);
}

bool Face::contains(const VertexId& v) const {
  return std::find(boundary_.begin(), boundary_.end(), v) != boundary_.end();
}

bool Face::contains(const Edge& e) const {
  const std::size_t n = boundary_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (Edge(boundary_[i], boundary_[(i + 1) % n]) == e) return true;
  return false;
}

std::vector<Edge> Face::edges() const {
  std::vector<Edge> out;
  const std::size_t n = boundary_.size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(boundary_[i], boundary_[(i + 1) % n]);
  return out;
}

SurfaceComplex::SurfaceComplex(std::vector<Face> faces) : faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  validate_and_index();
}

void SurfaceComplex::validate_and_index() {
  if (faces_.empty()) throw ValidationError("complex has no faces");

  std::set<VertexId> vset;
  for (const Face& f : faces_)
    for (const VertexId& v : f.boundary()) vset.insert(v);
  vertices_.assign(vset.begin(), vset.end());

  // Each undirected edge must occupy exactly two boundary slots, in two
  // distinct faces.
  std::map<Edge, std::vector<int>> slots;
  for (std::size_t fi = 0; fi < faces_.size(); ++fi)
    for (const Edge& e : faces_[fi].edges()) slots[e].push_back(static_cast<int>(fi));
  for (const auto& [e, fs] : slots) {
    if (fs.size() != 2)
      throw ValidationError("edge " + to_string(e) + " lies in " +
                            std::to_string(fs.size()) + " faces, expected 2");
    edges_.push_back(e);
    edge_faces_[e] = {fs[0], fs[1]};
  }

  // Connectivity of the underlying graph.
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::set<VertexId> reached;
  std::queue<VertexId> queue;
  queue.push(vertices_.front());
  reached.insert(vertices_.front());
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (const VertexId& w : adj[v])
      if (reached.insert(w).second) queue.push(w);
  }
  if (reached.size() != vertices_.size())
    throw ValidationError("underlying graph is disconnected");

  for (const VertexId& v : vertices_)
    if (adj[v].size() <= 2)
      throw ValidationError("vertex '" + v + "' has degree " +
                            std::to_string(adj[v].size()) + ", expected >= 3");

  // Vertex links: the edge/face incidences around each vertex must close
  // into a single alternating cycle.
  for (const VertexId& v : vertices_) {
    // Around v, face f joins the two edges {v, x} and {v, y} where x, y are
    // the boundary neighbours of v in f.
    std::map<Edge, std::vector<std::pair<int, Edge>>> link;
    for (const auto& [e, fs] : edge_faces_) {
      if (!e.touches(v)) continue;
      for (int fi : fs) {
        const auto& bd = faces_[fi].boundary();
        const std::size_t n = bd.size();
        std::size_t j = std::find(bd.begin(), bd.end(), v) - bd.begin();
        Edge left(v, bd[(j + n - 1) % n]);
        Edge right(v, bd[(j + 1) % n]);
        if (e == left)
          link[e].emplace_back(fi, right);
        else if (e == right)
          link[e].emplace_back(fi, left);
        else
          throw StructureError("face incidence inconsistent at vertex '" + v + "'");
      }
    }
    for (const auto& [e, nb] : link)
      if (nb.size() != 2)
        throw ValidationError("broken link at vertex '" + v + "': edge " +
                              to_string(e) + " has " + std::to_string(nb.size()) +
                              " incident faces locally");

    // Walk the cycle twice (both directions from the smallest edge) and keep
    // the lexicographically smaller traversal as the canonical rotation.
    const Edge start = link.begin()->first;
    VertexRotation best;
    for (int branch : {0, 1}) {
      VertexRotation rot;
      Edge cur = start;
      int via = link[start][branch].first;
      std::set<int> used_faces;
      while (true) {
        rot.edges.push_back(cur);
        rot.faces.push_back(via);
        if (!used_faces.insert(via).second)
          throw ValidationError("broken link at vertex '" + v + "'");
        Edge next = cur;
        for (const auto& [fi, other] : link[cur])
          if (fi == via) next = other;
        if (next == start) break;
        // Continue through the face attached to `next` that is not `via`.
        int via_next = -1;
        for (const auto& [fi, other] : link[next])
          if (fi != via) via_next = fi;
        if (via_next < 0) throw ValidationError("broken link at vertex '" + v + "'");
        cur = next;
        via = via_next;
      }
      if (rot.edges.size() != link.size())
        throw ValidationError("link at vertex '" + v + "' splits into several cycles");
      if (best.edges.empty() || rot.edges < best.edges) best = std::move(rot);
    }
    rotations_[v] = std::move(best);
  }
}

int SurfaceComplex::euler_characteristic() const {
  return static_cast<int>(vertex_count()) - static_cast<int>(edge_count()) +
         static_cast<int>(face_count());
}

bool SurfaceComplex::orientable() const {
  // Try to pick a boundary direction for every face so that the two faces of
  // each edge traverse it oppositely; propagate over face adjacency.
  // orient[fi] = 0/1: boundary as stored / reversed.
  std::vector<int> orient(faces_.size(), -1);
  auto traverses_forward = [&](int fi, const DirectedEdge& d) {
    const auto& bd = faces_[fi].boundary();
    const std::size_t n = bd.size();
    for (std::size_t i = 0; i < n; ++i)
      if (bd[i] == d.tail && bd[(i + 1) % n] == d.head) return true;
    return false;
  };
  for (std::size_t seed = 0; seed < faces_.size(); ++seed) {
    if (orient[seed] != -1) continue;
    orient[seed] = 0;
    std::queue<int> queue;
    queue.push(static_cast<int>(seed));
    while (!queue.empty()) {
      int fi = queue.front();
      queue.pop();
      const auto& bd = faces_[fi].boundary();
      const std::size_t n = bd.size();
      for (std::size_t i = 0; i < n; ++i) {
        DirectedEdge d{bd[i], bd[(i + 1) % n]};
        if (orient[fi] == 1) d = d.reversed();
        int fj = other_face(Edge(d), fi);
        // The neighbour must traverse d in the opposite direction.
        int needed = traverses_forward(fj, d.reversed()) ? 0 : 1;
        if (orient[fj] == -1) {
          orient[fj] = needed;
          queue.push(fj);
        } else if (orient[fj] != needed) {
          return false;
        }
      }
    }
  }
  return true;
}

bool SurfaceComplex::has_vertex(const VertexId& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SurfaceComplex::has_edge(const Edge& e) const {
  return edge_faces_.contains(e);
}

std::size_t SurfaceComplex::degree(const VertexId& v) const {
  return rotation(v).degree();
}

const std::array<int, 2>& SurfaceComplex::faces_of(const Edge& e) const {
  auto it = edge_faces_.find(e);
  if (it == edge_faces_.end())
    throw IncidenceError("no edge " + to_string(e) + " in complex");
  return it->second;
}

int SurfaceComplex::other_face(const Edge& e, int face) const {
  const auto& fs = faces_of(e);
  if (fs[0] == face) return fs[1];
  if (fs[1] == face) return fs[0];
  throw IncidenceError("face does not contain edge " + to_string(e));
}

const VertexRotation& SurfaceComplex::rotation(const VertexId& v) const {
  auto it = rotations_.find(v);
  if (it == rotations_.end())
    throw IncidenceError("no vertex '" + v + "' in complex");
  return it->second;
}

}  // namespace zigzag
