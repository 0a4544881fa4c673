#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "zigzag/errors.hpp"

namespace zigzag {

/// Vertices are opaque string tokens; the token order gives the global
/// deterministic order used everywhere.
using VertexId = std::string;

struct DirectedEdge {
  VertexId tail;
  VertexId head;

  DirectedEdge reversed() const { return {head, tail}; }
  auto operator<=>(const DirectedEdge&) const = default;
};

/// Undirected edge, endpoints stored in sorted order.
struct Edge {
  VertexId a;
  VertexId b;

  Edge() = default;
  Edge(VertexId x, VertexId y);
  explicit Edge(const DirectedEdge& e) : Edge(e.tail, e.head) {}

  bool touches(const VertexId& v) const { return a == v || b == v; }
  VertexId other(const VertexId& v) const;
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const DirectedEdge& e);
std::string to_string(const Edge& e);

/// Face of a 2-cell embedding. The boundary is a cyclic vertex sequence with
/// no preferred orientation; it is stored in its lexicographically minimal
/// rotation/reflection so faces compare by value.
class Face {
 public:
  explicit Face(std::vector<VertexId> boundary);

  const std::vector<VertexId>& boundary() const { return boundary_; }
  std::size_t size() const { return boundary_.size(); }
  bool contains(const VertexId& v) const;
  bool contains(const Edge& e) const;
  std::vector<Edge> edges() const;

  auto operator<=>(const Face&) const = default;

 private:
  std::vector<VertexId> boundary_;
};

/// Alternating edge/face cycle around a vertex: faces[i] is incident to
/// edges[i] and edges[(i+1) % degree].
struct VertexRotation {
  std::vector<Edge> edges;
  std::vector<int> faces;

  std::size_t degree() const { return edges.size(); }
};

/// A closed 2-cell embedding of a simple connected graph, given by its face
/// list. Validation runs at construction; instances are immutable, so all
/// downstream code may assume the invariants:
///   - every edge lies in exactly two distinct faces,
///   - the graph is simple and connected, minimum degree 3,
///   - the edge/face incidences around each vertex form a single cycle.
class SurfaceComplex {
 public:
  explicit SurfaceComplex(std::vector<Face> faces);

  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  int euler_characteristic() const;
  bool orientable() const;

  bool has_vertex(const VertexId& v) const;
  bool has_edge(const Edge& e) const;
  std::size_t degree(const VertexId& v) const;

  /// The two faces (as indices into faces()) incident to e.
  const std::array<int, 2>& faces_of(const Edge& e) const;
  /// The face on the other side of e, given one of its two faces.
  int other_face(const Edge& e, int face) const;

  const VertexRotation& rotation(const VertexId& v) const;

 private:
  std::vector<Face> faces_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<Edge, std::array<int, 2>> edge_faces_;
  std::map<VertexId, VertexRotation> rotations_;

  void validate_and_index();
};

}  // namespace zigzag
