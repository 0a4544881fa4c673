#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/surface.hpp"

namespace zigzag {

/// Traversal state: the directed edge just traversed plus the face through
/// which the next step travels. A complex with E edges has 4E states and the
/// step map permutes them.
struct ZigzagState {
  DirectedEdge edge;
  int face = -1;

  auto operator<=>(const ZigzagState&) const = default;
};

ZigzagState zigzag_step(const SurfaceComplex& c, const ZigzagState& s);

/// One closed orbit of the step map. Stored as the state cycle; the
/// edge-sequence view is derived from it.
class Zigzag {
 public:
  explicit Zigzag(std::vector<ZigzagState> states);

  const std::vector<ZigzagState>& states() const { return states_; }
  std::vector<DirectedEdge> edges() const;
  std::size_t length() const { return states_.size(); }
  bool traverses(const Edge& e) const;

  /// Lexicographically minimal rotation of the directed-edge sequence.
  /// Equal keys iff equal cyclic sequences.
  const std::vector<DirectedEdge>& key() const { return key_; }

 private:
  std::vector<ZigzagState> states_;
  std::vector<DirectedEdge> key_;
};

/// A zigzag and its reversal; `fwd` is the member with the smaller key.
struct ZigzagPair {
  Zigzag fwd;
  Zigzag rev;

  const std::vector<DirectedEdge>& key() const { return fwd.key(); }
};

class ZigzagSet {
 public:
  explicit ZigzagSet(std::vector<ZigzagPair> pairs) : pairs_(std::move(pairs)) {}

  const std::vector<ZigzagPair>& pairs() const { return pairs_; }
  std::size_t count() const { return pairs_.size(); }

 private:
  std::vector<ZigzagPair> pairs_;
};

ZigzagSet enumerate_zigzags(const SurfaceComplex& c);
bool is_z_knotted(const SurfaceComplex& c);

/// One bit per zigzag pair, in canonical pair order; bit set means the
/// reversed member represents the pair.
struct ZOrientation {
  std::vector<std::uint8_t> bits;

  ZOrientation() = default;
  explicit ZOrientation(std::size_t k) : bits(k, 0) {}

  ZOrientation reversed() const;
  std::string to_bitstring() const;
  static ZOrientation from_bitstring(const std::string& s);
};

const Zigzag& representative(const ZigzagPair& p, bool reversed);
std::vector<const Zigzag*> selected_zigzags(const ZigzagSet& zs, const ZOrientation& tau);

enum class EdgeType { I, II };
enum class FaceType { I, II };

struct EdgeTyping {
  std::map<Edge, EdgeType> type;
  // tau-induced direction, present exactly for type-II edges.
  std::map<Edge, DirectedEdge> direction;

  bool is_type_two(const Edge& e) const { return type.at(e) == EdgeType::II; }
  std::size_t count(EdgeType t) const;
};

EdgeTyping edge_types(const SurfaceComplex& c, const ZigzagSet& zs, const ZOrientation& tau);

/// Per-face classification (faces must all be triangles).
std::vector<FaceType> face_types(const SurfaceComplex& c, const EdgeTyping& typing);

bool is_z_homogeneous(const SurfaceComplex& c, const ZigzagSet& zs, const ZOrientation& tau);

/// All z-homogeneous orientations, scanning the 2^(k-1) choices with the
/// first bit fixed (global reversal does not change edge types).
std::vector<ZOrientation> find_homogeneous_orientations(const SurfaceComplex& c,
                                                        const ZigzagSet& zs,
                                                        std::size_t guard = 20);

/// Type-II edges with their tau-directions; asserted Eulerian and weakly
/// connected.
struct TypeTwoSubgraph {
  std::vector<VertexId> vertices;
  std::vector<DirectedEdge> edges;
};

TypeTwoSubgraph type_II_subgraph(const SurfaceComplex& c, const EdgeTyping& typing);

}  // namespace zigzag
