#pragma once

#include <string>
#include <vector>

#include "zigzag/surface.hpp"

inline zigzag::SurfaceComplex tetrahedron() {
  using zigzag::Face;
  return zigzag::SurfaceComplex({Face({"t1", "t2", "t3"}), Face({"t1", "t2", "t4"}),
                                 Face({"t1", "t3", "t4"}), Face({"t2", "t3", "t4"})});
}

/// 6-vertex triangulation of the projective plane (antipodal quotient of the
/// icosahedron).
inline zigzag::SurfaceComplex projective_plane_6() {
  static const int triples[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                                     {0, 5, 1}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1},
                                     {4, 5, 2}, {5, 1, 3}};
  std::vector<zigzag::Face> faces;
  for (const auto& t : triples)
    faces.push_back(zigzag::Face({"p" + std::to_string(t[0]), "p" + std::to_string(t[1]),
                                  "p" + std::to_string(t[2])}));
  return zigzag::SurfaceComplex(std::move(faces));
}
