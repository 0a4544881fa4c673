#pragma once

#include <optional>
#include <string>

#include "zigzag/engine.hpp"
#include "zigzag/surface.hpp"

namespace zigzag {

struct ComplexFile {
  SurfaceComplex complex;
  // Optional z-orientation bits against the canonical zigzag pair order.
  std::optional<ZOrientation> tau;
};

/// Parses {"faces": [[...], ...]} with an optional "tau" array of 0/1 flags.
ComplexFile parse_complex_file(const std::string& text);
SurfaceComplex parse_complex(const std::string& text);

/// Canonical serialization: boundaries in minimal rotation/reflection, faces
/// sorted, keys sorted. Round-trips through parse_complex.
std::string serialize_complex(const SurfaceComplex& c,
                              const ZOrientation* tau = nullptr);

}  // namespace zigzag
