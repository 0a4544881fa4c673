#pragma once

#include <stdexcept>

namespace zigzag {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IncidenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency failure: an invariant that holds for every valid
// input was violated, so the input or the implementation is broken.
struct StructureError : std::logic_error {
  using std::logic_error::logic_error;
};

struct MonodromyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooManyZigzags : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StarViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlueError : std::logic_error {
  using std::logic_error::logic_error;
};

struct SelectionError : std::logic_error {
  using std::logic_error::logic_error;
};

struct GadgetSearchError : std::logic_error {
  using std::logic_error::logic_error;
};

struct LoopGuard : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace zigzag
