#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace zigzag {

/// Permutation of the labels {1,2,3,4}. Composition is right-to-left:
/// (p * q)(x) = p(q(x)), so cycle products read the way they are written,
/// e.g. (1234)(13)(24) = (1432).
class Perm4 {
 public:
  Perm4();  // identity

  static Perm4 identity() { return Perm4(); }
  /// Parses disjoint cycle notation, e.g. "(12)(34)", "(1234)" or "id".
  static Perm4 from_cycles(std::string_view text);
  /// From the 1-based image table: images[i] = p(i+1).
  static Perm4 from_images(const std::array<int, 4>& images);

  int apply(int x) const;             // 1-based
  Perm4 operator*(const Perm4&) const;
  Perm4 inverse() const;

  /// Disjoint cycles including fixed points as 1-cycles, each cycle starting
  /// at its smallest label, cycles ordered by smallest label.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  bool is_four_cycle() const { return cycle_count() == 1; }

  /// Cycle notation with 1-cycles omitted; identity prints as "id".
  std::string to_string() const;

  auto operator<=>(const Perm4&) const = default;

 private:
  std::array<int, 4> img_;  // img_[i] = apply(i+1) - 1
};

/// Transposes the + and - sides of a split pair: (13)(24).
const Perm4& side_swap_perm();
/// Effect of reversing the z-orientation enters as conjugation by (12)(34).
const Perm4& orientation_flip_perm();

enum class MonodromyClass {
  K0, K1, K2, K3, K4, K5, K6, K7, K8, K9, K10, K11, K12,
};

std::string to_string(MonodromyClass k);

/// Class of p in the 13-class partition of S4.
MonodromyClass classify(const Perm4& p);
const std::vector<Perm4>& class_members(MonodromyClass k);

/// Number of zigzags through a special pair whose monodromy lies in class k
/// (the cycle count of side_swap_perm() * p, constant on each class).
int class_zigzag_count(MonodromyClass k);

/// All 24 elements of S4 in the fixed table row order.
const std::vector<Perm4>& s4_elements();

struct S4TableRow {
  Perm4 p;          // M_P
  Perm4 inv;        // M_P^-1
  Perm4 sp;         // s M_P
  Perm4 tinv;       // t M_P^-1
  Perm4 stinv;      // s t M_P^-1
  Perm4 sps;        // s M_P s
  Perm4 tinvt;      // t M_P^-1 t
  Perm4 stinvst;    // s t M_P^-1 s t
};

std::vector<S4TableRow> s4_table();

}  // namespace zigzag
