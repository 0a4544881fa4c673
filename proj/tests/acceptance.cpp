// End-to-end checks, one verdict line per criterion.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "naive_walker.hpp"
#include "table1.hpp"
#include "zigzag/gadgets.hpp"
#include "zigzag/knotting.hpp"
#include "zigzag/surgery.hpp"

using namespace zigzag;

namespace {

int failures = 0;

void verdict(int criterion, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << criterion << " " << name;
  if (!detail.empty()) std::cout << ": " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

void run(int criterion, const std::string& name,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("unexpected exception: ") + e.what();
  }
  verdict(criterion, name, ok, detail);
}

const Gadget& by_name(const std::string& name) {
  for (const Gadget& g : gadget_catalog())
    if (g.name == name) return g;
  throw std::logic_error("no gadget " + name);
}

int direct_count(const SurfaceComplex&, const ZigzagSet& zs, const SpecialPair& p) {
  int n = 0;
  for (const ZigzagPair& z : zs.pairs())
    if (z.fwd.traverses(Edge(p.e1())) || z.fwd.traverses(Edge(p.e2()))) ++n;
  return n;
}

bool check_pair_counts(const SurfaceComplex& c, const ZigzagSet& zs,
                       const EdgeTyping& typing, std::string& detail) {
  for (const SpecialPair& p : find_special_pairs(c, typing)) {
    Perm4 m = z_monodromy(c, typing, p);
    int cycles = (side_swap_perm() * m).cycle_count();
    int counted = direct_count(c, zs, p);
    int table = class_zigzag_count(classify(m));
    if (counted != cycles || counted != table) {
      std::ostringstream os;
      os << "pair (" << p.v1 << "," << p.v2 << "," << p.v3 << "): counted " << counted
         << ", cycles " << cycles << ", table " << table;
      detail = os.str();
      return false;
    }
  }
  return true;
}

SumResult random_sum(std::mt19937& rng) {
  const auto& cat = gadget_catalog();
  std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  const Gadget& a = cat[pick(rng)];
  const Gadget& b = cat[pick(rng)];
  GlueKind g = coin(rng) ? GlueKind::swap : GlueKind::direct;
  return connected_sum(a.complex, a.forward.typing, a.forward.pair, b.complex,
                       b.forward.typing, b.forward.pair, g);
}

void criterion1() {
  run(1, "bipyramid zigzag counts", [](std::string& detail) {
    for (int n = 3; n <= 10; ++n) {
      std::size_t want = n % 2 == 1 ? 1 : (n % 4 == 2 ? 2 : 4);
      std::size_t got = enumerate_zigzags(bipyramid(n)).count();
      if (got != want) {
        detail = "BP_" + std::to_string(n) + " has " + std::to_string(got) +
                 " zigzag pairs, expected " + std::to_string(want);
        return false;
      }
    }
    return true;
  });
}

void criterion2() {
  run(2, "pentagonal bipyramid typing", [](std::string& detail) {
    SurfaceComplex bp = bipyramid(5);
    ZigzagSet zs = enumerate_zigzags(bp);
    ZOrientation tau = bipyramid_orientation(bp, zs);
    EdgeTyping typing = edge_types(bp, zs, tau);
    if (typing.count(EdgeType::II) != 5 || typing.count(EdgeType::I) != 10) {
      detail = "type counts II/I = " + std::to_string(typing.count(EdgeType::II)) +
               "/" + std::to_string(typing.count(EdgeType::I));
      return false;
    }
    std::map<VertexId, VertexId> succ;
    for (const auto& [e, d] : typing.direction) {
      if (e.touches("a") || e.touches("b")) {
        detail = "type-II edge off the base: " + to_string(e);
        return false;
      }
      succ[d.tail] = d.head;
    }
    VertexId v = "v1";
    for (int i = 0; i < 5; ++i) {
      auto it = succ.find(v);
      if (it == succ.end()) {
        detail = "base cycle breaks at " + v;
        return false;
      }
      v = it->second;
    }
    if (v != "v1") {
      detail = "base edges do not close into one directed 5-cycle";
      return false;
    }
    for (FaceType t : face_types(bp, typing))
      if (t != FaceType::I) {
        detail = "found a type-II face";
        return false;
      }
    if (!is_z_homogeneous(bp, zs, tau)) {
      detail = "not z-homogeneous";
      return false;
    }
    return true;
  });
}

void criterion3() {
  run(3, "all thirteen monodromy classes", [](std::string& detail) {
    struct Expect {
      const SurfaceComplex& c;
      const EdgeTyping& typing;
      VertexId v1, v2, v3;
      MonodromyClass cls;
      const char* perm;
    };
    const Gadget& bp4 = by_name("bp4");
    const Gadget& bp5 = by_name("bp5");
    const Gadget& bp6 = by_name("bp6");
    const Gadget& bp7 = by_name("bp7");
    const Gadget& g45 = by_name("g2345-k4");
    const Gadget& g6 = by_name("g2434-k6");
    std::vector<Expect> cases = {
        {bp4.complex, bp4.forward.typing, "v1", "v2", "v3", MonodromyClass::K2, "(13)(24)"},
        {bp5.complex, bp5.forward.typing, "v1", "v2", "v3", MonodromyClass::K1, "(1234)"},
        {bp6.complex, bp6.forward.typing, "v1", "v2", "v3", MonodromyClass::K0, "id"},
        {bp7.complex, bp7.forward.typing, "v1", "v2", "v3", MonodromyClass::K3, "(1432)"},
        {g45.complex, g45.forward.typing, "v0", "b", "v1", MonodromyClass::K4, "(14)(23)"},
        {g45.complex, g45.forward.typing, "a", "v0", "b", MonodromyClass::K5, "(12)(34)"},
        {g45.complex, g45.forward.typing, "v3", "v4", "v5", MonodromyClass::K7, "(12)"},
        {g45.complex, g45.forward.typing, "a", "v3", "v4", MonodromyClass::K8, "(23)"},
        {g45.complex, g45.forward.typing, "b", "v6", "v7", MonodromyClass::K11, "(234)"},
        {g45.complex, g45.forward.typing, "b", "v1", "v2", MonodromyClass::K12, "(143)"},
        {g6.complex, g6.forward.typing, "v0", "b", "v1", MonodromyClass::K6, "(24)"},
        {g6.complex, g6.forward.typing, "b", "v1", "v2", MonodromyClass::K9, "(1423)"},
        {g6.complex, g6.forward.typing, "v1", "v2", "v3", MonodromyClass::K10, "(1243)"},
    };
    const Perm4& s = side_swap_perm();
    for (const Expect& e : cases) {
      auto p = find_special_pair(e.c, e.typing, e.v1, e.v2, e.v3);
      if (!p) {
        detail = "pair (" + e.v1 + "," + e.v2 + "," + e.v3 + ") not found";
        return false;
      }
      Perm4 m = z_monodromy(e.c, e.typing, *p);
      Perm4 want = Perm4::from_cycles(e.perm);
      if (classify(m) != e.cls || (m != want && m != s * want * s)) {
        detail = "pair (" + e.v1 + "," + e.v2 + "," + e.v3 + "): got " + m.to_string() +
                 " (" + to_string(classify(m)) + "), expected " + e.perm + " in " +
                 to_string(e.cls);
        return false;
      }
    }
    return true;
  });
}

void criterion4() {
  run(4, "permutation table and class closure", [](std::string& detail) {
    auto rows = s4_table();
    const auto& want = table1();
    if (rows.size() != 24) {
      detail = "table has " + std::to_string(rows.size()) + " rows";
      return false;
    }
    for (std::size_t i = 0; i < 24; ++i) {
      const std::array<std::string, 8> got = {
          rows[i].p.to_string(),      rows[i].inv.to_string(),
          rows[i].sp.to_string(),     rows[i].tinv.to_string(),
          rows[i].stinv.to_string(),  rows[i].sps.to_string(),
          rows[i].tinvt.to_string(),  rows[i].stinvst.to_string()};
      for (int j = 0; j < 8; ++j)
        if (got[j] != want[i][j]) {
          detail = "row " + std::to_string(i) + " column " + std::to_string(j) +
                   ": got " + got[j] + ", expected " + want[i][j];
          return false;
        }
      MonodromyClass c = classify(rows[i].p);
      if (classify(rows[i].sps) != c || classify(rows[i].tinvt) != c ||
          classify(rows[i].stinvst) != c) {
        detail = "class not closed at " + rows[i].p.to_string();
        return false;
      }
    }
    return true;
  });
}

void criterion5() {
  run(5, "zigzag counts through special pairs", [](std::string& detail) {
    for (const Gadget& g : gadget_catalog())
      if (!check_pair_counts(g.complex, g.zigzags, g.forward.typing, detail)) {
        detail = g.name + ": " + detail;
        return false;
      }
    std::mt19937 rng(20240);
    for (int trial = 0; trial < 20; ++trial) {
      SumResult sum = random_sum(rng);
      if (!check_pair_counts(sum.complex, sum.zigzags, sum.typing, detail)) {
        detail = "random sum " + std::to_string(trial) + ": " + detail;
        return false;
      }
    }
    return true;
  });
}

void criterion6() {
  run(6, "merge count prediction", [](std::string& detail) {
    const auto& cat = gadget_catalog();
    for (const Gadget& a : cat)
      for (const Gadget& b : cat) {
        if (!check_star(a.complex, a.forward.pair, b.complex, b.forward.pair)) continue;
        for (GlueKind g : {GlueKind::direct, GlueKind::swap}) {
          int predicted =
              predicted_merge_count(a.forward.monodromy, b.forward.monodromy, g);
          SumResult sum = connected_sum(a.complex, a.forward.typing, a.forward.pair,
                                        b.complex, b.forward.typing, b.forward.pair, g);
          int through = 0;
          for (const ZigzagPair& z : sum.zigzags.pairs()) {
            bool hits = false;
            for (const Edge& e : sum.seam) hits = hits || z.fwd.traverses(e);
            if (hits) ++through;
          }
          if (through != predicted) {
            detail = a.name + " # " + b.name + (g == GlueKind::swap ? " (swap)" : "") +
                     ": predicted " + std::to_string(predicted) + ", found " +
                     std::to_string(through);
            return false;
          }
        }
      }
    return true;
  });
}

void criterion7() {
  run(7, "knotting terminates on one zigzag", [](std::string& detail) {
    auto attempt = [&](const std::string& name, const SurfaceComplex& c,
                       const ZOrientation& tau) {
      const int chi = c.euler_characteristic();
      const bool orient = c.orientable();
      KnotResult r = knot(c, tau);
      bool ok = r.zigzags.count() == 1 && is_z_homogeneous(r.complex, r.zigzags, r.tau) &&
                r.complex.euler_characteristic() == chi && r.complex.orientable() == orient;
      int prev = static_cast<int>(r.trace.initial.zigzag_pairs);
      for (const KnotStep& s : r.trace.steps) {
        ok = ok && s.zigzags_before == prev && s.zigzags_after < prev;
        prev = s.zigzags_after;
      }
      if (!ok) detail = name + " failed its invariants";
      return ok;
    };
    for (int n : {4, 6, 8}) {
      SurfaceComplex bp = bipyramid(n);
      ZigzagSet zs = enumerate_zigzags(bp);
      if (!attempt("BP_" + std::to_string(n), bp, bipyramid_orientation(bp, zs)))
        return false;
    }
    {
      auto [c, tau] = gamma(2, 3, 4, 5);
      if (!attempt("two-pole 2,3,4,5", c, tau)) return false;
    }
    {
      auto [c, tau] = gamma(2, 4, 3, 4);
      if (!attempt("two-pole 2,4,3,4", c, tau)) return false;
    }
    std::mt19937 rng(77);
    const auto& cat = gadget_catalog();
    std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 5; ++trial) {
      SumResult sum = random_sum(rng);
      // Grow once more through a random essential-enough pair.
      auto pairs = find_special_pairs(sum.complex, sum.typing);
      std::uniform_int_distribution<std::size_t> pp(0, pairs.size() - 1);
      for (int tries = 0; tries < 50; ++tries) {
        const SpecialPair& host = pairs[pp(rng)];
        const Gadget& b = cat[pick(rng)];
        if (!check_star(sum.complex, host, b.complex, b.forward.pair)) continue;
        GlueKind g = coin(rng) ? GlueKind::swap : GlueKind::direct;
        sum = connected_sum(sum.complex, sum.typing, host, b.complex,
                            b.forward.typing, b.forward.pair, g);
        break;
      }
      if (!attempt("random sum " + std::to_string(trial), sum.complex, sum.tau))
        return false;
    }
    return true;
  });
}

void criterion8() {
  run(8, "engine invariants on the fixture set", [](std::string& detail) {
    std::vector<std::pair<std::string, SurfaceComplex>> fixtures = {
        {"tetrahedron", tetrahedron()}, {"projective plane", projective_plane_6()}};
    for (int n = 3; n <= 8; ++n)
      fixtures.emplace_back("BP_" + std::to_string(n), bipyramid(n));
    for (const Gadget& g : gadget_catalog()) fixtures.emplace_back(g.name, g.complex);

    const Perm4& s = side_swap_perm();
    const Perm4& t = orientation_flip_perm();
    for (const auto& [name, c] : fixtures) {
      ZigzagSet zs = enumerate_zigzags(c);
      std::size_t total = 0;
      for (const ZigzagPair& z : zs.pairs()) {
        total += z.fwd.length();
        if (z.fwd.key() == z.rev.key()) {
          detail = name + ": self-reversed zigzag";
          return false;
        }
      }
      if (total != 2 * c.edge_count()) {
        detail = name + ": zigzag lengths sum to " + std::to_string(total) +
                 ", expected " + std::to_string(2 * c.edge_count());
        return false;
      }
      for (const ZOrientation& tau : find_homogeneous_orientations(c, zs)) {
        for (const Zigzag* z : selected_zigzags(zs, tau))
          if (z->length() % 3 != 0) {
            detail = name + ": homogeneous zigzag length not divisible by 3";
            return false;
          }
        EdgeTyping typing = edge_types(c, zs, tau);
        if (typing.count(EdgeType::I) != 2 * typing.count(EdgeType::II)) {
          detail = name + ": type counts are not 2:1";
          return false;
        }
        EdgeTyping rev_typing = edge_types(c, zs, tau.reversed());
        for (const SpecialPair& p : find_special_pairs(c, typing)) {
          Perm4 m = z_monodromy(c, typing, p);
          SpecialPair swapped = p;
          std::swap(swapped.plus_faces, swapped.minus_faces);
          swapped.side_face = {p.side_face[2], p.side_face[3], p.side_face[0],
                               p.side_face[1]};
          if (z_monodromy(c, typing, swapped) != s * m * s) {
            detail = name + ": side swap is not conjugation by s";
            return false;
          }
          auto q = find_special_pair(c, rev_typing, p.v3, p.v2, p.v1);
          if (!q) {
            detail = name + ": reversed pair missing";
            return false;
          }
          // Align the reversed pair's sides with the original ones; the +
          // side is preserved by orientation reversal.
          std::set<int> plus(p.plus_faces.begin(), p.plus_faces.end());
          if (!plus.contains(q->side_face[0])) {
            std::swap(q->plus_faces, q->minus_faces);
            q->side_face = {q->side_face[2], q->side_face[3], q->side_face[0],
                            q->side_face[1]};
          }
          if (z_monodromy(c, rev_typing, *q) != t * m.inverse() * t) {
            detail = name + ": orientation reversal is not t-inverse-t";
            return false;
          }
        }
      }
    }
    return true;
  });
}

void criterion9() {
  run(9, "state-orbit enumeration matches the naive walker", [](std::string& detail) {
    std::vector<std::pair<std::string, SurfaceComplex>> fixtures = {
        {"tetrahedron", tetrahedron()}, {"projective plane", projective_plane_6()}};
    for (int n = 3; n <= 6; ++n)
      fixtures.emplace_back("BP_" + std::to_string(n), bipyramid(n));
    for (const auto& [name, c] : fixtures) {
      if (c.edge_count() > 20) continue;
      if (naive::oracle_zigzags(c) != naive::library_view(enumerate_zigzags(c))) {
        detail = name + ": enumerations disagree";
        return false;
      }
    }
    return true;
  });
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  return failures == 0 ? 0 : 1;
}
