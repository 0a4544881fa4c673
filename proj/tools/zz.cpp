// Command-line front end: generation, analysis, surgery, knotting, tables.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "zigzag/gadgets.hpp"
#include "zigzag/io.hpp"
#include "zigzag/knotting.hpp"
#include "zigzag/surgery.hpp"

using namespace zigzag;
using nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

ComplexFile load(const std::string& path) {
  try {
    return parse_complex_file(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(std::string("ParseError: ") + e.what());
  } catch (const ValidationError& e) {
    throw InputError(std::string("ValidationError: ") + e.what());
  }
}

/// Orientation from --tau, the input file, or the unique homogeneous one.
ZOrientation resolve_tau(const ComplexFile& f, const ZigzagSet& zs,
                         const std::string& flag) {
  if (!flag.empty()) return ZOrientation::from_bitstring(flag);
  if (f.tau) return *f.tau;
  auto all = find_homogeneous_orientations(f.complex, zs);
  if (all.size() == 1) return all.front();
  throw DomainError(all.empty()
                        ? "no z-homogeneous orientation; pass --tau"
                        : "orientation is ambiguous; pass --tau");
}

SpecialPair parse_pair(const SurfaceComplex& c, const EdgeTyping& typing,
                       const std::string& triple) {
  std::vector<VertexId> v;
  std::stringstream ss(triple);
  for (std::string tok; std::getline(ss, tok, ',');) v.push_back(tok);
  if (v.size() != 3) throw InputError("pair must be given as v1,v2,v3");
  auto p = find_special_pair(c, typing, v[0], v[1], v[2]);
  if (!p)
    throw DomainError("(" + triple + ") is not a directed type-II path");
  return *p;
}

json edge_list(const std::vector<DirectedEdge>& edges) {
  json out = json::array();
  for (const DirectedEdge& d : edges) out.push_back({d.tail, d.head});
  return out;
}

json summary_json(const SurfaceComplex& c, const ZigzagSet& zs) {
  json j;
  j["vertices"] = c.vertex_count();
  j["edges"] = c.edge_count();
  j["faces"] = c.face_count();
  j["euler_characteristic"] = c.euler_characteristic();
  j["orientable"] = c.orientable();
  j["zigzag_pairs"] = zs.count();
  return j;
}

std::string dot_graph(const SurfaceComplex& c, const EdgeTyping& typing) {
  std::ostringstream os;
  os << "digraph complex {\n";
  for (const Edge& e : c.edges()) {
    if (typing.is_type_two(e)) {
      const DirectedEdge& d = typing.direction.at(e);
      os << "  \"" << d.tail << "\" -> \"" << d.head << "\";\n";
    } else {
      os << "  \"" << e.a << "\" -> \"" << e.b << "\" [style=dashed, dir=none];\n";
    }
  }
  os << "}\n";
  return os.str();
}

int cmd_info(const std::string& file, bool as_json) {
  ComplexFile f = load(file);
  ZigzagSet zs = enumerate_zigzags(f.complex);
  auto taus = find_homogeneous_orientations(f.complex, zs);
  if (as_json) {
    json j = summary_json(f.complex, zs);
    j["homogeneous_orientations"] = json::array();
    for (const ZOrientation& t : taus)
      j["homogeneous_orientations"].push_back(t.to_bitstring());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "vertices " << f.complex.vertex_count() << ", edges "
              << f.complex.edge_count() << ", faces " << f.complex.face_count() << "\n"
              << "euler characteristic " << f.complex.euler_characteristic()
              << (f.complex.orientable() ? ", orientable" : ", non-orientable") << "\n"
              << "zigzag pairs " << zs.count() << "\n"
              << "homogeneous orientations " << taus.size();
    for (const ZOrientation& t : taus) std::cout << " " << t.to_bitstring();
    std::cout << "\n";
  }
  return 0;
}

int cmd_zigzags(const std::string& file, const std::string& tau_flag, bool as_json) {
  ComplexFile f = load(file);
  ZigzagSet zs = enumerate_zigzags(f.complex);
  std::optional<ZOrientation> tau;
  if (!tau_flag.empty() || f.tau) tau = resolve_tau(f, zs, tau_flag);
  json out = json::array();
  for (std::size_t i = 0; i < zs.count(); ++i) {
    const Zigzag& z = tau ? representative(zs.pairs()[i], tau->bits[i] != 0)
                          : zs.pairs()[i].fwd;
    if (as_json) {
      json j;
      j["index"] = i;
      j["length"] = z.length();
      j["edges"] = edge_list(z.edges());
      out.push_back(j);
    } else {
      std::cout << "zigzag " << i << " (length " << z.length() << "):";
      for (const DirectedEdge& d : z.edges()) std::cout << " " << d.tail << ">" << d.head;
      std::cout << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_pairs(const std::string& file, const std::string& tau_flag, bool as_json,
              bool dot) {
  ComplexFile f = load(file);
  ZigzagSet zs = enumerate_zigzags(f.complex);
  ZOrientation tau = resolve_tau(f, zs, tau_flag);
  EdgeTyping typing = edge_types(f.complex, zs, tau);
  if (dot) {
    std::cout << dot_graph(f.complex, typing);
    return 0;
  }
  json out = json::array();
  for (const SpecialPair& p : find_special_pairs(f.complex, typing)) {
    Perm4 m = z_monodromy(f.complex, typing, p);
    int k = zigzags_through_pair(f.complex, zs, tau, typing, p);
    if (as_json) {
      json j;
      j["pair"] = {p.v1, p.v2, p.v3};
      j["monodromy"] = m.to_string();
      j["class"] = to_string(classify(m));
      j["zigzags_through"] = k;
      out.push_back(j);
    } else {
      std::cout << p.v1 << "," << p.v2 << "," << p.v3 << "  " << m.to_string() << "  "
                << to_string(classify(m)) << "  zigzags " << k << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_gen(const std::string& kind, const std::vector<int>& params,
            const std::string& out_path) {
  if (kind == "bipyramid") {
    if (params.size() != 1) throw InputError("gen bipyramid takes one parameter");
    SurfaceComplex c = bipyramid(params[0]);
    ZigzagSet zs = enumerate_zigzags(c);
    ZOrientation tau = bipyramid_orientation(c, zs);
    emit(out_path, serialize_complex(c, &tau));
    return 0;
  }
  if (kind == "gamma") {
    if (params.size() != 4) throw InputError("gen gamma takes four parameters");
    auto [c, tau] = gamma(params[0], params[1], params[2], params[3]);
    emit(out_path, serialize_complex(c, &tau));
    return 0;
  }
  throw InputError("unknown generator '" + kind + "' (bipyramid, gamma)");
}

int cmd_sum(const std::string& file_a, const std::string& triple_a,
            const std::string& file_b, const std::string& triple_b, bool swap,
            const std::string& out_path, bool as_json) {
  ComplexFile fa = load(file_a);
  ComplexFile fb = load(file_b);
  ZigzagSet za = enumerate_zigzags(fa.complex);
  ZigzagSet zb = enumerate_zigzags(fb.complex);
  EdgeTyping ta = edge_types(fa.complex, za, resolve_tau(fa, za, ""));
  EdgeTyping tb = edge_types(fb.complex, zb, resolve_tau(fb, zb, ""));
  SpecialPair pa = parse_pair(fa.complex, ta, triple_a);
  SpecialPair pb = parse_pair(fb.complex, tb, triple_b);
  SumResult sum = connected_sum(fa.complex, ta, pa, fb.complex, tb, pb,
                                swap ? GlueKind::swap : GlueKind::direct);
  emit(out_path, serialize_complex(sum.complex, &sum.tau));
  if (as_json && !out_path.empty() && out_path != "-")
    std::cout << summary_json(sum.complex, sum.zigzags).dump(2) << "\n";
  return 0;
}

json trace_json(const KnottingTrace& trace) {
  auto side = [](const ComplexSummary& s) {
    json j;
    j["vertices"] = s.vertices;
    j["edges"] = s.edges;
    j["faces"] = s.faces;
    j["euler_characteristic"] = s.euler;
    j["zigzag_pairs"] = s.zigzag_pairs;
    j["homogeneous"] = s.homogeneous;
    return j;
  };
  json j;
  j["initial"] = side(trace.initial);
  j["final"] = side(trace.final);
  j["steps"] = json::array();
  for (const KnotStep& s : trace.steps) {
    json step;
    step["pair"] = {s.v1, s.v2, s.v3};
    step["monodromy"] = s.monodromy.to_string();
    step["class"] = to_string(s.cls);
    step["gadget"] = s.gadget;
    step["gadget_pair"] = {s.g1, s.g2, s.g3};
    step["glue"] = s.glue == GlueKind::swap ? "swap" : "direct";
    step["gadget_tau_reversed"] = s.gadget_tau_reversed;
    step["zigzags_before"] = s.zigzags_before;
    step["zigzags_after"] = s.zigzags_after;
    j["steps"].push_back(step);
  }
  return j;
}

int cmd_knot(const std::string& file, const std::string& tau_flag,
             const std::string& trace_path, const std::string& out_path, bool as_json) {
  ComplexFile f = load(file);
  ZigzagSet zs = enumerate_zigzags(f.complex);
  ZOrientation tau = resolve_tau(f, zs, tau_flag);
  KnotResult r = knot(f.complex, tau);
  if (!trace_path.empty()) emit(trace_path, trace_json(r.trace).dump(2) + "\n");
  emit(out_path, serialize_complex(r.complex, &r.tau));
  if (as_json && !out_path.empty() && out_path != "-")
    std::cout << summary_json(r.complex, r.zigzags).dump(2) << "\n";
  return 0;
}

int cmd_s4table(bool check, bool as_json) {
  auto rows = s4_table();
  if (check) {
    const Perm4& s = side_swap_perm();
    const Perm4& t = orientation_flip_perm();
    const Perm4 st = s * t;
    for (const S4TableRow& r : rows) {
      const Perm4 inv = r.p.inverse();
      bool ok = r.inv == inv && r.sp == s * r.p && r.tinv == t * inv &&
                r.stinv == st * inv && r.sps == s * r.p * s && r.tinvt == t * inv * t &&
                r.stinvst == st * inv * st;
      if (!ok) {
        std::cerr << "table row for " << r.p.to_string() << " is inconsistent\n";
        return kExitDomain;
      }
    }
  }
  if (as_json) {
    json out = json::array();
    for (const S4TableRow& r : rows) {
      json j;
      j["p"] = r.p.to_string();
      j["p_inverse"] = r.inv.to_string();
      j["sp"] = r.sp.to_string();
      j["tp_inverse"] = r.tinv.to_string();
      j["stp_inverse"] = r.stinv.to_string();
      j["sps"] = r.sps.to_string();
      j["tp_inverse_t"] = r.tinvt.to_string();
      j["stp_inverse_st"] = r.stinvst.to_string();
      j["class"] = to_string(classify(r.p));
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const S4TableRow& r : rows)
      std::cout << r.p.to_string() << "\t" << r.inv.to_string() << "\t"
                << r.sp.to_string() << "\t" << r.tinv.to_string() << "\t"
                << r.stinv.to_string() << "\t" << r.sps.to_string() << "\t"
                << r.tinvt.to_string() << "\t" << r.stinvst.to_string() << "\n";
  }
  return 0;
}

int cmd_catalog(bool as_json) {
  json out = json::array();
  for (const Gadget& g : gadget_catalog()) {
    const SpecialPair& p = g.forward.pair;
    if (as_json) {
      json j;
      j["name"] = g.name;
      j["class"] = to_string(g.cls);
      j["monodromy"] = g.forward.monodromy.to_string();
      j["pair"] = {p.v1, p.v2, p.v3};
      j["zigzag_pairs"] = g.zigzags.count();
      j["vertices"] = g.complex.vertex_count();
      out.push_back(j);
    } else {
      std::cout << g.name << "  " << to_string(g.cls) << "  "
                << g.forward.monodromy.to_string() << "  pair " << p.v1 << "," << p.v2
                << "," << p.v3 << "  zigzags " << g.zigzags.count() << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zigzag analysis of closed surface triangulations"};
  app.require_subcommand(1);

  std::string file = "-", file_b, triple_a, triple_b, tau_flag, out_path, trace_path;
  std::string gen_kind;
  std::vector<int> gen_params;
  bool as_json = false, dot = false, swap = false, check = false;

  auto* info = app.add_subcommand("info", "summarize a complex");
  info->add_option("file", file);
  info->add_flag("--json", as_json);

  auto* zig = app.add_subcommand("zigzags", "list zigzags");
  zig->add_option("file", file);
  zig->add_option("--tau", tau_flag);
  zig->add_flag("--json", as_json);

  auto* pairs = app.add_subcommand("pairs", "list special pairs with monodromies");
  pairs->add_option("file", file);
  pairs->add_option("--tau", tau_flag);
  pairs->add_flag("--json", as_json);
  pairs->add_flag("--dot", dot, "emit the type-II subgraph as DOT");

  auto* gen = app.add_subcommand("gen", "generate a complex (bipyramid N | gamma P1 P2 P3 P4)");
  gen->add_option("kind", gen_kind)->required();
  gen->add_option("params", gen_params);
  gen->add_option("-o,--output", out_path);

  auto* sum = app.add_subcommand("sum", "connected sum along two special pairs");
  sum->add_option("file_a", file)->required();
  sum->add_option("pair_a", triple_a)->required();
  sum->add_option("file_b", file_b)->required();
  sum->add_option("pair_b", triple_b)->required();
  sum->add_flag("--swap", swap, "use the side-swapping gluing");
  sum->add_option("-o,--output", out_path);
  sum->add_flag("--json", as_json);

  auto* kn = app.add_subcommand("knot", "reduce to a single zigzag");
  kn->add_option("file", file);
  kn->add_option("--tau", tau_flag);
  kn->add_option("--trace", trace_path);
  kn->add_option("-o,--output", out_path);
  kn->add_flag("--json", as_json);

  auto* tab = app.add_subcommand("s4table", "print the permutation reference table");
  tab->add_flag("--check", check, "verify the table against direct products");
  tab->add_flag("--json", as_json);

  auto* cat = app.add_subcommand("catalog", "list the gadget catalog");
  cat->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(file, as_json);
    if (zig->parsed()) return cmd_zigzags(file, tau_flag, as_json);
    if (pairs->parsed()) return cmd_pairs(file, tau_flag, as_json, dot);
    if (gen->parsed()) return cmd_gen(gen_kind, gen_params, out_path);
    if (sum->parsed())
      return cmd_sum(file, triple_a, file_b, triple_b, swap, out_path, as_json);
    if (kn->parsed()) return cmd_knot(file, tau_flag, trace_path, out_path, as_json);
    if (tab->parsed()) return cmd_s4table(check, as_json);
    if (cat->parsed()) return cmd_catalog(as_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: ValidationError: " << e.what() << "\n";
    return kExitInput;
  } catch (const StarViolation& e) {
    std::cerr << "error: StarViolation: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
