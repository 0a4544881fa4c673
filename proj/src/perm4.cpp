#include "zigzag/perm4.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace zigzag {

Perm4::Perm4() { std::iota(img_.begin(), img_.end(), 0); }

Perm4 Perm4::from_cycles(std::string_view text) {
  Perm4 p;
  if (text == "id" || text.empty()) return p;
  std::vector<int> cycle;
  std::array<bool, 4> seen{};
  bool open = false;
  for (char ch : text) {
    if (ch == '(') {
      if (open) throw std::invalid_argument("nested '(' in cycle notation");
      open = true;
      cycle.clear();
    } else if (ch == ')') {
      if (!open) throw std::invalid_argument("unmatched ')' in cycle notation");
      open = false;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        p.img_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    } else if (ch >= '1' && ch <= '4') {
      if (!open) throw std::invalid_argument("label outside cycle");
      if (seen[ch - '1'])
        throw std::invalid_argument("cycles are not disjoint");
      seen[ch - '1'] = true;
      cycle.push_back(ch - '0');
    } else {
      throw std::invalid_argument(std::string("bad character '") + ch +
                                  "' in cycle notation");
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle");
  return p;
}

Perm4 Perm4::from_images(const std::array<int, 4>& images) {
  Perm4 p;
  std::array<bool, 4> hit{};
  for (int i = 0; i < 4; ++i) {
    if (images[i] < 1 || images[i] > 4 || hit[images[i] - 1])
      throw std::invalid_argument("image table is not a bijection on {1,2,3,4}");
    hit[images[i] - 1] = true;
    p.img_[i] = images[i] - 1;
  }
  return p;
}

int Perm4::apply(int x) const { return img_[x - 1] + 1; }

Perm4 Perm4::operator*(const Perm4& q) const {
  Perm4 r;
  for (int i = 0; i < 4; ++i) r.img_[i] = img_[q.img_[i]];
  return r;
}

Perm4 Perm4::inverse() const {
  Perm4 r;
  for (int i = 0; i < 4; ++i) r.img_[img_[i]] = i;
  return r;
}

std::vector<std::vector<int>> Perm4::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, 4> done{};
  for (int i = 0; i < 4; ++i) {
    if (done[i]) continue;
    std::vector<int> cycle;
    int j = i;
    do {
      done[j] = true;
      cycle.push_back(j + 1);
      j = img_[j];
    } while (j != i);
    out.push_back(std::move(cycle));
  }
  return out;
}

int Perm4::cycle_count() const { return static_cast<int>(cycles().size()); }

std::string Perm4::to_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (int x : cycle) out += static_cast<char>('0' + x);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

const Perm4& side_swap_perm() {
  static const Perm4 s = Perm4::from_cycles("(13)(24)");
  return s;
}

const Perm4& orientation_flip_perm() {
  static const Perm4 t = Perm4::from_cycles("(12)(34)");
  return t;
}

std::string to_string(MonodromyClass k) {
  return "K_" + std::to_string(static_cast<int>(k));
}

namespace {

const std::vector<std::vector<const char*>>& class_table_text() {
  static const std::vector<std::vector<const char*>> table = {
      {"id"},
      {"(1234)"},
      {"(13)(24)"},
      {"(1432)"},
      {"(14)(23)"},
      {"(12)(34)"},
      {"(24)", "(13)"},
      {"(34)", "(12)"},
      {"(23)", "(14)"},
      {"(1324)", "(1423)"},
      {"(1243)", "(1342)"},
      {"(234)", "(123)", "(124)", "(134)"},
      {"(243)", "(132)", "(142)", "(143)"},
  };
  return table;
}

const std::map<Perm4, MonodromyClass>& class_lookup() {
  static const std::map<Perm4, MonodromyClass> lookup = [] {
    std::map<Perm4, MonodromyClass> m;
    const auto& table = class_table_text();
    for (std::size_t i = 0; i < table.size(); ++i)
      for (const char* text : table[i])
        m[Perm4::from_cycles(text)] = static_cast<MonodromyClass>(i);
    return m;
  }();
  return lookup;
}

}  // namespace

MonodromyClass classify(const Perm4& p) { return class_lookup().at(p); }

const std::vector<Perm4>& class_members(MonodromyClass k) {
  static const std::vector<std::vector<Perm4>> members = [] {
    std::vector<std::vector<Perm4>> out;
    for (const auto& texts : class_table_text()) {
      std::vector<Perm4> perms;
      for (const char* text : texts) perms.push_back(Perm4::from_cycles(text));
      out.push_back(std::move(perms));
    }
    return out;
  }();
  return members[static_cast<int>(k)];
}

int class_zigzag_count(MonodromyClass k) {
  return (side_swap_perm() * class_members(k).front()).cycle_count();
}

const std::vector<Perm4>& s4_elements() {
  static const std::vector<Perm4> elements = [] {
    // Fixed presentation order of S4 used by the printed table.
    const char* order[] = {
        "id",     "(34)",     "(23)",   "(234)",  "(243)",  "(24)",
        "(12)",   "(12)(34)", "(123)",  "(1234)", "(1243)", "(124)",
        "(132)",  "(1342)",   "(13)",   "(134)",  "(13)(24)", "(1324)",
        "(1432)", "(142)",    "(143)",  "(14)",   "(1423)", "(14)(23)",
    };
    std::vector<Perm4> out;
    for (const char* text : order) out.push_back(Perm4::from_cycles(text));
    return out;
  }();
  return elements;
}

std::vector<S4TableRow> s4_table() {
  const Perm4& s = side_swap_perm();
  const Perm4& t = orientation_flip_perm();
  const Perm4 st = s * t;
  std::vector<S4TableRow> rows;
  for (const Perm4& p : s4_elements()) {
    S4TableRow row;
    row.p = p;
    row.inv = p.inverse();
    row.sp = s * p;
    row.tinv = t * row.inv;
    row.stinv = st * row.inv;
    row.sps = s * p * s;
    row.tinvt = t * row.inv * t;
    row.stinvst = st * row.inv * st;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zigzag
