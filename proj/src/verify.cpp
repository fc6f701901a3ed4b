#include "framiz/verify.hpp"

#include <algorithm>

namespace framiz {

namespace {

struct PresetName {
  PresetId id;
  const char* name;
};

const PresetName kNames[] = {
    {PresetId::Framed, "framed"},   {PresetId::YH, "yh"},           {PresetId::FTL, "ftl"},
    {PresetId::CTL, "ctl"},         {PresetId::FBMW, "fbmw"},       {PresetId::Tied, "tied"},
    {PresetId::BTHecke, "bt-hecke"}, {PresetId::BTTL, "bt-tl"},     {PresetId::BTBMW, "bt-bmw"},
    {PresetId::Affine, "affine"},   {PresetId::Cyclotomic, "cyclotomic"},
};

std::string S(int i) { return "s" + std::to_string(i); }
std::string T(int i) { return "t" + std::to_string(i); }
std::string E(int i) { return "E" + std::to_string(i); }
std::string e(int i) { return "e" + std::to_string(i); }
std::string L(int i) { return "L" + std::to_string(i); }

[[noreturn]] void inapplicable(PresetId p, const std::string& why) {
  throw Error(ErrorCode::InapplicablePreset, "preset " + preset_id_name(p) + " " + why);
}

bool all_gl(const std::vector<BlockKind>& kinds) {
  return std::all_of(kinds.begin(), kinds.end(), [](const BlockKind& k) { return !k.is_bmw(); });
}

bool all_bmw_same_a(const std::vector<BlockKind>& kinds) {
  for (const auto& k : kinds)
    if (!k.is_bmw() || !(k.a_power() == kinds.front().a_power())) return false;
  return true;
}

bool identical(const std::vector<BlockKind>& kinds) {
  return std::all_of(kinds.begin(), kinds.end(), [&](const BlockKind& k) { return k == kinds.front(); });
}

void framed_relations(int n, int d, std::vector<Relation>& out) {
  for (int i = 1; i <= n; ++i) out.push_back({"t-order", T(i) + "^" + std::to_string(d) + " - 1"});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({"t-comm", T(i) + " " + T(j) + " - " + T(j) + " " + T(i)});
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      int sj = j == i ? i + 1 : j == i + 1 ? i : j;
      out.push_back({"t-s", T(j) + " " + S(i) + " - " + S(i) + " " + T(sj)});
    }
}

void braid_relations(int n, std::vector<Relation>& out) {
  for (int i = 1; i + 1 < n; ++i)
    out.push_back({"braid", S(i) + " " + S(i + 1) + " " + S(i) + " - " + S(i + 1) + " " + S(i) + " " + S(i + 1)});
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) out.push_back({"far-comm", S(i) + " " + S(j) + " - " + S(j) + " " + S(i)});
}

void quadratic(const char* tag, int n, bool tie_left, std::vector<Relation>& out) {
  for (int i = 1; i < n; ++i) {
    std::string mid = tie_left ? E(i) + " " + S(i) : S(i) + " " + E(i);
    out.push_back({tag, S(i) + "^2 - (q - q^-1) " + mid + " - 1"});
  }
}

void tl_relation(const char* tag, int n, std::vector<Relation>& out) {
  for (int i = 1; i + 1 < n; ++i) out.push_back({tag, E(i) + " " + E(i + 1) + " " + L(i)});
}

void tied_relations(int n, std::vector<Relation>& out) {
  for (int i = 1; i < n; ++i) {
    out.push_back({"s-inv", S(i) + " " + S(i) + "^-1 - 1"});
    out.push_back({"TB-E2", E(i) + "^2 - " + E(i)});
    out.push_back({"TB-sE", S(i) + " " + E(i) + " - " + E(i) + " " + S(i)});
    for (int j = 1; j < n; ++j) {
      if (j > i) out.push_back({"TB-EE", E(i) + " " + E(j) + " - " + E(j) + " " + E(i)});
      if (std::abs(i - j) > 1) out.push_back({"TB-sEfar", S(i) + " " + E(j) + " - " + E(j) + " " + S(i)});
      if (std::abs(i - j) == 1) {
        out.push_back({"TB-Ess", E(i) + " " + S(j) + " " + S(i) + " - " + S(j) + " " + S(i) + " " + E(j)});
        out.push_back({"TB-Essinv", E(i) + " " + S(j) + " " + S(i) + "^-1 - " + S(j) + " " + S(i) + "^-1 " + E(j)});
        out.push_back({"TB-EEs", E(i) + " " + E(j) + " " + S(i) + " - " + E(j) + " " + S(i) + " " + E(j)});
        out.push_back({"TB-EEs", E(j) + " " + S(i) + " " + E(j) + " - " + S(i) + " " + E(j) + " " + E(i)});
      }
    }
  }
  braid_relations(n, out);
}

std::string ctl_word(int i, int d) {
  std::string sum;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        std::string t;
        auto factor = [&](int leg, int k) {
          if (k) t += (t.empty() ? "" : " ") + T(leg) + "^" + std::to_string(k);
        };
        factor(i, a);
        factor(i + 1, b);
        factor(i + 2, c);
        sum += (sum.empty() ? "" : " + ") + (t.empty() ? std::string("1") : t);
      }
  return "(" + sum + ") " + L(i) + " / " + std::to_string(d * d * d);
}

}  // namespace

PresetId parse_preset(const std::string& name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "bmw") return PresetId::FBMW;
  if (lower == "bt-hec") return PresetId::BTHecke;
  for (const auto& p : kNames)
    if (lower == p.name) return p.id;
  throw Error(ErrorCode::ConfigError, "unknown preset '" + name + "'");
}

std::string preset_id_name(PresetId p) {
  for (const auto& x : kNames)
    if (x.id == p) return x.name;
  return "?";
}

Preset generator_preset(PresetId p) {
  if (is_tied_family(p)) return Preset::Tied;
  if (is_affine_family(p)) return Preset::Affine;
  return Preset::Framed;
}

bool is_tied_family(PresetId p) {
  return p == PresetId::Tied || p == PresetId::BTHecke || p == PresetId::BTTL || p == PresetId::BTBMW;
}

bool is_affine_family(PresetId p) { return p == PresetId::Affine || p == PresetId::Cyclotomic; }

void require_applicable(PresetId p, const std::vector<BlockKind>& kinds, const std::optional<BoundaryRep>& boundary) {
  if (kinds.empty()) inapplicable(p, "needs at least one block");
  switch (p) {
    case PresetId::Framed:
      return;
    case PresetId::YH:
    case PresetId::FTL:
    case PresetId::CTL:
      if (!all_gl(kinds)) inapplicable(p, "needs GL blocks");
      return;
    case PresetId::FBMW:
      if (!all_bmw_same_a(kinds)) inapplicable(p, "needs SO/SP blocks sharing one value of a");
      return;
    case PresetId::Tied:
      if (!identical(kinds)) inapplicable(p, "needs identical blocks");
      return;
    case PresetId::BTHecke:
    case PresetId::BTTL:
      if (!identical(kinds) || !all_gl(kinds)) inapplicable(p, "needs identical GL blocks");
      return;
    case PresetId::BTBMW:
      if (!identical(kinds) || !all_bmw_same_a(kinds)) inapplicable(p, "needs identical SO/SP blocks");
      return;
    case PresetId::Affine:
      if (!boundary) inapplicable(p, "needs a boundary module");
      return;
    case PresetId::Cyclotomic:
      if (!boundary) inapplicable(p, "needs a boundary module");
      if (!all_gl(kinds)) inapplicable(p, "needs GL blocks");
      return;
  }
}

std::vector<Relation> relations_for(PresetId p, int n, const std::vector<BlockKind>& kinds,
                                    const std::optional<BoundaryRep>& boundary) {
  require_applicable(p, kinds, boundary);
  int d = static_cast<int>(kinds.size());
  std::vector<Relation> out;
  if (!is_tied_family(p)) {
    framed_relations(n, d, out);
    braid_relations(n, out);
  }
  switch (p) {
    case PresetId::Framed:
      break;
    case PresetId::YH:
      quadratic("YH", n, true, out);
      break;
    case PresetId::FTL:
      quadratic("YH", n, true, out);
      tl_relation("rel-FTL", n, out);
      break;
    case PresetId::CTL:
      quadratic("YH", n, true, out);
      for (int i = 1; i + 1 < n; ++i) out.push_back({"rel-CTL", ctl_word(i, d)});
      break;
    case PresetId::FBMW:
      for (int i = 1; i < n; ++i) {
        out.push_back({"FBMW1", e(i) + " " + S(i) + " - a^-1 " + e(i)});
        out.push_back({"FBMWeE", e(i) + " " + E(i) + " - " + e(i)});
        out.push_back({"FBMW5", e(i) + "^2 - ((a - a^-1) / (q - q^-1) + 1) " + e(i)});
        out.push_back({"FBMW6", "(" + S(i) + " - a^-1)(" + S(i) + "^2 - (q - q^-1) " + S(i) + " " + E(i) + " - 1)"});
        for (int j = 1; j < n; ++j) {
          if (j != i) out.push_back({"FBMWeE2", e(i) + " " + E(j) + " - " + E(j) + " " + e(i)});
          if (std::abs(i - j) == 1) out.push_back({"FBMW3", e(i) + " " + e(j) + " " + e(i) + " - " + e(i) + " " + E(j)});
        }
      }
      for (int i = 1; i + 1 < n; ++i) {
        std::string tail = e(i) + " " + E(i + 1);
        out.push_back({"FBMW2", e(i) + " " + S(i + 1) + " " + tail + " - a " + tail});
        out.push_back({"FBMW2", e(i) + " " + S(i + 1) + "^-1 " + tail + " - a^-1 " + tail});
      }
      break;
    case PresetId::Tied:
    case PresetId::BTHecke:
    case PresetId::BTTL:
    case PresetId::BTBMW:
      tied_relations(n, out);
      if (p == PresetId::BTHecke || p == PresetId::BTTL) quadratic("BT-Hec", n, false, out);
      if (p == PresetId::BTTL) tl_relation("BT-TL", n, out);
      if (p == PresetId::BTBMW) {
        for (int i = 1; i < n; ++i) {
          out.push_back({"BTBMW1", e(i) + " " + S(i) + " - a^-1 " + e(i)});
          out.push_back({"BTBMWeE", e(i) + " " + E(i) + " - " + e(i)});
          for (int j = 1; j < n; ++j)
            if (std::abs(i - j) == 1) {
              std::string tail = e(i) + " " + E(j);
              out.push_back({"BTBMW2", e(i) + " " + S(j) + " " + tail + " - a " + tail});
              out.push_back({"BTBMW2", e(i) + " " + S(j) + "^-1 " + tail + " - a^-1 " + tail});
            }
        }
      }
      break;
    case PresetId::Affine:
    case PresetId::Cyclotomic:
      if (n >= 2) out.push_back({"affine-braid", "s0 s1 s0 s1 - s1 s0 s1 s0"});
      for (int j = 2; j < n; ++j) out.push_back({"affine-far", "s0 " + S(j) + " - " + S(j) + " s0"});
      for (int j = 1; j <= n; ++j) out.push_back({"t-s0", T(j) + " s0 - s0 " + T(j)});
      if (p == PresetId::Cyclotomic && n >= 1) {
        std::vector<std::string> roots;
        for (const auto& k : kinds)
          for (const auto& r : double_braiding_eigenvalues(k, *boundary))
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        std::string w;
        for (const auto& r : roots) w += "(s0 - " + r + ")";
        out.push_back({"cyclotomic", w});
      }
      break;
  }
  return out;
}

std::vector<std::string> double_braiding_eigenvalues(const BlockKind& kind, const BoundaryRep& boundary) {
  if (boundary.type == BoundaryRep::Type::Sym) {
    if (!(kind == BlockKind{Family::GL, 2}))
      throw Error(ErrorCode::UnsupportedBoundary, "Sym boundary needs GL(2) blocks");
    if (boundary.k == 0) return {"1"};
    return {"q^" + std::to_string(2 * boundary.k), "q^-2"};
  }
  if (!kind.is_bmw()) return kind.N >= 2 ? std::vector<std::string>{"q^2", "q^-2"} : std::vector<std::string>{"q^2"};
  if (kind == BlockKind{Family::SP, 1}) return {"q^2", "a^-2"};
  return {"q^2", "q^-2", "a^-2"};
}

int cg_summands(const BlockKind& kind, const BoundaryRep& boundary) {
  if (boundary.type == BoundaryRep::Type::Sym) {
    if (!(kind == BlockKind{Family::GL, 2}))
      throw Error(ErrorCode::UnsupportedBoundary, "Sym boundary needs GL(2) blocks");
    return boundary.k >= 1 ? 2 : 1;
  }
  if (!kind.is_bmw()) return kind.N >= 2 ? 2 : 1;
  return kind == BlockKind{Family::SP, 1} ? 2 : 3;
}

}  // namespace framiz
