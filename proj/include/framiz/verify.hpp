#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framiz/closure.hpp"
#include "framiz/framed.hpp"
#include "framiz/word.hpp"

namespace framiz {

enum class PresetId { Framed, YH, FTL, CTL, FBMW, Tied, BTHecke, BTTL, BTBMW, Affine, Cyclotomic };

PresetId parse_preset(const std::string& name);  // ConfigError on unknown names
std::string preset_id_name(PresetId p);
Preset generator_preset(PresetId p);
bool is_tied_family(PresetId p);
bool is_affine_family(PresetId p);

struct Relation {
  std::string name;  // tag shared by all index shifts, e.g. "rel-FTL"
  std::string word;  // must evaluate to zero
};

// Throws InapplicablePreset (or NoBoundary/HeterogeneousBlocks) when the
// preset cannot be evaluated on this shape.  Applicable does not mean valid.
void require_applicable(PresetId p, const std::vector<BlockKind>& kinds, const std::optional<BoundaryRep>& boundary);

std::vector<Relation> relations_for(PresetId p, int n, const std::vector<BlockKind>& kinds,
                                    const std::optional<BoundaryRep>& boundary);

// Distinct eigenvalues of the double braiding on M_b (x) V_b as words in q, a.
std::vector<std::string> double_braiding_eigenvalues(const BlockKind& kind, const BoundaryRep& boundary);
// Number of irreducible summands of M (x) V for one block (Clebsch-Gordan count).
int cg_summands(const BlockKind& kind, const BoundaryRep& boundary);

struct RelationOutcome {
  std::string name;
  std::string word;
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // first nonzero entry
};

struct CheckReport {
  std::string preset;
  std::string setup;
  std::vector<RelationOutcome> relations;
  bool all_hold() const {
    for (const auto& r : relations)
      if (!r.holds) return false;
    return true;
  }
  // Outcome of every instance carrying a tag: true if all hold.
  std::optional<bool> tag_holds(const std::string& tag) const {
    std::optional<bool> out;
    for (const auto& r : relations)
      if (r.name == tag) out = out.value_or(true) && r.holds;
    return out;
  }
};

struct DimReport {
  std::string preset;
  std::string setup;
  int n = 0;
  std::size_t closure = 0;
  std::optional<mpz_class> structural;  // block formula fed with single-block closure dims
  std::optional<mpz_class> formula;     // block formula fed with closed-form block dims
  std::string formula_name;
  std::string caveat;  // "n>N": the closed form is outside its proven range and not compared
  bool conjecture_evidence = false;
  bool matches() const {
    if (structural && *structural != static_cast<unsigned long>(closure)) return false;
    if (caveat.empty() && formula && *formula != static_cast<unsigned long>(closure)) return false;
    return structural || formula;
  }
};

struct BlockIsoReport {
  std::string setup;
  std::size_t closure = 0;
  std::vector<Composition> compositions;
  std::vector<std::size_t> block_dims;
  std::vector<mpz_class> expected;
  std::size_t residue = 0;
  bool ok() const {
    if (residue != 0) return false;
    for (std::size_t i = 0; i < block_dims.size(); ++i)
      if (expected[i] != static_cast<unsigned long>(block_dims[i])) return false;
    return true;
  }
};

struct CyclotomicReport {
  CheckReport relations;  // affine suite plus the eigenvalue polynomial
  std::size_t degree = 0;  // minimal polynomial of s0 on M (x) V
  int summands = 0;
  bool ok() const { return relations.all_hold() && degree == static_cast<std::size_t>(summands); }
};

namespace detail {

inline FieldHandle<ModularField> field_with_d(const FieldHandle<ModularField>& f, int d) {
  return std::make_shared<const ModularField>(f->prime(), d, f->seed(), f->root_order_bound());
}
inline FieldHandle<ExactField> field_with_d(const FieldHandle<ExactField>&, int d) {
  return std::make_shared<const ExactField>(d);
}

template <class F>
std::vector<BlockKind> kinds_of(const FramedSetup<F>& s) {
  std::vector<BlockKind> k;
  for (const auto& p : s.packs) k.push_back(p.kind);
  return k;
}

template <class F>
std::optional<BoundaryRep> boundary_of(const FramedSetup<F>& s) {
  if (!s.boundary) return std::nullopt;
  return s.boundary->front();
}

template <class F>
WordContext<F> context_for(const FramedSetup<F>& s) {
  WordContext<F> ctx;
  for (const auto& p : s.packs) {
    if (!p.a || !(*p.a == *s.packs.front().a)) return {};
  }
  if (!s.packs.empty()) ctx.a = s.packs.front().a_value();
  return ctx;
}

template <class F>
std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const SparseMatrix<F>& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (m.row_begin(i) < m.row_end(i)) return std::make_pair(i, m.col(m.row_begin(i)));
  return std::nullopt;
}

// Closure dims of the single-block image of one block kind on 0..n legs.
template <class F>
std::vector<std::size_t> single_block_dims(const FieldHandle<F>& fh, const BlockKind& kind, int n,
                                           const std::optional<BoundaryRep>& boundary, const ClosureOptions& opt) {
  auto f1 = field_with_d(fh, 1);
  std::vector<std::size_t> out;
  for (int k = 0; k <= n; ++k) {
    std::optional<std::vector<BoundaryRep>> bd;
    if (boundary) bd = std::vector<BoundaryRep>{*boundary};
    if (k == 0) {
      out.push_back(1);
      continue;
    }
    auto s = make_setup(f1, {kind}, k, bd);
    auto g = assignment_for(s, boundary ? Preset::Affine : Preset::Framed);
    out.push_back(subalgebra_dimension(g.generators(), opt).dimension);
  }
  return out;
}

inline FactorDims table_dims(const std::vector<std::size_t>& v) {
  return [v](int k) { return mpz_class(static_cast<unsigned long>(v.at(static_cast<std::size_t>(k)))); };
}

}  // namespace detail

template <class F>
CheckReport check_relations(PresetId p, const FramedSetup<F>& setup) {
  auto kinds = detail::kinds_of(setup);
  auto bd = detail::boundary_of(setup);
  require_applicable(p, kinds, bd);
  auto g = assignment_for(setup, generator_preset(p));
  auto ctx = detail::context_for(setup);
  CheckReport rep{preset_id_name(p), setup.describe(), {}};
  for (const auto& rel : relations_for(p, setup.n, kinds, bd)) {
    auto m = eval_word(rel.word, g, ctx);
    RelationOutcome o{rel.name, rel.word, m.is_zero(), std::nullopt};
    if (!o.holds) o.witness = detail::first_nonzero(m);
    rep.relations.push_back(std::move(o));
  }
  return rep;
}

template <class F>
DimReport image_dimension(PresetId p, const FramedSetup<F>& setup, const ClosureOptions& opt = {}) {
  auto kinds = detail::kinds_of(setup);
  auto bd = detail::boundary_of(setup);
  require_applicable(p, kinds, bd);
  auto g = assignment_for(setup, generator_preset(p));
  DimReport rep;
  rep.preset = preset_id_name(p);
  rep.setup = setup.describe();
  rep.n = setup.n;
  rep.closure = subalgebra_dimension(g.generators(), opt).dimension;

  int n = setup.n, d = setup.d;
  std::vector<FactorDims> closure_dims;
  for (int b = 0; b < d; ++b) {
    bool seen = false;
    for (int c = 0; c < b; ++c)
      if (kinds[c] == kinds[b]) {
        closure_dims.push_back(closure_dims[c]);
        seen = true;
        break;
      }
    if (!seen)
      closure_dims.push_back(detail::table_dims(
          detail::single_block_dims(setup.field, kinds[b], n, is_affine_family(p) ? bd : std::nullopt, opt)));
  }

  // Closed forms: Hecke images are known for every n; BMW values past n = N
  // are outside the isomorphism range and only reported.
  std::vector<FactorDims> closed;
  for (int b = 0; b < d; ++b) {
    auto kind = kinds[b];
    if (kind.is_bmw() && n > kind.N && !is_affine_family(p)) rep.caveat = "n>N";
    closed.push_back([kind](int k) { return kind.is_bmw() ? dim_bmw(k) : hecke_image_dim(k, kind.N); });
  }
  bool bmw_blocks = kinds.front().is_bmw();

  if (is_tied_family(p)) {
    // partitions longer than d drop out, so this also covers d < n
    rep.structural = dim_fixedpoint_sum(n, d, closure_dims.front());
    rep.formula = dim_fixedpoint_sum(n, d, closed.front());
    rep.formula_name = "fixed-point sum";
  } else if (is_affine_family(p)) {
    rep.structural = dim_block_sum(n, closure_dims);
    rep.formula_name = "affine block sum";
  } else {
    rep.structural = dim_block_sum(n, closure_dims);
    rep.formula = dim_block_sum(n, closed);
    rep.formula_name = "block sum";
    rep.conjecture_evidence = bmw_blocks && rep.caveat.empty();
  }
  return rep;
}

template <class F>
BlockIsoReport verify_block_iso(const FramedSetup<F>& setup, const ClosureOptions& opt = {}) {
  auto g = assignment_for(setup, Preset::Framed);
  auto closure = subalgebra_dimension(g.generators(), opt);
  BlockIsoReport rep;
  rep.setup = setup.describe();
  rep.closure = closure.dimension;
  auto kinds = detail::kinds_of(setup);
  std::vector<std::vector<std::size_t>> per_block;
  for (const auto& k : kinds) per_block.push_back(detail::single_block_dims(setup.field, k, setup.n, std::nullopt, opt));
  rep.compositions = enumerate_compositions(setup.n, setup.d);
  std::vector<SparseMatrix<F>> idem;
  for (const auto& nu : rep.compositions) {
    idem.push_back(proj_nu(setup, nu));
    mpz_class c = multinomial(nu);
    mpz_class e = c * c;
    for (int b = 0; b < setup.d; ++b) e *= static_cast<unsigned long>(per_block[b][nu[b]]);
    rep.expected.push_back(e);
  }
  auto split = block_split(closure.elements, idem, opt.exec);
  for (std::size_t i = 0; i < idem.size(); ++i) rep.block_dims.push_back(split.dims[i][i]);
  rep.residue = split.residue;
  return rep;
}

template <class F>
CyclotomicReport cyclotomic_check(const FramedSetup<F>& setup) {
  CyclotomicReport rep;
  rep.relations = check_relations(PresetId::Cyclotomic, setup);
  auto kinds = detail::kinds_of(setup);
  auto one_leg = make_setup(setup.field, kinds, 1, setup.boundary);
  rep.degree = minimal_polynomial(sigma0(one_leg)).size() - 1;
  auto bd = *detail::boundary_of(setup);
  rep.summands = cg_summands(kinds.front(), bd);
  for (const auto& k : kinds)
    if (cg_summands(k, bd) != rep.summands) rep.summands = -1;
  return rep;
}

template <class F>
DimReport affine_block_dim(const FramedSetup<F>& setup, const ClosureOptions& opt = {}) {
  return image_dimension(PresetId::Affine, setup, opt);
}

}  // namespace framiz
