#include "framiz/scenario.hpp"

namespace framiz {

namespace {

AnyField field_for(const Scenario& sc, const FieldRun& run) {
  FieldSpec spec;
  spec.backend = run.backend == "exact" ? Backend::Exact : Backend::Modular;
  spec.d = sc.d();
  spec.prime = run.prime;
  spec.seed = run.seed;
  return make_field(spec);
}

// Calls fn(setup) for every field of the scenario.
template <class Fn>
void for_each_field(const Scenario& sc, int n, const std::vector<FieldRun>& runs, Fn&& fn) {
  if (sc.blocks.empty()) throw Error(ErrorCode::ConfigError, "no blocks given");
  std::optional<std::vector<BoundaryRep>> bd;
  if (sc.boundary) bd = std::vector<BoundaryRep>(sc.blocks.size(), *sc.boundary);
  for (const auto& run : runs) {
    std::visit([&](const auto& fh) { fn(make_setup(fh, sc.blocks, n, bd)); }, field_for(sc, run));
  }
}

ClosureOptions options(const Scenario& sc) {
  ClosureOptions o;
  o.rank_cap = sc.rank_cap;
  return o;
}

}  // namespace

std::string Scenario::describe() const {
  std::string s = preset_id_name(preset) + " d=" + std::to_string(d()) + " n=" + std::to_string(n) + " blocks=";
  for (std::size_t b = 0; b < blocks.size(); ++b) s += (b ? "," : "") + blocks[b].str();
  if (boundary) s += " boundary=" + boundary->str();
  return s;
}

std::vector<FieldRun> field_runs(const Scenario& sc) {
  if (sc.backend == Backend::Exact) return {FieldRun{"exact", 0, 0}};
  if (sc.primes < 1) throw Error(ErrorCode::ConfigError, "need at least one prime");
  std::vector<FieldRun> out;
  auto ps = primes_for(sc.d() > 0 ? sc.d() : 1, static_cast<std::size_t>(sc.primes));
  for (int k = 0; k < sc.primes; ++k) out.push_back(FieldRun{"modular", ps[k], sc.seed + static_cast<u64>(k)});
  return out;
}

CheckResult run_check(const Scenario& sc) {
  require_applicable(sc.preset, sc.blocks, sc.boundary);
  CheckResult res;
  res.fields = field_runs(sc);
  bool first = true;
  for_each_field(sc, sc.n, res.fields, [&](const auto& setup) {
    auto rep = check_relations(sc.preset, setup);
    if (first) {
      res.report = std::move(rep);
      first = false;
      return;
    }
    for (std::size_t i = 0; i < rep.relations.size(); ++i) {
      auto& acc = res.report.relations[i];
      if (acc.holds != rep.relations[i].holds) res.consistent = false;
      if (!rep.relations[i].holds && acc.holds) {
        acc.holds = false;
        acc.witness = rep.relations[i].witness;
      }
    }
  });
  return res;
}

DimResult run_dim(const Scenario& sc) {
  require_applicable(sc.preset, sc.blocks, sc.boundary);
  DimResult res;
  res.fields = field_runs(sc);
  for_each_field(sc, sc.n, res.fields, [&](const auto& setup) {
    auto rep = image_dimension(sc.preset, setup, options(sc));
    res.per_field.push_back(rep.closure);
    if (res.per_field.size() == 1) {
      res.report = std::move(rep);
      return;
    }
    if (rep.closure != res.report.closure || rep.structural != res.report.structural) res.consistent = false;
    res.report.closure = std::max(res.report.closure, rep.closure);
  });
  return res;
}

BlockIsoResult run_block_iso(const Scenario& sc) {
  BlockIsoResult res;
  res.fields = field_runs(sc);
  for_each_field(sc, sc.n, res.fields, [&](const auto& setup) {
    auto rep = verify_block_iso(setup, options(sc));
    if (res.report.compositions.empty()) {
      res.report = std::move(rep);
      return;
    }
    if (rep.block_dims != res.report.block_dims || rep.residue != res.report.residue || rep.expected != res.report.expected)
      res.consistent = false;
    res.report.residue = std::max(res.report.residue, rep.residue);
  });
  return res;
}

CyclotomicResult run_cyclotomic(const Scenario& sc) {
  require_applicable(PresetId::Cyclotomic, sc.blocks, sc.boundary);
  CyclotomicResult res;
  res.fields = field_runs(sc);
  bool first = true;
  for_each_field(sc, sc.n, res.fields, [&](const auto& setup) {
    auto rep = cyclotomic_check(setup);
    if (first) {
      res.report = std::move(rep);
      first = false;
      return;
    }
    if (rep.degree != res.report.degree) res.consistent = false;
    for (std::size_t i = 0; i < rep.relations.relations.size(); ++i) {
      auto& acc = res.report.relations.relations[i];
      if (acc.holds != rep.relations.relations[i].holds) res.consistent = false;
      acc.holds = acc.holds && rep.relations.relations[i].holds;
    }
  });
  return res;
}

}  // namespace framiz
