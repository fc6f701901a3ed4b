#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framiz/verify.hpp"

namespace framiz {

// One fully resolved run: a preset on a setup, over one or more fields.
struct Scenario {
  PresetId preset = PresetId::Framed;
  std::vector<BlockKind> blocks;  // one per framing value
  int n = 0;
  std::optional<BoundaryRep> boundary;
  Backend backend = Backend::Modular;
  int primes = 3;
  u64 seed = 1;
  std::size_t rank_cap = 20000;

  int d() const { return static_cast<int>(blocks.size()); }
  std::string describe() const;
};

struct FieldRun {
  std::string backend;  // "modular" or "exact"
  u64 prime = 0;
  u64 seed = 0;
};

// Fields a scenario runs over: the exact field, or `primes` modular ones.
std::vector<FieldRun> field_runs(const Scenario& sc);

struct CheckResult {
  CheckReport report;  // relation holds only if it held over every field
  bool consistent = true;  // every field gave the same outcome per relation
  std::vector<FieldRun> fields;
};

struct DimResult {
  DimReport report;
  bool consistent = true;
  std::vector<std::size_t> per_field;
  std::vector<FieldRun> fields;
};

struct BlockIsoResult {
  BlockIsoReport report;
  bool consistent = true;
  std::vector<FieldRun> fields;
};

struct CyclotomicResult {
  CyclotomicReport report;
  bool consistent = true;
  std::vector<FieldRun> fields;
};

CheckResult run_check(const Scenario& sc);
DimResult run_dim(const Scenario& sc);
BlockIsoResult run_block_iso(const Scenario& sc);
CyclotomicResult run_cyclotomic(const Scenario& sc);

}  // namespace framiz
