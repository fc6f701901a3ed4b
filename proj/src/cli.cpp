#include "framiz/cli.hpp"

#include <algorithm>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "framiz/scenario.hpp"

namespace framiz {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string preset = "framed";
  int d = 0;
  std::string block;
  std::vector<std::string> blocks;
  std::string n = "0";
  std::string boundary;
  bool exact = false;
  int primes = 3;
  u64 seed = 1;
  std::string format = "tsv";
  std::size_t rank_cap = 20000;
  std::vector<std::string> expect_fail;
  int jobs = 0;
  // table
  std::string family;
  int max_n = 3;
  std::size_t max_ambient = 800;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_n_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int v = std::stoi(s, &used);
      if (used != s.size() || v < 0) throw UsageError("bad --n '" + s + "'");
      return {v};
    }
    std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw UsageError("bad --n '" + s + "'");
    int hi = std::stoi(b, &used);
    if (used != b.size() || lo < 0 || hi < lo) throw UsageError("bad --n '" + s + "'");
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  } catch (const std::logic_error&) {
    throw UsageError("bad --n '" + s + "'");
  }
}

Scenario scenario_from(const Config& c, int n) {
  Scenario sc;
  sc.preset = parse_preset(c.preset);
  if (!c.blocks.empty() && !c.block.empty()) throw UsageError("give either --block or --blocks, not both");
  if (!c.blocks.empty()) {
    for (const auto& b : c.blocks) sc.blocks.push_back(parse_block_kind(b));
    if (c.d != 0 && c.d != static_cast<int>(sc.blocks.size()))
      throw UsageError("--d " + std::to_string(c.d) + " does not match " + std::to_string(sc.blocks.size()) + " blocks");
  } else {
    if (c.block.empty()) throw UsageError("a block kind is required (--block or --blocks)");
    int d = c.d == 0 ? 1 : c.d;
    if (d < 1) throw UsageError("--d must be positive");
    sc.blocks.assign(static_cast<std::size_t>(d), parse_block_kind(c.block));
  }
  sc.n = n;
  if (!c.boundary.empty()) sc.boundary = parse_boundary(c.boundary);
  sc.backend = c.exact ? Backend::Exact : Backend::Modular;
  sc.primes = c.primes;
  sc.seed = c.seed;
  sc.rank_cap = c.rank_cap;
  return sc;
}

Json num(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json fields_json(const std::vector<FieldRun>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) {
    Json j{{"backend", f.backend}};
    if (f.backend == "modular") {
      j["prime"] = f.prime;
      j["seed"] = f.seed;
    }
    a.push_back(j);
  }
  return a;
}

Json config_json(const Config& c, const std::string& command, const std::vector<FieldRun>& fields) {
  Json j;
  j["command"] = command;
  if (command == "table") {
    j["family"] = c.family;
    j["d"] = c.d;
    j["max_n"] = c.max_n;
    j["max_ambient"] = c.max_ambient;
  } else {
    j["preset"] = c.preset;
    j["d"] = c.d;
    if (!c.blocks.empty())
      j["blocks"] = c.blocks;
    else
      j["block"] = c.block;
    j["n"] = c.n;
    j["boundary"] = c.boundary.empty() ? Json(nullptr) : Json(c.boundary);
    j["expect_fail"] = c.expect_fail;
  }
  j["backend"] = c.exact ? "exact" : "modular";
  j["primes"] = c.primes;
  j["seed"] = c.seed;
  j["rank_cap"] = c.rank_cap;
  j["fields"] = fields_json(fields);
  return j;
}

std::string opt_str(const std::optional<mpz_class>& v) { return v ? v->get_str() : "-"; }

// Runs fn(i) for i in [0, count) with at most `jobs` in flight; results in index order.
template <class R, class Fn>
std::vector<R> run_ordered(std::size_t count, int jobs, Fn fn) {
  std::size_t width = jobs > 0 ? static_cast<std::size_t>(jobs) : std::max(1u, std::thread::hardware_concurrency());
  std::vector<R> out;
  for (std::size_t start = 0; start < count; start += width) {
    std::vector<std::future<R>> fs;
    for (std::size_t i = start; i < std::min(count, start + width); ++i)
      fs.push_back(std::async(width == 1 ? std::launch::deferred : std::launch::async, fn, i));
    for (auto& f : fs) out.push_back(f.get());
  }
  return out;
}

int cmd_check(const Config& c, std::ostream& out) {
  auto ns = parse_n_range(c.n);
  if (ns.size() != 1) throw UsageError("check takes a single --n");
  auto sc = scenario_from(c, ns.front());
  auto res = run_check(sc);

  bool ok = res.consistent;
  for (const auto& tag : c.expect_fail)
    if (!res.report.tag_holds(tag).has_value()) throw UsageError("--expect-fail " + tag + ": no such relation in preset " + c.preset);
  auto expected_fail = [&](const std::string& tag) {
    return std::find(c.expect_fail.begin(), c.expect_fail.end(), tag) != c.expect_fail.end();
  };
  std::vector<bool> as_expected;
  for (const auto& r : res.report.relations) {
    bool good = expected_fail(r.name) ? !r.holds : r.holds;
    as_expected.push_back(good);
    ok = ok && good;
  }

  if (c.format == "json") {
    Json j;
    j["schema"] = kReportSchema;
    j["config"] = config_json(c, "check", res.fields);
    j["setup"] = res.report.setup;
    Json rels = Json::array();
    for (std::size_t i = 0; i < res.report.relations.size(); ++i) {
      const auto& r = res.report.relations[i];
      Json x{{"relation", r.name}, {"word", r.word}, {"holds", r.holds}, {"expected", expected_fail(r.name) ? "fail" : "hold"},
             {"as_expected", static_cast<bool>(as_expected[i])}};
      x["witness"] = r.witness ? Json::array({r.witness->first, r.witness->second}) : Json(nullptr);
      rels.push_back(x);
    }
    j["relations"] = rels;
    j["consistent_across_fields"] = res.consistent;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "# " << res.report.setup << " preset=" << res.report.preset << "\n";
    out << "relation\tstatus\texpected\tresult\twitness\tword\n";
    for (std::size_t i = 0; i < res.report.relations.size(); ++i) {
      const auto& r = res.report.relations[i];
      std::string w = r.witness ? std::to_string(r.witness->first) + "," + std::to_string(r.witness->second) : "-";
      out << r.name << "\t" << (r.holds ? "holds" : "fails") << "\t" << (expected_fail(r.name) ? "fail" : "hold") << "\t"
          << (as_expected[i] ? "ok" : "UNEXPECTED") << "\t" << w << "\t" << r.word << "\n";
    }
    if (!res.consistent) out << "# WARNING: outcomes differ between fields\n";
    out << "# " << (ok ? "OK" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_dim(const Config& c, std::ostream& out) {
  auto ns = parse_n_range(c.n);
  std::vector<Scenario> scs;
  for (int n : ns) scs.push_back(scenario_from(c, n));
  require_applicable(scs.front().preset, scs.front().blocks, scs.front().boundary);
  auto results = run_ordered<DimResult>(scs.size(), c.jobs, [&](std::size_t i) { return run_dim(scs[i]); });

  bool ok = true;
  for (const auto& r : results) ok = ok && r.consistent && r.report.matches();
  if (c.format == "json") {
    Json j;
    j["schema"] = kReportSchema;
    j["config"] = config_json(c, "dim", results.front().fields);
    Json rows = Json::array();
    for (const auto& r : results) {
      const auto& d = r.report;
      Json x{{"n", d.n}, {"setup", d.setup}, {"closure", d.closure}};
      x["structural"] = d.structural ? num(*d.structural) : Json(nullptr);
      x["formula"] = d.formula ? num(*d.formula) : Json(nullptr);
      x["formula_name"] = d.formula_name;
      x["match"] = d.matches();
      x["caveat"] = d.caveat.empty() ? Json(nullptr) : Json(d.caveat);
      x["label"] = d.conjecture_evidence ? Json("conjecture evidence") : Json(nullptr);
      x["per_field"] = r.per_field;
      x["consistent_across_fields"] = r.consistent;
      rows.push_back(x);
    }
    j["rows"] = rows;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    const auto& s0 = scs.front();
    out << "# d=" << s0.d() << " n=" << c.n << " blocks=";
    for (std::size_t b = 0; b < s0.blocks.size(); ++b) out << (b ? "," : "") << s0.blocks[b].str();
    if (s0.boundary) out << " boundary=" << s0.boundary->str();
    out << " preset=" << results.front().report.preset << "\n";
    out << "n\tclosure\tstructural\tformula\tmatch\tcaveat\tlabel\n";
    for (const auto& r : results) {
      const auto& d = r.report;
      out << d.n << "\t" << d.closure << "\t" << opt_str(d.structural) << "\t" << opt_str(d.formula) << "\t"
          << (d.matches() && r.consistent ? "yes" : "NO") << "\t" << (d.caveat.empty() ? "-" : d.caveat) << "\t"
          << (d.conjecture_evidence ? "conjecture evidence" : "-") << "\n";
    }
    out << "# " << (ok ? "OK" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

struct TableFamily {
  std::string name;
  PresetId preset;
  bool tied;
  int default_d;
};

TableFamily table_family(const std::string& name) {
  static const std::vector<TableFamily> fams{
      {"fbmw", PresetId::FBMW, false, 2},  {"yh", PresetId::YH, false, 3},         {"ftl", PresetId::FTL, false, 2},
      {"bt-hecke", PresetId::BTHecke, true, 0}, {"bt-tl", PresetId::BTTL, true, 0}, {"bt-bmw", PresetId::BTBMW, true, 0},
  };
  for (const auto& f : fams)
    if (f.name == name) return f;
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + name + "' (fbmw, bt-hecke, bt-tl, bt-bmw, yh, ftl)");
}

// Block kind that makes the closure column comparable with the formula at n.
BlockKind table_block(const TableFamily& f, int n) {
  switch (f.preset) {
    case PresetId::FBMW:
    case PresetId::BTBMW: return BlockKind{Family::SO, std::max(2, n)};
    case PresetId::YH:
    case PresetId::BTHecke: return BlockKind{Family::GL, std::max(1, n)};
    default: return BlockKind{Family::GL, 2};
  }
}

mpz_class table_formula(const TableFamily& f, int n, int d) {
  FactorDims hecke = [](int k) { return factorial(k); };
  FactorDims tl = [](int k) { return dim_tl(k); };
  FactorDims bmw = [](int k) { return dim_bmw(k); };
  switch (f.preset) {
    case PresetId::FBMW: return dim_block_sum(n, d, bmw);
    case PresetId::YH: return dim_yh(n, d);
    case PresetId::FTL: return dim_block_sum(n, d, tl);
    case PresetId::BTHecke: return dim_fixedpoint_sum(n, d, hecke);
    case PresetId::BTTL: return dim_fixedpoint_sum(n, d, tl);
    default: return dim_fixedpoint_sum(n, d, bmw);
  }
}

int cmd_table(const Config& c, std::ostream& out) {
  auto fam = table_family(c.family);
  if (c.max_n < 0) throw UsageError("--max-n must be nonnegative");
  struct Row {
    int n, d;
    mpz_class formula;
    std::optional<DimResult> closure;
  };
  std::vector<Row> rows;
  std::vector<FieldRun> fields;
  for (int n = 0; n <= c.max_n; ++n) {
    int d = fam.tied ? std::max(1, n) : (c.d > 0 ? c.d : fam.default_d);
    rows.push_back({n, d, table_formula(fam, n, d), std::nullopt});
  }
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto kind = table_block(fam, rows[i].n);
    double amb = std::pow(static_cast<double>(kind.vector_dim()) * rows[i].d, rows[i].n);
    if (amb <= static_cast<double>(c.max_ambient)) todo.push_back(i);
  }
  auto computed = run_ordered<DimResult>(todo.size(), c.jobs, [&](std::size_t k) {
    const auto& r = rows[todo[k]];
    Scenario sc;
    sc.preset = fam.preset;
    sc.blocks.assign(static_cast<std::size_t>(r.d), table_block(fam, r.n));
    sc.n = r.n;
    sc.backend = c.exact ? Backend::Exact : Backend::Modular;
    sc.primes = c.primes;
    sc.seed = c.seed;
    sc.rank_cap = c.rank_cap;
    return run_dim(sc);
  });
  for (std::size_t k = 0; k < todo.size(); ++k) rows[todo[k]].closure = computed[k];
  if (!computed.empty()) fields = computed.front().fields;

  bool ok = true;
  auto agrees = [](const Row& r) {
    return !r.closure || (r.closure->consistent && r.formula == static_cast<unsigned long>(r.closure->report.closure));
  };
  for (const auto& r : rows) ok = ok && agrees(r);

  if (c.format == "json") {
    Json j;
    j["schema"] = kReportSchema;
    j["config"] = config_json(c, "table", fields);
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json x{{"n", r.n}, {"d", r.d}, {"formula", num(r.formula)}};
      x["closure"] = r.closure ? Json(r.closure->report.closure) : Json(nullptr);
      x["block"] = table_block(fam, r.n).str();
      x["agree"] = r.closure ? Json(agrees(r)) : Json(nullptr);
      arr.push_back(x);
    }
    j["rows"] = arr;
    if (fam.preset == PresetId::FBMW) j["label"] = "conjecture evidence";
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "# family=" << fam.name << (fam.preset == PresetId::FBMW ? " (conjecture evidence)" : "") << "\n";
    out << "n\td\tformula\tclosure\tblock\tagree\n";
    for (const auto& r : rows)
      out << r.n << "\t" << r.d << "\t" << r.formula.get_str() << "\t"
          << (r.closure ? std::to_string(r.closure->report.closure) : "-") << "\t" << table_block(fam, r.n).str() << "\t"
          << (r.closure ? (agrees(r) ? "yes" : "NO") : "-") << "\n";
    out << "# " << (ok ? "OK" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

void add_scenario_options(CLI::App* sub, Config& c) {
  sub->add_option("--preset", c.preset, "framed, yh, ftl, ctl, fbmw (bmw), tied, bt-hecke, bt-tl, bt-bmw, affine, cyclotomic");
  sub->add_option("--d", c.d, "number of blocks (framing order)");
  sub->add_option("--block", c.block, "block kind for every framing value: gl<N>, so<2N>, sp<2N>");
  sub->add_option("--blocks", c.blocks, "comma list of block kinds, one per framing value")->delimiter(',');
  sub->add_option("--n", c.n, "number of legs, or a range a..b");
  sub->add_option("--boundary", c.boundary, "boundary module: vector or sym<k>");
}

void add_field_options(CLI::App* sub, Config& c) {
  sub->add_flag("--exact", c.exact, "use the exact field Q(zeta_d)(q) instead of modular specializations");
  sub->add_option("--primes", c.primes, "number of (prime, seed) pairs for the modular backend")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "base seed for the modular specializations");
  sub->add_option("--format", c.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  sub->add_option("--rank-cap", c.rank_cap, "abort closures beyond this dimension");
  sub->add_option("--jobs", c.jobs, "scenarios run concurrently (0: one per core)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"framiz: framed braid algebra images, relation checks and dimension tables", "framiz"};
  app.require_subcommand(1);
  Config c;
  auto* check = app.add_subcommand("check", "evaluate the relations of a preset on a setup");
  add_scenario_options(check, c);
  add_field_options(check, c);
  check->add_option("--expect-fail", c.expect_fail, "relation tag expected to fail (repeatable)");
  auto* dim = app.add_subcommand("dim", "closure dimension of the image against the block formulas");
  add_scenario_options(dim, c);
  add_field_options(dim, c);
  auto* table = app.add_subcommand("table", "dimension sequence of an algebra family");
  table->add_option("--family", c.family, "fbmw, bt-hecke, bt-tl, bt-bmw, yh, ftl")->required();
  table->add_option("--max-n", c.max_n, "largest n");
  table->add_option("--d", c.d, "number of blocks (ignored for bt-* families, where d = n)");
  table->add_option("--max-ambient", c.max_ambient, "compute the closure column only up to this ambient dimension");
  add_field_options(table, c);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(c, out);
    if (dim->parsed()) return cmd_dim(c, out);
    return cmd_table(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace framiz
