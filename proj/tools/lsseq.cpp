// Command-line front end: deterministic batch generation, refinement,
// discrepancy curves, bound evaluation and structural verification with
// CSV/JSON output.  Exit codes: 0 success, 1 verification failure, 2 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsseq/analysis.hpp"
#include "lsseq/cfrac.hpp"
#include "lsseq/equivalence.hpp"
#include "lsseq/partitions.hpp"
#include "lsseq/quad.hpp"
#include "lsseq/report_io.hpp"
#include "lsseq/sequences.hpp"

namespace {

using namespace lsseq;
using nlohmann::ordered_json;

struct RunConfig {
  long L = 1;
  long S = 1;
  std::size_t count = 10;
  unsigned levels = 5;
  std::vector<std::size_t> Ns;
  unsigned depth = 10;
  unsigned kmax = 20;
  bool exact = false;
  double z = 0.0;
  bool z_set = false;
  long base = 2;
  std::string kind = "ls";
  std::string format = "csv";
  std::string out;
  std::size_t cap = kDefaultCap;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
  f << text;
}

ordered_json points_json(std::span<const QuadElem> pts, long index_base) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    arr.push_back({{"index", index_base + static_cast<long>(i)},
                   {"value_float", pts[i].approx(16)},
                   {"value_exact", pts[i].str()}});
  }
  return arr;
}

int run_gen(const RunConfig& cfg) {
  if (cfg.kind == "ls") {
    const auto pts = ls_points(cfg.L, cfg.S, cfg.count, cfg.cap);
    if (cfg.format == "json") {
      ordered_json j{{"kind", "ls"}, {"L", cfg.L}, {"S", cfg.S}, {"count", cfg.count}};
      j["points"] = points_json(pts, 1);
      emit(cfg, j.dump(2) + "\n");
    } else {
      emit(cfg, gen_csv_exact(pts, 1));
    }
    return 0;
  }
  if (cfg.kind == "vdc") {
    const auto pts = van_der_corput(static_cast<unsigned>(cfg.base), cfg.count);
    if (cfg.format == "json") {
      ordered_json arr = ordered_json::array();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        arr.push_back({{"index", i},
                       {"value_float", pts[i].to_double()},
                       {"value_exact", pts[i].str()}});
      }
      ordered_json j{{"kind", "vdc"}, {"base", cfg.base}, {"count", cfg.count}};
      j["points"] = std::move(arr);
      emit(cfg, j.dump(2) + "\n");
    } else {
      emit(cfg, gen_csv_rational(pts, 0));
    }
    return 0;
  }
  if (cfg.kind == "kronecker" || cfg.kind == "symkronecker") {
    const bool sym = cfg.kind == "symkronecker";
    if (cfg.z_set && !cfg.exact) {  // float mode with an explicit z
      const auto pts = sym ? symmetrized_kronecker(cfg.z, cfg.count)
                           : kronecker(cfg.z, cfg.count);
      if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) {
          arr.push_back({{"index", i}, {"value_float", pts[i]}});
        }
        ordered_json j{{"kind", cfg.kind}, {"z", cfg.z}, {"count", cfg.count}};
        j["points"] = std::move(arr);
        emit(cfg, j.dump(2) + "\n");
      } else {
        emit(cfg, gen_csv_float(pts, 0));
      }
      return 0;
    }
    // default: exact mode with z = beta(L,S)
    const auto ctx = FieldContext::create(cfg.L, cfg.S);
    const QuadElem z = QuadElem::beta(ctx);
    const auto pts = sym ? symmetrized_kronecker(z, cfg.count) : kronecker(z, cfg.count);
    if (cfg.format == "json") {
      ordered_json j{{"kind", cfg.kind}, {"L", cfg.L}, {"S", cfg.S}, {"count", cfg.count}};
      j["points"] = points_json(pts, 0);
      emit(cfg, j.dump(2) + "\n");
    } else {
      emit(cfg, gen_csv_exact(pts, 0));
    }
    return 0;
  }
  throw CLI::ValidationError("--kind", "unknown kind '" + cfg.kind + "'");
}

int run_partition(const RunConfig& cfg) {
  const auto ctx = FieldContext::create(cfg.L, cfg.S);
  const auto state = ls_partition(ctx, cfg.levels, cfg.cap);
  emit(cfg, partition_csv(state));
  return 0;
}

int run_cf(const RunConfig& cfg, std::size_t ostrowski_N) {
  const auto exp = cf_of_beta(cfg.L, cfg.S, static_cast<int>(cfg.depth));
  const auto table = convergents(exp.coeffs);
  if (ostrowski_N == 0) {
    emit(cfg, cf_json(table, exp.finite_rational));
    return 0;
  }
  if (cfg.S != 1) throw CLI::ValidationError("--N", "digit expansion requires S = 1");
  const auto digits = ostrowski_digits(BigInt(static_cast<unsigned long>(ostrowski_N)), cfg.L);
  ordered_json j;
  j["convergents"] = ordered_json::parse(cf_json(table, exp.finite_rational));
  j["ostrowski"] = ordered_json::parse(ostrowski_json(digits));
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int run_bounds(const RunConfig& cfg) {
  const auto iz = iz_bound(cfg.L, cfg.S);
  std::optional<Cor2BoundConstants> cor2;
  if (cfg.S == 1) cor2 = cor2_bound(cfg.L);
  emit(cfg, cfg.format == "json" ? bounds_json(iz, cor2) : bounds_text(iz, cor2));
  return 0;
}

int run_disc(const RunConfig& cfg, bool curve) {
  if (cfg.kind != "ls") throw CLI::ValidationError("--kind", "disc supports --kind ls");
  const auto iz = iz_bound(cfg.L, cfg.S);
  std::optional<Cor2BoundConstants> cor2;
  if (cfg.S == 1) cor2 = cor2_bound(cfg.L);

  std::vector<std::size_t> Ns = cfg.Ns;
  if (curve) {
    Ns.clear();
    for (unsigned n = 0; n <= cfg.levels; ++n) {
      const BigInt t = ls_counts(cfg.L, cfg.S, n).t;
      if (t > BigInt(static_cast<unsigned long>(cfg.cap))) break;
      Ns.push_back(t.get_ui());
    }
  }
  if (Ns.empty()) throw CLI::ValidationError("--Ns", "no N values given");

  const std::size_t max_n = *std::max_element(Ns.begin(), Ns.end());
  const auto pts = ls_points(cfg.L, cfg.S, max_n, cfg.cap);
  std::vector<DiscrepancyReport> rows;
  rows.reserve(Ns.size());
  for (std::size_t n : Ns) {
    rows.push_back(discrepancy_report({pts.data(), n}, iz, cor2));
  }
  emit(cfg, disc_csv(rows));
  return 0;
}

int run_verify(const RunConfig& cfg) {
  if (cfg.S != 1) throw CLI::ValidationError("--S", "verify requires S = 1");
  if (cfg.levels < 1) throw CLI::ValidationError("--levels", "verify requires levels >= 1");
  try {
    const auto blocks = verify_block_index_ranges(cfg.L, cfg.levels);
    const bool contiguity = verify_index_contiguity(cfg.L, cfg.levels - 1);
    emit(cfg, verify_json(cfg.L, blocks, contiguity));
    return verification_exit_code(blocks, contiguity);
  } catch (const StructuralError& e) {
    ordered_json j{{"L", cfg.L}, {"S", 1}, {"error", e.what()}, {"all_pass", false}};
    emit(cfg, j.dump(2) + "\n");
    return 1;
  }
}

int run_probe(const RunConfig& cfg) {
  const auto probe = denominator_probe(cfg.L, cfg.S, cfg.kmax);
  emit(cfg, probe_json(probe));
  return 0;
}

int run_blocks(const RunConfig& cfg) {
  const auto report = block_discrepancy_check(cfg.L, cfg.count);
  emit(cfg, block_check_json(report));
  return report.all_pass ? 0 : 1;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--L", cfg.L, "first parameter L (number of long pieces)");
  cmd->add_option("--S", cfg.S, "second parameter S (number of short pieces)");
  cmd->add_option("--format", cfg.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out, "write output to this path instead of stdout");
  cmd->add_option("--cap", cfg.cap, "materialization cap in points");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LS-sequence toolkit: exact generation, refinement, "
               "discrepancy and Kronecker-equivalence verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gen = app.add_subcommand("gen", "generate sequence points");
  add_common(gen, cfg);
  gen->add_option("--kind", cfg.kind, "ls | vdc | kronecker | symkronecker")
      ->check(CLI::IsMember({"ls", "vdc", "kronecker", "symkronecker"}));
  gen->add_option("--count", cfg.count, "number of points")->required();
  gen->add_option("--base", cfg.base, "van der Corput base");
  gen->add_option("--z", cfg.z, "float z for kronecker kinds (float mode)")
      ->each([&cfg](const std::string&) { cfg.z_set = true; });
  gen->add_flag("--exact", cfg.exact, "exact arithmetic output");

  auto* part = app.add_subcommand("partition", "materialize a refined partition (CSV)");
  add_common(part, cfg);
  part->add_option("--levels", cfg.levels, "number of refinement steps")->required();

  auto* cf = app.add_subcommand("cf", "continued fraction and convergents of beta (JSON)");
  add_common(cf, cfg);
  cf->add_option("--depth", cfg.depth, "number of partial quotients");
  std::size_t ostrowski_N = 0;
  cf->add_option("--N", ostrowski_N, "also emit the digit expansion of N over the q_i (S=1)");

  auto* disc = app.add_subcommand("disc", "discrepancy report at given N values (CSV)");
  add_common(disc, cfg);
  disc->add_option("--kind", cfg.kind, "sequence kind (ls)");
  disc->add_option("--Ns", cfg.Ns, "comma-separated N values")->required()->delimiter(',');
  disc->add_flag("--exact", cfg.exact, "exact arithmetic (always on for ls)");

  auto* curve = app.add_subcommand("curve", "discrepancy curve over N = t_n (CSV)");
  add_common(curve, cfg);
  curve->add_option("--levels", cfg.levels, "largest refinement level n");

  auto* bounds = app.add_subcommand("bounds", "print discrepancy bound constants");
  add_common(bounds, cfg);

  auto* verify = app.add_subcommand("verify", "check block index ranges and contiguity (S=1)");
  add_common(verify, cfg);
  verify->add_option("--levels", cfg.levels, "number of blocks to check")->required();

  auto* probe = app.add_subcommand("probe", "beta-power denominator probe (S>=2, JSON)");
  add_common(probe, cfg);
  probe->add_option("--kmax", cfg.kmax, "largest exponent k");

  auto* blocks = app.add_subcommand("blocks", "per-block discrepancy inequality check (S=1)");
  add_common(blocks, cfg);
  blocks->add_option("--count", cfg.count, "prefix length N")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(cfg);
    if (part->parsed()) return run_partition(cfg);
    if (cf->parsed()) return run_cf(cfg, ostrowski_N);
    if (disc->parsed()) return run_disc(cfg, false);
    if (curve->parsed()) return run_disc(cfg, true);
    if (bounds->parsed()) return run_bounds(cfg);
    if (verify->parsed()) return run_verify(cfg);
    if (probe->parsed()) return run_probe(cfg);
    if (blocks->parsed()) return run_blocks(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
