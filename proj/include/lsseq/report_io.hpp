#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsseq/analysis.hpp"
#include "lsseq/cfrac.hpp"
#include "lsseq/equivalence.hpp"
#include "lsseq/partitions.hpp"
#include "lsseq/quad.hpp"

namespace lsseq {

// Fixed float text form (%.17g): round-trips doubles and keeps every
// emitted artifact byte-identical across runs.
std::string format_double(double v);

// gen: columns index,value_float,value_exact
std::string gen_csv_exact(std::span<const QuadElem> points, long index_base);
std::string gen_csv_rational(std::span<const Rational> points, long index_base);
std::string gen_csv_float(std::span<const double> points, long index_base);
// Reads back the value_exact column of gen_csv_exact output.
std::vector<QuadElem> parse_gen_csv(const std::string& csv, const ContextPtr& ctx);

// partition: columns left_exact,left_float,length_exponent
std::string partition_csv(const PartitionState& state);

// disc/curve: columns N,D_extreme,D_star,N_D_over_logN,iz_bound,cor2_bound
std::string disc_csv(std::span<const DiscrepancyReport> rows);

std::string cf_json(const ConvergentTable& table, bool finite_rational);
std::string ostrowski_json(const OstrowskiDigits& digits);
std::string verify_json(long L, std::span<const BlockReport> blocks, bool contiguity);
std::string probe_json(const DenominatorProbe& probe);
std::string block_check_json(const BlockDiscrepancyReport& report);

std::string bounds_text(const IzBoundConstants& iz, const std::optional<Cor2BoundConstants>& cor2);
std::string bounds_json(const IzBoundConstants& iz, const std::optional<Cor2BoundConstants>& cor2);

// Exit-code contract for verification commands: any failed block or broken
// contiguity maps to exit status 1.
int verification_exit_code(std::span<const BlockReport> blocks, bool contiguity);

}  // namespace lsseq
