#include "lsseq/report_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lsseq {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string gen_csv_exact(std::span<const QuadElem> points, long index_base) {
  std::ostringstream os;
  os << "index,value_float,value_exact\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << (index_base + static_cast<long>(i)) << ','
       << format_double(points[i].approx(16)) << ',' << points[i].str() << '\n';
  }
  return os.str();
}

std::string gen_csv_rational(std::span<const Rational> points, long index_base) {
  std::ostringstream os;
  os << "index,value_float,value_exact\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << (index_base + static_cast<long>(i)) << ','
       << format_double(points[i].to_double()) << ',' << points[i].str() << '\n';
  }
  return os.str();
}

std::string gen_csv_float(std::span<const double> points, long index_base) {
  std::ostringstream os;
  os << "index,value_float,value_exact\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << (index_base + static_cast<long>(i)) << ',' << format_double(points[i]) << ",\n";
  }
  return os.str();
}

std::vector<QuadElem> parse_gen_csv(const std::string& csv, const ContextPtr& ctx) {
  std::vector<QuadElem> out;
  std::istringstream is(csv);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw std::invalid_argument("parse_gen_csv: malformed row '" + line + "'");
    }
    out.push_back(QuadElem::parse(line.substr(second + 1), ctx));
  }
  return out;
}

std::string partition_csv(const PartitionState& state) {
  std::ostringstream os;
  os << "left_exact,left_float,length_exponent\n";
  for (const Interval& iv : state.intervals()) {
    os << iv.left.str() << ',' << format_double(iv.left.approx(16)) << ','
       << iv.length_exponent << '\n';
  }
  return os.str();
}

std::string disc_csv(std::span<const DiscrepancyReport> rows) {
  std::ostringstream os;
  os << "N,D_extreme,D_star,N_D_over_logN,iz_bound,cor2_bound\n";
  for (const auto& r : rows) {
    os << r.N << ',' << format_double(r.d_extreme) << ',' << format_double(r.d_star) << ',';
    if (r.has_ratio) os << format_double(r.n_d_over_log_n);
    os << ',' << format_double(r.iz_value) << ',';
    if (r.has_cor2) os << format_double(r.cor2_value);
    os << '\n';
  }
  return os.str();
}

namespace {

ordered_json bigint_list(const std::vector<BigInt>& v) {
  ordered_json arr = ordered_json::array();
  for (const BigInt& x : v) arr.push_back(x.get_str());
  return arr;
}

}  // namespace

std::string cf_json(const ConvergentTable& table, bool finite_rational) {
  ordered_json j;
  j["coefficients"] = bigint_list(table.coeffs);
  j["beta_rational"] = finite_rational;
  j["index_offset"] = -1;  // p[0], q[0] are p_{-1}, q_{-1}
  j["p"] = bigint_list(table.p);
  j["q"] = bigint_list(table.q);
  return j.dump(2) + "\n";
}

std::string ostrowski_json(const OstrowskiDigits& digits) {
  ordered_json j;
  j["N"] = digits.N.get_str();
  j["top_index"] = digits.top_index;
  j["digits"] = bigint_list(digits.digits);
  return j.dump(2) + "\n";
}

std::string verify_json(long L, std::span<const BlockReport> blocks, bool contiguity) {
  ordered_json j;
  j["L"] = L;
  j["S"] = 1;
  bool all = contiguity;
  ordered_json arr = ordered_json::array();
  for (const auto& b : blocks) {
    ordered_json row;
    row["block"] = b.block_index;
    row["expected"] = {b.expected_lo.get_str(), b.expected_hi.get_str()};
    row["observed"] = bigint_list(b.observed);
    row["pass"] = b.pass;
    all = all && b.pass;
    arr.push_back(std::move(row));
  }
  j["blocks"] = std::move(arr);
  j["contiguity"] = contiguity;
  j["all_pass"] = all;
  return j.dump(2) + "\n";
}

std::string probe_json(const DenominatorProbe& probe) {
  ordered_json j;
  j["L"] = probe.L;
  j["S"] = probe.S;
  ordered_json arr = ordered_json::array();
  for (const auto& [k, d] : probe.denominators) {
    arr.push_back({{"k", k}, {"denominator", d.get_str()}});
  }
  j["denominators"] = std::move(arr);
  j["max_denominator"] = probe.max_denominator.get_str();
  j["nondecreasing"] = probe.nondecreasing;
  return j.dump(2) + "\n";
}

std::string block_check_json(const BlockDiscrepancyReport& report) {
  ordered_json j;
  j["L"] = report.L;
  j["N"] = report.N.get_str();
  ordered_json arr = ordered_json::array();
  for (const auto& b : report.blocks) {
    arr.push_back({{"index", b.index},
                   {"q", b.q.get_str()},
                   {"offset", b.offset},
                   {"discrepancy", b.discrepancy},
                   {"pass", b.pass}});
  }
  j["blocks"] = std::move(arr);
  j["all_pass"] = report.all_pass;
  return j.dump(2) + "\n";
}

namespace {

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string bounds_text(const IzBoundConstants& iz,
                        const std::optional<Cor2BoundConstants>& cor2) {
  std::ostringstream os;
  os << "iz_bound   (L=" << iz.L << ", S=" << iz.S << "): tau1=" << fmt4(iz.tau1)
     << " lambda1=" << fmt4(iz.lambda1) << " R=" << fmt4(iz.R) << " B=" << fmt4(iz.B)
     << " gamma=" << fmt4(iz.gamma) << " delta=" << fmt4(iz.delta) << "\n";
  if (cor2) {
    os << "cor2_bound (L=" << cor2->L << ", S=1): alpha=" << fmt4(cor2->alpha)
       << " gamma=" << fmt4(cor2->gamma) << " delta=" << fmt4(cor2->delta);
    if (cor2->published_delta) {
      os << "  [published delta=" << *cor2->published_delta
         << (cor2->published_matches ? ", matches formula]" : ", unreconciled with formula]");
    }
    os << "\n";
  }
  return os.str();
}

std::string bounds_json(const IzBoundConstants& iz,
                        const std::optional<Cor2BoundConstants>& cor2) {
  ordered_json j;
  j["iz_bound"] = {{"L", iz.L},       {"S", iz.S},         {"tau1", iz.tau1},
                   {"lambda1", iz.lambda1}, {"R", iz.R},   {"B", iz.B},
                   {"gamma", iz.gamma},     {"delta", iz.delta}};
  if (cor2) {
    ordered_json c = {{"L", cor2->L},
                      {"alpha", cor2->alpha},
                      {"gamma", cor2->gamma},
                      {"delta", cor2->delta}};
    if (cor2->published_delta) {
      c["published_delta"] = *cor2->published_delta;
      c["published_matches"] = cor2->published_matches;
      if (!cor2->published_matches) c["published_status"] = "unreconciled";
    }
    j["cor2_bound"] = std::move(c);
  }
  return j.dump(2) + "\n";
}

int verification_exit_code(std::span<const BlockReport> blocks, bool contiguity) {
  if (!contiguity) return 1;
  for (const auto& b : blocks) {
    if (!b.pass) return 1;
  }
  return 0;
}

}  // namespace lsseq
