#include "molsim/screening/screening.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>

#include "molsim/foundation/errors.hpp"
#include "molsim/io/text.hpp"
#include "molsim/kernels/kernels.hpp"

namespace molsim::screening {
namespace {

constexpr std::array<const char*, 5> kColumns{"name", "carbon_count", "e_s1_ev", "e_t1_ev",
                                              "centrosymmetric"};

std::optional<bool> parse_bool(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  return std::nullopt;
}

std::optional<Diagnostic> parse_row(const io::CsvRecord& rec, MoleculeRecord& out) {
  const auto fail = [&](std::size_t column, std::string reason) {
    return Diagnostic{rec.line, column, std::move(reason)};
  };
  if (rec.fields.size() != kColumns.size()) {
    return fail(0, "expected 5 fields, found " + std::to_string(rec.fields.size()));
  }
  out.name = rec.fields[0];
  if (out.name.empty()) return fail(1, "name is empty");
  const auto carbons = io::parse_unsigned(rec.fields[1]);
  if (!carbons || *carbons == 0 || *carbons > 1'000'000) {
    return fail(2, "carbon_count must be a positive integer");
  }
  out.carbon_count = static_cast<unsigned>(*carbons);
  const auto s1 = io::parse_double(rec.fields[2]);
  if (!s1) return fail(3, "e_s1_ev is not a number");
  const auto t1 = io::parse_double(rec.fields[3]);
  if (!t1) return fail(4, "e_t1_ev is not a number");
  if (!(*t1 > 0.0) || *t1 > *s1) return fail(4, "requires 0 < e_t1_ev <= e_s1_ev");
  out.e_s1 = *s1;
  out.e_t1 = *t1;
  const auto centro = parse_bool(rec.fields[4]);
  if (!centro) return fail(5, "centrosymmetric must be true, false, 1 or 0");
  out.centrosymmetric = *centro;
  return std::nullopt;
}

}  // namespace

IngestResult ingest(std::istream& in, const IngestOptions& options) {
  std::vector<io::CsvRecord> rows = io::read_csv(in);
  if (rows.empty()) throw EmptyDataset("input has no header row");
  io::CsvRecord& header = rows.front();
  if (!header.fields.empty() && header.fields[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    header.fields[0].erase(0, 3);
  }
  for (std::size_t j = 0; j < kColumns.size(); ++j) {
    if (j >= header.fields.size() || header.fields[j] != kColumns[j]) {
      throw ParseError(header.line, j + 1, std::string("header must be ") + kCsvHeader);
    }
  }
  if (header.fields.size() != kColumns.size()) {
    throw ParseError(header.line, kColumns.size() + 1, std::string("header must be ") + kCsvHeader);
  }

  IngestResult result;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    MoleculeRecord rec;
    if (auto diag = parse_row(rows[i], rec)) {
      if (options.strict) throw ParseError(diag->row, diag->column, diag->reason);
      result.rejected.push_back(std::move(*diag));
    } else {
      result.records.push_back(std::move(rec));
    }
  }
  return result;
}

IngestResult ingest(const std::filesystem::path& path, const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return ingest(in, options);
}

LinearFit fit_linear_scaling(const std::vector<MoleculeRecord>& records) {
  if (records.size() < 2) throw DegenerateFit("need at least two records");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(records.size());
  for (const auto& r : records) pts.emplace_back(r.e_s1, r.e_t1);
  std::sort(pts.begin(), pts.end());

  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (!(sxx > 0.0)) throw DegenerateFit("all records share the same e_s1");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

void SelectionCriteria::validate() const {
  if (!std::isfinite(min_t1) || !std::isfinite(max_s1) || !(min_t1 < max_s1)) {
    throw InvalidArgument("selection requires finite min_t1 < max_s1");
  }
}

std::vector<MoleculeRecord> select_candidates(const std::vector<MoleculeRecord>& records,
                                              const SelectionCriteria& criteria) {
  criteria.validate();
  const std::size_t n = records.size();
  std::vector<double> s1(n), t1(n);
  for (std::size_t i = 0; i < n; ++i) {
    s1[i] = records[i].e_s1;
    t1[i] = records[i].e_t1;
  }
  std::vector<std::uint8_t> mask(n);
  kernels::window_mask(s1, t1, criteria.min_t1, criteria.max_s1, mask);
  std::vector<MoleculeRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask[i]) out.push_back(records[i]);
  }
  return out;
}

std::string to_csv(const std::vector<MoleculeRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : records) {
    out += io::csv_field(r.name);
    out += ',' + std::to_string(r.carbon_count);
    out += ',' + io::format_double(r.e_s1);
    out += ',' + io::format_double(r.e_t1);
    out += r.centrosymmetric ? ",true\n" : ",false\n";
  }
  return out;
}

}  // namespace molsim::screening
