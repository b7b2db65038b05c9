#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace molsim::screening {

/// Energies are vertical excitation energies in eV.
struct MoleculeRecord {
  std::string name;
  unsigned carbon_count = 0;
  double e_s1 = 0.0;
  double e_t1 = 0.0;
  bool centrosymmetric = false;

  friend bool operator==(const MoleculeRecord&, const MoleculeRecord&) = default;
};

inline constexpr const char* kCsvHeader = "name,carbon_count,e_s1_ev,e_t1_ev,centrosymmetric";

struct Diagnostic {
  std::size_t row = 0;     // 1-based, header is row 1
  std::size_t column = 0;  // 1-based, 0 when the whole row is at fault
  std::string reason;
};

struct IngestResult {
  std::vector<MoleculeRecord> records;
  std::vector<Diagnostic> rejected;
};

struct IngestOptions {
  /// Throw ParseError at the first bad row instead of collecting diagnostics.
  bool strict = false;
};

/// Parses CSV (RFC 4180 quoting, UTF-8, decimal point) with the exact header
/// kCsvHeader. Rows violating 0 < e_t1 <= e_s1 or carrying malformed fields are
/// rejected with row-numbered diagnostics. Throws EmptyDataset when the input
/// has no header line and ParseError on a wrong header.
IngestResult ingest(std::istream& in, const IngestOptions& options = {});
IngestResult ingest(const std::filesystem::path& path, const IngestOptions& options = {});

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of e_t1 on e_s1. Throws DegenerateFit with fewer than
/// two records or no spread in e_s1.
LinearFit fit_linear_scaling(const std::vector<MoleculeRecord>& records);

/// Configuration defaults, not values read off any published figure.
struct SelectionCriteria {
  double min_t1 = 2.0;  // eV
  double max_s1 = 3.5;  // eV

  void validate() const;
};

/// Records with e_t1 >= min_t1 and e_s1 <= max_s1, in input order.
std::vector<MoleculeRecord> select_candidates(const std::vector<MoleculeRecord>& records,
                                              const SelectionCriteria& criteria = {});

/// Serializes records back to the ingest format.
std::string to_csv(const std::vector<MoleculeRecord>& records);

}  // namespace molsim::screening
