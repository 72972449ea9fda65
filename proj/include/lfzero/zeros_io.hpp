#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lfzero/descriptor.hpp"

namespace lfzero {

// Ordinates of nontrivial zeros with gamma > 0, strictly ascending.  When
// `betas` is empty every zero is taken at beta = 1/2; a nonempty `betas`
// (same length as `ordinates`) switches the consumers to rho = beta + i gamma.
struct ZeroTable {
    std::vector<double> ordinates;
    std::vector<double> betas;
    std::string source;
    double max_ordinate = 0.0;

    std::size_t size() const { return ordinates.size(); }
    bool off_rh() const { return !betas.empty(); }
    double beta(std::size_t i) const { return betas.empty() ? 0.5 : betas[i]; }
};

// One ordinate per line ("gamma"), or two whitespace-separated columns
// ("beta gamma"); '#' comments; strictly ascending positive ordinates.
ZeroTable parse_zero_file(const std::filesystem::path& path);
ZeroTable parse_zero_text(const std::string& text, const std::string& origin);

// Emits the same line format at 17 significant digits, which round-trips
// doubles exactly.
std::string serialize_zero_table(const ZeroTable& table);

// Number of listed ordinates <= T; CoverageError when T exceeds the table.
long empirical_count(const ZeroTable& table, double T);

struct CountSnapshot {
    double T = 0.0;
    long empirical = 0;
    double main_term = 0.0;
    double deviation = 0.0;  // empirical - main_term
};

struct DeviationProfile {
    std::vector<CountSnapshot> snapshots;
    double max_ratio = 0.0;  // max |deviation| / log T over grid points T > 1
};

DeviationProfile deviation_profile(const ZeroTable& table,
                                   const SelbergDescriptor& desc,
                                   const std::vector<double>& T_grid);

// Manifest lines: "filename, sha256, source-citation" (citation may contain
// commas).  verify_manifest recomputes each checksum relative to the
// manifest's directory and throws ParseError on any mismatch.
struct ManifestEntry {
    std::string filename;
    std::string sha256;
    std::string citation;
};

std::vector<ManifestEntry> parse_manifest(const std::filesystem::path& path);
void verify_manifest(const std::filesystem::path& path);

std::string sha256_file(const std::filesystem::path& path);

}  // namespace lfzero
