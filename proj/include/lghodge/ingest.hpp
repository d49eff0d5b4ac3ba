#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lghodge/mirror.hpp"

namespace lghodge {

struct CensusEntry {
    std::size_t id = 0;            ///< 1-based, file order
    std::vector<Point3> vertices;  ///< one point per vertex column/row
    std::string comment;           ///< rest of the PALP header line, or "name"
};

/// PALP matrix blocks: header "r c [comment]" then r lines of c integers.
/// r <= c: rows are the 3 coordinates; r > c: rows are points.
std::vector<CensusEntry> parse_palp(std::istream &in);

/// JSON: an array of objects (or one object) each with "vertices": [[x,y,z], ...]
/// and an optional "name".
std::vector<CensusEntry> parse_simple(std::istream &in);

/// Picks the parser from the first non-blank character ('[' or '{' → simple).
std::vector<CensusEntry> parse_any(std::istream &in);
std::vector<CensusEntry> load_entries(const std::string &path);

/// Simple-format text for the given polytopes (one object per entry).
std::string emit_simple(std::span<const CensusEntry> entries);

enum class RecordStatus { Pass, Fail, Skipped };

constexpr int kReportSchemaVersion = 1;

/// Flat per-polytope row of the batch report.
struct ReportRecord {
    std::size_t id = 0;
    std::string name;
    RecordStatus status = RecordStatus::Skipped;
    std::string reason;
    // Numeric fields are absent for skipped entries.
    std::optional<ToricHodgeData> data;
    std::int64_t f21 = 0;
    bool ks_lemma = false;
    bool ks_lemma_dual = false;
    bool eq_h11 = false;
    bool h11_Z_ledger = false;
    bool h21_Z_genus = false;
    bool picard_sum = false;
    bool mirror = false;
    bool sphere = false;
    bool extremal_flag = false;
    bool pic_in_1_19 = false;
    bool pass = false;
};

/// CSV column names, in order; identical to the JSON object keys.
const std::vector<std::string_view> &report_columns();

ReportRecord make_report_record(const CensusEntry &entry);

struct BatchOptions {
    unsigned jobs = 0; ///< 0: hardware concurrency
};

struct InvariantRange {
    std::int64_t min = 0;
    std::int64_t max = 0;
};

struct BatchSummary {
    std::size_t total = 0, passed = 0, failed = 0, skipped = 0;
    double pass_rate = 0.0; ///< passed / (total - skipped); 1.0 when nothing ran
    InvariantRange ell, ell_dual, h11_X, h21_Z, h11_Z, pic_toric, ph, f21;
    std::size_t extremal_flagged = 0;   ///< all facets of Δ with ℓ* = 0
    std::size_t extremal_consistent = 0; ///< of those, h21_Z = 0
    std::size_t pic_out_of_range = 0;

    std::string render() const;
};

struct BatchResult {
    std::vector<ReportRecord> records;
    BatchSummary summary;
};

/// Records come back in input order whatever the job count.
BatchResult batch_verify(std::span<const CensusEntry> entries, const BatchOptions &options = {});
BatchSummary summarize(std::span<const ReportRecord> records);

enum class ReportFormat { Csv, Json };

std::string emit_report(std::span<const ReportRecord> records, ReportFormat format);

} // namespace lghodge
