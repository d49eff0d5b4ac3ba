#include "lghodge/ingest.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace lghodge {

namespace {

std::string_view status_name(RecordStatus s) {
    switch (s) {
    case RecordStatus::Pass: return "pass";
    case RecordStatus::Fail: return "fail";
    case RecordStatus::Skipped: return "skipped";
    }
    return "?";
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void widen(InvariantRange &range, std::int64_t value, bool first) {
    if (first) {
        range = {value, value};
        return;
    }
    range.min = std::min(range.min, value);
    range.max = std::max(range.max, value);
}

} // namespace

const std::vector<std::string_view> &report_columns() {
    static const std::vector<std::string_view> columns = {
        "id",         "name",          "status",       "reason",      "ell",         "ell_dual",
        "h11_X",      "h21_Z",         "h11_Z",        "pic_toric",   "ph",          "k",
        "f21",        "ks_lemma",      "ks_lemma_dual", "eq_h11",     "h11_Z_ledger", "h21_Z_genus",
        "picard_sum", "mirror",        "sphere",       "extremal_flag", "pic_in_1_19", "pass"};
    return columns;
}

ReportRecord make_report_record(const CensusEntry &entry) {
    ReportRecord rec;
    rec.id = entry.id;
    rec.name = entry.comment;
    try {
        const LatticePolytope delta = convex_hull(entry.vertices);
        if (!is_reflexive(delta)) {
            rec.status = RecordStatus::Skipped;
            rec.reason = std::string(to_string(ErrorCode::NotReflexive));
            return rec;
        }
        const VerificationRecord v = verify_mirror(delta, std::to_string(entry.id));
        rec.data = v.data;
        rec.f21 = v.lg_diamond(2, 1);
        rec.ks_lemma = v.ks_lemma.holds();
        rec.ks_lemma_dual = v.ks_lemma_dual.holds();
        rec.eq_h11 = v.ledger_curves.holds();
        rec.h11_Z_ledger = v.ledger_h11_Z.holds();
        rec.h21_Z_genus = v.ledger_genus.holds();
        rec.picard_sum = v.picard_sum.holds();
        rec.mirror = v.mirror_holds();
        rec.sphere = v.sphere.is_sphere();
        rec.extremal_flag = v.extremal_flag;
        rec.pic_in_1_19 = v.data.pic_toric_fiber >= 1 && v.data.pic_toric_fiber <= 19;
        rec.pass = v.passed();
        rec.status = rec.pass ? RecordStatus::Pass : RecordStatus::Fail;
    } catch (const Error &e) {
        // Input that never became a polytope is skipped; arithmetic trouble
        // in the pipeline is a failure.
        rec.status = e.code() == ErrorCode::DegenerateInput ? RecordStatus::Skipped : RecordStatus::Fail;
        rec.reason = std::string(to_string(e.code()));
        rec.data.reset();
        rec.pass = false;
    } catch (const std::exception &e) {
        rec.status = RecordStatus::Fail;
        rec.reason = e.what();
        rec.data.reset();
        rec.pass = false;
    }
    return rec;
}

BatchResult batch_verify(std::span<const CensusEntry> entries, const BatchOptions &options) {
    BatchResult result;
    result.records.resize(entries.size());
    unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, entries.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
            result.records[i] = make_report_record(entries[i]);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    result.summary = summarize(result.records);
    return result;
}

BatchSummary summarize(std::span<const ReportRecord> records) {
    BatchSummary s;
    s.total = records.size();
    bool first = true;
    for (const auto &r : records) {
        switch (r.status) {
        case RecordStatus::Pass: ++s.passed; break;
        case RecordStatus::Fail: ++s.failed; break;
        case RecordStatus::Skipped: ++s.skipped; break;
        }
        if (!r.data) continue;
        const auto &d = *r.data;
        widen(s.ell, d.ell_Delta, first);
        widen(s.ell_dual, d.ell_Delta_dual, first);
        widen(s.h11_X, d.h11_X, first);
        widen(s.h21_Z, d.h21_Z, first);
        widen(s.h11_Z, d.h11_Z, first);
        widen(s.pic_toric, d.pic_toric_fiber, first);
        widen(s.ph, d.ph, first);
        widen(s.f21, r.f21, first);
        first = false;
        if (r.extremal_flag) {
            ++s.extremal_flagged;
            if (d.h21_Z == 0) ++s.extremal_consistent;
        }
        if (!r.pic_in_1_19) ++s.pic_out_of_range;
    }
    const std::size_t ran = s.total - s.skipped;
    s.pass_rate = ran == 0 ? 1.0 : static_cast<double>(s.passed) / static_cast<double>(ran);
    return s;
}

std::string BatchSummary::render() const {
    std::ostringstream out;
    out << "report schema v" << kReportSchemaVersion << '\n';
    out << "entries: " << total << "  passed: " << passed << "  failed: " << failed << "  skipped: " << skipped << '\n';
    out << "pass rate: " << std::fixed << std::setprecision(4) << pass_rate << '\n';
    auto line = [&](const char *name, const InvariantRange &r) {
        out << "  " << std::left << std::setw(10) << name << " min " << std::right << std::setw(4) << r.min
            << "  max " << std::setw(4) << r.max << '\n';
    };
    if (total == skipped) {
        out << "invariant ranges: none (no reflexive entries)\n";
    } else {
        out << "invariant ranges:\n";
        line("ell", ell);
        line("ell_dual", ell_dual);
        line("h11_X", h11_X);
        line("h21_Z", h21_Z);
        line("h11_Z", h11_Z);
        line("pic_toric", pic_toric);
        line("ph", ph);
        line("f21", f21);
    }
    out << "extremal flag (all facet l* = 0): " << extremal_flagged << " entries, " << extremal_consistent
        << " with h21_Z = 0\n";
    out << "pic_toric outside [1,19]: " << pic_out_of_range << '\n';
    return out.str();
}

std::string emit_report(std::span<const ReportRecord> records, ReportFormat format) {
    auto numeric = [](const ReportRecord &r) -> std::vector<std::optional<std::int64_t>> {
        if (!r.data) return std::vector<std::optional<std::int64_t>>(9);
        const auto &d = *r.data;
        return {d.ell_Delta, d.ell_Delta_dual, d.h11_X, d.h21_Z, d.h11_Z, d.pic_toric_fiber, d.ph, d.k, r.f21};
    };
    auto flags = [](const ReportRecord &r) {
        return std::vector<bool>{r.ks_lemma, r.ks_lemma_dual, r.eq_h11,        r.h11_Z_ledger, r.h21_Z_genus, r.picard_sum,
                                 r.mirror,   r.sphere,        r.extremal_flag, r.pic_in_1_19,  r.pass};
    };
    const auto &cols = report_columns();

    if (format == ReportFormat::Csv) {
        std::string out;
        for (std::size_t i = 0; i < cols.size(); ++i) (out += i ? "," : "") += cols[i];
        out += '\n';
        for (const auto &r : records) {
            out += std::to_string(r.id) + ',' + csv_escape(r.name) + ',' + std::string(status_name(r.status)) + ',' +
                   csv_escape(r.reason);
            for (const auto &n : numeric(r)) out += ',' + (n ? std::to_string(*n) : std::string());
            for (bool b : flags(r)) out += b ? ",true" : ",false";
            out += '\n';
        }
        return out;
    }

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : records) {
        nlohmann::ordered_json obj;
        std::size_t c = 0;
        obj[std::string(cols[c++])] = r.id;
        obj[std::string(cols[c++])] = r.name;
        obj[std::string(cols[c++])] = std::string(status_name(r.status));
        obj[std::string(cols[c++])] = r.reason;
        for (const auto &n : numeric(r)) {
            if (n) obj[std::string(cols[c++])] = *n;
            else obj[std::string(cols[c++])] = nullptr;
        }
        for (bool b : flags(r)) obj[std::string(cols[c++])] = b;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + '\n';
}

} // namespace lghodge
