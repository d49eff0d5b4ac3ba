#include "lghodge/mirror.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lghodge {

bool HodgeDiamond::has_lg_zero_pattern() const {
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            const bool allowed = (p == 1 && q == 1) || (p == 2 && q == 2) || p + q == 3;
            if (!allowed && entries_(p, q) != 0) return false;
        }
    return true;
}

std::string HodgeDiamond::render() const {
    // Row r holds the entries with p + q = 6 - r, printed from p = 3 down.
    std::ostringstream out;
    for (int sum = 6; sum >= 0; --sum) {
        const int width = 4 - std::abs(sum - 3);
        out << std::string(static_cast<std::size_t>(3 * (4 - width)), ' ');
        bool first = true;
        for (int p = 3; p >= 0; --p) {
            const int q = sum - p;
            if (q < 0 || q > 3) continue;
            if (!first) out << "     ";
            out << entries_(p, q);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

HodgeDiamond assemble_f_diamond(std::int64_t ph, std::int64_t k, std::int64_t h12Z) {
    if (ph < 2) throw Error(ErrorCode::InvalidParameter, "ph must be at least 2");
    if (k < 0) throw Error(ErrorCode::InvalidParameter, "k must be nonnegative");
    if (h12Z < 0) throw Error(ErrorCode::InvalidParameter, "h12(Z) must be nonnegative");
    HodgeDiamond::Grid f = HodgeDiamond::Grid::Zero();
    f(3, 0) = f(0, 3) = 1;
    f(2, 1) = f(1, 2) = checked::add(ph - 2, h12Z);
    f(1, 1) = f(2, 2) = k;
    return HodgeDiamond(DiamondKind::LgFpq, f);
}

HodgeDiamond toric_hodge_diamond(const LatticePolytope &delta) {
    const auto h11 = static_cast<std::int64_t>(delta.num_lattice_points()) - 4;
    HodgeDiamond::Grid h = HodgeDiamond::Grid::Zero();
    h(0, 0) = h(3, 3) = 1;
    h(1, 1) = h(2, 2) = h11;
    return HodgeDiamond(DiamondKind::FanoHpq, h);
}

bool VerificationRecord::mirror_holds() const {
    return std::all_of(mirror.begin(), mirror.end(), [](const MirrorEquality &m) { return m.holds(); });
}

bool VerificationRecord::passed() const {
    return mirror_holds() && ks_lemma.holds() && ks_lemma_dual.holds() && picard_sum.holds() &&
           ledger_curves.holds() && ledger_h11_Z.holds() && ledger_genus.holds() && extremal_implication &&
           sphere.is_sphere() && lg_diamond.is_transpose_symmetric() && lg_diamond.is_rotation_symmetric() &&
           lg_diamond.has_lg_zero_pattern();
}

VerificationRecord verify_mirror(const DualPair &pair, std::string id) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord rec;
    rec.id = std::move(id);
    rec.data = toric_hodge_data(pair);
    rec.fano_diamond = toric_hodge_diamond(pair.primal());
    // ph < 2 would make the diamond ill-formed; record it as a failed
    // mirror check rather than abort.
    rec.lg_diamond = rec.data.ph >= 2 ? assemble_f_diamond(rec.data.ph, rec.data.k, rec.data.h21_Z)
                                      : HodgeDiamond(DiamondKind::LgFpq, HodgeDiamond::Grid::Constant(-1));
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            const auto [fp, fq] = mirror_index(p, q);
            rec.mirror[static_cast<std::size_t>(4 * p + q)] =
                MirrorEquality{p, q, rec.fano_diamond(p, q), rec.lg_diamond(fp, fq)};
        }

    rec.ks_lemma = ks_lemma_check(pair);
    rec.ks_lemma_dual = ks_lemma_check(pair.swapped());
    rec.picard_sum = picard_sum_relation(pair);

    const BlowupLedger ledger = base_locus_ledger(pair);
    rec.ledger_curves = ledger.closed_form;
    rec.ledger_h11_Z = IdentityCheck{rec.data.h11_Z, rec.data.ell_Delta_dual - 4 + ledger.curve_count};
    rec.ledger_genus = IdentityCheck{rec.data.h21_Z, ledger.genus_sum};

    const auto &facets = pair.primal_faces().facets();
    rec.extremal_flag =
        std::all_of(facets.begin(), facets.end(), [](const Face &f) { return f.interior_point_count == 0; });
    rec.extremal_implication = !rec.extremal_flag || rec.data.h21_Z == 0;

    try {
        rec.sphere = sphere_check(pair.dual_faces());
    } catch (const std::exception &e) {
        rec.sphere = SphereCheck{};
        rec.sphere_error = e.what();
    }
    rec.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return rec;
}

VerificationRecord verify_mirror(const LatticePolytope &delta, std::string id) {
    return verify_mirror(DualPair(delta), std::move(id));
}

bool check_extremal(std::span<const std::int64_t> local_ranks, std::int64_t rank) {
    if (rank < 1) throw Error(ErrorCode::InvalidParameter, "local system rank must be positive");
    std::int64_t total = 0;
    for (std::int64_t r : local_ranks) {
        if (r < 0) throw Error(ErrorCode::InvalidParameter, "local ranks must be nonnegative");
        total = checked::add(total, r);
    }
    return total == checked::mul<std::int64_t>(2, rank);
}

} // namespace lghodge
