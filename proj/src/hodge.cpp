#include "lghodge/hodge.hpp"

namespace lghodge {

namespace {

std::int64_t ell(const LatticePolytope &p) { return static_cast<std::int64_t>(p.num_lattice_points()); }

} // namespace

std::int64_t facet_interior_sum(const DualPair &pair) {
    std::int64_t sum = 0;
    for (const auto &f : pair.primal_faces().facets()) sum = checked::add(sum, f.interior_point_count);
    return sum;
}

std::int64_t edge_product_sum(const DualPair &pair) {
    // dual_face expects a face of pair.dual(); edges of the primal live there
    // after swapping.
    const DualPair reversed = pair.swapped();
    std::int64_t sum = 0;
    for (const auto &edge : pair.primal_faces().edges()) {
        const Face &opposite = dual_face(reversed, edge);
        sum = checked::add(sum, checked::mul(edge.interior_point_count, opposite.interior_point_count));
    }
    return sum;
}

std::int64_t h11_resolution(const DualPair &pair) { return ell(pair.primal()) - 4; }

std::int64_t h21_Z(const DualPair &pair) { return facet_interior_sum(pair); }

std::int64_t h11_Z_closed(const DualPair &pair) {
    const DualPair mirror = pair.swapped();
    return 2 * ell(pair.dual()) - 5 - facet_interior_sum(mirror) + edge_product_sum(mirror);
}

BlowupLedger base_locus_ledger(const DualPair &pair) {
    BlowupLedger ledger;
    const FaceLattice &dual_lattice = pair.dual_faces();
    for (const auto &v : dual_lattice.boundary_points()) {
        const Face &carrier = minimal_face_containing(dual_lattice, v);
        const Face &opposite = dual_face(pair, carrier);
        BaseLocusEntry entry{v, carrier.dim, opposite.dim, BaseLocusKind::Empty, 0, 0};
        switch (opposite.dim) {
        case 0:
            break;
        case 1:
            entry.kind = BaseLocusKind::RationalCurves;
            entry.curves = 1 + opposite.interior_point_count;
            break;
        default:
            entry.kind = BaseLocusKind::SingleCurve;
            entry.curves = 1;
            entry.genus = opposite.interior_point_count;
            break;
        }
        ledger.curve_count = checked::add(ledger.curve_count, entry.curves);
        ledger.genus_sum = checked::add(ledger.genus_sum, entry.genus);
        ledger.entries.push_back(entry);
    }
    const DualPair mirror = pair.swapped();
    ledger.closed_form = IdentityCheck{
        ledger.curve_count, ell(pair.dual()) - 1 - facet_interior_sum(mirror) + edge_product_sum(mirror)};
    return ledger;
}

std::int64_t pic_toric_fiber(const DualPair &pair) {
    const DualPair mirror = pair.swapped();
    return ell(pair.dual()) - 4 - facet_interior_sum(mirror) + edge_product_sum(mirror);
}

std::int64_t ph(const DualPair &pair) { return 22 - pic_toric_fiber(pair); }

IdentityCheck ks_lemma_check(const DualPair &pair) {
    const DualPair mirror = pair.swapped();
    const std::int64_t rhs =
        24 - ell(pair.dual()) + facet_interior_sum(mirror) - edge_product_sum(mirror) + facet_interior_sum(pair);
    return IdentityCheck{h11_resolution(pair), rhs};
}

IdentityCheck picard_sum_relation(const DualPair &pair) {
    const DualPair mirror = pair.swapped();
    return IdentityCheck{pic_toric_fiber(mirror) + pic_toric_fiber(pair), 20 + edge_product_sum(pair)};
}

ToricHodgeData toric_hodge_data(const DualPair &pair) {
    ToricHodgeData data;
    data.h11_X = h11_resolution(pair);
    data.h21_Z = h21_Z(pair);
    data.h11_Z = h11_Z_closed(pair);
    data.pic_toric_fiber = pic_toric_fiber(pair);
    data.ph = 22 - data.pic_toric_fiber;
    data.k = 0;
    data.ell_Delta = ell(pair.primal());
    data.ell_Delta_dual = ell(pair.dual());
    return data;
}

} // namespace lghodge
