#pragma once

#include <cstdint>
#include <vector>

#include "lghodge/face_lattice.hpp"

namespace lghodge {

/// Both sides of an exact identity, kept apart so a failure shows its residual.
struct IdentityCheck {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;

    bool holds() const { return lhs == rhs; }
    std::int64_t residual() const { return lhs - rhs; }
};

/// How a toric divisor D_v of X_{Δ°} meets the generic anticanonical
/// hypersurface; decided by the dimension of the dual face Γ(v)° in Δ.
enum class BaseLocusKind {
    Empty,          ///< Γ(v)° is a vertex (v interior to a facet of Δ°)
    RationalCurves, ///< Γ(v)° is an edge: 1 + ℓ*(Γ(v)°) smooth rational curves
    SingleCurve,    ///< Γ(v)° is a facet: one smooth curve of genus ℓ*(Γ(v)°)
};

struct BaseLocusEntry {
    Point3 point;           ///< boundary lattice point v of Δ°
    int carrier_dim = 0;    ///< dim Γ(v)
    int dual_dim = 0;       ///< dim Γ(v)°
    BaseLocusKind kind = BaseLocusKind::Empty;
    std::int64_t curves = 0;
    std::int64_t genus = 0;
};

struct BlowupLedger {
    std::vector<BaseLocusEntry> entries;
    std::int64_t curve_count = 0; ///< summed over entries
    std::int64_t genus_sum = 0;
    /// curve_count against ℓ(Δ°) - 1 - Σ_{Δ°[2]} ℓ* + Σ_{Δ°[1]} ℓ*·ℓ*(F°).
    IdentityCheck closed_form;
};

struct ToricHodgeData {
    std::int64_t h11_X = 0;
    std::int64_t h21_Z = 0;
    std::int64_t h11_Z = 0;
    std::int64_t pic_toric_fiber = 0;
    std::int64_t ph = 0;
    std::int64_t k = 0;
    std::int64_t ell_Delta = 0;
    std::int64_t ell_Delta_dual = 0;
};

// Every function below reads Δ as pair.primal() and Δ° as pair.dual().

/// Σ_{F ∈ P[2]} ℓ*(F) for P = pair.primal().
std::int64_t facet_interior_sum(const DualPair &pair);
/// Σ_{F ∈ P[1]} ℓ*(F)·ℓ*(F°) for P = pair.primal().
std::int64_t edge_product_sum(const DualPair &pair);

/// ℓ(Δ) - 4.
std::int64_t h11_resolution(const DualPair &pair);
/// Σ_{F ∈ Δ[2]} ℓ*(F).
std::int64_t h21_Z(const DualPair &pair);
/// 2ℓ(Δ°) - 5 - Σ_{Δ°[2]} ℓ* + Σ_{Δ°[1]} ℓ*(F)ℓ*(F°).
std::int64_t h11_Z_closed(const DualPair &pair);

BlowupLedger base_locus_ledger(const DualPair &pair);

/// Rank of the toric part of Pic of the generic fiber, counted on Δ°:
/// ℓ(Δ°) - 4 - Σ_{Δ°[2]} ℓ* + Σ_{Δ°[1]} ℓ*(F)ℓ*(F°).
std::int64_t pic_toric_fiber(const DualPair &pair);

/// Rank of the cokernel of H²(Y) -> H²(V): 22 - pic_toric_fiber.
std::int64_t ph(const DualPair &pair);

/// ℓ(Δ) - 4  vs  24 - ℓ(Δ°) + Σ_{Δ°[2]} ℓ* - Σ_{Δ°[1]} ℓ*ℓ*° + Σ_{Δ[2]} ℓ*.
IdentityCheck ks_lemma_check(const DualPair &pair);

/// pic(Δ) + pic(Δ°)  vs  20 + Σ_{F ∈ Δ[1]} ℓ*(F)ℓ*(F°).
IdentityCheck picard_sum_relation(const DualPair &pair);

/// k is zero for the toric family.
ToricHodgeData toric_hodge_data(const DualPair &pair);

} // namespace lghodge
