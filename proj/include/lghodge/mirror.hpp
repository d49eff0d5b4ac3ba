#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "lghodge/dual_complex.hpp"
#include "lghodge/hodge.hpp"

namespace lghodge {

enum class DiamondKind { FanoHpq, LgFpq };

/// 4×4 grid of Hodge numbers indexed (p,q), p,q ∈ {0..3}.
class HodgeDiamond {
public:
    using Grid = Eigen::Matrix<std::int64_t, 4, 4>;

    HodgeDiamond(DiamondKind kind, const Grid &entries) : kind_(kind), entries_(entries) {}

    DiamondKind kind() const { return kind_; }
    const Grid &entries() const { return entries_; }
    std::int64_t operator()(int p, int q) const { return entries_(p, q); }

    bool is_nonnegative() const { return (entries_.array() >= 0).all(); }
    /// entry(p,q) = entry(q,p)
    bool is_transpose_symmetric() const { return entries_ == entries_.transpose(); }
    /// entry(p,q) = entry(3-p,3-q)
    bool is_rotation_symmetric() const { return entries_ == entries_.reverse(); }
    /// Zero outside (1,1), (2,2) and the anti-diagonal p+q = 3.
    bool has_lg_zero_pattern() const;

    /// Diamond layout, h^{3,3} on top; one row per p+q.
    std::string render() const;

    friend bool operator==(const HodgeDiamond &a, const HodgeDiamond &b) {
        return a.kind_ == b.kind_ && a.entries_ == b.entries_;
    }

private:
    DiamondKind kind_;
    Grid entries_;
};

/// f-diamond of an LG model with K3 fibres from (ph, k, h^{1,2}(Z)).
/// Throws InvalidParameter if ph < 2, k < 0 or h12Z < 0.
HodgeDiamond assemble_f_diamond(std::int64_t ph, std::int64_t k, std::int64_t h12Z);

/// diag(1, ℓ(Δ)-4, ℓ(Δ)-4, 1).
HodgeDiamond toric_hodge_diamond(const LatticePolytope &delta);

/// h^{p,q}(X) pairs with f^{3-q,p}(Y,w).
constexpr std::pair<int, int> mirror_index(int p, int q) { return {3 - q, p}; }

struct MirrorEquality {
    int p = 0, q = 0;
    std::int64_t h = 0; ///< h^{p,q}(X_Δ)
    std::int64_t f = 0; ///< f^{3-q,p}(Y_Δ, w)
    bool holds() const { return h == f; }
};

struct VerificationRecord {
    std::string id;
    ToricHodgeData data;
    HodgeDiamond fano_diamond{DiamondKind::FanoHpq, HodgeDiamond::Grid::Zero()};
    HodgeDiamond lg_diamond{DiamondKind::LgFpq, HodgeDiamond::Grid::Zero()};
    std::array<MirrorEquality, 16> mirror{};
    IdentityCheck ks_lemma;        ///< Δ orientation
    IdentityCheck ks_lemma_dual;   ///< Δ° orientation
    IdentityCheck picard_sum;
    IdentityCheck ledger_curves;   ///< direct curve count vs closed form
    IdentityCheck ledger_h11_Z;    ///< h11_Z closed form vs ℓ(Δ°) - 4 + curves
    IdentityCheck ledger_genus;    ///< h21_Z vs ledger genus sum
    bool extremal_flag = false;    ///< every facet of Δ has ℓ* = 0
    bool extremal_implication = true; ///< flag ⇒ h21_Z = 0
    SphereCheck sphere;
    std::string sphere_error;      ///< set when the complex could not be built
    std::chrono::microseconds elapsed{0};

    bool mirror_holds() const;
    bool passed() const;
};

/// Full check for one reflexive Δ; failures are recorded, never thrown.
VerificationRecord verify_mirror(const DualPair &pair, std::string id = {});
VerificationRecord verify_mirror(const LatticePolytope &delta, std::string id = {});

/// Σ R(p) = 2·rank. Throws InvalidParameter on negative ranks or rank < 1.
bool check_extremal(std::span<const std::int64_t> local_ranks, std::int64_t rank);

} // namespace lghodge
