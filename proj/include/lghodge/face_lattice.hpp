#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "lghodge/lattice.hpp"

namespace lghodge {

/// A face of a 3-polytope. Index sets refer to the owning polytope's sorted
/// vertex and facet lists.
struct Face {
    int dim = 0;
    std::vector<std::size_t> vertex_ids;
    std::vector<std::size_t> facet_ids;
    std::int64_t lattice_point_count = 0;  ///< ℓ(F)
    std::int64_t interior_point_count = 0; ///< ℓ*(F), points of the relative interior

    friend bool operator==(const Face &, const Face &) = default;
};

/// Proper faces of a polytope grouped by dimension, with incidences.
class FaceLattice {
public:
    explicit FaceLattice(LatticePolytope polytope);

    const LatticePolytope &polytope() const { return polytope_; }

    /// dim in {0,1,2}.
    const std::vector<Face> &faces(int dim) const { return faces_.at(static_cast<std::size_t>(dim)); }
    const std::vector<Face> &vertices() const { return faces_[0]; }
    const std::vector<Face> &edges() const { return faces_[1]; }
    const std::vector<Face> &facets() const { return faces_[2]; }

    /// Indices of the (dim+1)-faces containing face `index` of dimension `dim`.
    const std::vector<std::size_t> &cofaces(int dim, std::size_t index) const;

    /// Face of dimension `dim` with exactly this (sorted) vertex set, or nullptr.
    const Face *find(int dim, const std::vector<std::size_t> &vertex_ids) const;

    /// Facet ids through a lattice point, ascending.
    std::vector<std::size_t> facets_through(const Point3 &x) const;

    /// Boundary lattice points (all points except the origin for reflexive P).
    std::vector<Point3> boundary_points() const;

    /// Lattice points of a face, lexicographic order.
    std::vector<Point3> points_of(const Face &face) const;
    /// Relative-interior lattice points of a face.
    std::vector<Point3> interior_points_of(const Face &face) const;

    std::int64_t euler_characteristic() const;

private:
    LatticePolytope polytope_;
    std::array<std::vector<Face>, 3> faces_;
    std::array<std::vector<std::vector<std::size_t>>, 2> cofaces_;
    // Facet set of each lattice point, parallel to polytope_.lattice_points().
    std::vector<std::vector<std::size_t>> point_facets_;
};

/// Requires P reflexive; throws NotReflexive otherwise.
FaceLattice enumerate_faces(const LatticePolytope &polytope);

/// A reflexive polytope together with its polar dual and both face lattices.
/// `swapped()` exchanges the roles, so every operation written against
/// (primal, dual) also covers (dual, primal).
class DualPair {
public:
    /// Computes the polar dual. Throws NotReflexive.
    explicit DualPair(const LatticePolytope &primal);
    /// Validates that `dual` is the polar dual of `primal`. Throws InvalidPair.
    DualPair(const LatticePolytope &primal, const LatticePolytope &dual);

    const LatticePolytope &primal() const { return primal_->polytope(); }
    const LatticePolytope &dual() const { return dual_->polytope(); }
    const FaceLattice &primal_faces() const { return *primal_; }
    const FaceLattice &dual_faces() const { return *dual_; }

    /// Shares the lattices; no copies.
    DualPair swapped() const { return DualPair(dual_, primal_); }

private:
    DualPair(std::shared_ptr<const FaceLattice> primal, std::shared_ptr<const FaceLattice> dual)
        : primal_(std::move(primal)), dual_(std::move(dual)) {}

    std::shared_ptr<const FaceLattice> primal_;
    std::shared_ptr<const FaceLattice> dual_;
};

/// F a proper face of pair.dual(); returns F° = {σ in primal : <v,σ> = -1 for v in F}.
const Face &dual_face(const DualPair &pair, const Face &face);

/// Smallest face whose relative interior contains x. Throws NotOnBoundary.
const Face &minimal_face_containing(const FaceLattice &lattice, const Point3 &x);
Face minimal_face_containing(const LatticePolytope &polytope, const Point3 &x);

} // namespace lghodge
