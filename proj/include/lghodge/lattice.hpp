#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lghodge/checked.hpp"

namespace lghodge {

/// Half-space {x : <normal, x> >= -offset} with a primitive inward normal.
struct FacetInequality {
    Point3 normal;
    std::int64_t offset = 0;

    std::int64_t evaluate(const Point3 &x) const { return checked::add(dot(normal, x), offset); }
    bool contains(const Point3 &x) const { return evaluate(x) >= 0; }
    bool on_boundary(const Point3 &x) const { return evaluate(x) == 0; }

    friend bool operator==(const FacetInequality &a, const FacetInequality &b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

bool operator<(const FacetInequality &a, const FacetInequality &b);

/// Full-dimensional lattice polytope in rank 3, held in both V- and
/// H-representation. Vertices and facets are sorted lexicographically, and
/// the lattice points are enumerated once at construction.
class LatticePolytope {
public:
    const std::vector<Point3> &vertices() const { return vertices_; }
    const std::vector<FacetInequality> &facets() const { return facets_; }
    /// All lattice points, lexicographic order.
    const std::vector<Point3> &lattice_points() const { return points_; }

    std::size_t num_lattice_points() const { return points_.size(); }
    bool contains(const Point3 &x) const;
    bool in_interior(const Point3 &x) const;

    /// Component-wise vertex bounds.
    Point3 box_min() const;
    Point3 box_max() const;

    friend bool operator==(const LatticePolytope &a, const LatticePolytope &b) {
        return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }

    friend LatticePolytope convex_hull(std::span<const Point3> points);
    friend LatticePolytope polar_dual(const LatticePolytope &polytope);

private:
    LatticePolytope(std::vector<Point3> vertices, std::vector<FacetInequality> facets);

    std::vector<Point3> vertices_;
    std::vector<FacetInequality> facets_;
    std::vector<Point3> points_;
};

/// Gift-wrapping hull with exact orientation predicates.
/// Throws DegenerateInput if fewer than 4 points or the affine span has rank < 3.
LatticePolytope convex_hull(std::span<const Point3> points);

/// Origin strictly interior and every facet offset equal to 1.
bool is_reflexive(const LatticePolytope &polytope);

/// {y : <y,x> >= -1 for all x in P}. Throws NotReflexive.
LatticePolytope polar_dual(const LatticePolytope &polytope);

/// Bounding-box scan against all facet inequalities.
std::vector<Point3> scan_lattice_points(std::span<const Point3> vertices, std::span<const FacetInequality> facets);

inline const std::vector<Point3> &lattice_points(const LatticePolytope &polytope) { return polytope.lattice_points(); }

} // namespace lghodge
