#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lghodge/face_lattice.hpp"
#include "lghodge/smith.hpp"

namespace lghodge {

/// Integer frame of a 2-face's affine lattice: x = origin + s*u + t*v with
/// (s,t) ∈ Z² exactly for the lattice points of the face's plane. (u, v,
/// transverse) is a basis of Z³.
struct FacetFrame {
    Point3 origin;
    Point3 u;
    Point3 v;
    Point3 transverse;

    Eigen::Matrix<std::int64_t, 2, 1> coordinates(const Point3 &x) const;
};

FacetFrame facet_frame(const FacetInequality &facet, const Point3 &origin);

using Triangle = std::array<std::size_t, 3>;

/// Triangulation of one 2-face; triangle indices refer to `points`.
struct FacetTriangulation {
    std::vector<Point3> points;
    std::vector<Triangle> triangles;
    /// Twice the area of each triangle in facet-lattice units (1 = unimodular).
    std::vector<std::int64_t> doubled_areas;
};

/// Uses every lattice point of the facet as a vertex. Throws DegenerateFace
/// if `face` is not 2-dimensional.
FacetTriangulation triangulate_facet(const FaceLattice &lattice, const Face &face);

/// Closed triangulated surface on the boundary lattice points of a polytope.
struct SimplicialSurface {
    std::vector<Point3> vertices;                      ///< lexicographic
    std::vector<std::array<std::size_t, 2>> edges;     ///< sorted pairs, sorted
    std::vector<Triangle> triangles;                   ///< sorted triples, sorted
    std::vector<std::int64_t> doubled_areas;           ///< parallel to triangles
    std::vector<std::size_t> facet_triangle_counts;    ///< per facet of the polytope

    std::int64_t euler_characteristic() const;
    bool all_unimodular() const;
    /// Every edge in exactly two triangles.
    bool is_closed() const;
};

SimplicialSurface boundary_complex(const FaceLattice &lattice);

/// ∂₁ (vertices × edges) and ∂₂ (edges × triangles), sorted-vertex orientation.
IntMatrix<std::int64_t> boundary_operator_1(const SimplicialSurface &surface);
IntMatrix<std::int64_t> boundary_operator_2(const SimplicialSurface &surface);

struct SphereCheck {
    std::int64_t b0 = 0, b1 = 0, b2 = 0;
    bool torsion_free = false;
    std::int64_t euler = 0;
    std::size_t vertex_count = 0, edge_count = 0, triangle_count = 0;
    bool unimodular = false;
    bool closed = false;

    /// Betti (1,0,1), torsion-free, χ = 2, closed and unimodular.
    bool is_sphere() const {
        return b0 == 1 && b1 == 0 && b2 == 1 && torsion_free && euler == 2 && unimodular && closed;
    }
};

SphereCheck sphere_check(const SimplicialSurface &surface);
SphereCheck sphere_check(const FaceLattice &lattice);

} // namespace lghodge
