#include "lghodge/dual_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lghodge {

namespace {

using Vec2 = Eigen::Matrix<std::int64_t, 2, 1>;

std::int64_t orient2d(const Vec2 &a, const Vec2 &b, const Vec2 &c) {
    using namespace checked;
    return sub(mul(sub(b.x(), a.x()), sub(c.y(), a.y())), mul(sub(b.y(), a.y()), sub(c.x(), a.x())));
}

bool lex_less2(const Vec2 &a, const Vec2 &b) { return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y(); }

// Counter-clockwise order of the corner points (no three collinear).
std::vector<std::size_t> ccw_corners(const std::vector<Vec2> &pts, std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return lex_less2(pts[a], pts[b]); });
    std::vector<std::size_t> cycle{ids.front()};
    while (cycle.size() < ids.size()) {
        const std::size_t cur = cycle.back();
        std::size_t next = cur;
        for (std::size_t q : ids) {
            if (q == cur) continue;
            if (next == cur || orient2d(pts[cur], pts[next], pts[q]) < 0) next = q;
        }
        if (next == cycle.front()) throw std::logic_error("ccw_corners: corners are not in convex position");
        cycle.push_back(next);
    }
    return cycle;
}

// Splits the triangle holding directed edge (y,x), if any, at p.
void split_across(std::vector<Triangle> &tris, std::size_t x, std::size_t y, std::size_t p) {
    for (auto &tri : tris) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (tri[k] != y || tri[(k + 1) % 3] != x) continue;
            const std::size_t w = tri[(k + 2) % 3];
            tri = {y, p, w};
            tris.push_back({p, x, w});
            return;
        }
    }
}

} // namespace

Eigen::Matrix<std::int64_t, 2, 1> FacetFrame::coordinates(const Point3 &x) const {
    const Point3 d = sub(x, origin);
    const std::int64_t det = dot(u, cross(v, transverse));
    // det is ±1 for a unimodular frame.
    const std::int64_t s = dot(d, cross(v, transverse)) * det;
    const std::int64_t t = dot(d, cross(transverse, u)) * det;
    if (dot(d, cross(u, v)) != 0) throw Error(ErrorCode::DegenerateFace, "point is not on the facet plane");
    return {s, t};
}

FacetFrame facet_frame(const FacetInequality &facet, const Point3 &origin) {
    if (content(facet.normal) != 1) throw Error(ErrorCode::DegenerateFace, "facet normal is not primitive");
    // Column-reduce the row vector nᵀ to a single ±1, tracking a unimodular U.
    Point3 a = facet.normal;
    Eigen::Matrix<std::int64_t, 3, 3> basis = Eigen::Matrix<std::int64_t, 3, 3>::Identity();
    for (;;) {
        int pivot = -1;
        for (int i = 0; i < 3; ++i)
            if (a(i) != 0 && (pivot < 0 || checked::abs(a(i)) < checked::abs(a(pivot)))) pivot = i;
        bool reduced = true;
        for (int j = 0; j < 3; ++j) {
            if (j == pivot || a(j) == 0) continue;
            const std::int64_t q = a(j) / a(pivot);
            a(j) = checked::sub(a(j), checked::mul(q, a(pivot)));
            for (int r = 0; r < 3; ++r)
                basis(r, j) = checked::sub(basis(r, j), checked::mul(q, basis(r, pivot)));
            if (a(j) != 0) reduced = false;
        }
        if (reduced) {
            int others[2], n = 0;
            for (int j = 0; j < 3; ++j)
                if (j != pivot) others[n++] = j;
            return FacetFrame{origin, basis.col(others[0]), basis.col(others[1]), basis.col(pivot)};
        }
    }
}

FacetTriangulation triangulate_facet(const FaceLattice &lattice, const Face &face) {
    if (face.dim != 2 || face.facet_ids.size() != 1 || face.vertex_ids.size() < 3)
        throw Error(ErrorCode::DegenerateFace, "triangulate_facet needs a 2-dimensional face");
    const auto &polytope = lattice.polytope();
    FacetTriangulation out;
    out.points = lattice.points_of(face);
    const FacetFrame frame = facet_frame(polytope.facets()[face.facet_ids.front()], out.points.front());

    std::vector<Vec2> flat;
    flat.reserve(out.points.size());
    for (const auto &p : out.points) flat.push_back(frame.coordinates(p));

    std::vector<std::size_t> corner_ids;
    for (std::size_t v : face.vertex_ids) {
        const auto it = std::find(out.points.begin(), out.points.end(), polytope.vertices()[v]);
        corner_ids.push_back(static_cast<std::size_t>(it - out.points.begin()));
    }
    const auto corners = ccw_corners(flat, corner_ids);

    std::vector<Triangle> tris;
    for (std::size_t i = 1; i + 1 < corners.size(); ++i) tris.push_back({corners[0], corners[i], corners[i + 1]});

    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < out.points.size(); ++i)
        if (std::find(corner_ids.begin(), corner_ids.end(), i) == corner_ids.end()) rest.push_back(i);
    std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return lex_less2(flat[a], flat[b]); });

    for (std::size_t p : rest) {
        bool inserted = false;
        for (std::size_t t = 0; t < tris.size() && !inserted; ++t) {
            const auto [a, b, c] = tris[t];
            const std::int64_t o[3] = {orient2d(flat[a], flat[b], flat[p]), orient2d(flat[b], flat[c], flat[p]),
                                       orient2d(flat[c], flat[a], flat[p])};
            if (o[0] < 0 || o[1] < 0 || o[2] < 0) continue;
            const int zeros = (o[0] == 0) + (o[1] == 0) + (o[2] == 0);
            if (zeros == 0) {
                tris[t] = {a, b, p};
                tris.push_back({b, c, p});
                tris.push_back({c, a, p});
            } else {
                // p splits edge (x,y) of this triangle with apex z, and the
                // neighbouring triangle across (y,x) if there is one.
                const std::size_t e = o[0] == 0 ? 0 : (o[1] == 0 ? 1 : 2);
                const std::size_t x = tris[t][e], y = tris[t][(e + 1) % 3], z = tris[t][(e + 2) % 3];
                tris[t] = {x, p, z};
                tris.push_back({p, y, z});
                split_across(tris, x, y, p);
            }
            inserted = true;
        }
        if (!inserted) throw std::logic_error("triangulate_facet: lattice point outside the facet polygon");
    }

    out.triangles = std::move(tris);
    for (const auto &tri : out.triangles) out.doubled_areas.push_back(orient2d(flat[tri[0]], flat[tri[1]], flat[tri[2]]));

    // Pick: a triangulation into empty triangles has 2i + b - 2 triangles.
    const auto expected = 2 * face.interior_point_count + (face.lattice_point_count - face.interior_point_count) - 2;
    if (static_cast<std::int64_t>(out.triangles.size()) != expected)
        throw std::logic_error("triangulate_facet: triangle count disagrees with Pick's theorem");
    return out;
}

std::int64_t SimplicialSurface::euler_characteristic() const {
    return static_cast<std::int64_t>(vertices.size()) - static_cast<std::int64_t>(edges.size()) +
           static_cast<std::int64_t>(triangles.size());
}

bool SimplicialSurface::all_unimodular() const {
    return std::all_of(doubled_areas.begin(), doubled_areas.end(), [](std::int64_t a) { return a == 1; });
}

bool SimplicialSurface::is_closed() const {
    std::map<std::array<std::size_t, 2>, int> uses;
    for (const auto &t : triangles) {
        ++uses[{t[0], t[1]}];
        ++uses[{t[0], t[2]}];
        ++uses[{t[1], t[2]}];
    }
    if (uses.size() != edges.size()) return false;
    return std::all_of(uses.begin(), uses.end(), [](const auto &kv) { return kv.second == 2; });
}

SimplicialSurface boundary_complex(const FaceLattice &lattice) {
    SimplicialSurface surface;
    surface.vertices = lattice.boundary_points();
    std::map<Point3, std::size_t, LexLess> index;
    for (std::size_t i = 0; i < surface.vertices.size(); ++i) index.emplace(surface.vertices[i], i);

    std::vector<std::pair<Triangle, std::int64_t>> tris;
    for (const auto &facet : lattice.facets()) {
        const FacetTriangulation local = triangulate_facet(lattice, facet);
        surface.facet_triangle_counts.push_back(local.triangles.size());
        for (std::size_t t = 0; t < local.triangles.size(); ++t) {
            Triangle g;
            for (std::size_t k = 0; k < 3; ++k) g[k] = index.at(local.points[local.triangles[t][k]]);
            std::sort(g.begin(), g.end());
            tris.emplace_back(g, local.doubled_areas[t]);
        }
    }
    std::sort(tris.begin(), tris.end());
    std::set<std::array<std::size_t, 2>> edges;
    for (const auto &[t, area] : tris) {
        surface.triangles.push_back(t);
        surface.doubled_areas.push_back(area);
        edges.insert({t[0], t[1]});
        edges.insert({t[0], t[2]});
        edges.insert({t[1], t[2]});
    }
    surface.edges.assign(edges.begin(), edges.end());
    return surface;
}

IntMatrix<std::int64_t> boundary_operator_1(const SimplicialSurface &surface) {
    IntMatrix<std::int64_t> d = IntMatrix<std::int64_t>::Zero(static_cast<Eigen::Index>(surface.vertices.size()),
                                                              static_cast<Eigen::Index>(surface.edges.size()));
    for (std::size_t e = 0; e < surface.edges.size(); ++e) {
        const auto col = static_cast<Eigen::Index>(e);
        d(static_cast<Eigen::Index>(surface.edges[e][0]), col) = -1;
        d(static_cast<Eigen::Index>(surface.edges[e][1]), col) = 1;
    }
    return d;
}

IntMatrix<std::int64_t> boundary_operator_2(const SimplicialSurface &surface) {
    IntMatrix<std::int64_t> d = IntMatrix<std::int64_t>::Zero(static_cast<Eigen::Index>(surface.edges.size()),
                                                              static_cast<Eigen::Index>(surface.triangles.size()));
    auto edge_row = [&](std::size_t a, std::size_t b) {
        const auto it = std::lower_bound(surface.edges.begin(), surface.edges.end(), std::array<std::size_t, 2>{a, b});
        return static_cast<Eigen::Index>(it - surface.edges.begin());
    };
    for (std::size_t t = 0; t < surface.triangles.size(); ++t) {
        const auto [a, b, c] = surface.triangles[t];
        const auto col = static_cast<Eigen::Index>(t);
        // ∂[a,b,c] = [b,c] - [a,c] + [a,b]
        d(edge_row(b, c), col) += 1;
        d(edge_row(a, c), col) -= 1;
        d(edge_row(a, b), col) += 1;
    }
    return d;
}

SphereCheck sphere_check(const SimplicialSurface &surface) {
    SphereCheck out;
    out.vertex_count = surface.vertices.size();
    out.edge_count = surface.edges.size();
    out.triangle_count = surface.triangles.size();
    out.euler = surface.euler_characteristic();
    out.unimodular = surface.all_unimodular();
    out.closed = surface.is_closed();

    const auto snf1 = smith_normal_form<std::int64_t>(boundary_operator_1(surface));
    const auto snf2 = smith_normal_form<std::int64_t>(boundary_operator_2(surface));
    const auto v = static_cast<std::int64_t>(out.vertex_count);
    const auto e = static_cast<std::int64_t>(out.edge_count);
    const auto t = static_cast<std::int64_t>(out.triangle_count);
    out.b0 = v - snf1.rank;
    out.b1 = e - snf1.rank - snf2.rank;
    out.b2 = t - snf2.rank;
    auto unit = [](std::int64_t f) { return f == 1; };
    out.torsion_free = std::all_of(snf1.factors.begin(), snf1.factors.end(), unit) &&
                       std::all_of(snf2.factors.begin(), snf2.factors.end(), unit);
    return out;
}

SphereCheck sphere_check(const FaceLattice &lattice) { return sphere_check(boundary_complex(lattice)); }

} // namespace lghodge
