#include "lghodge/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace lghodge {

bool operator<(const FacetInequality &a, const FacetInequality &b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
}

namespace {

std::int64_t norm2(const Point3 &v) { return dot(v, v); }

// Jarvis march over coplanar points. Returns the corner cycle (no collinear
// boundary points), counter-clockwise when `normal` points at the viewer.
std::vector<std::size_t> polygon_corners(const std::vector<Point3> &points, const std::vector<std::size_t> &ids,
                                         const Point3 &normal) {
    const auto start = *std::min_element(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(points[a], points[b]);
    });
    std::vector<std::size_t> cycle;
    std::size_t current = start;
    do {
        cycle.push_back(current);
        if (cycle.size() > ids.size()) throw std::logic_error("polygon_corners: wrap did not close");
        std::size_t next = current == ids.front() ? ids[1] : ids.front();
        for (std::size_t q : ids) {
            if (q == current) continue;
            const Point3 e = sub(points[next], points[current]);
            const Point3 f = sub(points[q], points[current]);
            const std::int64_t turn = dot(normal, cross(e, f));
            if (turn < 0 || (turn == 0 && norm2(f) > norm2(e))) next = q;
        }
        current = next;
    } while (current != start);
    return cycle;
}

struct AffineFrame {
    std::size_t ids[4];
};

AffineFrame find_affine_frame(const std::vector<Point3> &pts) {
    const std::size_t n = pts.size();
    AffineFrame frame{{0, 0, 0, 0}};
    std::size_t i = 1;
    while (i < n && pts[i] == pts[0]) ++i;
    if (i == n) throw Error(ErrorCode::DegenerateInput, "all points coincide");
    frame.ids[1] = i;
    const Point3 d1 = sub(pts[i], pts[0]);
    std::size_t j = 1;
    while (j < n && cross(d1, sub(pts[j], pts[0])).isZero()) ++j;
    if (j == n) throw Error(ErrorCode::DegenerateInput, "points are collinear");
    frame.ids[2] = j;
    std::size_t k = 1;
    while (k < n && orient3d(pts[0], pts[i], pts[j], pts[k]) == 0) ++k;
    if (k == n) throw Error(ErrorCode::DegenerateInput, "points are coplanar");
    frame.ids[3] = k;
    return frame;
}

FacetInequality make_facet(Point3 normal, const Point3 &anchor) {
    normal = primitive(normal);
    return FacetInequality{normal, checked::neg(dot(normal, anchor))};
}

bool supports(const std::vector<Point3> &pts, const Point3 &normal, const Point3 &anchor) {
    return std::all_of(pts.begin(), pts.end(), [&](const Point3 &p) { return dot(normal, sub(p, anchor)) >= 0; });
}

FacetInequality initial_facet(const std::vector<Point3> &pts, const AffineFrame &frame) {
    Point3 ref = Point3::Zero();
    for (std::size_t id : frame.ids) ref = add(ref, pts[id]);
    // The lexicographically smallest point is always a vertex.
    const Point3 &a = pts.front();
    const Point3 ref_dir = sub(ref, Point3(checked::mul<std::int64_t>(4, a.x()), checked::mul<std::int64_t>(4, a.y()),
                                           checked::mul<std::int64_t>(4, a.z())));
    for (std::size_t i = 1; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Point3 m = cross(sub(pts[i], a), sub(pts[j], a));
            const std::int64_t side = dot(m, ref_dir);
            if (side == 0) continue;
            if (side < 0) m = -m;
            if (supports(pts, m, a)) return make_facet(m, a);
        }
    }
    throw std::logic_error("convex_hull: no supporting plane through the minimal point");
}

} // namespace

LatticePolytope::LatticePolytope(std::vector<Point3> vertices, std::vector<FacetInequality> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
    std::sort(vertices_.begin(), vertices_.end(), LexLess{});
    std::sort(facets_.begin(), facets_.end());
    points_ = scan_lattice_points(vertices_, facets_);
}

bool LatticePolytope::contains(const Point3 &x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const FacetInequality &f) { return f.contains(x); });
}

bool LatticePolytope::in_interior(const Point3 &x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const FacetInequality &f) { return f.evaluate(x) > 0; });
}

Point3 LatticePolytope::box_min() const {
    Point3 lo = vertices_.front();
    for (const auto &v : vertices_) lo = lo.cwiseMin(v);
    return lo;
}

Point3 LatticePolytope::box_max() const {
    Point3 hi = vertices_.front();
    for (const auto &v : vertices_) hi = hi.cwiseMax(v);
    return hi;
}

std::vector<Point3> scan_lattice_points(std::span<const Point3> vertices, std::span<const FacetInequality> facets) {
    if (vertices.empty()) return {};
    Point3 lo = vertices.front(), hi = vertices.front();
    for (const auto &v : vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    // Guard the scan volume; reflexive 3-polytopes have tiny boxes.
    std::int64_t volume = 1;
    for (int i = 0; i < 3; ++i) volume = checked::mul(volume, checked::add(checked::sub(hi(i), lo(i)), std::int64_t{1}));
    if (volume > (std::int64_t{1} << 32)) throw Error(ErrorCode::Overflow, "bounding box too large to scan");

    std::vector<Point3> out;
    Point3 x;
    for (x.x() = lo.x(); x.x() <= hi.x(); ++x.x())
        for (x.y() = lo.y(); x.y() <= hi.y(); ++x.y())
            for (x.z() = lo.z(); x.z() <= hi.z(); ++x.z())
                if (std::all_of(facets.begin(), facets.end(), [&](const FacetInequality &f) { return f.contains(x); }))
                    out.push_back(x);
    return out;
}

LatticePolytope convex_hull(std::span<const Point3> input) {
    std::vector<Point3> pts(input.begin(), input.end());
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 4) throw Error(ErrorCode::DegenerateInput, "need at least 4 distinct points");
    const AffineFrame frame = find_affine_frame(pts);

    std::set<FacetInequality> seen;
    std::set<std::size_t> vertex_ids;
    std::deque<FacetInequality> queue;
    const FacetInequality first = initial_facet(pts, frame);
    seen.insert(first);
    queue.push_back(first);

    while (!queue.empty()) {
        const FacetInequality facet = queue.front();
        queue.pop_front();
        std::vector<std::size_t> on_plane;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (facet.on_boundary(pts[i])) on_plane.push_back(i);
        const auto corners = polygon_corners(pts, on_plane, facet.normal);
        vertex_ids.insert(corners.begin(), corners.end());

        for (std::size_t e = 0; e < corners.size(); ++e) {
            const Point3 &u = pts[corners[e]];
            const Point3 &v = pts[corners[(e + 1) % corners.size()]];
            const Point3 &w = pts[corners[(e + 2) % corners.size()]];
            const Point3 axis = sub(v, u);
            // Pivot the plane around edge uv, away from the current facet.
            auto oriented_normal = [&](const Point3 &p) {
                Point3 m = cross(axis, sub(p, u));
                if (dot(m, sub(w, u)) < 0) m = -m;
                return m;
            };
            std::size_t best = pts.size();
            Point3 m;
            for (std::size_t q = 0; q < pts.size(); ++q) {
                if (facet.on_boundary(pts[q])) continue;
                if (best == pts.size() || dot(m, sub(pts[q], u)) < 0) {
                    best = q;
                    m = oriented_normal(pts[q]);
                }
            }
            if (best == pts.size()) throw Error(ErrorCode::DegenerateInput, "points are coplanar");
            if (!supports(pts, m, u)) throw std::logic_error("convex_hull: pivot produced a non-supporting plane");
            const FacetInequality next = make_facet(m, u);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }

    std::vector<Point3> vertices;
    for (std::size_t id : vertex_ids) vertices.push_back(pts[id]);
    return LatticePolytope(std::move(vertices), std::vector<FacetInequality>(seen.begin(), seen.end()));
}

bool is_reflexive(const LatticePolytope &polytope) {
    return std::all_of(polytope.facets().begin(), polytope.facets().end(),
                       [](const FacetInequality &f) { return f.offset == 1; });
}

LatticePolytope polar_dual(const LatticePolytope &polytope) {
    if (!is_reflexive(polytope)) throw Error(ErrorCode::NotReflexive, "polar dual requires a reflexive polytope");
    std::vector<Point3> vertices;
    vertices.reserve(polytope.facets().size());
    for (const auto &f : polytope.facets()) vertices.push_back(f.normal);
    std::vector<FacetInequality> facets;
    facets.reserve(polytope.vertices().size());
    for (const auto &v : polytope.vertices()) {
        if (content(v) != 1) throw std::logic_error("polar_dual: reflexive polytope with non-primitive vertex");
        facets.push_back(FacetInequality{v, 1});
    }
    return LatticePolytope(std::move(vertices), std::move(facets));
}

} // namespace lghodge
