#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "fixtures.hpp"
#include "lghodge/face_lattice.hpp"
#include "oracle.hpp"

using namespace lghodge;

namespace {

using PointKey = std::vector<std::int64_t>;
using FaceKey = std::tuple<int, std::set<PointKey>, std::int64_t, std::int64_t>;

PointKey key(const Point3 &p) { return {p.x(), p.y(), p.z()}; }

std::set<PointKey> vertex_points(const LatticePolytope &P, const Face &f) {
    std::set<PointKey> out;
    for (auto id : f.vertex_ids) out.insert(key(P.vertices()[id]));
    return out;
}

std::multiset<FaceKey> library_faces(const FaceLattice &L) {
    std::multiset<FaceKey> out;
    for (int d = 0; d < 3; ++d)
        for (const auto &f : L.faces(d))
            out.insert({d, vertex_points(L.polytope(), f), f.lattice_point_count, f.interior_point_count});
    return out;
}

std::multiset<FaceKey> oracle_faces(const oracle::Polytope &P) {
    std::multiset<FaceKey> out;
    auto add = [&](int d, const std::vector<std::vector<std::size_t>> &faces) {
        for (const auto &f : faces) {
            std::set<PointKey> vs;
            for (const auto &v : P.face_vertices(f)) vs.insert(key(v));
            out.insert({d, vs, P.ell(f), P.ell_star(f)});
        }
    };
    add(0, P.verts);
    add(1, P.edges);
    add(2, P.facets);
    return out;
}

const Face &vertex_face(const FaceLattice &L, const Point3 &v) {
    const auto &verts = L.polytope().vertices();
    const auto it = std::find(verts.begin(), verts.end(), v);
    REQUIRE(it != verts.end());
    const Face *f = L.find(0, {static_cast<std::size_t>(it - verts.begin())});
    REQUIRE(f != nullptr);
    return *f;
}

void check_pair_properties(const DualPair &pair) {
    const auto &L = pair.primal_faces();
    const auto &D = pair.dual_faces();
    CHECK(L.euler_characteristic() == 2);
    CHECK(D.euler_characteristic() == 2);
    CHECK(L.vertices().size() == D.facets().size());
    CHECK(L.edges().size() == D.edges().size());
    CHECK(L.facets().size() == D.vertices().size());

    std::int64_t partition = 1;
    for (int d = 0; d < 3; ++d)
        for (const auto &f : L.faces(d)) {
            partition += f.interior_point_count;
            CHECK(f.interior_point_count <= f.lattice_point_count);
            CHECK(f.lattice_point_count >= static_cast<std::int64_t>(f.vertex_ids.size()));
            if (d == 0) {
                CHECK(f.lattice_point_count == 1);
                CHECK(f.interior_point_count == 1);
            }
        }
    CHECK(partition == static_cast<std::int64_t>(L.polytope().num_lattice_points()));

    for (std::size_t i = 0; i < L.edges().size(); ++i) CHECK(L.cofaces(1, i).size() == 2);
    for (std::size_t i = 0; i < L.vertices().size(); ++i) CHECK(L.cofaces(0, i).size() >= 3);

    const auto back = pair.swapped();
    for (int d = 0; d < 3; ++d)
        for (const auto &f : D.faces(d)) {
            const Face &g = dual_face(pair, f);
            CHECK(g.dim + f.dim == 2);
            CHECK(dual_face(back, g) == f);
            for (auto vi : f.vertex_ids)
                for (auto wi : g.vertex_ids)
                    CHECK(dot(pair.dual().vertices()[vi], pair.primal().vertices()[wi]) == -1);
        }
}

} // namespace

TEST_CASE("cube face counts") {
    const auto L = enumerate_faces(convex_hull(fixtures::cube()));
    CHECK(L.vertices().size() == 8);
    CHECK(L.edges().size() == 12);
    CHECK(L.facets().size() == 6);
    for (const auto &f : L.facets()) {
        CHECK(f.interior_point_count == 1);
        CHECK(f.lattice_point_count == 9);
        CHECK(f.vertex_ids.size() == 4);
    }
    for (const auto &e : L.edges()) {
        CHECK(e.interior_point_count == 1);
        CHECK(e.lattice_point_count == 3);
    }
}

TEST_CASE("octahedron face counts") {
    const auto L = enumerate_faces(convex_hull(fixtures::octahedron()));
    CHECK(L.vertices().size() == 6);
    CHECK(L.edges().size() == 12);
    CHECK(L.facets().size() == 8);
    for (const auto &f : L.facets()) CHECK(f.interior_point_count == 0);
    for (const auto &e : L.edges()) CHECK(e.interior_point_count == 0);
}

TEST_CASE("enumerate_faces requires a reflexive polytope") {
    const auto stretched = convex_hull(std::vector<Point3>{{2, 0, 0}, {-2, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    try {
        (void)enumerate_faces(stretched);
        FAIL("expected NotReflexive");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotReflexive);
    }
    // The face lattice itself works for any full-dimensional polytope.
    const FaceLattice L(stretched);
    CHECK(L.euler_characteristic() == 2);
    CHECK(L.facets().size() == 8);
}

TEST_CASE("dual_face of an octahedron vertex is a cube facet") {
    const DualPair pair(convex_hull(fixtures::cube()));
    const Face &e1 = vertex_face(pair.dual_faces(), Point3(1, 0, 0));
    const Face &g = dual_face(pair, e1);
    CHECK(g.dim == 2);
    const auto pts = pair.primal_faces().points_of(g);
    CHECK(pts.size() == 9);
    for (const auto &p : pts) CHECK(p.x() == -1);
}

TEST_CASE("dual_face of a facet is a vertex") {
    const DualPair pair(convex_hull(fixtures::cube()));
    for (const auto &f : pair.dual_faces().facets()) CHECK(dual_face(pair, f).dim == 0);
}

TEST_CASE("dual_face of a cube edge is an octahedron edge") {
    const DualPair pair(convex_hull(fixtures::octahedron()));
    REQUIRE(pair.dual_faces().edges().size() == 12);
    for (const auto &e : pair.dual_faces().edges()) {
        const Face &g = dual_face(pair, e);
        CHECK(g.dim == 1);
        CHECK(g.interior_point_count == 0);
    }
}

TEST_CASE("dual_face rejects foreign faces") {
    const DualPair pair(convex_hull(fixtures::cube()));
    Face bogus;
    bogus.dim = 1;
    bogus.vertex_ids = {0, 99};
    CHECK_THROWS_AS((void)dual_face(pair, bogus), Error);

    // A face of some other polytope with valid-looking ids.
    const auto other = enumerate_faces(convex_hull(fixtures::simplex_p3()));
    try {
        (void)dual_face(pair, other.edges().front());
        FAIL("expected InvalidPair");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::InvalidPair);
    }
}

TEST_CASE("DualPair validates explicit duals") {
    const auto cube = convex_hull(fixtures::cube());
    const auto oct = convex_hull(fixtures::octahedron());
    CHECK_NOTHROW(DualPair(cube, oct));
    try {
        DualPair bad(cube, cube);
        FAIL("expected InvalidPair");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::InvalidPair);
    }
}

TEST_CASE("minimal_face_containing on the cube") {
    const auto L = enumerate_faces(convex_hull(fixtures::cube()));

    const Face &v = minimal_face_containing(L, Point3(1, 1, 1));
    CHECK(v.dim == 0);
    CHECK(L.polytope().vertices()[v.vertex_ids[0]] == Point3(1, 1, 1));

    const Face &e = minimal_face_containing(L, Point3(1, 1, 0));
    CHECK(e.dim == 1);
    REQUIRE(e.vertex_ids.size() == 2);
    std::set<PointKey> ends{key(L.polytope().vertices()[e.vertex_ids[0]]), key(L.polytope().vertices()[e.vertex_ids[1]])};
    CHECK(ends == std::set<PointKey>{{1, 1, -1}, {1, 1, 1}});

    const Face &f = minimal_face_containing(L, Point3(1, 0, 0));
    CHECK(f.dim == 2);
    for (const auto &p : L.points_of(f)) CHECK(p.x() == 1);

    CHECK(minimal_face_containing(L.polytope(), Point3(1, 0, 0)) == f);
}

TEST_CASE("minimal_face_containing rejects interior and outside points") {
    const auto L = enumerate_faces(convex_hull(fixtures::cube()));
    for (const auto &x : {Point3(0, 0, 0), Point3(2, 0, 0), Point3(1, 1, 2)}) {
        try {
            (void)minimal_face_containing(L, x);
            FAIL("expected NotOnBoundary");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::NotOnBoundary);
        }
    }
}

TEST_CASE("boundary points and per-face point lists") {
    const auto L = enumerate_faces(convex_hull(fixtures::simplex_p3_dual()));
    CHECK(L.boundary_points().size() == 34);
    for (const auto &f : L.facets()) {
        CHECK(static_cast<std::int64_t>(L.points_of(f).size()) == f.lattice_point_count);
        CHECK(static_cast<std::int64_t>(L.interior_points_of(f).size()) == f.interior_point_count);
        CHECK(f.lattice_point_count == 15);
        CHECK(f.interior_point_count == 3);
    }
    for (const auto &x : L.boundary_points()) {
        const Face &m = minimal_face_containing(L, x);
        const auto in = L.interior_points_of(m);
        CHECK(std::find(in.begin(), in.end(), x) != in.end());
        CHECK(m.facet_ids == L.facets_through(x));
    }
}

TEST_CASE("bundled fixtures agree with the brute-force oracle") {
    for (const auto &f : fixtures::bundled()) {
        INFO(f.name);
        const DualPair pair(convex_hull(f.vertices));
        CHECK(library_faces(pair.primal_faces()) == oracle_faces(oracle::build(f.vertices)));
        CHECK(library_faces(pair.dual_faces()) == oracle_faces(oracle::build(pair.dual().vertices())));
        check_pair_properties(pair);
        check_pair_properties(pair.swapped());
    }
}

TEST_CASE("properties over the generated reflexive corpus") {
    for (const auto &verts : fixtures::generated(60)) {
        const DualPair pair(convex_hull(verts));
        CHECK(library_faces(pair.primal_faces()) == oracle_faces(oracle::build(verts)));
        check_pair_properties(pair);
        check_pair_properties(pair.swapped());
    }
}
