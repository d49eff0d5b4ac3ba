#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "lghodge/mirror.hpp"

using namespace lghodge;

namespace {

std::int64_t nonzero_count(const HodgeDiamond &d) { return (d.entries().array() != 0).count(); }

ErrorCode code_of_assemble(std::int64_t ph, std::int64_t k, std::int64_t h12) {
    try {
        (void)assemble_f_diamond(ph, k, h12);
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::SchemaError;
}

} // namespace

TEST_CASE("assemble_f_diamond for the P3 mirror") {
    const auto d = assemble_f_diamond(3, 0, 0);
    CHECK(d.kind() == DiamondKind::LgFpq);
    CHECK(d(3, 0) == 1);
    CHECK(d(0, 3) == 1);
    CHECK(d(2, 1) == 1);
    CHECK(d(1, 2) == 1);
    CHECK(nonzero_count(d) == 4);
    CHECK(d(0, 0) == 0);
    CHECK(d(3, 3) == 0);
}

TEST_CASE("assemble_f_diamond at ph = 2") {
    const auto d = assemble_f_diamond(2, 0, 0);
    CHECK(d(2, 1) == 0);
    CHECK(d(1, 2) == 0);
    CHECK(nonzero_count(d) == 2);
}

TEST_CASE("assemble_f_diamond for the cube mirror") {
    const auto d = assemble_f_diamond(19, 0, 6);
    CHECK(d(2, 1) == 23);
    CHECK(d(1, 2) == 23);
}

TEST_CASE("assemble_f_diamond carries k") {
    const auto d = assemble_f_diamond(4, 5, 1);
    CHECK(d(1, 1) == 5);
    CHECK(d(2, 2) == 5);
    CHECK(d(2, 1) == 3);
    CHECK(d.has_lg_zero_pattern());
}

TEST_CASE("assemble_f_diamond rejects bad parameters") {
    CHECK(code_of_assemble(1, 0, 0) == ErrorCode::InvalidParameter);
    CHECK(code_of_assemble(3, -1, 0) == ErrorCode::InvalidParameter);
    CHECK(code_of_assemble(3, 0, -2) == ErrorCode::InvalidParameter);
}

TEST_CASE("assembled diamonds are symmetric") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> ph(2, 40), small(0, 60);
    for (int i = 0; i < 500; ++i) {
        const auto d = assemble_f_diamond(ph(rng), small(rng), small(rng));
        CHECK(d.is_transpose_symmetric());
        CHECK(d.is_rotation_symmetric());
        CHECK(d.is_nonnegative());
        CHECK(d.has_lg_zero_pattern());
    }
}

TEST_CASE("toric_hodge_diamond") {
    using Grid = HodgeDiamond::Grid;
    const auto p3 = toric_hodge_diamond(convex_hull(fixtures::simplex_p3()));
    CHECK(p3.kind() == DiamondKind::FanoHpq);
    CHECK(p3.entries() == Grid::Identity());

    Grid cube = Grid::Zero();
    cube.diagonal() << 1, 23, 23, 1;
    CHECK(toric_hodge_diamond(convex_hull(fixtures::cube())).entries() == cube);

    Grid oct = Grid::Zero();
    oct.diagonal() << 1, 3, 3, 1;
    const auto d = toric_hodge_diamond(convex_hull(fixtures::octahedron()));
    CHECK(d.entries() == oct);
    CHECK(d.is_transpose_symmetric());
    CHECK(d.is_rotation_symmetric());
}

TEST_CASE("mirror index map has order four") {
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            auto idx = std::pair{p, q};
            for (int i = 0; i < 4; ++i) {
                idx = mirror_index(idx.first, idx.second);
                CHECK(idx.first >= 0);
                CHECK(idx.first < 4);
                CHECK(idx.second >= 0);
                CHECK(idx.second < 4);
            }
            CHECK(idx == std::pair{p, q});
        }
    static_assert(mirror_index(1, 1) == std::pair{2, 1});
    static_assert(mirror_index(0, 0) == std::pair{3, 0});
}

TEST_CASE("verify_mirror on the worked pairs") {
    struct Case {
        std::vector<Point3> verts;
        std::int64_t h11, ph, h21;
    };
    for (const auto &c : {Case{fixtures::simplex_p3(), 1, 3, 0}, Case{fixtures::cube(), 23, 19, 6},
                          Case{fixtures::octahedron(), 3, 5, 0}}) {
        const auto rec = verify_mirror(convex_hull(c.verts), "case");
        CHECK(rec.id == "case");
        CHECK(rec.passed());
        CHECK(rec.mirror_holds());
        CHECK(rec.fano_diamond(1, 1) == c.h11);
        CHECK(rec.lg_diamond(2, 1) == c.ph - 2 + c.h21);
        CHECK(rec.fano_diamond(1, 1) == rec.lg_diamond(2, 1));
        CHECK(rec.data.ph == c.ph);
        CHECK(rec.data.h21_Z == c.h21);
        CHECK(rec.ks_lemma.holds());
        CHECK(rec.ks_lemma_dual.holds());
        CHECK(rec.picard_sum.holds());
        CHECK(rec.ledger_curves.holds());
        CHECK(rec.ledger_h11_Z.holds());
        CHECK(rec.ledger_genus.holds());
        CHECK(rec.sphere.is_sphere());
        for (const auto &m : rec.mirror) {
            const auto [a, b] = mirror_index(m.p, m.q);
            CHECK(m.h == rec.fano_diamond(m.p, m.q));
            CHECK(m.f == rec.lg_diamond(a, b));
        }
    }
}

TEST_CASE("verify_mirror over fixtures and corpus") {
    for (const auto &f : fixtures::bundled()) {
        INFO(f.name);
        const auto rec = verify_mirror(DualPair(convex_hull(f.vertices)), f.name);
        CHECK(rec.passed());
        CHECK(rec.extremal_implication);
    }
    for (const auto &verts : fixtures::generated(40)) {
        const auto rec = verify_mirror(convex_hull(verts));
        CHECK(rec.passed());
    }
}

TEST_CASE("a broken record fails") {
    auto rec = verify_mirror(convex_hull(fixtures::cube()));
    REQUIRE(rec.passed());
    rec.ks_lemma.rhs += 1;
    CHECK_FALSE(rec.passed());
    rec = verify_mirror(convex_hull(fixtures::cube()));
    rec.mirror[5].f += 1;
    CHECK_FALSE(rec.mirror_holds());
    CHECK_FALSE(rec.passed());
}

TEST_CASE("check_extremal") {
    CHECK(check_extremal(std::vector<std::int64_t>{2, 2, 2}, 3));
    CHECK_FALSE(check_extremal(std::vector<std::int64_t>{1, 1, 1}, 3));
    CHECK(check_extremal(std::vector<std::int64_t>{2, 2, 1, 1}, 3));
}

TEST_CASE("check_extremal rejects invalid input") {
    CHECK_THROWS_AS(check_extremal(std::vector<std::int64_t>{2, -1}, 1), Error);
    CHECK_THROWS_AS(check_extremal(std::vector<std::int64_t>{2}, 0), Error);
}

TEST_CASE("render places h33 on top") {
    const auto text = assemble_f_diamond(3, 0, 0).render();
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}
