#pragma once

#include <random>
#include <string>
#include <vector>

#include "lghodge/lattice.hpp"

namespace fixtures {

using lghodge::Point3;

inline std::vector<Point3> simplex_p3() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}; }

inline std::vector<Point3> simplex_p3_dual() { return {{-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}; }

inline std::vector<Point3> cube() {
    std::vector<Point3> out;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) out.emplace_back(x, y, z);
    return out;
}

inline std::vector<Point3> octahedron() {
    return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

struct Named {
    std::string name;
    std::vector<Point3> vertices;
};

/// Reflexive polytopes shipped with the repository (data/fixtures.*).
inline std::vector<Named> bundled() {
    return {
        {"P3", simplex_p3()},
        {"cube", cube()},
        {"octahedron", octahedron()},
        {"P3-dual", simplex_p3_dual()},
        {"P2xP1", {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}}},
        {"Bl_pt-P3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 1}}},
        {"P(1,1,1,3)", {{1, 0, 0}, {0, 1, 0}, {-1, -1, -3}, {0, 0, 1}}},
        {"P(1,1,2,2)", {{0, 0, 1}, {-2, -2, -1}, {1, 0, 0}, {0, 1, 0}}},
        {"dP6xP1", {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {-1, 0, 0}, {0, -1, 0}, {1, 1, 0}, {0, 0, 1}, {0, 0, -1}}},
        {"P(1,1,1,3)-dual", {{-1, -1, -1}, {-1, -1, 1}, {-1, 5, -1}, {5, -1, -1}}},
    };
}

/// Seeded corpus of reflexive polytopes: hulls of random subsets of the
/// lattice points of big reflexive polytopes, moved by random unimodular maps.
inline std::vector<std::vector<Point3>> generated(std::size_t count, std::uint64_t seed = 20261018) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Point3>> parents;
    for (const auto &p : {simplex_p3_dual(), bundled()[9].vertices, cube(), bundled()[8].vertices}) {
        const auto hull = lghodge::convex_hull(p);
        std::vector<Point3> boundary;
        for (const auto &x : hull.lattice_points())
            if (!x.isZero()) boundary.push_back(x);
        parents.push_back(boundary);
    }
    auto unimodular = [&]() {
        Eigen::Matrix<std::int64_t, 3, 3> m = Eigen::Matrix<std::int64_t, 3, 3>::Identity();
        std::uniform_int_distribution<int> pick(0, 2), coef(-1, 1);
        for (int step = 0; step < 3; ++step) {
            const int i = pick(rng), j = pick(rng);
            if (i != j) m.row(i) += coef(rng) * m.row(j);
        }
        return m;
    };
    std::vector<std::vector<Point3>> out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts < 200 * count) {
        ++attempts;
        const auto &parent = parents[attempts % parents.size()];
        std::uniform_int_distribution<std::size_t> size_dist(4, std::min<std::size_t>(14, parent.size()));
        std::vector<Point3> pool = parent;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(size_dist(rng));
        try {
            const auto hull = lghodge::convex_hull(pool);
            if (!lghodge::is_reflexive(hull)) continue;
            const auto m = unimodular();
            std::vector<Point3> moved;
            for (const auto &v : hull.vertices()) moved.push_back(m * v);
            out.push_back(moved);
        } catch (const lghodge::Error &) {
        }
    }
    return out;
}

} // namespace fixtures
