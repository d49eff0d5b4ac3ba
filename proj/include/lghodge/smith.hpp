#pragma once

#include <concepts>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lghodge/checked.hpp"

namespace lghodge {

template <std::integral Scalar> using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <std::integral Scalar> struct SNFResult {
    /// Nonzero invariant factors d_1 | d_2 | ... , all positive.
    std::vector<Scalar> factors;
    Eigen::Index rank = 0;
};

/// Smith normal form by exact row/column elimination. Every intermediate is
/// overflow-checked.
template <std::integral Scalar> SNFResult<Scalar> smith_normal_form(IntMatrix<Scalar> m) {
    using Index = Eigen::Index;
    const Index rows = m.rows(), cols = m.cols();
    SNFResult<Scalar> out;

    // row_a -= q * row_b (and the column analogue), checked.
    auto row_axpy = [&](Index a, Index b, Scalar q) {
        for (Index j = 0; j < cols; ++j) m(a, j) = checked::sub(m(a, j), checked::mul(q, m(b, j)));
    };
    auto col_axpy = [&](Index a, Index b, Scalar q) {
        for (Index i = 0; i < rows; ++i) m(i, a) = checked::sub(m(i, a), checked::mul(q, m(i, b)));
    };

    for (Index t = 0; t < std::min(rows, cols); ++t) {
        // Pivot: smallest nonzero magnitude in the trailing block; a unit ends the search.
        Index pr = -1, pc = -1;
        for (Index i = t; i < rows && !(pr >= 0 && checked::abs(m(pr, pc)) == 1); ++i)
            for (Index j = t; j < cols; ++j)
                if (m(i, j) != 0 && (pr < 0 || checked::abs(m(i, j)) < checked::abs(m(pr, pc)))) {
                    pr = i;
                    pc = j;
                    if (checked::abs(m(i, j)) == 1) break;
                }
        if (pr < 0) break;
        m.row(t).swap(m.row(pr));
        m.col(t).swap(m.col(pc));

        for (;;) {
            bool clean = true;
            for (Index i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                row_axpy(i, t, m(i, t) / m(t, t));
                if (m(i, t) != 0) {
                    m.row(t).swap(m.row(i));
                    clean = false;
                }
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                col_axpy(j, t, m(t, j) / m(t, t));
                if (m(t, j) != 0) {
                    m.col(t).swap(m.col(j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into row t and retry.
            bool divides = true;
            for (Index i = t + 1; i < rows && divides; ++i)
                for (Index j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        row_axpy(t, i, Scalar{-1});
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        out.factors.push_back(checked::abs(m(t, t)));
    }
    out.rank = static_cast<Eigen::Index>(out.factors.size());
    return out;
}

} // namespace lghodge
