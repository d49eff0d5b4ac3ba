#pragma once

#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <numeric>

#include <Eigen/Core>

#include "lghodge/error.hpp"

namespace lghodge {

/// Overflow-checked integer arithmetic. Any overflow throws ErrorCode::Overflow.
namespace checked {

template <std::integral T> T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
    return r;
}

template <std::integral T> T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
    return r;
}

template <std::integral T> T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
    return r;
}

template <std::integral T> T neg(T a) { return sub(T{0}, a); }

template <std::integral T> T abs(T a) { return a < 0 ? neg(a) : a; }

template <typename Derived>
typename Derived::Scalar dot(const Eigen::MatrixBase<Derived> &a, const Eigen::MatrixBase<Derived> &b) {
    using T = typename Derived::Scalar;
    T acc{0};
    for (Eigen::Index i = 0; i < a.size(); ++i) acc = add(acc, mul(a(i), b(i)));
    return acc;
}

} // namespace checked

/// Exact integer point of a rank-3 lattice (M or N, same representation).
using Point3 = Eigen::Matrix<std::int64_t, 3, 1>;

inline Point3 make_point(std::int64_t x, std::int64_t y, std::int64_t z) { return Point3(x, y, z); }

inline std::int64_t dot(const Point3 &a, const Point3 &b) { return checked::dot(a, b); }

inline Point3 sub(const Point3 &a, const Point3 &b) {
    return Point3(checked::sub(a.x(), b.x()), checked::sub(a.y(), b.y()), checked::sub(a.z(), b.z()));
}

inline Point3 add(const Point3 &a, const Point3 &b) {
    return Point3(checked::add(a.x(), b.x()), checked::add(a.y(), b.y()), checked::add(a.z(), b.z()));
}

inline Point3 cross(const Point3 &a, const Point3 &b) {
    using namespace checked;
    return Point3(sub(mul(a.y(), b.z()), mul(a.z(), b.y())),
                  sub(mul(a.z(), b.x()), mul(a.x(), b.z())),
                  sub(mul(a.x(), b.y()), mul(a.y(), b.x())));
}

/// det[b-a, c-a, d-a]; positive when d lies on the side of plane(a,b,c)
/// that cross(b-a, c-a) points to.
inline std::int64_t orient3d(const Point3 &a, const Point3 &b, const Point3 &c, const Point3 &d) {
    return dot(cross(sub(b, a), sub(c, a)), sub(d, a));
}

inline std::int64_t content(const Point3 &v) {
    return std::gcd(std::gcd(checked::abs(v.x()), checked::abs(v.y())), checked::abs(v.z()));
}

/// Divides out the coordinate gcd; the zero vector is returned unchanged.
inline Point3 primitive(const Point3 &v) {
    const std::int64_t g = content(v);
    return g == 0 ? v : Point3(v / g);
}

inline bool lex_less(const Point3 &a, const Point3 &b) {
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.z() < b.z();
}

struct LexLess {
    bool operator()(const Point3 &a, const Point3 &b) const { return lex_less(a, b); }
};

} // namespace lghodge
