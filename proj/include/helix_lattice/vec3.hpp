#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace helix_lattice {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s) {
        x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double norm_sq(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm_sq(a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline bool is_finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Area of the triangle with the given vertices, from the cross product.
inline double triangle_area(const Vec3& p, const Vec3& q, const Vec3& r) {
    return 0.5 * norm(cross(q - p, r - p));
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static constexpr Mat3 identity() {
        Mat3 r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
        return r;
    }

    static constexpr Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        Mat3 r;
        r.m = {{{r0.x, r0.y, r0.z}, {r1.x, r1.y, r1.z}, {r2.x, r2.y, r2.z}}};
        return r;
    }

    static constexpr Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        return from_rows(c0, c1, c2).transposed();
    }

    constexpr double operator()(int i, int j) const { return m[i][j]; }
    constexpr double& operator()(int i, int j) { return m[i][j]; }

    constexpr Vec3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
    constexpr Vec3 column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

    constexpr Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    constexpr double determinant() const { return dot(row(0), cross(row(1), row(2))); }

    friend constexpr Vec3 operator*(const Mat3& a, const Vec3& v) {
        return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
    }

    friend constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
};

/// Inverse by the adjugate; caller guarantees a non-singular matrix.
constexpr Mat3 inverse(const Mat3& a) {
    const Vec3 c0 = a.column(0), c1 = a.column(1), c2 = a.column(2);
    const double det = dot(c0, cross(c1, c2));
    // rows of the inverse are the reciprocal basis
    return Mat3::from_rows(cross(c1, c2) * (1.0 / det), cross(c2, c0) * (1.0 / det),
                           cross(c0, c1) * (1.0 / det));
}

/// Rotation about the z axis by `angle` radians.
inline Mat3 rotation_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Mat3::from_rows({c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0});
}

}  // namespace helix_lattice
