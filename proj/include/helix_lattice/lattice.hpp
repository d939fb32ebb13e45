#pragma once

/*! \file
 *  \brief Affine lattices in three-space, their Gram form, and the two
 *  lattice constants used by the helix bounds:
 *
 *  - D_L, the shortest nonzero lattice vector, found by enumeration over a
 *    box certified by the smallest Gram eigenvalue;
 *  - A_L, a lower bound on the area of any non-collinear lattice triangle,
 *    taken as half the shortest vector of the lattice spanned by
 *    v1 x v2, v2 x v3 and v1 x v3.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "helix_lattice/errors.hpp"
#include "helix_lattice/parallel.hpp"
#include "helix_lattice/vec3.hpp"

namespace helix_lattice {

using Coeffs = std::array<long long, 3>;

inline Vec3 combine(const std::array<Vec3, 3>& basis, const Coeffs& m) {
    return basis[0] * static_cast<double>(m[0]) + basis[1] * static_cast<double>(m[1]) +
           basis[2] * static_cast<double>(m[2]);
}

/// { v0 + m v1 + n v2 + p v3 : m, n, p integers } with independent v1, v2, v3.
class AffineLattice {
public:
    AffineLattice(const Vec3& origin, const Vec3& v1, const Vec3& v2, const Vec3& v3)
        : origin_(origin), basis_{v1, v2, v3} {
        if (!is_finite(origin) || !is_finite(v1) || !is_finite(v2) || !is_finite(v3))
            throw DomainError("lattice vectors must be finite");
        const double det = dot(v1, cross(v2, v3));
        const double scale = norm(v1) * norm(v2) * norm(v3);
        if (!(std::abs(det) > 1e-12 * scale)) {
            std::ostringstream os;
            os << "lattice basis is singular or nearly so: det = " << det
               << " (basis norm product " << scale << ")";
            throw DomainError(os.str());
        }
    }

    static AffineLattice standard() {
        return AffineLattice({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1});
    }

    const Vec3& origin() const { return origin_; }
    const std::array<Vec3, 3>& basis() const { return basis_; }

    Vec3 point(const Coeffs& m) const { return origin_ + combine(basis_, m); }

    /// Columns are v1, v2, v3.
    Mat3 basis_matrix() const { return Mat3::from_columns(basis_[0], basis_[1], basis_[2]); }

    double determinant() const { return dot(basis_[0], cross(basis_[1], basis_[2])); }

    /// Same lattice moved by a rigid motion (origin as a point, basis as vectors).
    template <typename Motion>
    AffineLattice transformed(const Motion& motion) const {
        return AffineLattice(motion.apply(origin_), motion.apply_linear(basis_[0]),
                             motion.apply_linear(basis_[1]), motion.apply_linear(basis_[2]));
    }

private:
    Vec3 origin_;
    std::array<Vec3, 3> basis_;
};

/// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi rotations, ascending.
inline std::array<double, 3> jacobi_eigenvalues(Mat3 a) {
    auto off_mass = [&] {
        return a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    };
    double total = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) total += a(i, j) * a(i, j);

    for (int sweep = 0; sweep < 64 && off_mass() > 1e-28 * total; ++sweep) {
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::array<double, 3> ev{a(0, 0), a(1, 1), a(2, 2)};
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Eigenvalues of a symmetric 3x3 matrix from the characteristic cubic
/// (trigonometric form), ascending.
inline std::array<double, 3> closed_form_eigenvalues(const Mat3& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    if (p1 == 0.0) {
        std::array<double, 3> ev{a(0, 0), a(1, 1), a(2, 2)};
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b = a;
    for (int i = 0; i < 3; ++i) b(i, i) -= q;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b(i, j) /= p;
    const double r = std::clamp(b.determinant() / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e3 = q + 2.0 * p * std::cos(phi);
    const double e1 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::array<double, 3> ev{e1, e2, e3};
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Q(m) = m^T G m with G_ij = v_i . v_j.
struct GramForm {
    Mat3 matrix;
    std::array<double, 3> eigenvalues{};  // ascending

    double lambda1() const { return eigenvalues[0]; }

    double operator()(const Coeffs& m) const {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                s += matrix(i, j) * static_cast<double>(m[i]) * static_cast<double>(m[j]);
        return s;
    }
};

inline GramForm gram_form(const std::array<Vec3, 3>& basis) {
    GramForm g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.matrix(i, j) = dot(basis[i], basis[j]);
    g.eigenvalues = jacobi_eigenvalues(g.matrix);
    if (!(g.eigenvalues[0] > 0.0)) {
        std::ostringstream os;
        os << "Gram matrix is not positive definite (lambda1 = " << g.eigenvalues[0]
           << ", det = " << dot(basis[0], cross(basis[1], basis[2])) << ")";
        throw DomainError(os.str());
    }
    return g;
}

inline GramForm gram_form(const AffineLattice& lattice) { return gram_form(lattice.basis()); }

struct ShortestVector {
    double length = 0.0;
    Coeffs coeffs{};
};

namespace detail {

struct SvpCandidate {
    double norm_sq = std::numeric_limits<double>::infinity();
    Coeffs coeffs{};

    /// Smaller norm wins; exact ties go to the lexicographically least triple.
    bool improves_on(const SvpCandidate& other) const {
        if (norm_sq != other.norm_sq) return norm_sq < other.norm_sq;
        return coeffs < other.coeffs;
    }
};

inline long long coefficient_radius(double norm_sq, double lambda1) {
    return static_cast<long long>(std::floor(std::sqrt(norm_sq / lambda1) * (1.0 + 1e-9)));
}

}  // namespace detail

/// Shortest nonzero vector of the lattice spanned by `basis`. Searches the
/// box |m_i| <= sqrt(best / lambda1), which holds every candidate because
/// Q(m) >= lambda1 |m|^2, and shrinks the box as `best` improves.
inline ShortestVector shortest_vector(const std::array<Vec3, 3>& basis) {
    const GramForm gram = gram_form(basis);
    const double lambda1 = gram.lambda1();

    detail::SvpCandidate seed;
    for (int i = 0; i < 3; ++i) {
        detail::SvpCandidate c;
        c.coeffs = {0, 0, 0};
        c.coeffs[i] = -1;
        c.norm_sq = norm_sq(combine(basis, c.coeffs));
        if (c.improves_on(seed)) seed = c;
    }
    const long long outer = detail::coefficient_radius(seed.norm_sq, lambda1);

    auto slab = [&](long long lo, long long hi) {
        detail::SvpCandidate best = seed;
        long long radius = outer;
        for (long long m1 = lo; m1 <= hi; ++m1) {
            if (std::abs(m1) > radius) continue;
            for (long long m2 = -radius; m2 <= radius; ++m2) {
                for (long long m3 = -radius; m3 <= radius; ++m3) {
                    if (m1 == 0 && m2 == 0 && m3 == 0) continue;
                    const Coeffs m{m1, m2, m3};
                    const double q = norm_sq(combine(basis, m));
                    const double mm = static_cast<double>(m1 * m1 + m2 * m2 + m3 * m3);
                    if (q < lambda1 * mm * (1.0 - 1e-9))
                        throw std::logic_error("Gram eigenvalue bound violated during search");
                    const detail::SvpCandidate c{q, m};
                    if (c.improves_on(best)) {
                        best = c;
                        radius = detail::coefficient_radius(best.norm_sq, lambda1);
                    }
                }
            }
        }
        return best;
    };

    detail::SvpCandidate best = seed;
    for (const auto& c : run_slabs(-outer, outer, slab))
        if (c.improves_on(best)) best = c;
    return {std::sqrt(best.norm_sq), best.coeffs};
}

inline ShortestVector shortest_vector(const AffineLattice& lattice) {
    return shortest_vector(lattice.basis());
}

/// v1 x v2, v2 x v3, v1 x v3: every cross product of two lattice vectors
/// is an integer combination of these.
inline std::array<Vec3, 3> cross_lattice_basis(const AffineLattice& lattice) {
    const auto& v = lattice.basis();
    return {cross(v[0], v[1]), cross(v[1], v[2]), cross(v[0], v[2])};
}

/// Certified lower bound on the area of any non-collinear lattice triangle.
inline double min_area_lower_bound(const AffineLattice& lattice) {
    return 0.5 * shortest_vector(cross_lattice_basis(lattice)).length;
}

/// Smallest area of a non-collinear triangle whose two edges from a common
/// vertex have coefficients in [-bound, bound]^3. Collinearity is decided on
/// the integer coefficients, not on floating coordinates.
inline double min_triangle_area_exhaustive(const AffineLattice& lattice, int bound,
                                           double budget = 1e8) {
    if (bound < 1) throw DomainError("coefficient bound must be at least 1");
    const double side = 2.0 * bound + 1.0;
    const double work = std::pow(side, 6);
    if (work > budget) {
        std::ostringstream os;
        os << "exhaustive triangle search needs " << work << " area evaluations, budget is "
           << budget;
        throw ResourceError(os.str());
    }

    std::vector<Coeffs> coeffs;
    std::vector<Vec3> vecs;
    for (long long i = -bound; i <= bound; ++i)
        for (long long j = -bound; j <= bound; ++j)
            for (long long k = -bound; k <= bound; ++k) {
                if (i == 0 && j == 0 && k == 0) continue;
                coeffs.push_back({i, j, k});
                vecs.push_back(combine(lattice.basis(), {i, j, k}));
            }

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < coeffs.size(); ++u) {
        for (std::size_t w = u + 1; w < coeffs.size(); ++w) {
            const Coeffs& a = coeffs[u];
            const Coeffs& b = coeffs[w];
            const bool collinear = a[0] * b[1] == a[1] * b[0] && a[1] * b[2] == a[2] * b[1] &&
                                   a[0] * b[2] == a[2] * b[0];
            if (collinear) continue;
            best = std::min(best, 0.5 * norm(cross(vecs[u], vecs[w])));
        }
    }
    return best;
}

struct LatticeConstants {
    double d_min = 0.0;          // D_L
    Coeffs d_min_coeffs{};
    double a_min_lb = 0.0;       // A_L lower bound
    std::optional<double> a_min_exact;
    double lambda1 = 0.0;
};

/// D_L, A_L and lambda1; the exhaustive minimal triangle area is added when
/// `exhaustive_bound` is given.
inline LatticeConstants lattice_constants(const AffineLattice& lattice,
                                          std::optional<int> exhaustive_bound = std::nullopt) {
    LatticeConstants c;
    c.lambda1 = gram_form(lattice).lambda1();
    const ShortestVector sv = shortest_vector(lattice);
    c.d_min = sv.length;
    c.d_min_coeffs = sv.coeffs;
    c.a_min_lb = min_area_lower_bound(lattice);
    if (exhaustive_bound) c.a_min_exact = min_triangle_area_exhaustive(lattice, *exhaustive_bound);
    return c;
}

}  // namespace helix_lattice
