#pragma once

/*! \file
 *  \brief Canonical helix parametrization, chord and triangle-area closed
 *  forms, and reduction of a helix in general position to canonical pose.
 *
 *  The canonical helix with radius a and rise rate b is
 *  r(t) = (a cos t, a sin t, b t). Its curvature and torsion are
 *  kappa = a / (a^2 + b^2) and tau = b / (a^2 + b^2), and arclength is
 *  s = t * sqrt(a^2 + b^2). Everything here is stated in the parameter t.
 */

#include <cmath>
#include <numbers>
#include <string>

#include "helix_lattice/errors.hpp"
#include "helix_lattice/vec3.hpp"

namespace helix_lattice {

namespace detail {

inline void require_positive_finite(double v, const char* name) {
    if (!std::isfinite(v) || !(v > 0.0))
        throw DomainError(std::string(name) + " must be positive and finite, got " +
                          std::to_string(v));
}

inline void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw DomainError(std::string(name) + " must be finite");
}

}  // namespace detail

/// Right-handed circular helix; (kappa, tau) and (a, b) are kept in sync.
struct Helix {
    double kappa = 0.0;
    double tau = 0.0;
    double a = 0.0;
    double b = 0.0;

    /// sqrt(a^2 + b^2): arclength per unit of the parameter t.
    double speed() const { return std::hypot(a, b); }
};

inline Helix helix_from_curvature_torsion(double kappa, double tau) {
    detail::require_positive_finite(kappa, "kappa");
    detail::require_positive_finite(tau, "tau");
    const double denom = kappa * kappa + tau * tau;
    return Helix{kappa, tau, kappa / denom, tau / denom};
}

inline Helix helix_from_radius_pitch(double a, double b) {
    detail::require_positive_finite(a, "a");
    detail::require_positive_finite(b, "b");
    const double denom = a * a + b * b;
    return Helix{a / denom, b / denom, a, b};
}

inline Vec3 helix_point(const Helix& h, double t) {
    detail::require_finite(t, "t");
    return {h.a * std::cos(t), h.a * std::sin(t), h.b * t};
}

/// Unit-speed-free tangent r'(t).
inline Vec3 helix_derivative(const Helix& h, double t) {
    return {-h.a * std::sin(t), h.a * std::cos(t), h.b};
}

inline double arclength(const Helix& h, double t_from, double t_to) {
    return std::abs(t_to - t_from) * h.speed();
}

inline double parameter_from_arclength(const Helix& h, double s) { return s / h.speed(); }

/// sin(x)/x, with a Taylor fallback near zero.
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

/// Squared chord between parameters t and t + gap on a helix with radius a
/// and rise rate b: 4 a^2 sin^2(gap/2) + b^2 gap^2.
inline double chord_length_sq(double a, double b, double gap) {
    detail::require_finite(a, "a");
    detail::require_finite(b, "b");
    if (!std::isfinite(gap) || !(gap > 0.0))
        throw DomainError("chord gap must be positive, got " + std::to_string(gap));
    const double s = std::sin(0.5 * gap);
    return 4.0 * a * a * s * s + b * b * gap * gap;
}

inline double chord_length_sq(const Helix& h, double gap) { return chord_length_sq(h.a, h.b, gap); }

/// Three increasing parameters t0 < t1 < t2 on the canonical helix.
class ArcTriple {
public:
    ArcTriple(double t0, double t1, double t2) : t_{t0, t1, t2} {
        for (double t : t_) detail::require_finite(t, "arc parameter");
        if (!(t0 < t1 && t1 < t2))
            throw DomainError("arc parameters must satisfy t0 < t1 < t2");
    }

    static ArcTriple from_gaps(double t0, double h1, double h2) {
        return ArcTriple(t0, t0 + h1, t0 + h1 + h2);
    }

    double t0() const { return t_[0]; }
    double t1() const { return t_[1]; }
    double t2() const { return t_[2]; }
    double h1() const { return t_[1] - t_[0]; }
    double h2() const { return t_[2] - t_[1]; }

    /// Arclength coordinate of the i-th point, s_i = t_i * sqrt(a^2 + b^2).
    double arclength_at(const Helix& h, int i) const { return t_.at(i) * h.speed(); }

private:
    std::array<double, 3> t_;
};

struct AreaTerms {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
    double area_sq = 0.0;
};

/// Squared triangle area of r(t0), r(t0 + h1), r(t0 + h1 + h2) as
/// (T1 + T2 + T3) / 4. Independent of t0.
inline AreaTerms triangle_area_sq_closed_form(double a, double b, double h1, double h2) {
    detail::require_finite(a, "a");
    detail::require_finite(b, "b");
    if (!std::isfinite(h1) || !std::isfinite(h2) || !(h1 > 0.0) || !(h2 > 0.0))
        throw DomainError("degenerate arc: h1 and h2 must be positive");

    const double s1 = std::sin(0.5 * h1);
    const double s2 = std::sin(0.5 * h2);
    const double s12 = std::sin(0.5 * (h1 + h2));
    const double s12q = std::sin(0.25 * (h1 + h2));
    const double a2 = a * a, b2 = b * b;
    const double sinc_diff = sinc(0.5 * h2) - sinc(0.5 * h1);

    AreaTerms r;
    r.t1 = 16.0 * a2 * a2 * s1 * s1 * s2 * s2 * s12 * s12;
    r.t2 = a2 * b2 * h1 * h1 * h2 * h2 * sinc_diff * sinc_diff;
    r.t3 = 16.0 * a2 * b2 * h1 * h2 * s1 * s2 * s12q * s12q;
    r.area_sq = 0.25 * (r.t1 + r.t2 + r.t3);
    return r;
}

inline AreaTerms triangle_area_sq_closed_form(const Helix& h, const ArcTriple& arc) {
    return triangle_area_sq_closed_form(h.a, h.b, arc.h1(), arc.h2());
}

/// Orientation-preserving isometry p -> R p + t.
class RigidMotion {
public:
    RigidMotion() : rotation_(Mat3::identity()) {}

    RigidMotion(const Mat3& rotation, const Vec3& translation)
        : rotation_(rotation), translation_(translation) {
        const Mat3 gram = rotation.transposed() * rotation;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)) > 1e-12)
                    throw DomainError("rotation columns are not orthonormal");
        if (std::abs(rotation.determinant() - 1.0) > 1e-12)
            throw DomainError("rotation determinant must be +1");
    }

    const Mat3& rotation() const { return rotation_; }
    const Vec3& translation() const { return translation_; }

    Vec3 apply(const Vec3& p) const { return rotation_ * p + translation_; }
    Vec3 apply_linear(const Vec3& v) const { return rotation_ * v; }

    RigidMotion inverse() const {
        const Mat3 rt = rotation_.transposed();
        return RigidMotion(rt, -(rt * translation_), Unchecked{});
    }

    /// (this o other)(p) = this(other(p))
    RigidMotion then_after(const RigidMotion& other) const {
        return RigidMotion(rotation_ * other.rotation_, rotation_ * other.translation_ + translation_,
                           Unchecked{});
    }

private:
    struct Unchecked {};
    RigidMotion(const Mat3& r, const Vec3& t, Unchecked) : rotation_(r), translation_(t) {}

    Mat3 rotation_;
    Vec3 translation_;
};

/// Helix in arbitrary pose: axis through `axis_point` along unit
/// `axis_direction`, radius a, rise b per radian, starting angle `phase`.
struct GeneralHelix {
    Vec3 axis_point;
    Vec3 axis_direction{0.0, 0.0, 1.0};
    double radius = 1.0;
    double pitch_rate = 1.0;
    double phase = 0.0;

    /// Normalizes the axis direction; rejects degenerate axes and
    /// non-positive radius or pitch.
    static GeneralHelix make(const Vec3& axis_point, const Vec3& axis_direction, double radius,
                             double pitch_rate, double phase) {
        if (!is_finite(axis_point) || !is_finite(axis_direction))
            throw DomainError("general helix axis must be finite");
        const double n = norm(axis_direction);
        if (!(n > 1e-12)) throw DomainError("degenerate helix axis direction");
        detail::require_positive_finite(radius, "radius");
        detail::require_positive_finite(pitch_rate, "pitch_rate");
        detail::require_finite(phase, "phase");
        return GeneralHelix{axis_point, axis_direction * (1.0 / n), radius, pitch_rate, phase};
    }
};

namespace detail {

/// Orthonormal right-handed frame (e1, e2, d). e1 comes from the coordinate
/// axis least aligned with d (lowest index on ties), so d = z gives e1 = x.
inline Mat3 axis_frame(const Vec3& d) {
    const double ad[3] = {std::abs(d.x), std::abs(d.y), std::abs(d.z)};
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (ad[i] < ad[k]) k = i;
    Vec3 ref;
    (k == 0 ? ref.x : k == 1 ? ref.y : ref.z) = 1.0;
    Vec3 e1 = ref - d * dot(ref, d);
    e1 *= 1.0 / norm(e1);
    const Vec3 e2 = cross(d, e1);
    return Mat3::from_rows(e1, e2, d);
}

inline void require_unit_axis(const Vec3& d) {
    const double n = norm(d);
    if (!(n > 1e-12)) throw DomainError("degenerate helix axis direction");
    if (std::abs(n - 1.0) > 1e-12) throw DomainError("helix axis direction must have unit norm");
}

}  // namespace detail

inline Vec3 general_helix_point(const GeneralHelix& g, double t) {
    detail::require_unit_axis(g.axis_direction);
    const Mat3 frame = detail::axis_frame(g.axis_direction);
    const double ang = t + g.phase;
    return g.axis_point + frame.row(0) * (g.radius * std::cos(ang)) +
           frame.row(1) * (g.radius * std::sin(ang)) + frame.row(2) * (g.pitch_rate * t);
}

struct CanonicalForm {
    Helix helix;
    /// Maps world coordinates of the general helix onto the canonical one,
    /// parameter for parameter.
    RigidMotion motion;
};

inline CanonicalForm canonicalize(const GeneralHelix& g) {
    detail::require_unit_axis(g.axis_direction);
    const Helix h = helix_from_radius_pitch(g.radius, g.pitch_rate);
    const Mat3 rot = rotation_z(-g.phase) * detail::axis_frame(g.axis_direction);
    return {h, RigidMotion(rot, -(rot * g.axis_point))};
}

}  // namespace helix_lattice
