#pragma once

/*! \file
 *  \brief Lattice points within distance delta of a helix arc, the
 *  point-to-helix distance they rely on, and integer points on circles.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "helix_lattice/errors.hpp"
#include "helix_lattice/geometry.hpp"
#include "helix_lattice/lattice.hpp"
#include "helix_lattice/parallel.hpp"

namespace helix_lattice {

struct EnumerationConfig {
    int samples_per_period = 16;
    double max_window = 64.0 * std::numbers::pi;
    double candidate_budget = 1e8;
    /// Absolute slack on tube membership; points at dist <= delta + slack count.
    double boundary_slack = 1e-12;
};

struct HelixDistance {
    double dist = 0.0;
    double t_star = 0.0;
};

namespace detail {

/// g(t) = (p - r(t)) . r'(t); the squared distance has derivative -2 g.
inline double distance_slope(const Helix& h, const Vec3& p, double t) {
    return h.a * (p.y * std::cos(t) - p.x * std::sin(t)) + h.b * (p.z - h.b * t);
}

}  // namespace detail

/// Global minimum of |p - r(t)| over t in [t_lo, t_hi].
///
/// The window is cut at a uniform grid (at least `samples_per_period` points
/// per turn) and additionally at the zeros of g', where
/// g'(t) = -a (p.x cos t + p.y sin t) - b^2. Between consecutive cuts g is
/// monotone, so each + to - sign change brackets exactly one local minimum,
/// which bisection then pins down.
inline HelixDistance point_to_helix_distance(const Helix& h, const Vec3& p, double t_lo,
                                             double t_hi, const EnumerationConfig& cfg = {}) {
    if (!is_finite(p)) throw DomainError("point must be finite");
    if (!std::isfinite(t_lo) || !std::isfinite(t_hi) || t_hi < t_lo)
        throw DomainError("empty parameter window");
    if (t_hi - t_lo > cfg.max_window) throw DomainError("parameter window exceeds configured cap");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double width = t_hi - t_lo;
    const int spp = std::max(cfg.samples_per_period, 16);
    const auto intervals =
        static_cast<std::size_t>(std::max(1.0, std::ceil(width / two_pi * spp)));

    std::vector<double> cuts;
    cuts.reserve(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i)
        cuts.push_back(i == intervals ? t_hi
                                      : t_lo + width * static_cast<double>(i) /
                                                   static_cast<double>(intervals));

    const double rho = std::hypot(p.x, p.y);
    if (h.a * rho > h.b * h.b) {
        const double phi = std::atan2(p.y, p.x);
        const double half = std::acos(std::clamp(-h.b * h.b / (h.a * rho), -1.0, 1.0));
        for (double base : {phi - half, phi + half}) {
            const double k0 = std::ceil((t_lo - base) / two_pi);
            for (double k = k0;; k += 1.0) {
                const double t = base + two_pi * k;
                if (t > t_hi) break;
                if (t > t_lo) cuts.push_back(t);
            }
        }
        std::sort(cuts.begin(), cuts.end());
    }

    const double scale = std::max(1.0, norm(p)) * std::max(1.0, h.speed());
    auto dist_sq_at = [&](double t) { return norm_sq(p - helix_point(h, t)); };

    HelixDistance best{std::numeric_limits<double>::infinity(), t_lo};
    double best_sq = std::numeric_limits<double>::infinity();
    auto consider = [&](double t) {
        const double d2 = dist_sq_at(t);
        if (d2 < best_sq || (d2 == best_sq && t < best.t_star)) {
            best_sq = d2;
            best.t_star = t;
        }
    };

    consider(t_lo);
    consider(t_hi);
    double g_prev = detail::distance_slope(h, p, cuts.front());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double u = cuts[i], v = cuts[i + 1];
        const double gu = g_prev;
        const double gv = detail::distance_slope(h, p, v);
        g_prev = gv;
        if (gu == 0.0) consider(u);
        if (!(gu > 0.0 && gv < 0.0)) continue;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (u + v);
            if (mid <= u || mid >= v) break;
            const double gm = detail::distance_slope(h, p, mid);
            if (std::abs(gm) <= 1e-13 * scale) {
                u = v = mid;
                break;
            }
            (gm > 0.0 ? u : v) = mid;
        }
        consider(0.5 * (u + v));
    }
    if (g_prev == 0.0) consider(cuts.back());

    best.dist = std::sqrt(best_sq);
    return best;
}

/// Lattice points near a helix arc; the helix is in canonical pose.
struct TubeQuery {
    Helix helix;
    AffineLattice lattice;
    double delta = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;

    void validate(const EnumerationConfig& cfg = {}) const {
        if (!std::isfinite(delta) || delta < 0.0) throw DomainError("delta must be >= 0");
        if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max))
            throw DomainError("window must satisfy t_min < t_max");
        if (t_max - t_min > cfg.max_window)
            throw DomainError("window width exceeds configured cap");
    }
};

struct NearPoint {
    Coeffs coeffs{};
    Vec3 point;
    double t_star = 0.0;
    double dist = 0.0;
};

struct CoefficientBox {
    Coeffs lo{};
    Coeffs hi{};

    double volume() const {
        double v = 1.0;
        for (int i = 0; i < 3; ++i) v *= static_cast<double>(hi[i] - lo[i] + 1);
        return v;
    }
};

/// Integer box containing the coefficients of every lattice point in the
/// axis-aligned box [lo, hi].
inline CoefficientBox coefficient_box(const AffineLattice& lattice, const Vec3& lo, const Vec3& hi) {
    const Mat3 inv = inverse(lattice.basis_matrix());
    std::array<double, 3> mn, mx;
    mn.fill(std::numeric_limits<double>::infinity());
    mx.fill(-std::numeric_limits<double>::infinity());
    for (int corner = 0; corner < 8; ++corner) {
        const Vec3 c{(corner & 1) ? hi.x : lo.x, (corner & 2) ? hi.y : lo.y,
                     (corner & 4) ? hi.z : lo.z};
        const Vec3 m = inv * (c - lattice.origin());
        const double comps[3] = {m.x, m.y, m.z};
        for (int i = 0; i < 3; ++i) {
            mn[i] = std::min(mn[i], comps[i]);
            mx[i] = std::max(mx[i], comps[i]);
        }
    }
    CoefficientBox box;
    for (int i = 0; i < 3; ++i) {
        const double span = std::max(1.0, mx[i] - mn[i]);
        box.lo[i] = static_cast<long long>(std::floor(mn[i] - 1e-9 * span));
        box.hi[i] = static_cast<long long>(std::ceil(mx[i] + 1e-9 * span));
    }
    return box;
}

/// Axis-aligned bounding box of r(t) over [t_min, t_max].
inline std::pair<Vec3, Vec3> helix_arc_bounds(const Helix& h, double t_min, double t_max) {
    constexpr double pi = std::numbers::pi;
    double cmin = std::min(std::cos(t_min), std::cos(t_max));
    double cmax = std::max(std::cos(t_min), std::cos(t_max));
    double smin = std::min(std::sin(t_min), std::sin(t_max));
    double smax = std::max(std::sin(t_min), std::sin(t_max));
    // extrema of cos at k pi, of sin at pi/2 + k pi
    for (double k = std::ceil(t_min / pi); k * pi <= t_max; k += 1.0) {
        const double c = std::cos(k * pi);
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
    }
    for (double k = std::ceil((t_min - pi / 2) / pi); pi / 2 + k * pi <= t_max; k += 1.0) {
        const double s = std::sin(pi / 2 + k * pi);
        smin = std::min(smin, s);
        smax = std::max(smax, s);
    }
    return {{h.a * cmin, h.a * smin, h.b * t_min}, {h.a * cmax, h.a * smax, h.b * t_max}};
}

/// Every lattice point whose distance to the arc r([t_min, t_max]) is at
/// most delta (plus the configured boundary slack), sorted by (t_star, coeffs).
inline std::vector<NearPoint> enumerate_tube(const TubeQuery& q, const EnumerationConfig& cfg = {}) {
    q.validate(cfg);
    const double reach = q.delta + cfg.boundary_slack;
    auto [lo, hi] = helix_arc_bounds(q.helix, q.t_min, q.t_max);
    const Vec3 pad{reach, reach, reach};
    lo -= pad;
    hi += pad;

    const CoefficientBox box = coefficient_box(q.lattice, lo, hi);
    if (box.volume() > cfg.candidate_budget) {
        std::ostringstream os;
        os << "tube candidate box [" << box.lo[0] << "," << box.hi[0] << "]x[" << box.lo[1] << ","
           << box.hi[1] << "]x[" << box.lo[2] << "," << box.hi[2] << "] has " << box.volume()
           << " points, budget is " << cfg.candidate_budget;
        throw ResourceError(os.str());
    }

    auto slab = [&](long long m_lo, long long m_hi) {
        std::vector<NearPoint> found;
        for (long long m = m_lo; m <= m_hi; ++m)
            for (long long n = box.lo[1]; n <= box.hi[1]; ++n)
                for (long long k = box.lo[2]; k <= box.hi[2]; ++k) {
                    const Coeffs c{m, n, k};
                    const Vec3 p = q.lattice.point(c);
                    if (p.z < lo.z || p.z > hi.z) continue;
                    if (std::abs(std::hypot(p.x, p.y) - q.helix.a) > reach) continue;
                    const HelixDistance hd =
                        point_to_helix_distance(q.helix, p, q.t_min, q.t_max, cfg);
                    if (hd.dist <= reach) found.push_back({c, p, hd.t_star, hd.dist});
                }
        return found;
    };

    std::vector<NearPoint> out;
    for (auto& part : run_slabs(box.lo[0], box.hi[0], slab))
        out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end(), [](const NearPoint& x, const NearPoint& y) {
        if (x.t_star != y.t_star) return x.t_star < y.t_star;
        return x.coeffs < y.coeffs;
    });
    return out;
}

struct IntPoint2 {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const IntPoint2&, const IntPoint2&) = default;
};

namespace detail {

inline long long isqrt(long long n) {
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Exact polar-angle order on [0, 2 pi).
inline bool angle_less(const IntPoint2& p, const IntPoint2& q) {
    auto half = [](const IntPoint2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
    const int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return p.x * q.y - p.y * q.x > 0;
}

}  // namespace detail

/// All integer (x, y) with x^2 + y^2 = n, in increasing polar angle from +x.
inline std::vector<IntPoint2> circle_lattice_points(long long n) {
    if (n < 1) throw DomainError("circle norm must be >= 1");
    std::vector<IntPoint2> pts;
    const long long r = detail::isqrt(n);
    for (long long x = -r; x <= r; ++x) {
        const long long rem = n - x * x;
        const long long y = detail::isqrt(rem);
        if (y * y != rem) continue;
        pts.push_back({x, y});
        if (y != 0) pts.push_back({x, -y});
    }
    std::sort(pts.begin(), pts.end(), detail::angle_less);
    return pts;
}

}  // namespace helix_lattice
