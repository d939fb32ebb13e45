#pragma once

/*! \file
 *  \brief Numerical checks of the helix lattice-point bounds and of the
 *  scalar and geometric inequalities they are built from.
 *
 *  Strict inequalities are checked as non-strict with a relative slack of
 *  1e-9 times the larger side. Reports distinguish vacuous passes (fewer
 *  than three points) from substantive ones.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "helix_lattice/enumeration.hpp"
#include "helix_lattice/errors.hpp"
#include "helix_lattice/geometry.hpp"
#include "helix_lattice/lattice.hpp"

namespace helix_lattice {

inline constexpr double kRelativeSlack = 1e-9;

/// lhs <= rhs up to kRelativeSlack times the larger magnitude.
inline bool holds_at_most(double lhs, double rhs, double slack = kRelativeSlack) {
    return lhs <= rhs + slack * std::max(std::abs(lhs), std::abs(rhs));
}

inline bool holds_at_least(double lhs, double rhs, double slack = kRelativeSlack) {
    return holds_at_most(rhs, lhs, slack);
}

enum class TheoremId { Schinzel, Main, OnHelix, Corollary };

inline std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::Schinzel: return "SCHINZEL";
        case TheoremId::Main: return "MAIN";
        case TheoremId::OnHelix: return "ON_HELIX";
        case TheoremId::Corollary: return "COROLLARY";
    }
    return "UNKNOWN";
}

struct BoundReport {
    TheoremId theorem = TheoremId::Main;

    // inputs
    std::optional<Helix> helix;
    std::optional<LatticeConstants> constants;
    double delta = 0.0;
    std::optional<long long> circle_norm;

    double bound_value = 0.0;
    std::optional<double> observed_min;
    bool admissible = true;
    std::optional<double> tightness;
    bool vacuous = false;
    bool passed = true;

    std::size_t points = 0;
    std::size_t triples = 0;

    /// The triple attaining observed_min (or the first violation).
    std::vector<Vec3> witness_points;
    std::vector<Coeffs> witness_coeffs;

    /// Named auxiliary quantities kept for auditing.
    std::vector<std::pair<std::string, double>> audit;
    std::string note;

    bool substantive() const { return admissible && !vacuous; }

    std::optional<double> audit_value(std::string_view key) const {
        for (const auto& [k, v] : audit)
            if (k == key) return v;
        return std::nullopt;
    }
};

// ---------------------------------------------------------------------------
// Bound formulas
// ---------------------------------------------------------------------------

struct DeltaBranches {
    double quarter_spacing = 0.0;  // D_L / 4
    double spacing = 0.0;          // D_L^2 (kappa^2 + tau^2) / (11 pi^3)
    double area = 0.0;             // 2 A_L (kappa^2 + tau^2)^(1/2) / (11 pi)
    double max = 0.0;
};

inline DeltaBranches delta_branches(const Helix& h, const LatticeConstants& c) {
    constexpr double pi = std::numbers::pi;
    const double k2t2 = h.kappa * h.kappa + h.tau * h.tau;
    DeltaBranches d;
    d.quarter_spacing = c.d_min / 4.0;
    d.spacing = c.d_min * c.d_min * k2t2 / (11.0 * pi * pi * pi);
    d.area = 2.0 * c.a_min_lb * std::sqrt(k2t2) / (11.0 * pi);
    d.max = std::min({d.quarter_spacing, d.spacing, d.area});
    return d;
}

/// Largest delta for which the near-helix bound is asserted.
inline double delta_admissible_max(const Helix& h, const LatticeConstants& c) {
    return delta_branches(h, c).max;
}

namespace detail {

inline double main_bound_formula(const Helix& h, const LatticeConstants& c, double delta) {
    const double k2t2 = h.kappa * h.kappa + h.tau * h.tau;
    const double area_branch = 1.2 * std::cbrt(c.a_min_lb) / std::cbrt(h.kappa);
    const double pitch_branch = std::numbers::pi * h.tau / k2t2;
    return std::min(area_branch - 2.0 * delta, pitch_branch - 2.0 * delta);
}

}  // namespace detail

/// Lower bound on the largest pairwise distance among three lattice points
/// within delta of the helix.
inline double main_theorem_bound(const Helix& h, const LatticeConstants& c, double delta) {
    if (!std::isfinite(delta) || delta < 0.0) throw DomainError("delta must be >= 0");
    const DeltaBranches d = delta_branches(h, c);
    if (delta > d.max) {
        std::ostringstream os;
        os.precision(17);
        os << "delta = " << delta << " is not admissible:";
        if (delta > d.quarter_spacing) os << " exceeds D_L/4 = " << d.quarter_spacing << ";";
        if (delta > d.spacing)
            os << " exceeds D_L^2 (kappa^2+tau^2)/(11 pi^3) = " << d.spacing << ";";
        if (delta > d.area) os << " exceeds 2 A_L (kappa^2+tau^2)^(1/2)/(11 pi) = " << d.area << ";";
        throw DomainError(os.str());
    }
    return detail::main_bound_formula(h, c, delta);
}

struct OnHelixBounds {
    double chord_bound = 0.0;
    double arc_bound = 0.0;
};

/// Bounds for three lattice points lying on the helix: the chord between the
/// outer two points and the arc joining them.
inline OnHelixBounds on_helix_bounds(const Helix& h, const LatticeConstants& c) {
    const double k2t2 = h.kappa * h.kappa + h.tau * h.tau;
    const double scale = std::cbrt(c.a_min_lb) / std::cbrt(h.kappa);
    return {std::min(std::numbers::pi * h.tau / k2t2, 1.5 * scale),
            std::min(std::numbers::pi / std::sqrt(k2t2), 2.4 * scale)};
}

/// tau kappa^(1/3) >= 0.4 (kappa^2 + tau^2)
inline bool corollary_applies(const Helix& h) {
    return h.tau * std::cbrt(h.kappa) >= 0.4 * (h.kappa * h.kappa + h.tau * h.tau);
}

inline double corollary_bound(const Helix& h) { return 1.1 / std::cbrt(h.kappa); }

// ---------------------------------------------------------------------------
// Scalar and geometric inequalities
// ---------------------------------------------------------------------------

struct InequalityResult {
    bool passed = true;
    std::size_t checked = 0;
    std::optional<double> witness;  // first violating abscissa, when applicable
    std::string failed_check;
};

/// sin x - x cos x, by its Taylor series below 0.5 where the direct form
/// cancels.
inline double sin_minus_x_cos(double x) {
    if (std::abs(x) >= 0.5) return std::sin(x) - x * std::cos(x);
    // sum_{k>=1} (-1)^(k+1) 2k x^(2k+1) / (2k+1)!
    const double x2 = x * x;
    double power = x * x2;  // x^(2k+1)
    double fact = 6.0;      // (2k+1)!
    double sum = 0.0;
    for (int k = 1; k <= 12; ++k) {
        const double term = 2.0 * k * power / fact;
        sum += (k % 2 == 1) ? term : -term;
        power *= x2;
        fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    }
    return sum;
}

/// sinc(u) - sinc(v) without cancellation for |u|, |v| <= 4, using
/// u^2k - v^2k = (u - v)(u + v) sum_j u^2j v^(2(k-1-j)).
inline double sinc_difference(double u, double v) {
    if (std::abs(u) > 4.0 || std::abs(v) > 4.0) return sinc(u) - sinc(v);
    const double uu = u * u, vv = v * v;
    const double diff_sq = (u - v) * (u + v);
    double partial = 1.0;  // sum_{j<k} uu^j vv^(k-1-j)
    double vv_pow = vv;    // vv^k
    double fact = 6.0;     // (2k+1)!
    double sum = 0.0;
    for (int k = 1; k <= 30; ++k) {
        const double term = partial / fact;
        sum += (k % 2 == 1) ? -term : term;
        if (term < 1e-20 * std::abs(sum)) break;
        partial = uu * partial + vv_pow;
        vv_pow *= vv;
        fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    }
    return diff_sq * sum;
}

/// 0 < sin x - x cos x < x^3/3 on (0, pi), and sin x >= 2x/pi on (0, pi/2].
inline InequalityResult check_sine_inequalities(std::span<const double> grid) {
    constexpr double pi = std::numbers::pi;
    for (double x : grid)
        if (!(x > 0.0 && x < pi)) throw DomainError("sine inequality grid point outside (0, pi)");

    InequalityResult r;
    for (double x : grid) {
        const double f = sin_minus_x_cos(x);
        ++r.checked;
        if (!holds_at_most(0.0, f)) {
            r = {false, r.checked, x, "0 < sin x - x cos x"};
            return r;
        }
        if (!holds_at_most(f, x * x * x / 3.0)) {
            r = {false, r.checked, x, "sin x - x cos x < x^3/3"};
            return r;
        }
        if (x <= pi / 2 && !holds_at_least(std::sin(x), 2.0 * x / pi)) {
            r = {false, r.checked, x, "sin x >= 2x/pi"};
            return r;
        }
    }
    return r;
}

/// (sinc(h2/2) - sinc(h1/2))^2 <= max(h1, h2)^2 (h1 - h2)^2 / 144 on (0, 2 pi)^2.
inline InequalityResult check_t2_bound(double h1, double h2) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (!(h1 > 0.0 && h1 < two_pi && h2 > 0.0 && h2 < two_pi))
        throw DomainError("T2 bound requires h1, h2 in (0, 2 pi)");
    const double d = sinc_difference(0.5 * h2, 0.5 * h1);
    const double hmax = std::max(h1, h2);
    const double rhs = hmax * hmax * (h1 - h2) * (h1 - h2) / 144.0;
    InequalityResult r;
    r.checked = 1;
    if (!holds_at_most(d * d, rhs)) {
        r.passed = false;
        r.witness = h1;
        r.failed_check = "sinc difference bound";
    }
    return r;
}

namespace detail {

inline void require_displacement(const Vec3& from, const Vec3& to, double delta, const char* name) {
    if (distance(from, to) > delta * (1.0 + 1e-12))
        throw PreconditionError(std::string("displacement of ") + name + " exceeds delta");
}

}  // namespace detail

/// |S - S1| <= delta |AB| / 2 when only C moves, to C1, by at most delta.
inline InequalityResult check_area_perturbation_one_point(const Vec3& a, const Vec3& b,
                                                          const Vec3& c, const Vec3& c1,
                                                          double delta) {
    if (!(delta >= 0.0)) throw DomainError("delta must be >= 0");
    detail::require_displacement(c, c1, delta, "C");
    InequalityResult r;
    r.checked = 1;
    const double lhs = std::abs(triangle_area(a, b, c) - triangle_area(a, b, c1));
    if (!holds_at_most(lhs, 0.5 * delta * distance(a, b))) {
        r.passed = false;
        r.failed_check = "one-vertex area perturbation";
    }
    return r;
}

/// |S - S3| <= (|AB| + |AC| + |BC|) delta / 2 + 3 delta^2 / 2 when every
/// vertex moves by at most delta.
inline InequalityResult check_area_perturbation(const Vec3& a, const Vec3& b, const Vec3& c,
                                                const Vec3& a1, const Vec3& b1, const Vec3& c1,
                                                double delta) {
    if (!(delta >= 0.0)) throw DomainError("delta must be >= 0");
    detail::require_displacement(a, a1, delta, "A");
    detail::require_displacement(b, b1, delta, "B");
    detail::require_displacement(c, c1, delta, "C");
    InequalityResult r;
    r.checked = 1;
    const double lhs = std::abs(triangle_area(a, b, c) - triangle_area(a1, b1, c1));
    const double perimeter = distance(a, b) + distance(a, c) + distance(b, c);
    if (!holds_at_most(lhs, 0.5 * perimeter * delta + 1.5 * delta * delta)) {
        r.passed = false;
        r.failed_check = "three-vertex area perturbation";
    }
    return r;
}

// ---------------------------------------------------------------------------
// Circle case
// ---------------------------------------------------------------------------

/// Integer points on x^2 + y^2 = n: every triangle has side product at least
/// 2R (checked exactly on squared integer sides), and every arc holding three
/// of the points is at least 2^(1/3) R^(1/3) long.
inline BoundReport verify_schinzel(long long n) {
    if (n < 1) throw DomainError("circle norm must be >= 1");
    BoundReport r;
    r.theorem = TheoremId::Schinzel;
    r.circle_norm = n;
    const double radius = std::sqrt(static_cast<double>(n));
    r.bound_value = std::cbrt(2.0) * std::cbrt(radius);

    const auto pts = circle_lattice_points(n);
    r.points = pts.size();
    if (pts.size() < 3) {
        r.vacuous = true;
        r.note = "fewer than three lattice points on the circle";
        return r;
    }

    auto sq = [](const IntPoint2& p, const IntPoint2& q) {
        const long long dx = p.x - q.x, dy = p.y - q.y;
        return static_cast<__int128>(dx * dx + dy * dy);
    };
    auto to_vec = [](const IntPoint2& p) {
        return Vec3{static_cast<double>(p.x), static_cast<double>(p.y), 0.0};
    };

    const std::size_t m = pts.size();
    const __int128 four_n = static_cast<__int128>(4) * n;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const __int128 dij = sq(pts[i], pts[j]);
            for (std::size_t k = j + 1; k < m; ++k) {
                ++r.triples;
                const __int128 prod = dij * sq(pts[i], pts[k]) * sq(pts[j], pts[k]);
                min_ratio = std::min(min_ratio, std::sqrt(static_cast<double>(prod) /
                                                          static_cast<double>(four_n)));
                if (prod < four_n && r.passed) {
                    r.passed = false;
                    r.witness_points = {to_vec(pts[i]), to_vec(pts[j]), to_vec(pts[k])};
                    r.note = "side product below 2R";
                }
            }
        }
    r.audit.emplace_back("min_side_product_over_2R", min_ratio);

    double min_arc = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const IntPoint2& p = pts[i];
        const IntPoint2& q = pts[(i + 2) % m];
        double ang = std::atan2(static_cast<double>(p.x * q.y - p.y * q.x),
                                static_cast<double>(p.x * q.x + p.y * q.y));
        if (ang < 0.0) ang += 2.0 * std::numbers::pi;
        const double arc = radius * ang;
        if (arc < min_arc) {
            min_arc = arc;
            arg = i;
        }
    }
    r.observed_min = min_arc;
    r.tightness = min_arc / r.bound_value;
    if (!holds_at_least(min_arc, r.bound_value) && r.passed) {
        r.passed = false;
        r.note = "three points on an arc shorter than the bound";
    }
    if (r.witness_points.empty())
        r.witness_points = {to_vec(pts[arg]), to_vec(pts[(arg + 1) % m]), to_vec(pts[(arg + 2) % m])};
    return r;
}

// ---------------------------------------------------------------------------
// Helix cases
// ---------------------------------------------------------------------------

struct NearHelixOptions {
    /// Replaces the computed bound; used to check that violations are caught.
    std::optional<double> bound_override;
};

namespace detail {

struct TripleMin {
    double value = std::numeric_limits<double>::infinity();
    std::size_t i = 0, j = 0, k = 0;
};

/// Minimum over triples of the largest pairwise distance.
inline TripleMin min_triple_diameter(const std::vector<NearPoint>& pts) {
    const std::size_t n = pts.size();
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i * n + j] = distance(pts[i].point, pts[j].point);
    TripleMin best;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = d[i * n + j];
            if (dij >= best.value) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                const double m = std::max({dij, d[i * n + k], d[j * n + k]});
                if (m < best.value) best = {m, i, j, k};
            }
        }
    return best;
}

inline std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

inline void set_witness(BoundReport& r, const std::vector<NearPoint>& pts, std::size_t i,
                        std::size_t j, std::size_t k) {
    r.witness_points = {pts[i].point, pts[j].point, pts[k].point};
    r.witness_coeffs = {pts[i].coeffs, pts[j].coeffs, pts[k].coeffs};
}

}  // namespace detail

/// Enumerates the delta-tube and checks that every triple of distinct
/// lattice points in it spans at least the main bound. Inadmissible deltas
/// are reported without enumeration or assertion.
inline BoundReport verify_near_helix(const TubeQuery& q, const LatticeConstants& c,
                                     const EnumerationConfig& cfg = {},
                                     const NearHelixOptions& opts = {}) {
    constexpr double pi = std::numbers::pi;
    q.validate(cfg);
    BoundReport r;
    r.theorem = TheoremId::Main;
    r.helix = q.helix;
    r.constants = c;
    r.delta = q.delta;

    const DeltaBranches br = delta_branches(q.helix, c);
    const double ab2 = q.helix.a * q.helix.a + q.helix.b * q.helix.b;
    const double k2t2 = q.helix.kappa * q.helix.kappa + q.helix.tau * q.helix.tau;
    r.audit = {
        {"delta_admissible_max", br.max},
        {"delta_branch_quarter_spacing", br.quarter_spacing},
        {"delta_branch_spacing", br.spacing},
        {"delta_branch_area", br.area},
        // the same spacing threshold written through a^2 + b^2
        {"delta_case2_threshold", c.d_min * c.d_min / (11.0 * pi * pi * pi * ab2)},
        // spacing threshold with the curvature factor kept, for comparison
        {"delta_spacing_with_curvature",
         c.d_min * c.d_min * q.helix.kappa * q.helix.kappa / (11.0 * pi * pi * pi * std::sqrt(k2t2))},
    };

    r.admissible = q.delta <= br.max;
    r.bound_value = opts.bound_override.value_or(detail::main_bound_formula(q.helix, c, q.delta));
    if (!r.admissible) {
        r.note = "delta exceeds the admissible maximum; nothing asserted";
        return r;
    }

    const auto pts = enumerate_tube(q, cfg);
    r.points = pts.size();
    r.triples = detail::choose3(pts.size());
    if (pts.size() < 3) {
        r.vacuous = true;
        r.note = "fewer than three lattice points in the tube";
        return r;
    }

    const auto best = detail::min_triple_diameter(pts);
    r.observed_min = best.value;
    detail::set_witness(r, pts, best.i, best.j, best.k);
    if (r.bound_value > 0.0) r.tightness = best.value / r.bound_value;
    const double scale = std::max(1.0, std::abs(r.bound_value));
    r.passed = best.value >= r.bound_value - kRelativeSlack * scale;
    if (!r.passed) r.note = "triple spans less than the bound";
    return r;
}

/// Lattice points on the helix (delta = 0 up to the boundary slack): for
/// each pair of points with another point between them in parameter order,
/// both the chord and the arc between the outer two respect on_helix_bounds.
inline BoundReport verify_on_helix(TubeQuery q, const LatticeConstants& c,
                                   const EnumerationConfig& cfg = {}) {
    q.delta = 0.0;
    q.validate(cfg);
    BoundReport r;
    r.theorem = TheoremId::OnHelix;
    r.helix = q.helix;
    r.constants = c;

    const OnHelixBounds b = on_helix_bounds(q.helix, c);
    r.bound_value = b.chord_bound;
    r.audit = {{"arc_bound", b.arc_bound}};

    const auto pts = enumerate_tube(q, cfg);
    r.points = pts.size();
    r.triples = detail::choose3(pts.size());
    if (pts.size() < 3) {
        r.vacuous = true;
        r.note = "fewer than three lattice points on the helix";
        return r;
    }

    double min_chord = std::numeric_limits<double>::infinity();
    double min_arc = std::numeric_limits<double>::infinity();
    std::size_t wi = 0, wk = 2;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t k = i + 2; k < pts.size(); ++k) {
            const double chord = distance(pts[i].point, pts[k].point);
            const double arc = arclength(q.helix, pts[i].t_star, pts[k].t_star);
            if (chord < min_chord) {
                min_chord = chord;
                wi = i;
                wk = k;
            }
            min_arc = std::min(min_arc, arc);
        }
    r.observed_min = min_chord;
    r.audit.emplace_back("observed_min_arc", min_arc);
    detail::set_witness(r, pts, wi, wi + 1, wk);
    if (r.bound_value > 0.0) r.tightness = min_chord / r.bound_value;
    const bool chord_ok = holds_at_least(min_chord, b.chord_bound);
    const bool arc_ok = holds_at_least(min_arc, b.arc_bound);
    r.passed = chord_ok && arc_ok;
    if (!chord_ok) r.note = "outer chord below bound";
    else if (!arc_ok) r.note = "arc below bound";
    return r;
}

/// Three lattice points on a helix with tau kappa^(1/3) >= 0.4 (kappa^2 + tau^2)
/// span at least 1.1 kappa^(-1/3). Applies to lattices with A_L >= 1/2, the
/// value of the integer lattice.
inline BoundReport verify_corollary(TubeQuery q, const LatticeConstants& c,
                                    const EnumerationConfig& cfg = {}) {
    q.delta = 0.0;
    q.validate(cfg);
    BoundReport r;
    r.theorem = TheoremId::Corollary;
    r.helix = q.helix;
    r.constants = c;
    r.bound_value = corollary_bound(q.helix);
    r.admissible = corollary_applies(q.helix) && c.a_min_lb >= 0.5 * (1.0 - 1e-12);
    if (!r.admissible) {
        r.note = "helix or lattice outside the corollary's hypotheses";
        return r;
    }
    const auto pts = enumerate_tube(q, cfg);
    r.points = pts.size();
    r.triples = detail::choose3(pts.size());
    if (pts.size() < 3) {
        r.vacuous = true;
        r.note = "fewer than three lattice points on the helix";
        return r;
    }
    const auto best = detail::min_triple_diameter(pts);
    r.observed_min = best.value;
    r.tightness = best.value / r.bound_value;
    detail::set_witness(r, pts, best.i, best.j, best.k);
    r.passed = holds_at_least(best.value, r.bound_value);
    if (!r.passed) r.note = "triple spans less than the bound";
    return r;
}

// ---------------------------------------------------------------------------
// Bound chain for points on the helix
// ---------------------------------------------------------------------------

struct ProofStep {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool applicable = true;
    bool passed = true;
};

struct ProofChainReport {
    std::vector<ProofStep> steps;
    bool passed = true;

    const ProofStep* step(std::string_view name) const {
        for (const auto& s : steps)
            if (s.name == name) return &s;
        return nullptr;
    }
};

namespace detail {

inline void add_step(ProofChainReport& r, std::string name, double lhs, double rhs,
                     bool applicable = true) {
    ProofStep s{std::move(name), lhs, rhs, applicable, true};
    if (applicable) s.passed = holds_at_most(lhs, rhs);
    r.passed = r.passed && s.passed;
    r.steps.push_back(std::move(s));
}

}  // namespace detail

/// Evaluates each intermediate inequality used to bound three helix points
/// with h1 + h2 < pi from below, given a triangle-area floor `area_floor`.
/// Every step is recorded as lhs <= rhs. The area-conditional steps apply
/// only when the closed-form area reaches the floor (or half of it for the
/// near-helix variant).
inline ProofChainReport check_proof_chain(const Helix& h, const ArcTriple& arc, double area_floor) {
    constexpr double pi = std::numbers::pi;
    const double h1 = arc.h1(), h2 = arc.h2();
    const double x = h1 + h2;
    if (!(x > 0.0 && x < pi)) throw DomainError("bound chain requires 0 < h1 + h2 < pi");
    if (!(area_floor > 0.0)) throw DomainError("area floor must be positive");

    const double a = h.a, b = h.b;
    const double a2 = a * a, b2 = b * b, ab2 = a2 + b2;
    const double x6 = std::pow(x, 6);
    const AreaTerms t = triangle_area_sq_closed_form(a, b, h1, h2);
    const double area = std::sqrt(t.area_sq);
    const double chord = std::sqrt(chord_length_sq(a, b, x));
    const double floor_cbrt = std::cbrt(area_floor);
    const double kappa_term = floor_cbrt / std::cbrt(h.kappa);
    const double gap_scale = floor_cbrt / std::cbrt(a) / std::pow(ab2, 1.0 / 6.0);

    ProofChainReport r;
    detail::add_step(r, "T1b", t.t1, a2 * a2 * x6 / 64.0);
    detail::add_step(r, "T2b", t.t2, a2 * b2 * pi * pi * x6 / 2304.0);
    detail::add_step(r, "T3b", t.t3, a2 * b2 * x6 / 64.0);
    // sin y >= 2y/pi on (0, pi/2] gives T1 >= 16 a^4 h1^2 h2^2 x^2 / pi^6
    detail::add_step(r, "sl_lb", 2.0 * a2 * h1 * h2 * x / (pi * pi * pi), area);
    detail::add_step(r, "chord_lb", 2.0 / pi * x * std::sqrt(ab2), chord);

    const bool on = t.area_sq >= area_floor * area_floor;
    detail::add_step(r, "oncl", 200.0 * area_floor * area_floor, x6 * a2 * ab2, on);
    detail::add_step(r, "h1h2c2", 2.4 * gap_scale, x, on);
    detail::add_step(r, "s0s2c2", 2.4 * kappa_term, x * std::sqrt(ab2), on);
    detail::add_step(r, "chord_on", 4.8 / pi * kappa_term, chord, on);

    const bool near = t.area_sq >= 0.25 * area_floor * area_floor;
    detail::add_step(r, "cl", 50.0 * area_floor * area_floor, x6 * a2 * ab2, near);
    detail::add_step(r, "h1h2c2n", 1.9 * gap_scale, x, near);
    detail::add_step(r, "chord_near", 3.8 / pi * kappa_term, chord, near);
    return r;
}

/// The numeric constants the bound chain relies on, checked strictly.
inline ProofChainReport check_proof_constants() {
    constexpr double pi = std::numbers::pi;
    ProofChainReport r;
    auto strict = [&r](std::string name, double lhs, double rhs) {
        ProofStep s{std::move(name), lhs, rhs, true, lhs < rhs};
        r.passed = r.passed && s.passed;
        r.steps.push_back(std::move(s));
    };
    strict("200^(1/6) > 2.4", 2.4, std::pow(200.0, 1.0 / 6.0));
    strict("50^(1/6) > 1.9", 1.9, std::pow(50.0, 1.0 / 6.0));
    strict("1/64 + pi^2/2304 < 0.02", 1.0 / 64.0 + pi * pi / 2304.0, 0.02);
    strict("4.8/pi > 1.5", 1.5, 4.8 / pi);
    strict("3.8/pi > 1.2", 1.2, 3.8 / pi);
    strict("1.5/2^(1/3) > 1.1", 1.1, 1.5 / std::cbrt(2.0));
    return r;
}

}  // namespace helix_lattice
