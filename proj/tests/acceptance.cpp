// Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helix_lattice/cli.hpp"
#include "helix_lattice/verify.hpp"
#include "test_support.hpp"

using namespace helix_lattice;
using helix_lattice::support::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0: no runtime limit
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1 ------------------------------------------------------------------------

struct LdVec {
    long double x, y, z;
};

LdVec helix_ld(long double a, long double b, long double t) {
    return {a * std::cos(t), a * std::sin(t), b * t};
}

Outcome closed_forms() {
    std::mt19937_64 rng(1001);
    double worst_chord = 0.0, worst_area = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double a = uniform(rng, 0.1, 10), b = uniform(rng, 0.1, 10);
        double h1, h2;
        do {
            h1 = uniform(rng, 0, 2 * kPi);
            h2 = uniform(rng, 0, 2 * kPi);
        } while (!(h1 > 0 && h2 > 0 && h1 + h2 < 2 * kPi));
        const double t0 = uniform(rng, -1, 1);
        const ArcTriple arc = ArcTriple::from_gaps(t0, h1, h2);
        const Helix h = helix_from_radius_pitch(a, b);

        const LdVec p0 = helix_ld(a, b, arc.t0()), p1 = helix_ld(a, b, arc.t1()), p2 = helix_ld(a, b, arc.t2());
        const LdVec u{p1.x - p0.x, p1.y - p0.y, p1.z - p0.z}, v{p2.x - p0.x, p2.y - p0.y, p2.z - p0.z};
        const long double chord_ld = u.x * u.x + u.y * u.y + u.z * u.z;
        const LdVec c{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
        const long double area_ld = 0.25L * (c.x * c.x + c.y * c.y + c.z * c.z);

        const double chord = chord_length_sq(h, arc.h1());
        const double area = triangle_area_sq_closed_form(h, arc).area_sq;
        worst_chord = std::max(worst_chord, double(std::abs((chord - chord_ld) / chord_ld)));
        worst_area = std::max(worst_area, double(std::abs((area - area_ld) / area_ld)));
    }
    const bool ok = worst_chord <= 1e-10 && worst_area <= 1e-10;
    return {ok, fmt("10000 cases, max rel err chord %.2e, area %.2e (tol 1e-10)", worst_chord, worst_area)};
}

// 2 ------------------------------------------------------------------------

Outcome standard_constants() {
    const LatticeConstants c = lattice_constants(AffineLattice::standard(), 2);
    const bool ok = std::abs(c.d_min - 1.0) <= 1e-12 && std::abs(c.a_min_lb - 0.5) <= 1e-12 &&
                    c.a_min_exact && std::abs(*c.a_min_exact - 0.5) <= 1e-12;
    return {ok, fmt("D_L = %.17g, A_L = %.17g (exhaustive %.17g), tol 1e-12", c.d_min, c.a_min_lb,
                    c.a_min_exact.value_or(-1))};
}

// 3 ------------------------------------------------------------------------

/// Coefficient reach of any vector no longer than the shortest basis vector,
/// from the rows of the inverse basis.
double coefficient_reach(const std::array<Vec3, 3>& v) {
    const Mat3 inv = inverse(Mat3::from_columns(v[0], v[1], v[2]));
    const double len = std::min({norm(v[0]), norm(v[1]), norm(v[2])});
    double reach = 0.0;
    for (int i = 0; i < 3; ++i) reach = std::max(reach, norm(inv.row(i)) * len);
    return reach;
}

Outcome shortest_vectors() {
    std::mt19937_64 rng(1003);
    std::uniform_int_distribution<int> small(-3, 3);
    int checked = 0, mismatched = 0, redrawn = 0, integer_cases = 0;
    std::string first;
    while (checked < 100) {
        const bool integer = checked % 2 == 0;
        std::array<Vec3, 3> v;
        for (auto& e : v)
            e = integer ? Vec3{double(small(rng)), double(small(rng)), double(small(rng))}
                        : Vec3{uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)};
        const double det = dot(v[0], cross(v[1], v[2]));
        if (det == 0.0 || coefficient_reach(v) > 20.0) {
            ++redrawn;
            continue;
        }
        ++checked;
        integer_cases += integer;
        const ShortestVector got = shortest_vector(v);
        const auto want = support::brute_shortest(v, 20);
        const bool same_len = std::abs(got.length * got.length - want.norm_sq) <= 1e-12 * want.norm_sq;
        if (!same_len || got.coeffs != want.coeffs) {
            ++mismatched;
            if (first.empty())
                first = fmt("; first mismatch at case %d: %.17g vs %.17g", checked, got.length,
                            std::sqrt(want.norm_sq));
        }
    }
    return {mismatched == 0, fmt("%d lattices (%d integer), %d mismatches, %d redrawn as singular or "
                                 "beyond the |m| <= 20 oracle%s",
                                 checked, integer_cases, mismatched, redrawn, first.c_str())};
}

// 4 ------------------------------------------------------------------------

Outcome inequality_suites() {
    std::vector<double> grid;
    for (int i = 0; i < 100000; ++i) grid.push_back(1e-6 + (kPi - 2e-6) * i / 99999.0);
    const InequalityResult sine = check_sine_inequalities(grid);

    std::mt19937_64 rng(1004);
    int t2_fail = 0, t2_checked = 0;
    while (t2_checked < 100000) {
        const double h1 = uniform(rng, 0, 2 * kPi), h2 = uniform(rng, 0, 2 * kPi);
        if (!(h1 > 0 && h2 > 0)) continue;
        ++t2_checked;
        t2_fail += !check_t2_bound(h1, h2).passed;
    }

    int area_fail = 0;
    for (int i = 0; i < 10000; ++i) {
        const double delta = uniform(rng, 0, 0.5);
        Vec3 p[3], q[3];
        for (int k = 0; k < 3; ++k) {
            p[k] = {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)};
            q[k] = p[k] + support::random_unit(rng) * (delta * uniform(rng, 0, 1));
        }
        area_fail += !check_area_perturbation(p[0], p[1], p[2], q[0], q[1], q[2], delta).passed;
        area_fail += !check_area_perturbation_one_point(p[0], p[1], p[2], q[2], delta).passed;
    }
    const int sine_fail = sine.passed ? 0 : 1;
    return {sine.passed && t2_fail == 0 && area_fail == 0,
            fmt("sine grid %zu points, %d violations; T2 %d pairs, %d violations; area 10000 triangle pairs, "
                "%d violations",
                sine.checked, sine_fail, t2_checked, t2_fail, area_fail)};
}

// 5 ------------------------------------------------------------------------

Outcome schinzel_sweep() {
    long long circles = 0, triples = 0, failures = 0, first_fail = 0;
    double min_tight = 1e300;
    for (long long n = 1; n <= 100000; ++n) {
        const BoundReport r = verify_schinzel(n);
        if (r.vacuous) continue;
        ++circles;
        triples += static_cast<long long>(r.triples);
        min_tight = std::min(min_tight, *r.tightness);
        if (!r.passed) {
            ++failures;
            if (!first_fail) first_fail = n;
        }
    }
    std::string where = first_fail ? fmt(" (first n=%lld)", first_fail) : "";
    return {failures == 0, fmt("%lld circles with >= 3 points, %lld triples, %lld violations%s, "
                               "min arc/bound %.6f",
                               circles, triples, failures, where.c_str(), min_tight)};
}

// 6 ------------------------------------------------------------------------

struct Query {
    TubeQuery q;
    LatticeConstants c;
};

/// Four lattice points placed on the helix so that the tube is never empty.
std::optional<Query> lattice_rich_query(std::mt19937_64& rng) {
    const double a = uniform(rng, 0.4, 2.5), b = uniform(rng, 0.4, 2.5);
    const Helix h = helix_from_radius_pitch(a, b);
    const double len = uniform(rng, 2 * kPi, 16 * kPi);
    const double lo = uniform(rng, -4 * kPi, 4 * kPi);
    double t[4];
    for (;;) {
        for (double& x : t) x = uniform(rng, lo, lo + len);
        std::sort(t, t + 4);
        if (t[1] - t[0] >= 0.3 && t[2] - t[1] >= 0.3 && t[3] - t[2] >= 0.3) break;
    }
    const Vec3 o = helix_point(h, t[0]);
    const Vec3 v1 = helix_point(h, t[1]) - o, v2 = helix_point(h, t[2]) - o, v3 = helix_point(h, t[3]) - o;
    if (std::abs(dot(v1, cross(v2, v3))) < 0.05 * norm(v1) * norm(v2) * norm(v3)) return std::nullopt;
    const AffineLattice l(o, v1, v2, v3);
    const LatticeConstants c = lattice_constants(l);
    return Query{{h, l, uniform(rng, 0, 1) * delta_admissible_max(h, c), lo, lo + len}, c};
}

std::optional<Query> random_query(std::mt19937_64& rng) {
    Vec3 v[3];
    for (auto& e : v) e = {uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5)};
    if (std::abs(dot(v[0], cross(v[1], v[2]))) < 0.1 * norm(v[0]) * norm(v[1]) * norm(v[2])) return std::nullopt;
    const AffineLattice l({uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)}, v[0], v[1], v[2]);
    const Helix h = helix_from_radius_pitch(uniform(rng, 0.4, 2.5), uniform(rng, 0.4, 2.5));
    const LatticeConstants c = lattice_constants(l);
    const double lo = uniform(rng, -4 * kPi, 4 * kPi);
    return Query{{h, l, uniform(rng, 0, 1) * delta_admissible_max(h, c), lo, lo + uniform(rng, 2 * kPi, 16 * kPi)},
                 c};
}

Outcome near_helix() {
    std::mt19937_64 rng(1006);
    int done = 0, vacuous = 0, substantive = 0, failures = 0, ill_conditioned = 0, over_budget = 0;
    long long triples = 0;
    double min_tight = 1e300;
    std::string first;
    while (done < 50) {
        const bool rich = done % 5 != 4;
        const std::optional<Query> qu = rich ? lattice_rich_query(rng) : random_query(rng);
        if (!qu) {
            ++ill_conditioned;
            continue;
        }
        BoundReport r;
        try {
            r = verify_near_helix(qu->q, qu->c);
        } catch (const ResourceError&) {
            ++over_budget;
            continue;
        }
        ++done;
        if (r.vacuous) {
            ++vacuous;
            continue;
        }
        ++substantive;
        triples += static_cast<long long>(r.triples);
        min_tight = std::min(min_tight, r.tightness.value_or(1e300));
        if (!r.passed) {
            ++failures;
            if (first.empty())
                first = fmt("; first violation kappa=%.17g tau=%.17g delta=%.17g observed %.17g < bound %.17g",
                            r.helix->kappa, r.helix->tau, r.delta, *r.observed_min, r.bound_value);
        }
    }
    const bool ok = failures == 0 && substantive >= 10 && vacuous <= 40;
    return {ok, fmt("50 queries: %d substantive (%lld triples), %d vacuous, %d violations; redrawn %d "
                    "ill-conditioned, %d over budget; min observed/bound %.4f%s",
                    substantive, triples, vacuous, failures, ill_conditioned, over_budget, min_tight,
                    first.c_str())};
}

// 7 ------------------------------------------------------------------------

Outcome proof_chain() {
    const ProofChainReport constants = check_proof_constants();
    std::mt19937_64 rng(1007);
    int failures = 0, chained = 0;
    std::string first;
    for (int i = 0; i < 10000; ++i) {
        const Helix h = helix_from_radius_pitch(uniform(rng, 0.1, 10), uniform(rng, 0.1, 10));
        double x;
        do x = uniform(rng, 0, kPi);
        while (!(x > 1e-3));
        const double h1 = x * uniform(rng, 0.01, 0.99);
        const ArcTriple arc = ArcTriple::from_gaps(uniform(rng, -5, 5), h1, x - h1);
        if (!(arc.h1() + arc.h2() < kPi)) {
            --i;
            continue;
        }
        // area floor around the actual area so both branches of every step are exercised
        const double area = std::sqrt(triangle_area_sq_closed_form(h, arc).area_sq);
        const ProofChainReport r = check_proof_chain(h, arc, area * uniform(rng, 0.3, 1.5));
        chained += r.step("oncl")->applicable;
        if (!r.passed) {
            ++failures;
            if (first.empty())
                for (const auto& s : r.steps)
                    if (!s.passed) {
                        first = "; first failing step " + s.name;
                        break;
                    }
        }
    }
    return {constants.passed && failures == 0,
            fmt("constants %s (200^(1/6) = %.4f > 2.4, 50^(1/6) = %.4f > 1.9); 10000 chains, %d with the "
                "area-conditional steps active, %d failures%s",
                constants.passed ? "ok" : "FAILED", std::pow(200.0, 1.0 / 6.0), std::pow(50.0, 1.0 / 6.0),
                chained, failures, first.c_str())};
}

// 8 ------------------------------------------------------------------------

std::string read(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "helix_lattice_acceptance";
    fs::create_directories(dir);
    const fs::path cfg = dir / "sweep.cfg";
    std::ofstream(cfg) << "kappa_range = 0.2, 2.0, 10\n"
                          "tau_range = 0.2, 2.0, 10\n"
                          "delta_policy = fraction:0.5\n"
                          "window = 0, 8pi\n"
                          "seed = 20240601\n"
                          "probes = 100\n";
    bool same = true;
    std::size_t bytes = 0;
    int codes[4];
    int k = 0;
    for (const char* format : {"csv", "json"}) {
        const fs::path a = dir / (std::string("a.") + format), b = dir / (std::string("b.") + format);
        for (const fs::path& p : {a, b}) {
            std::ostringstream out, err;
            codes[k++] = cli::run({"helix-lattice", "sweep", "--config", cfg.string(), "--format", format,
                                   "--out", p.string()},
                                  out, err);
        }
        const std::string ta = read(a), tb = read(b);
        same = same && !ta.empty() && ta == tb;
        bytes += ta.size();
    }
    const bool ran = std::all_of(codes, codes + 4, [](int c) { return c == 0 || c == 1; });
    return {same && ran, fmt("10x10 sweep, window [0, 8pi], seed fixed: csv and json reruns %s (%zu bytes), "
                             "exit codes %d %d %d %d",
                             same ? "byte-identical" : "DIFFER", bytes, codes[0], codes[1], codes[2], codes[3])};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "closed-form chord and area vs coordinates", 5, closed_forms},
        {2, "standard lattice constants", 1, standard_constants},
        {3, "shortest vector vs brute force", 30, shortest_vectors},
        {4, "inequality suites", 20, inequality_suites},
        {5, "circle sweep n <= 100000", 60, schinzel_sweep},
        {6, "near-helix bound on randomized queries", 120, near_helix},
        {7, "bound chain checks", 5, proof_chain},
        {8, "sweep determinism", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.time_limit_s == 0 || secs < c.time_limit_s;
        const bool ok = o.passed && in_time;
        failed += !ok;
        std::printf("[%s] %d. %s: %s; %.2f s", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), secs);
        if (c.time_limit_s > 0) std::printf(" (limit %.0f s)", c.time_limit_s);
        std::printf("\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
