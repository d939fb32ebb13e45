#pragma once

/*! \file
 *  \brief Command-line front end: `constants`, `verify` and `sweep`.
 *
 *  Exit codes: 0 every substantive check passed, 1 an assertion failed,
 *  2 bad input, 3 a resource budget was exceeded.
 */

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "helix_lattice/enumeration.hpp"
#include "helix_lattice/errors.hpp"
#include "helix_lattice/geometry.hpp"
#include "helix_lattice/lattice.hpp"
#include "helix_lattice/report.hpp"
#include "helix_lattice/verify.hpp"

namespace helix_lattice::cli {

enum ExitCode : int { kPass = 0, kAssertionFailure = 1, kInputError = 2, kResourceError = 3 };

/// Malformed user input; `field` names the offending option or config key.
class InputError : public std::invalid_argument {
public:
    InputError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// ---------------------------------------------------------------------------
// Parsing helpers
// ---------------------------------------------------------------------------

/// Decimal number, optionally suffixed by "pi" ("8pi", "-0.5pi", "pi").
inline double parse_number(std::string_view tok, const std::string& field) {
    double factor = 1.0;
    if (tok.size() >= 2 && tok.substr(tok.size() - 2) == "pi") {
        factor = std::numbers::pi;
        tok.remove_suffix(2);
        if (tok.empty() || tok == "+") return factor;
        if (tok == "-") return -factor;
        if (tok.back() == '*') tok.remove_suffix(1);
    }
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
        throw InputError(field, "not a number: '" + std::string(tok) + "'");
    return v * factor;
}

/// Numbers separated by commas and/or whitespace; '#' starts a comment.
inline std::vector<double> parse_number_list(const std::string& text, const std::string& field) {
    std::vector<double> out;
    std::string cleaned;
    bool comment = false;
    for (char ch : text) {
        if (ch == '\n') comment = false;
        if (ch == '#') comment = true;
        if (comment) continue;
        cleaned += (ch == ',' || ch == ';' || ch == '[' || ch == ']') ? ' ' : ch;
    }
    std::istringstream is(cleaned);
    std::string tok;
    while (is >> tok) out.push_back(parse_number(tok, field));
    return out;
}

/// Twelve numbers: origin, v1, v2, v3.
inline AffineLattice parse_lattice(const std::string& text, const std::string& field = "lattice") {
    const auto v = parse_number_list(text, field);
    if (v.size() != 12)
        throw InputError(field, "expected 12 numbers (v0 v1 v2 v3), got " + std::to_string(v.size()));
    try {
        return AffineLattice({v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]},
                             {v[9], v[10], v[11]});
    } catch (const DomainError& e) {
        throw InputError(field, e.what());
    }
}

inline std::string read_file(const std::string& path, const std::string& field) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(field, "cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Window {
    double t_min = 0.0;
    double t_max = 4.0 * std::numbers::pi;
};

inline Window parse_window(const std::string& text, const std::string& field = "window") {
    const auto v = parse_number_list(text, field);
    if (v.size() != 2 || !(v[0] < v[1])) throw InputError(field, "expected 't_min,t_max' with t_min < t_max");
    return {v[0], v[1]};
}

/// "zero", "max" / "admissible_max", "fraction:f" or a plain number.
struct DeltaPolicy {
    enum class Kind { Zero, AdmissibleMax, Fraction, Absolute } kind = Kind::Zero;
    double value = 0.0;

    double resolve(double admissible_max) const {
        switch (kind) {
            case Kind::Zero: return 0.0;
            case Kind::AdmissibleMax: return admissible_max;
            case Kind::Fraction: return value * admissible_max;
            case Kind::Absolute: return value;
        }
        return 0.0;
    }

    std::string describe() const {
        switch (kind) {
            case Kind::Zero: return "zero";
            case Kind::AdmissibleMax: return "admissible_max";
            case Kind::Fraction: return "fraction:" + format_double(value);
            case Kind::Absolute: return format_double(value);
        }
        return "";
    }
};

inline DeltaPolicy parse_delta_policy(std::string text, const std::string& field, bool allow_absolute) {
    for (auto& ch : text) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (text == "zero") return {DeltaPolicy::Kind::Zero, 0.0};
    if (text == "max" || text == "admissible_max") return {DeltaPolicy::Kind::AdmissibleMax, 0.0};
    const std::string prefix = "fraction:";
    if (text.rfind(prefix, 0) == 0) {
        const double f = parse_number(std::string_view(text).substr(prefix.size()), field);
        if (!(f >= 0.0 && f <= 1.0)) throw InputError(field, "fraction must lie in [0, 1]");
        return {DeltaPolicy::Kind::Fraction, f};
    }
    if (!allow_absolute) throw InputError(field, "expected zero, admissible_max or fraction:f");
    const double d = parse_number(text, field);
    if (!(d >= 0.0)) throw InputError(field, "delta must be >= 0");
    return {DeltaPolicy::Kind::Absolute, d};
}

// ---------------------------------------------------------------------------
// Sweep
// ---------------------------------------------------------------------------

struct Range {
    double lo = 1.0;
    double hi = 1.0;
    int steps = 1;

    double at(int i) const {
        if (steps == 1) return lo;
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
};

struct SweepConfig {
    Range kappa_range;
    Range tau_range;
    DeltaPolicy delta_policy;
    AffineLattice lattice = AffineLattice::standard();
    Window window;
    std::uint64_t seed = 0;
    double budget = 1e8;
    int probes = 100;

    void validate() const {
        auto check = [](const Range& r, const char* name) {
            if (!(r.lo > 0.0) || !(r.hi >= r.lo) || r.steps < 1 || !std::isfinite(r.hi))
                throw InputError(name, "range needs lo > 0, hi >= lo, steps >= 1");
        };
        check(kappa_range, "kappa_range");
        check(tau_range, "tau_range");
        if (!(budget >= 1.0)) throw InputError("budget", "must be >= 1");
        if (probes < 0) throw InputError("probes", "must be >= 0");
        if (!(window.t_min < window.t_max)) throw InputError("window", "t_min must be < t_max");
    }
};

namespace detail {

inline Range parse_range(const std::vector<double>& v, const std::string& field) {
    if (v.size() != 3) throw InputError(field, "expected lo,hi,steps");
    if (v[2] != std::floor(v[2])) throw InputError(field, "steps must be an integer");
    return {v[0], v[1], static_cast<int>(v[2])};
}

inline std::uint64_t parse_seed(const std::string& text, const std::string& field) {
    std::uint64_t s = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), s);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw InputError(field, "expected an unsigned 64-bit integer");
    return s;
}

inline std::string json_scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) s += json_scalar_text(e) + " ";
        return s;
    }
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number()) return format_double(v.get<double>());
    throw InputError("config", "unsupported value type");
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Accepts either a JSON object or `key = value` lines ('#' comments).
/// Keys: kappa_range, tau_range (lo,hi,steps), delta_policy, lattice,
/// window, seed, budget, probes.
inline SweepConfig parse_sweep_config(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> entries;
    const std::string body = detail::trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("config", std::string("invalid JSON: ") + e.what());
        }
        for (const auto& [k, v] : j.items()) entries.emplace_back(k, detail::json_scalar_text(v));
    } else {
        std::istringstream is(text);
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            line = detail::trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw InputError("config", "line " + std::to_string(lineno) + " is not key = value");
            entries.emplace_back(detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
        }
    }

    SweepConfig cfg;
    bool have_kappa = false, have_tau = false;
    for (const auto& [key, value] : entries) {
        if (key == "kappa_range") {
            cfg.kappa_range = detail::parse_range(parse_number_list(value, key), key);
            have_kappa = true;
        } else if (key == "tau_range") {
            cfg.tau_range = detail::parse_range(parse_number_list(value, key), key);
            have_tau = true;
        } else if (key == "delta_policy") {
            cfg.delta_policy = parse_delta_policy(value, key, false);
        } else if (key == "lattice") {
            cfg.lattice = parse_lattice(value, key);
        } else if (key == "window") {
            cfg.window = parse_window(value, key);
        } else if (key == "seed") {
            cfg.seed = detail::parse_seed(value, key);
        } else if (key == "budget") {
            const auto v = parse_number_list(value, key);
            if (v.size() != 1) throw InputError(key, "expected one number");
            cfg.budget = v[0];
        } else if (key == "probes") {
            const auto v = parse_number_list(value, key);
            if (v.size() != 1 || v[0] != std::floor(v[0])) throw InputError(key, "expected an integer");
            cfg.probes = static_cast<int>(v[0]);
        } else {
            throw InputError(key, "unknown config key");
        }
    }
    if (!have_kappa) throw InputError("kappa_range", "missing");
    if (!have_tau) throw InputError("tau_range", "missing");
    cfg.validate();
    return cfg;
}

struct SweepRow {
    double kappa = 0.0, tau = 0.0;
    BoundReport report;
    OnHelixBounds on_helix;
    int probes = 0;
    int probes_passed = 0;
};

/// splitmix64 finalizer; derives independent per-cell streams from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// One row per (kappa, tau) cell: the near-helix report for the resolved
/// delta, on-helix bounds, and `probes` random bound-chain checks drawn from
/// a per-cell stream.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const LatticeConstants constants = lattice_constants(cfg.lattice);
    EnumerationConfig ecfg;
    ecfg.candidate_budget = cfg.budget;

    std::vector<SweepRow> rows;
    for (int i = 0; i < cfg.kappa_range.steps; ++i) {
        for (int j = 0; j < cfg.tau_range.steps; ++j) {
            SweepRow row;
            row.kappa = cfg.kappa_range.at(i);
            row.tau = cfg.tau_range.at(j);
            const Helix h = helix_from_curvature_torsion(row.kappa, row.tau);
            const double delta = cfg.delta_policy.resolve(delta_admissible_max(h, constants));
            const TubeQuery q{h, cfg.lattice, delta, cfg.window.t_min, cfg.window.t_max};
            row.report = verify_near_helix(q, constants, ecfg);
            row.on_helix = on_helix_bounds(h, constants);

            const auto cell = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(cfg.tau_range.steps) +
                              static_cast<std::uint64_t>(j);
            std::uint64_t state = splitmix64(cfg.seed ^ splitmix64(cell));
            auto uniform = [&state] {
                state = splitmix64(state);
                return static_cast<double>(state >> 11) * 0x1.0p-53;
            };
            for (int p = 0; p < cfg.probes; ++p) {
                const double total = std::numbers::pi * (0.02 + 0.97 * uniform());
                const double split = 0.05 + 0.9 * uniform();
                const ArcTriple arc = ArcTriple::from_gaps(0.0, total * split, total * (1.0 - split));
                ++row.probes;
                if (check_proof_chain(h, arc, constants.a_min_lb).passed) ++row.probes_passed;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline bool row_passed(const SweepRow& r) { return r.report.passed && r.probes_passed == r.probes; }

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "schema,kappa,tau,a,b,delta_max,delta,admissible,main_bound,chord_bound,arc_bound,"
          "points,triples,observed_min,tightness,vacuous,passed,probes,probes_passed\n";
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    for (const auto& r : rows) {
        const auto& rep = r.report;
        os << kReportSchema << ',' << format_double(r.kappa) << ',' << format_double(r.tau) << ','
           << format_double(rep.helix->a) << ',' << format_double(rep.helix->b) << ','
           << format_double(*rep.audit_value("delta_admissible_max")) << ','
           << format_double(rep.delta) << ',' << (rep.admissible ? 1 : 0) << ','
           << format_double(rep.bound_value) << ',' << format_double(r.on_helix.chord_bound) << ','
           << format_double(r.on_helix.arc_bound) << ',' << rep.points << ',' << rep.triples << ','
           << opt(rep.observed_min) << ',' << opt(rep.tightness) << ',' << (rep.vacuous ? 1 : 0)
           << ',' << (row_passed(r) ? 1 : 0) << ',' << r.probes << ',' << r.probes_passed << '\n';
    }
    return os.str();
}

inline nlohmann::json sweep_json(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["command"] = "sweep";
    j["seed"] = cfg.seed;
    j["delta_policy"] = cfg.delta_policy.describe();
    j["lattice"] = to_json(cfg.lattice);
    j["window"] = {cfg.window.t_min, cfg.window.t_max};
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        all = all && row_passed(r);
        arr.push_back({{"kappa", r.kappa},
                       {"tau", r.tau},
                       {"chord_bound", r.on_helix.chord_bound},
                       {"arc_bound", r.on_helix.arc_bound},
                       {"probes", r.probes},
                       {"probes_passed", r.probes_passed},
                       {"report", to_json(r.report)}});
    }
    j["passed"] = all;
    j["rows"] = arr;
    return j;
}

// ---------------------------------------------------------------------------
// SVG side view
// ---------------------------------------------------------------------------

/// x-z projection of the helix arc with tube points marked.
inline std::string tube_svg(const Helix& h, double t_min, double t_max,
                            const std::vector<NearPoint>& pts) {
    const int samples = 800;
    double xmin = -h.a, xmax = h.a, zmin = h.b * t_min, zmax = h.b * t_max;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.point.x);
        xmax = std::max(xmax, p.point.x);
        zmin = std::min(zmin, p.point.z);
        zmax = std::max(zmax, p.point.z);
    }
    const double pad = 0.05 * std::max(xmax - xmin, zmax - zmin) + 1e-9;
    xmin -= pad; xmax += pad; zmin -= pad; zmax += pad;
    const double w = 600.0;
    const double hgt = w * (zmax - zmin) / (xmax - xmin);
    auto sx = [&](double x) { return (x - xmin) / (xmax - xmin) * w; };
    auto sz = [&](double z) { return hgt - (z - zmin) / (zmax - zmin) * hgt; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(w) << "\" height=\""
       << format_double(hgt) << "\">\n<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (int i = 0; i <= samples; ++i) {
        const double t = t_min + (t_max - t_min) * i / samples;
        const Vec3 p = helix_point(h, t);
        os << format_double(sx(p.x)) << ',' << format_double(sz(p.z)) << ' ';
    }
    os << "\"/>\n";
    for (const auto& p : pts)
        os << "<circle cx=\"" << format_double(sx(p.point.x)) << "\" cy=\"" << format_double(sz(p.point.z))
           << "\" r=\"3\" fill=\"red\"/>\n";
    os << "</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

namespace detail {

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError("out", "cannot write '" + out_path + "'");
    f << text;
}

inline int exit_for(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports)
        if (r.substantive() && !r.passed) return kAssertionFailure;
    return kPass;
}

inline nlohmann::json reports_json(const std::string& command, const std::vector<BoundReport>& reports) {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["passed"] = exit_for(reports) == kPass;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = arr;
    return j;
}

}  // namespace detail

/// Runs the CLI on `args` (args[0] is the program name).
inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"Lattice points on and near a helix: constants, bound verification, sweeps",
                 "helix-lattice"};
    app.require_subcommand(1);

    std::string lattice_text, lattice_file, window_text, delta_text = "zero", out_path;
    std::string format = "json", config_path, svg_path;
    double kappa = 0.0, tau = 0.0, budget = 1e8;
    std::optional<std::uint64_t> seed;
    int exhaustive = 0;
    long long circle_n = 0;

    auto add_lattice = [&](CLI::App* sub) {
        sub->add_option("--lattice", lattice_text, "12 numbers: v0 v1 v2 v3 (row-major)");
        sub->add_option("--lattice-file", lattice_file, "file holding the 12 lattice numbers");
    };

    auto* constants = app.add_subcommand("constants", "lambda1, D_L and A_L of a lattice");
    add_lattice(constants);
    constants->add_option("--exhaustive", exhaustive,
                          "also search triangles with edge coefficients in [-N, N]^3");
    constants->add_option("--out", out_path, "report path (default stdout)");
    constants->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

    auto* verify = app.add_subcommand("verify", "check a bound on concrete data");
    verify->require_subcommand(1);
    auto* schinzel = verify->add_subcommand("schinzel", "integer points on x^2 + y^2 = n");
    schinzel->add_option("n", circle_n, "circle norm n = R^2")->required();
    auto* on_helix = verify->add_subcommand("on-helix", "lattice points lying on the helix");
    auto* near_helix = verify->add_subcommand("near-helix", "lattice points within delta of the helix");
    for (auto* sub : {on_helix, near_helix}) {
        add_lattice(sub);
        sub->add_option("--kappa", kappa, "curvature")->required();
        sub->add_option("--tau", tau, "torsion")->required();
        sub->add_option("--window", window_text, "parameter window t_min,t_max (default 0,4pi)");
        sub->add_option("--budget", budget, "candidate box budget");
        sub->add_option("--svg", svg_path, "write an x-z view of the tube points");
    }
    near_helix->add_option("--delta", delta_text, "number, max, or fraction:f (default zero)");
    for (auto* sub : {schinzel, on_helix, near_helix}) {
        sub->add_option("--out", out_path, "report path (default stdout)");
        sub->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
    }

    auto* sweep = app.add_subcommand("sweep", "grid over (kappa, tau)");
    sweep->add_option("--config", config_path, "key=value or JSON config")->required();
    sweep->add_option("--seed", seed, "override the config seed");
    sweep->add_option("--out", out_path, "output path (default stdout)");
    sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    auto lattice = [&]() -> AffineLattice {
        if (!lattice_text.empty() && !lattice_file.empty())
            throw InputError("lattice", "give --lattice or --lattice-file, not both");
        if (!lattice_file.empty()) return parse_lattice(read_file(lattice_file, "lattice-file"), "lattice-file");
        if (!lattice_text.empty()) return parse_lattice(lattice_text);
        return AffineLattice::standard();
    };

    try {
        if (*constants) {
            const AffineLattice l = lattice();
            std::optional<int> bound;
            if (exhaustive > 0) bound = exhaustive;
            const LatticeConstants c = lattice_constants(l, bound);
            nlohmann::json j;
            j["schema"] = kReportSchema;
            j["command"] = "constants";
            j["lattice"] = to_json(l);
            j["constants"] = to_json(c);
            j["consistent"] = c.d_min >= std::sqrt(c.lambda1) * (1.0 - 1e-12);
            detail::emit(j.dump(2) + "\n", out_path, out);
            return kPass;
        }

        if (*schinzel) {
            if (circle_n < 1) throw InputError("n", "must be >= 1");
            const std::vector<BoundReport> reports{verify_schinzel(circle_n)};
            detail::emit(detail::reports_json("verify schinzel", reports).dump(2) + "\n", out_path, out);
            return detail::exit_for(reports);
        }

        if (*on_helix || *near_helix) {
            const AffineLattice l = lattice();
            const Helix h = [&] {
                try {
                    return helix_from_curvature_torsion(kappa, tau);
                } catch (const DomainError& e) {
                    throw InputError("kappa/tau", e.what());
                }
            }();
            const Window w = window_text.empty() ? Window{} : parse_window(window_text);
            const LatticeConstants c = lattice_constants(l);
            EnumerationConfig ecfg;
            ecfg.candidate_budget = budget;

            std::vector<BoundReport> reports;
            std::string command;
            double delta = 0.0;
            if (*near_helix) {
                command = "verify near-helix";
                delta = parse_delta_policy(delta_text, "delta", true).resolve(delta_admissible_max(h, c));
                reports.push_back(verify_near_helix({h, l, delta, w.t_min, w.t_max}, c, ecfg));
            } else {
                command = "verify on-helix";
                const TubeQuery q{h, l, 0.0, w.t_min, w.t_max};
                reports.push_back(verify_on_helix(q, c, ecfg));
                reports.push_back(verify_corollary(q, c, ecfg));
            }
            if (!svg_path.empty()) {
                const auto pts = enumerate_tube({h, l, delta, w.t_min, w.t_max}, ecfg);
                detail::emit(tube_svg(h, w.t_min, w.t_max, pts), svg_path, out);
            }
            detail::emit(detail::reports_json(command, reports).dump(2) + "\n", out_path, out);
            return detail::exit_for(reports);
        }

        if (*sweep) {
            SweepConfig cfg = parse_sweep_config(read_file(config_path, "config"));
            if (seed) cfg.seed = *seed;
            const auto rows = run_sweep(cfg);
            const std::string text = format == "csv" ? sweep_csv(rows) : sweep_json(cfg, rows).dump(2) + "\n";
            detail::emit(text, out_path, out);
            for (const auto& r : rows)
                if (!row_passed(r)) return kAssertionFailure;
            return kPass;
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kResourceError;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace helix_lattice::cli
