#include "extremal/cli.hpp"

#include "extremal/errors.hpp"
#include "extremal/io.hpp"
#include "extremal/oracle.hpp"
#include "extremal/parallel.hpp"
#include "extremal/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

namespace extremal {

namespace {

struct CommandInfo {
    const char* name;
    Command command;
    const char* help;
};

constexpr CommandInfo kCommands[] = {
    {"generate", Command::Generate, "Write a construction's point file"},
    {"filtration", Command::Filtration, "Write the alpha filtration"},
    {"betti", Command::Betti, "Betti numbers at --radius"},
    {"persistence", Command::Persistence, "Write the persistence diagram"},
    {"oracle", Command::Oracle, "Compare the mosaic and Betti numbers with brute-force oracles"},
    {"verify", Command::Verify, "Check a family of claims and print a report"},
    {"radii", Command::Radii, "Print class radius ranges and thresholds"},
};

std::optional<double> parse_delta(const std::string& text) {
    if (text == "auto") return std::nullopt;
    return parse_double(text);
}

Tolerance default_tol() { return {}; }

// Sends data either to the -o file or to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& fn) {
    if (cfg.output.empty()) {
        fn(out);
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open '" + cfg.output + "' for writing");
    fn(f);
    if (!f) throw Error("failed writing '" + cfg.output + "'");
}

PointSet load_points(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open '" + path + "'");
    return read_points(f);
}

Pipeline alpha_pipeline(const RunConfig& cfg, Kind kind) {
    PipelineOptions opt;
    opt.tol = default_tol();
    opt.reduced = !cfg.unreduced;
    if (!cfg.input.empty()) {
        Pipeline pl;
        pl.ps = load_points(cfg.input);
        if (pl.ps.kind == Kind::Suspended)
            throw InvalidArgument("suspended point files have no alpha filtration; use betti");
        pl.fc = build_filtration(pl.ps, {opt.tol, true});
        pl.thresholds = pick_thresholds(pl.fc);
        pl.pd = reduce(pl.fc, opt.reduced);
        return pl;
    }
    opt.delta = parse_delta(cfg.delta);
    return run_pipeline(kind, cfg.k, cfg.n, opt);
}

PointSet suspended_points(const RunConfig& cfg) {
    if (!cfg.input.empty()) return load_points(cfg.input);
    SuspensionOptions so;
    so.oracle.budget = cfg.budget;
    if (cfg.h != "auto") so.h = parse_double(cfg.h);
    if (cfg.delta != "auto") {
        if (!so.h) throw InvalidArgument("--h auto needs --delta auto");
        return build_suspended(cfg.k, cfg.n, parse_double(cfg.delta), *so.h);
    }
    if (so.h) {
        PipelineOptions po;
        const auto base = run_pipeline(Kind::Odd, cfg.k - 1, cfg.n, po);
        return build_suspended(cfg.k, cfg.n, base.ps.delta, *so.h);
    }
    return run_suspension(cfg.k, cfg.n, so).ps;
}

Kind effective_kind(const RunConfig& cfg) {
    if (!cfg.input.empty()) {
        std::ifstream f(cfg.input, std::ios::binary);
        if (!f) throw InvalidArgument("cannot open '" + cfg.input + "'");
        return read_points(f).kind;
    }
    return parse_kind(cfg.kind);
}

void print_vector(std::ostream& out, const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
}

int report(const RunConfig& cfg, std::ostream& out, const std::vector<ClaimResult>& claims) {
    write_report_text(out, claims);
    if (!cfg.output.empty()) emit(cfg, out, [&](std::ostream& f) { write_report_csv(f, claims); });
    return any_failed(claims) ? kExitClaimFailed : kExitOk;
}

int run_generate(const RunConfig& cfg, std::ostream& out) {
    const Kind kind = parse_kind(cfg.kind);
    PointSet ps;
    if (kind == Kind::Suspended) ps = suspended_points(cfg);
    else if (kind == Kind::Even) ps = build_even(cfg.k, cfg.n);
    else if (cfg.delta == "auto") ps = alpha_pipeline(cfg, kind).ps;
    else if (kind == Kind::ThreeD) ps = build_3d(cfg.n, parse_double(cfg.delta));
    else ps = build_odd(cfg.k, cfg.n, parse_double(cfg.delta));
    emit(cfg, out, [&](std::ostream& f) { write_points(f, ps); });
    return kExitOk;
}

FilteredComplex cech_full(const RunConfig& cfg, const PointSet& ps) {
    OracleOptions oo;
    oo.budget = cfg.budget;
    const double r = cfg.radius ? *cfg.radius : kInfinity;
    return cech(ps, r, ps.dim, oo).filtration();
}

int run_betti(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.radius) throw InvalidArgument("betti needs --radius");
    const Kind kind = effective_kind(cfg);
    std::vector<int> betti;
    if (kind == Kind::Suspended) {
        const auto ps = suspended_points(cfg);
        OracleOptions oo;
        oo.budget = cfg.budget;
        betti = cech_betti(ps, *cfg.radius, ps.dim, !cfg.unreduced, oo);
    } else {
        const auto pl = alpha_pipeline(cfg, kind);
        betti = betti_of_subcomplex(pl.fc, pl.pd, *cfg.radius, default_tol());
    }
    if (cfg.p) {
        if (*cfg.p < 0) throw InvalidArgument("--p must be nonnegative");
        out << (*cfg.p < static_cast<int>(betti.size()) ? betti[*cfg.p] : 0) << '\n';
    } else {
        print_vector(out, betti);
    }
    return kExitOk;
}

int run_filtration(const RunConfig& cfg, std::ostream& out) {
    const Kind kind = effective_kind(cfg);
    if (kind == Kind::Suspended) {
        const auto fc = cech_full(cfg, suspended_points(cfg));
        emit(cfg, out, [&](std::ostream& f) { write_filtration(f, fc); });
    } else {
        const auto pl = alpha_pipeline(cfg, kind);
        emit(cfg, out, [&](std::ostream& f) { write_filtration(f, pl.fc); });
    }
    return kExitOk;
}

int run_persistence(const RunConfig& cfg, std::ostream& out) {
    const Kind kind = effective_kind(cfg);
    PersistenceDiagram pd;
    if (kind == Kind::Suspended) {
        pd = reduce(cech_full(cfg, suspended_points(cfg)), !cfg.unreduced);
    } else {
        pd = alpha_pipeline(cfg, kind).pd;
    }
    emit(cfg, out, [&](std::ostream& f) { write_diagram(f, pd); });
    if (!cfg.svg.empty()) {
        std::ofstream f(cfg.svg, std::ios::binary);
        if (!f) throw InvalidArgument("cannot open '" + cfg.svg + "' for writing");
        write_diagram_svg(f, pd);
    }
    return kExitOk;
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
    const Kind kind = effective_kind(cfg);
    OracleOptions oo;
    oo.budget = cfg.budget;
    if (kind == Kind::Suspended) {
        if (!cfg.radius) throw InvalidArgument("oracle on suspended sets needs --radius");
        const auto ps = suspended_points(cfg);
        out << "cech betti at r=" << format_double(*cfg.radius) << ": ";
        print_vector(out, cech_betti(ps, *cfg.radius, ps.dim, !cfg.unreduced, oo));
        return kExitOk;
    }
    const auto pl = alpha_pipeline(cfg, kind);
    return report(cfg, out, verify_oracle(pl, pl.ps.dim, oo));
}

int run_radii(const RunConfig& cfg, std::ostream& out) {
    const Kind kind = effective_kind(cfg);
    if (kind == Kind::Suspended) throw InvalidArgument("radii needs an even, 3d or odd set");
    const auto pl = alpha_pipeline(cfg, kind);
    out << "# kind=" << to_string(pl.ps.kind) << " k=" << pl.ps.k << " n=" << pl.ps.n
        << " delta=" << format_double(pl.ps.delta) << '\n';
    out << "class,count,min,max\n";
    for (const auto& r : class_ranges(pl.fc))
        out << to_string(r.cls) << ',' << r.count << ',' << format_double(r.min_value) << ','
            << format_double(r.max_value) << '\n';
    out << "below,above,rho,gap\n";
    for (const auto& t : pl.thresholds)
        out << to_string(t.below) << ',' << to_string(t.above) << ',' << format_double(t.rho)
            << ',' << format_double(t.gap) << '\n';
    for (const auto& r : pl.rejected) out << "# rejected " << r << '\n';
    return kExitOk;
}

std::vector<ClaimResult> construction_claims(const Pipeline& pl, const OracleOptions& oo,
                                             bool with_oracle) {
    std::vector<ClaimResult> all;
    auto add = [&](std::vector<ClaimResult> v) {
        all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    add(verify_census(pl));
    add(verify_ordering(pl));
    add(verify_criticality(pl));
    add(verify_upper_bound_sanity(pl));
    add(verify_homology_self_checks(pl));
    if (with_oracle) add(verify_oracle(pl, pl.ps.dim, oo));
    return all;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    static const std::map<std::string, std::string> aliases = {
        {"3.1", "3d"}, {"2.1", "even"}, {"4.1", "odd"}, {"4.5", "suspension"}};
    std::string theorem = cfg.theorem.empty() ? "construction" : cfg.theorem;
    if (auto it = aliases.find(theorem); it != aliases.end()) theorem = it->second;
    PipelineOptions po;
    po.delta = parse_delta(cfg.delta);
    po.reduced = !cfg.unreduced;
    OracleOptions oo;
    oo.budget = cfg.budget;
    const int ns[] = {cfg.n};
    std::vector<ClaimResult> claims;
    auto add = [&](std::vector<ClaimResult> v) {
        claims.insert(claims.end(), std::make_move_iterator(v.begin()),
                      std::make_move_iterator(v.end()));
    };
    if (theorem == "3d") {
        add(verify_three_d_betti(cfg.n, po, cfg.n <= 5));
        add(verify_three_d_census(cfg.n, po));
    } else if (theorem == "even") {
        add(verify_even_betti(cfg.k, ns));
        if (cfg.k == 2) add(verify_even_anchor(cfg.n));
    } else if (theorem == "odd") {
        add(verify_odd_betti(cfg.k, ns, po));
        if (cfg.k == 1) add(verify_odd_matches_three_d(cfg.n));
    } else if (theorem == "suspension") {
        SuspensionOptions so;
        so.oracle = oo;
        if (cfg.h != "auto" && cfg.h != "0.5") so.h = parse_double(cfg.h);
        add(verify_suspension(cfg.k, ns, so));
    } else if (theorem == "radii") {
        if (parse_kind(cfg.kind) == Kind::ThreeD) add(verify_three_d_radius_bounds(cfg.n));
        else add(verify_radius_formulas(cfg.k, cfg.n));
    } else if (theorem == "hypotheses") {
        add(verify_hypotheses(parse_kind(cfg.kind) == Kind::ThreeD ? 1 : cfg.k, cfg.n));
    } else if (theorem == "construction") {
        const Kind kind = effective_kind(cfg);
        if (kind == Kind::Suspended)
            throw InvalidArgument("verify on suspended sets: use --theorem suspension");
        add(construction_claims(alpha_pipeline(cfg, kind), oo, cfg.n <= 3));
    } else {
        throw InvalidArgument("unknown --theorem '" + cfg.theorem +
                              "' (3d, even, odd, suspension, radii, hypotheses, construction)");
    }
    return report(cfg, out, claims);
}

} // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
    CLI::App app{"Extremal Cech and Alpha complexes: constructions, filtrations, Betti numbers"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    std::string radius, p;
    for (const auto& info : kCommands) {
        auto* sub = app.add_subcommand(info.name, info.help);
        sub->callback([&cfg, c = info.command] { cfg.command = c; });
    }
    app.add_option("--kind", cfg.kind, "even, 3d, odd or suspended")
        ->check(CLI::IsMember({"even", "3d", "odd", "suspended"}));
    app.add_option("--k", cfg.k, "construction parameter k");
    app.add_option("--n", cfg.n, "points per circle parameter n");
    app.add_option("--delta", cfg.delta, "'auto' (halving controller) or a value");
    app.add_option("--h", cfg.h, "apex height of suspended sets, or 'auto'");
    app.add_option("--radius", radius, "evaluation radius");
    app.add_option("--p", p, "single homology dimension");
    app.add_option("-o,--output", cfg.output, "output file (default stdout)");
    app.add_option("-i,--input", cfg.input, "read points from a point file");
    app.add_option("--svg", cfg.svg, "also write the diagram as SVG");
    app.add_option("--theorem", cfg.theorem,
                   "claim family: 3d, even, odd, suspension, radii, hypotheses, construction");
    app.add_flag("--unreduced", cfg.unreduced, "unreduced beta_0");
    app.add_option("--budget", cfg.budget, "subset budget of the brute-force oracles");
    app.add_option("--threads", cfg.threads, "worker cap");
    try {
        app.parse(argc, argv);
        if (!radius.empty()) cfg.radius = parse_double(radius);
        if (!p.empty()) cfg.p = std::stoi(p);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        exit_code = kExitOk;
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        exit_code = kExitUsage;
        return std::nullopt;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        exit_code = kExitUsage;
        return std::nullopt;
    }
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.threads < 0) throw InvalidArgument("--threads must be positive");
        if (cfg.threads > 0) set_thread_limit(cfg.threads);
        switch (cfg.command) {
        case Command::Generate: return run_generate(cfg, out);
        case Command::Filtration: return run_filtration(cfg, out);
        case Command::Betti: return run_betti(cfg, out);
        case Command::Persistence: return run_persistence(cfg, out);
        case Command::Oracle: return run_oracle(cfg, out);
        case Command::Verify: return run_verify(cfg, out);
        case Command::Radii: return run_radii(cfg, out);
        }
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

int cli_main(int argc, const char* const* argv) {
    int code = kExitOk;
    auto cfg = parse_args(argc, argv, std::cout, std::cerr, code);
    if (!cfg) return code;
    return run(*cfg, std::cout, std::cerr);
}

} // namespace extremal
