#pragma once

// Command-line front end. Exit status: 0 success, 1 domain error (one line
// `error: <reason>` on stderr), 2 usage error.

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lrc/bounds.hpp"
#include "lrc/characterize.hpp"
#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/io.hpp"
#include "lrc/repair.hpp"
#include "lrc/report.hpp"
#include "lrc/verifier.hpp"

namespace lrc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct Options {
    std::string format = "text";
    // construct
    std::string family;
    std::uint64_t q = 0;
    unsigned m = 1;
    std::size_t n = 0, r = 0;
    std::optional<std::size_t> k;
    std::string alphas_path, out_path, code_path;
    std::uint64_t seed = 0;
    // bounds
    std::optional<std::size_t> s, d;
    std::string estimator = "closed-form";
    // simulate
    std::uint64_t trials = 1000;
    // search
    std::size_t extra = 2, target_d = 4;
    std::uint64_t max_sequential = 20'000, max_random = 20'000;
};

inline void add_format(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
}

inline report::Json code_json(const LinearCode& code) {
    return {{"field", code.field().header()}, {"n", code.n()}, {"k", code.k()}, {"pcm", report::matrix_rows(code.pcm())}};
}

inline int run_construct(const Options& o, std::ostream& out) {
    ConstructionParams p;
    p.family = parse_family(o.family);
    p.q = o.q;
    p.m = o.m;
    p.n = o.n;
    p.r = o.r;
    p.k = o.k;
    p.seed = o.seed;
    if (!o.alphas_path.empty())
        p.alphas = io::read_file<AlphaAssignment>(o.alphas_path, [](std::istream& in) { return io::read_alphas(in); });
    const Construction c = construct(p);
    const VerifyReport v = verify(c.code, c.r);

    report::Json params = {{"family", o.family}, {"q", o.q}, {"m", o.m}, {"n", o.n}, {"r", o.r},
                           {"k", report::opt(o.k)}, {"alphas", o.alphas_path.empty() ? report::Json(nullptr) : report::Json(o.alphas_path)},
                           {"out", o.out_path.empty() ? report::Json(nullptr) : report::Json(o.out_path)}, {"seed", o.seed}};
    report::Json j = report::envelope("construct", std::move(params));
    report::fill(j, c);
    report::fill(j, v);
    if (!o.out_path.empty()) io::write_file(o.out_path, [&](std::ostream& f) { io::write_code(f, c.code); });

    if (o.format == "structured") {
        j["code"] = code_json(c.code);
        report::write(out, j, true);
    } else {
        if (o.out_path.empty()) {
            io::write_code(out, c.code);
            out << '\n';
        }
        report::write(out, j, false);
    }
    return kExitOk;
}

inline LinearCode load_code(const std::string& path) {
    return io::read_file<LinearCode>(path, [](std::istream& in) { return io::read_code(in); });
}

inline int run_verify(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o.code_path);
    const VerifyReport v = verify(code, o.r);
    report::Json j = report::envelope("verify", {{"code", o.code_path}, {"r", o.r}});
    j["field"] = code.field().header();
    report::fill(j, v);
    report::write(out, j, o.format == "structured");
    return kExitOk;
}

inline int run_bounds(const Options& o, std::ostream& out) {
    const Estimator mode = o.estimator == "exhaustive" ? Estimator::exhaustive : Estimator::closed_form;
    const BoundReport b = bound_report(o.n, *o.k, o.r, o.q, o.d, o.s, mode);
    report::Json j = report::envelope("bounds", {{"n", o.n}, {"k", *o.k}, {"r", o.r}, {"q", o.q}, {"s", report::opt(o.s)},
                                                 {"d", report::opt(o.d)}, {"estimator", o.estimator}});
    report::fill(j, b);
    report::write(out, j, o.format == "structured");
    return kExitOk;
}

inline int run_characterize(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o.code_path);
    const CharacterizedPcm cp = characterize(code, o.r);
    if (!o.out_path.empty()) io::write_file(o.out_path, [&](std::ostream& f) { io::write_characterized(f, cp); });
    report::Json j = report::envelope("characterize", {{"code", o.code_path}, {"r", o.r},
                                                       {"out", o.out_path.empty() ? report::Json(nullptr) : report::Json(o.out_path)}});
    j["field"] = code.field().header();
    j["n"] = code.n();
    j["k"] = code.k();
    report::fill(j, cp, code.n(), code.k(), o.r);
    report::write(out, j, o.format == "structured");
    return kExitOk;
}

inline int run_simulate(const Options& o, std::ostream& out) {
    const LinearCode code = load_code(o.code_path);
    const LocalityProfile prof = locality_profile(code);
    if (!prof.all_repairable) throw Error("some coordinate has no locality witness; single-erasure repair impossible");
    const SimulationMetrics m = simulate(code, prof, o.trials, o.seed);
    report::Json j = report::envelope("simulate", {{"code", o.code_path}, {"trials", o.trials}, {"seed", o.seed}});
    j["n"] = code.n();
    j["k"] = code.k();
    j["locality"] = prof.all_symbol;
    report::fill(j, m);
    report::write(out, j, o.format == "structured");
    return kExitOk;
}

inline int run_search(const Options& o, std::ostream& out) {
    SearchOptions so;
    so.seed = o.seed;
    so.max_sequential = o.max_sequential;
    so.max_random = o.max_random;
    const SearchResult s = search_alphas(o.q, o.n, o.r, o.extra, o.target_d, so);
    if (s.alphas && !o.out_path.empty()) io::write_file(o.out_path, [&](std::ostream& f) { io::write_alphas(f, *s.alphas); });
    report::Json j = report::envelope(
        "search", {{"q", o.q}, {"n", o.n}, {"r", o.r}, {"extra", o.extra}, {"target_d", o.target_d}, {"seed", o.seed},
                   {"max_sequential", o.max_sequential}, {"max_random", o.max_random},
                   {"out", o.out_path.empty() ? report::Json(nullptr) : report::Json(o.out_path)}});
    report::fill(j, s);
    report::write(out, j, o.format == "structured");
    return kExitOk;
}

}  // namespace detail

/// `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Locally repairable codes from parity-check matrices", "lrc"};
    app.set_version_flag("--version", report::kVersion);
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build a code from one of the construction families");
    construct->add_option("--family", o.family, "linearized | vdm_d4 | vdm_d5 | d3_variant | r2_d5_variant")->required();
    construct->add_option("--q", o.q, "base field size")->required();
    construct->add_option("--m", o.m, "extension degree (linearized only)")->capture_default_str();
    construct->add_option("--n", o.n, "code length")->required();
    construct->add_option("--r", o.r, "locality")->required();
    construct->add_option("--k", o.k, "dimension (linearized only; derived otherwise)");
    construct->add_option("--alphas", o.alphas_path, "alpha grid file");
    construct->add_option("--out", o.out_path, "write the code here");
    construct->add_option("--seed", o.seed, "seed for sampled hypothesis checks")->capture_default_str();
    detail::add_format(construct, o);

    auto* verify_cmd = app.add_subcommand("verify", "audit a code file against the Singleton-like bound");
    verify_cmd->add_option("--code", o.code_path, "code file")->required();
    verify_cmd->add_option("--r", o.r, "claimed locality")->required();
    detail::add_format(verify_cmd, o);

    auto* bounds = app.add_subcommand("bounds", "evaluate distance and dimension bounds");
    bounds->add_option("--n", o.n)->required();
    bounds->add_option("--k", o.k)->required();
    bounds->add_option("--r", o.r)->required();
    bounds->add_option("--q", o.q)->required();
    bounds->add_option("--s", o.s, "availability");
    bounds->add_option("--d", o.d, "target distance for the dimension bound");
    bounds->add_option("--estimator", o.estimator, "closed-form or exhaustive")
        ->check(CLI::IsMember({"closed-form", "exhaustive"}))
        ->capture_default_str();
    detail::add_format(bounds, o);

    auto* characterize_cmd = app.add_subcommand("characterize", "split a parity-check matrix into H1 and H2");
    characterize_cmd->add_option("--code", o.code_path, "code file")->required();
    characterize_cmd->add_option("--r", o.r, "locality")->required();
    characterize_cmd->add_option("--out", o.out_path, "write H1/H2 here");
    detail::add_format(characterize_cmd, o);

    auto* simulate_cmd = app.add_subcommand("simulate", "single-erasure repair trials");
    simulate_cmd->add_option("--code", o.code_path, "code file")->required();
    simulate_cmd->add_option("--trials", o.trials)->capture_default_str();
    simulate_cmd->add_option("--seed", o.seed)->capture_default_str();
    detail::add_format(simulate_cmd, o);

    auto* search = app.add_subcommand("search", "search alpha grids for the Vandermonde-style families");
    search->add_option("--q", o.q)->required();
    search->add_option("--n", o.n)->required();
    search->add_option("--r", o.r)->required();
    search->add_option("--extra", o.extra, "number of power rows")->capture_default_str();
    search->add_option("--target-d", o.target_d)->capture_default_str();
    search->add_option("--seed", o.seed)->capture_default_str();
    search->add_option("--max-sequential", o.max_sequential)->capture_default_str();
    search->add_option("--max-random", o.max_random)->capture_default_str();
    search->add_option("--out", o.out_path, "write the alpha grid here");
    detail::add_format(search, o);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*construct) return detail::run_construct(o, out);
        if (*verify_cmd) return detail::run_verify(o, out);
        if (*bounds) return detail::run_bounds(o, out);
        if (*characterize_cmd) return detail::run_characterize(o, out);
        if (*simulate_cmd) return detail::run_simulate(o, out);
        if (*search) return detail::run_search(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace lrc::cli
