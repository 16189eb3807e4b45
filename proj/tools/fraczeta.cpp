// fraczeta: command-line harness for the numerical identity checks.
//
// exit codes: 0 ok, 1 verification failure, 2 usage error, 3 io/format error

#include "CLI11.hpp"

#include "fraczeta/bernpoly.hpp"
#include "fraczeta/errors.hpp"
#include "fraczeta/fourier.hpp"
#include "fraczeta/report.hpp"
#include "fraczeta/selftest.hpp"
#include "fraczeta/table_cache.hpp"
#include "fraczeta/zeta.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace fraczeta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Globals {
    std::string zeros_file = FRACZETA_DEFAULT_ZEROS;
    std::string cache_dir;
    bool no_cache = false;

    RunContext context() const {
        RunContext ctx;
        ctx.zeros_file = zeros_file;
        if (!no_cache) ctx.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
        return ctx;
    }
};

struct VerifyArgs {
    std::string id;
    std::optional<double> x, k, n_terms, zeros, radius, tol, a, b;
    std::string function;
    std::string json_path, csv_path;
};

struct ExploreArgs {
    double x_min = 10.0, x_max = 100.0, n_terms = 1e7;
    std::size_t points = 20;
    std::string json_path;
};

void print_report(const IdentityReport& r) {
    std::printf("%-9s lhs % .17g  rhs % .17g  |diff| %.3g  budget %.3g  -> %s\n", r.identity_id.c_str(), r.lhs.value,
                r.rhs_canonical.value, r.abs_diff, r.budget, std::string(verdict_name(r.verdict)).c_str());
    if (r.rhs_printed) std::printf("          printed variant % .17g\n", *r.rhs_printed);
    if (!r.adjudication.empty()) std::printf("          %s\n", r.adjudication.c_str());
}

void write_reports(const std::vector<IdentityReport>& reports, const std::string& json, const std::string& csv) {
    if (!json.empty()) emit_report(reports, ReportFormat::json, json);
    if (!csv.empty()) emit_report(reports, ReportFormat::csv, csv);
}

int run_verify(const VerifyArgs& args, const Globals& g) {
    Params p;
    auto put = [&p](const char* key, const std::optional<double>& v) {
        if (v) p[key] = *v;
    };
    put("x", args.x);
    put("k", args.k);
    put("N", args.n_terms);
    put("zeros", args.zeros);
    put("radius", args.radius);
    put("tol", args.tol);
    put("a", args.a);
    put("b", args.b);
    if (!args.function.empty()) p["function"] = args.function;

    const std::vector<IdentityReport> reports{run_identity(args.id, p, g.context())};
    for (const auto& r : reports) print_report(r);
    write_reports(reports, args.json_path, args.csv_path);
    return report_exit_code(reports) == 0 ? kExitOk : kExitFail;
}

int run_explore(const ExploreArgs& args, const Globals& g) {
    if (args.n_terms < 1 || args.n_terms > 1e8) throw UsageError("--nterms out of range");
    const auto n = static_cast<std::uint64_t>(args.n_terms);
    const auto ctx = g.context();
    const auto table = ctx.cache_dir ? cached_table(n, *ctx.cache_dir) : build_sieve(n);
    const auto ex = rh_explore(table, args.x_min, args.x_max, args.points, n);
    std::printf("%-22s %-24s %s\n", "x", "sum", "noise floor");
    for (const auto& s : ex.samples) std::printf("%-22.17g % -24.17g %.3g\n", s.x, s.value, s.noise_floor);
    std::printf("slope %.6f  delta' %.6f  r^2 %.6f  dropped %zu\n", ex.fit.slope, ex.fit.delta_prime(),
                ex.fit.r_squared, ex.fit.dropped);

    const std::vector<IdentityReport> reports{rh_slope_report(ex, args.x_min, args.x_max, args.points, n)};
    std::printf("%s\n", reports.front().adjudication.c_str());
    if (!args.json_path.empty()) emit_report(reports, ReportFormat::json, args.json_path);
    return report_exit_code(reports) == 0 ? kExitOk : kExitFail;
}

int run_selftest(double n_terms, const Globals& g) {
    SelftestOptions opt;
    opt.n_max = static_cast<std::uint64_t>(n_terms);
    opt.zeros_file = g.zeros_file;
    const auto rep = run_invariants(opt);
    for (const auto& r : rep.results) {
        std::printf("%s  %-52s %6.2fs", r.passed ? "ok  " : "FAIL", r.name.c_str(), r.seconds);
        if (!r.passed) std::printf("  %s", r.detail.c_str());
        std::printf("\n");
    }
    if (!rep.ok()) {
        for (const auto& r : rep.results)
            if (!r.passed) std::fprintf(stderr, "fraczeta: invariant failed: %s: %s\n", r.name.c_str(), r.detail.c_str());
    }
    return rep.exit_code();
}

int run_refine(std::size_t count, const std::string& output, const Globals& g) {
    const auto table = refine_table(load_zero_table(g.zeros_file), count);
    const auto text = format_zero_table(table);
    if (output.empty() || output == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return kExitOk;
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) throw IoError("cannot write " + output);
    std::fprintf(stderr, "wrote %zu refined zeros to %s\n", table.entries.size(), output.c_str());
    return kExitOk;
}

int run_em_check() {
    bool ok = true;
    const struct {
        EmFunction f;
        double a, b;
        std::size_t k;
    } cases[] = {{EmFunction::square, 1, 5, 2}, {EmFunction::inverse_square, 1, 10, 3}, {EmFunction::exp_decay, 1, 4, 4}};
    for (const auto& c : cases) {
        const double r = em_identity_residual(c.f, c.a, c.b, c.k);
        const bool pass = r <= default_tolerance("em-check");
        ok = ok && pass;
        std::printf("%-15s a=%g b=%g k=%zu  residual %.3g  %s\n", std::string(em_function_id(c.f)).c_str(), c.a, c.b,
                    c.k, r, pass ? "pass" : "fail");
    }
    return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks of fractional-part series identities"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--zeros-file", g.zeros_file, "zeta zero seed table (CSV)");
    app.add_option("--cache-dir", g.cache_dir, "directory for cached sieve tables");
    app.add_flag("--no-cache", g.no_cache, "always rebuild sieve tables in memory");

    double selftest_n = 1e5;
    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
    selftest->add_option("--nterms", selftest_n, "sieve bound")->check(CLI::Range(1000.0, 1e7));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check one identity and report");
    verify->add_option("identity", va.id, "th1, th2-log, th2-mu, th4, em-check or rh-slope")->required();
    verify->add_option("--x", va.x, "evaluation point");
    verify->add_option("--k", va.k, "order k (th1, em-check)");
    verify->add_option("--nterms,-N", va.n_terms, "truncation N");
    verify->add_option("--zeros", va.zeros, "number of refined zeros (th1)");
    verify->add_option("--radius", va.radius, "contour radius (th1)");
    verify->add_option("--tol", va.tol, "tolerance override");
    verify->add_option("--a", va.a, "lower limit (em-check)");
    verify->add_option("--b", va.b, "upper limit (em-check)");
    verify->add_option("--function", va.function, "square, inverse_square or exp_decay (em-check)");
    verify->add_option("--json", va.json_path, "write JSON report");
    verify->add_option("--csv", va.csv_path, "write CSV report");

    ExploreArgs ea;
    auto* explore = app.add_subcommand("rh-explore", "decay slope of the mubar-weighted sum");
    explore->add_option("--xmin", ea.x_min);
    explore->add_option("--xmax", ea.x_max);
    explore->add_option("--points", ea.points);
    explore->add_option("--nterms,-N", ea.n_terms);
    explore->add_option("--json", ea.json_path, "write rh-slope JSON report");

    auto* zeros = app.add_subcommand("zeros", "zero table tools");
    zeros->require_subcommand(1);
    std::size_t refine_count = 0;
    std::string refine_output;
    auto* refine = zeros->add_subcommand("refine", "Newton-refine the seed ordinates");
    refine->add_option("--count", refine_count, "number of zeros (0: all)");
    refine->add_option("--output,-o", refine_output, "output CSV (default stdout)");

    auto* em = app.add_subcommand("em-check", "Euler-Maclaurin identity on the registered functions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*selftest) return run_selftest(selftest_n, g);
        if (*verify) return run_verify(va, g);
        if (*explore) return run_explore(ea, g);
        if (*refine) return run_refine(refine_count, refine_output, g);
        if (*em) return run_em_check();
    } catch (const IoError& e) {
        std::fprintf(stderr, "fraczeta: %s\n", e.what());
        return kExitIo;
    } catch (const FormatError& e) {
        std::fprintf(stderr, "fraczeta: %s\n", e.what());
        return kExitIo;
    } catch (const InsufficientDataError& e) {
        std::fprintf(stderr, "fraczeta: %s\n", e.what());
        return kExitFail;
    } catch (const RefinementError& e) {
        std::fprintf(stderr, "fraczeta: %s\n", e.what());
        return kExitFail;
    } catch (const Error& e) {
        // remaining library errors are precondition violations on user input
        std::fprintf(stderr, "fraczeta: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
