#include "fraczeta/report.hpp"

#include "fraczeta/bernpoly.hpp"
#include "fraczeta/errors.hpp"
#include "fraczeta/explicit_formula.hpp"
#include "fraczeta/fourier.hpp"
#include "fraczeta/table_cache.hpp"
#include "fraczeta/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

namespace fraczeta {

namespace {

constexpr std::array<std::string_view, 6> kIds = {"th1", "th2-log", "th2-mu", "th4", "em-check", "rh-slope"};

// Slope band accepted by the decay explorer.
constexpr double kSlopeLow = -1.45;
constexpr double kSlopeHigh = -0.55;

std::string fmt_num(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

class ParamReader {
public:
    ParamReader(std::string_view id, const Params& p, std::set<std::string> allowed) : params_(p) {
        for (const auto& [key, value] : p)
            if (!allowed.contains(key))
                throw UsageError("identity '" + std::string(id) + "' does not take parameter '" + key + "'");
    }

    double number(const std::string& key, double fallback) const {
        const auto it = params_.find(key);
        if (it == params_.end()) return fallback;
        if (const auto* d = std::get_if<double>(&it->second)) return *d;
        throw UsageError("parameter '" + key + "' must be numeric");
    }

    std::string text(const std::string& key, const std::string& fallback) const {
        const auto it = params_.find(key);
        if (it == params_.end()) return fallback;
        if (const auto* s = std::get_if<std::string>(&it->second)) return *s;
        throw UsageError("parameter '" + key + "' must be a string");
    }

    std::uint64_t count(const std::string& key, double fallback) const {
        const double v = number(key, fallback);
        if (!(v >= 0.0) || v != std::floor(v) || v > 1e12) throw UsageError("parameter '" + key + "' must be a natural");
        return static_cast<std::uint64_t>(v);
    }

private:
    const Params& params_;
};

ArithmeticTable table_for(std::uint64_t n_max, const RunContext& ctx) {
    if (ctx.cache_dir) return cached_table(n_max, *ctx.cache_dir, ctx.memory_budget);
    return build_sieve(n_max, ctx.memory_budget);
}

void finish(IdentityReport& r) {
    r.abs_diff = std::fabs(r.lhs.value - r.rhs_canonical.value);
    r.verdict = decide_verdict(r.abs_diff, r.budget, r.tolerance, r.rhs_canonical.value);
}

std::string constant_adjudication(const IdentityReport& r) {
    const double limit = std::max(r.budget, r.tolerance);
    const double printed_diff = std::fabs(r.lhs.value - *r.rhs_printed);
    const bool canonical_ok = r.abs_diff <= limit;
    const bool printed_ok = printed_diff <= limit;
    if (canonical_ok && printed_ok) return "constants indistinguishable at this x (both within budget)";
    if (canonical_ok) return "constant 1/(2π²) matches; printed constant 1/π² misses by " + fmt_short(printed_diff);
    if (printed_ok) return "printed constant 1/π² matches; 1/(2π²) misses by " + fmt_short(r.abs_diff);
    return "neither constant matches within budget";
}

IdentityReport run_th1(const Params& p, const RunContext& ctx) {
    ParamReader in("th1", p, {"k", "x", "N", "zeros", "radius", "tol"});
    const int k = static_cast<int>(in.count("k", 1));
    const double x = in.number("x", k == 1 ? 10.5 : 5.5);
    const std::uint64_t n = in.count("N", 1e6);
    const std::size_t zero_count = in.count("zeros", 100);
    const double radius = in.number("radius", 0.25);

    IdentityReport r;
    r.identity_id = "th1";
    r.params = {{"k", double(k)}, {"x", x}, {"N", double(n)}, {"zeros", double(zero_count)}, {"radius", radius}};
    r.tolerance = in.number("tol", default_tolerance("th1", k));

    const auto zeros = refine_table(load_zero_table(ctx.zeros_file), zero_count);
    const auto table = table_for(n, ctx);
    r.lhs = lhs_theorem1(table, k, x, n);

    const auto rhs = rhs_theorem1(k, x, zeros, radius, kZeroSumSign);
    const auto flipped = rhs_theorem1(k, x, zeros, radius, -kZeroSumSign);
    r.rhs_canonical = {rhs.total, rhs.budget};
    r.budget = rhs.budget + r.lhs.tail_bound;

    const double main_residue = rhs.residues.front().value;
    std::string adj;
    const double diff_sign = std::fabs(r.lhs.value - rhs.total);
    const double diff_flip = std::fabs(r.lhs.value - flipped.total);
    adj += "zero-sum sign: sigma=" + std::string(diff_sign <= diff_flip ? "-1" : "+1") + " wins (|diff| " +
           fmt_short(diff_sign) + " vs " + fmt_short(diff_flip) + " for sigma=+1";
    adj += std::fabs(rhs.zero_sum.value) > 10.0 * r.budget ? ", decisive)" : ", |zero_sum| <= 10x budget)";

    if (k <= 2) {
        const double printed = printed_Pk(k, x);
        const double q_part = rhs.total - main_residue;
        const double diff_printed = std::fabs(r.lhs.value - (q_part + printed));
        // the printed variant: printed main term with the printed signs on both zero sums
        r.rhs_printed = printed + (flipped.total - flipped.residues.front().value);
        const double gap = std::fabs(main_residue - printed);
        if (gap <= 1e-9) {
            adj += "; main term: residue at s=1 reproduces printed P_" + std::to_string(k) + " (|residue - P| " +
                   fmt_short(gap) + ")";
        } else {
            adj += "; main term: " +
                   std::string(diff_printed < diff_sign ? "printed P_k matches better"
                                                        : "simple-pole residue H_k(0)/(k x^k) matches") +
                   " (residue " + fmt_short(main_residue) + ", printed P_" + std::to_string(k) + " " +
                   fmt_short(printed) + ", |diff| with printed " + fmt_short(diff_printed) + ")";
        }
    }
    if (k == 1) {
        adj += "; Q_1 absent (no residues beyond s=1)";
    } else {
        adj += "; Q_k residues:";
        for (std::size_t i = 1; i < rhs.residues.size(); ++i)
            adj += " s0=" + fmt_short(rhs.residues[i].s0) + ":" + fmt_short(rhs.residues[i].value);
        adj += " (c_i = 0 where the residue vanishes)";
    }
    adj += "; trivial zeros summed with x^(-2j-1-k) (printed x^(2j-1-k) diverges for x>1)";
    adj += "; zeros assumed simple";
    if (rhs.zero_sum.note.find("within 10x of tail") != std::string::npos) adj += "; |zero_sum| within 10x of its tail bound";
    r.adjudication = adj;
    finish(r);
    return r;
}

IdentityReport run_th2_log(const Params& p, const RunContext& ctx) {
    ParamReader in("th2-log", p, {"x", "N", "tol"});
    const double x = in.number("x", 3.7);
    const std::uint64_t n = in.count("N", 1e6);
    IdentityReport r;
    r.identity_id = "th2-log";
    r.params = {{"x", x}, {"N", double(n)}};
    r.tolerance = in.number("tol", default_tolerance("th2-log"));
    const auto table = table_for(n, ctx);
    r.lhs = lhs_weighted_sdot(table, Weight::lambda, 2.0, x, n);
    const auto rhs = rhs_th2_log(x, n);
    r.rhs_canonical = {rhs.value, rhs.tail_bound};
    r.rhs_printed = kPrintedConstantRatio * rhs.value;
    r.budget = r.lhs.tail_bound + rhs.tail_bound;
    finish(r);
    r.adjudication = constant_adjudication(r);
    return r;
}

IdentityReport run_th2_mu(const Params& p, const RunContext& ctx) {
    ParamReader in("th2-mu", p, {"x", "N", "tol"});
    const double x = in.number("x", 2.0);
    const std::uint64_t n = in.count("N", 1e6);
    IdentityReport r;
    r.identity_id = "th2-mu";
    r.params = {{"x", x}, {"N", double(n)}};
    r.tolerance = in.number("tol", default_tolerance("th2-mu"));
    const auto table = table_for(n, ctx);
    r.lhs = lhs_weighted_sdot(table, Weight::mu, 2.0, x, n);
    r.rhs_canonical = {rhs_th2_mu(x), 0.0};
    r.rhs_printed = kPrintedConstantRatio * r.rhs_canonical.value;
    r.budget = r.lhs.tail_bound;
    finish(r);
    r.adjudication = constant_adjudication(r);
    return r;
}

IdentityReport run_th4(const Params& p, const RunContext& ctx) {
    ParamReader in("th4", p, {"x", "N", "tol"});
    const double x = in.number("x", 4.6);
    const std::uint64_t n = in.count("N", 1e6);
    IdentityReport r;
    r.identity_id = "th4";
    r.params = {{"x", x}, {"N", double(n)}};
    r.tolerance = in.number("tol", default_tolerance("th4"));
    const auto table = table_for(n, ctx);
    r.lhs = lhs_weighted_sdot(table, Weight::mu, 1.5, x, n);
    const auto rhs = rhs_th4_upsilon(table, x, n);
    r.rhs_canonical = {rhs.value, rhs.tail_bound};
    r.rhs_printed = kPrintedConstantRatio * rhs.value;
    r.budget = r.lhs.tail_bound + rhs.tail_bound;
    finish(r);
    r.adjudication = constant_adjudication(r) + "; both sides absolutely convergent, checked without assuming RH";
    return r;
}

IdentityReport run_em(const Params& p, const RunContext&) {
    ParamReader in("em-check", p, {"function", "a", "b", "k", "tol"});
    const auto f = parse_em_function(in.text("function", "inverse_square"));
    const std::array<std::array<double, 3>, 3> defaults = {{{1, 5, 2}, {1, 10, 3}, {1, 4, 4}}};
    const auto& d = defaults[static_cast<std::size_t>(f)];
    const double a = in.number("a", d[0]);
    const double b = in.number("b", d[1]);
    const auto k = static_cast<std::size_t>(in.count("k", d[2]));
    IdentityReport r;
    r.identity_id = "em-check";
    r.params = {{"function", std::string(em_function_id(f))}, {"a", a}, {"b", b}, {"k", double(k)}};
    r.tolerance = in.number("tol", default_tolerance("em-check"));
    const auto sides = em_identity_sides(f, a, b, k);
    r.lhs.value = sides.integral_side;
    r.lhs.note = "adaptive per-period Gauss-Kronrod";
    r.rhs_canonical = {sides.boundary_side, 0.0};
    r.budget = 0.0;
    r.abs_diff = std::fabs(sides.integral_side - sides.boundary_side);
    r.verdict = r.abs_diff <= r.tolerance ? Verdict::pass : Verdict::fail;
    r.adjudication = "classical Euler-Maclaurin identity";
    return r;
}

IdentityReport run_rh_slope(const Params& p, const RunContext& ctx) {
    ParamReader in("rh-slope", p, {"xmin", "xmax", "points", "N"});
    const double x_min = in.number("xmin", 10.0);
    const double x_max = in.number("xmax", 100.0);
    const std::size_t points = in.count("points", 20);
    const std::uint64_t n = in.count("N", 1e7);
    const auto table = table_for(n, ctx);
    return rh_slope_report(rh_explore(table, x_min, x_max, points, n), x_min, x_max, points, n);
}

}  // namespace

IdentityReport rh_slope_report(const RhExploration& ex, double x_min, double x_max, std::size_t points,
                               std::uint64_t n) {
    IdentityReport r;
    r.identity_id = "rh-slope";
    r.params = {{"xmin", x_min}, {"xmax", x_max}, {"points", double(points)}, {"N", double(n)}};
    r.lhs.value = ex.fit.slope;
    r.lhs.terms_used = static_cast<std::size_t>(n);
    r.lhs.tail_bound = ex.samples.front().noise_floor;
    r.lhs.note = "least-squares slope of log|sum| vs log x";
    r.rhs_canonical = {-1.0, 0.5 * (kSlopeHigh - kSlopeLow)};
    r.abs_diff = std::fabs(ex.fit.slope + 1.0);
    r.budget = r.rhs_canonical.budget;
    const bool in_band = ex.fit.slope >= kSlopeLow && ex.fit.slope <= kSlopeHigh;
    r.verdict = in_band ? Verdict::inconclusive : Verdict::fail;
    // pole of zeta at s = 1 in the Mellin integrand: x^-2 / (2 zeta(0) zeta(-1/2))
    const double pole_coeff = 1.0 / (2.0 * zeta_em(0.0).real() * zeta_em(-0.5).real());
    const double pole_share = pole_coeff / (x_max * x_max) / std::fabs(ex.samples.back().value);
    r.adjudication = "diagnostic only; delta' = " + fmt_short(ex.fit.delta_prime()) + ", r^2 = " +
                     fmt_short(ex.fit.r_squared) + ", dropped " + std::to_string(ex.fit.dropped) + "/" +
                     std::to_string(points) + "; slope " + (in_band ? "inside" : "outside") + " [-1.45, -0.55]" +
                     "; x^-2 pole term " + fmt_short(pole_coeff) + "/x^2 is " + fmt_short(pole_share) +
                     " of |sum| at xmax";
    return r;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict decide_verdict(double abs_diff, double budget, double tolerance, double rhs) {
    if (!(abs_diff <= std::max(budget, tolerance))) return Verdict::fail;
    if (abs_diff > tolerance && std::fabs(rhs) <= 3.0 * budget) return Verdict::inconclusive;
    return Verdict::pass;
}

std::span<const std::string_view> identity_ids() { return kIds; }

double default_tolerance(std::string_view id, int k) {
    if (id == "th1") return k == 1 ? 1e-3 : 1e-6;
    if (id == "th2-log") return 1e-7;
    if (id == "th2-mu") return 5e-7;
    if (id == "th4") return 1e-12;
    if (id == "em-check") return 1e-10;
    if (id == "rh-slope") return 0.0;
    throw UsageError("unknown identity '" + std::string(id) + "'");
}

IdentityReport run_identity(std::string_view id, const Params& params, const RunContext& ctx) {
    if (id == "th1") return run_th1(params, ctx);
    if (id == "th2-log") return run_th2_log(params, ctx);
    if (id == "th2-mu") return run_th2_mu(params, ctx);
    if (id == "th4") return run_th4(params, ctx);
    if (id == "em-check") return run_em(params, ctx);
    if (id == "rh-slope") return run_rh_slope(params, ctx);
    throw UsageError("unknown identity '" + std::string(id) + "'");
}

std::string reports_to_json(std::span<const IdentityReport> reports) {
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        out += i ? ",\n  {" : "\n  {";
        out += "\"identity_id\":\"" + json_escape(r.identity_id) + "\",\"params\":{";
        bool first = true;
        for (const auto& [key, value] : r.params) {
            if (!first) out += ",";
            first = false;
            out += "\"" + json_escape(key) + "\":";
            if (const auto* d = std::get_if<double>(&value))
                out += fmt_num(*d);
            else
                out += "\"" + json_escape(std::get<std::string>(value)) + "\"";
        }
        out += "},\"lhs\":{\"value\":" + fmt_num(r.lhs.value) + ",\"terms_used\":" + std::to_string(r.lhs.terms_used) +
               ",\"tail_bound\":" + fmt_num(r.lhs.tail_bound) + "}";
        out += ",\"rhs_canonical\":{\"value\":" + fmt_num(r.rhs_canonical.value) +
               ",\"budget\":" + fmt_num(r.rhs_canonical.budget) + "}";
        out += ",\"rhs_printed\":" + (r.rhs_printed ? fmt_num(*r.rhs_printed) : std::string("null"));
        out += ",\"abs_diff\":" + fmt_num(r.abs_diff) + ",\"budget\":" + fmt_num(r.budget);
        out += ",\"verdict\":\"" + std::string(verdict_name(r.verdict)) + "\"";
        out += ",\"adjudication\":\"" + json_escape(r.adjudication) + "\"}";
    }
    out += reports.empty() ? "]\n" : "\n]\n";
    return out;
}

namespace {
std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}
}  // namespace

std::string reports_to_csv(std::span<const IdentityReport> reports) {
    std::string out =
        "identity_id,params,lhs_value,lhs_terms_used,lhs_tail_bound,rhs_canonical_value,rhs_canonical_budget,"
        "rhs_printed,abs_diff,budget,verdict,adjudication\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [key, value] : r.params) {
            if (!params.empty()) params += ";";
            params += key + "=";
            if (const auto* d = std::get_if<double>(&value))
                params += fmt_num(*d);
            else
                params += std::get<std::string>(value);
        }
        out += csv_field(r.identity_id) + "," + csv_field(params) + "," + fmt_num(r.lhs.value) + "," +
               std::to_string(r.lhs.terms_used) + "," + fmt_num(r.lhs.tail_bound) + "," +
               fmt_num(r.rhs_canonical.value) + "," + fmt_num(r.rhs_canonical.budget) + "," +
               (r.rhs_printed ? fmt_num(*r.rhs_printed) : std::string()) + "," + fmt_num(r.abs_diff) + "," +
               fmt_num(r.budget) + "," + std::string(verdict_name(r.verdict)) + "," + csv_field(r.adjudication) +
               "\n";
    }
    return out;
}

void emit_report(std::span<const IdentityReport> reports, ReportFormat format, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open report file " + path.string() + " for writing");
    out << (format == ReportFormat::json ? reports_to_json(reports) : reports_to_csv(reports));
    out.flush();
    if (!out) throw IoError("failed writing report file " + path.string());
}

int report_exit_code(std::span<const IdentityReport> reports) {
    for (const auto& r : reports) {
        if (r.verdict == Verdict::pass) continue;
        if (r.verdict == Verdict::inconclusive && r.identity_id == "rh-slope") continue;
        return 1;
    }
    return 0;
}

}  // namespace fraczeta
