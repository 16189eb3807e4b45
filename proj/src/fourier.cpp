#include "fraczeta/fourier.hpp"

#include "fraczeta/bernpoly.hpp"
#include "fraczeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fraczeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3Over2 = 2.6123753486854883433;
const double kHalfInvPi2 = 1.0 / (2.0 * kPi * kPi);

void check_terms(const ArithmeticTable& t, std::uint64_t n_terms) {
    if (n_terms > t.n_max)
        throw ArgumentError("N = " + std::to_string(n_terms) + " beyond table bound " + std::to_string(t.n_max));
}

}  // namespace

Weight parse_weight(std::string_view name) {
    if (name == "lambda") return Weight::lambda;
    if (name == "mu") return Weight::mu;
    if (name == "mubar") return Weight::mubar;
    throw ArgumentError("unknown weight '" + std::string(name) + "'");
}

std::string_view weight_name(Weight w) {
    switch (w) {
        case Weight::lambda: return "lambda";
        case Weight::mu: return "mu";
        case Weight::mubar: return "mubar";
    }
    return "?";
}

double cos_minus_one(double y) {
    const double s = std::sin(kPi * frac(y));
    return -2.0 * s * s;
}

TruncatedSum lhs_weighted_sdot(const ArithmeticTable& t, Weight w, double p, double x, std::uint64_t n_terms) {
    const bool supported = (w == Weight::lambda && p == 2.0) || (w == Weight::mu && (p == 2.0 || p == 1.5)) ||
                           (w == Weight::mubar && p == 2.0);
    if (!supported)
        throw ArgumentError("lhs_weighted_sdot: unsupported pair (" + std::string(weight_name(w)) + ", " +
                            std::to_string(p) + ")");
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("lhs_weighted_sdot requires x > 0");
    check_terms(t, n_terms);

    CompensatedSum<double> acc;
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
        double weight = 0.0;
        switch (w) {
            case Weight::lambda: weight = t.lambda[n]; break;
            case Weight::mu: weight = t.mu[n]; break;
            case Weight::mubar: weight = t.mubar[n]; break;
        }
        if (weight == 0.0) continue;
        const double nd = static_cast<double>(n);
        const double scale = (p == 2.0) ? 1.0 / (nd * nd) : 1.0 / (nd * std::sqrt(nd));
        acc += weight * scale * sdot(nd / x);
    }

    TruncatedSum out;
    out.value = acc.value();
    out.terms_used = static_cast<std::size_t>(n_terms);
    const double big_n = static_cast<double>(std::max<std::uint64_t>(n_terms, 1));
    constexpr double kSdotSup = 0.125;
    switch (w) {
        case Weight::lambda:
            out.tail_bound = kSdotSup * (std::log(big_n) + 1.0) / big_n;
            out.note = "Lambda(n) <= log n";
            break;
        case Weight::mu:
            out.tail_bound = (p == 2.0) ? kSdotSup / big_n : kSdotSup * 2.0 / std::sqrt(big_n);
            out.note = "|mu| <= 1";
            break;
        case Weight::mubar:
            // sum_{n>N} sigma_{1/2}(n) n^-2 <= zeta(3/2) (2 sqrt2 / sqrt N + 1/N)
            out.tail_bound = kSdotSup * kZeta3Over2 * (2.0 * std::numbers::sqrt2 / std::sqrt(big_n) + 1.0 / big_n);
            out.note = "|mubar(n)| <= sum_{d|n} sqrt d";
            break;
    }
    return out;
}

TruncatedSum rhs_th2_log(double x, std::uint64_t n_terms) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("rhs_th2_log requires x > 0");
    CompensatedSum<double> acc;
    for (std::uint64_t n = 2; n <= n_terms; ++n) {
        const double nd = static_cast<double>(n);
        acc += std::log(nd) / (nd * nd) * cos_minus_one(nd / x);
    }
    TruncatedSum out;
    out.value = kHalfInvPi2 * acc.value();
    out.terms_used = n_terms >= 2 ? static_cast<std::size_t>(n_terms - 1) : 0;
    const double big_n = static_cast<double>(std::max<std::uint64_t>(n_terms, 1));
    out.tail_bound = (std::log(big_n) + 1.0) / (kPi * kPi * big_n);
    out.note = "|cos - 1| <= 2, int_N^inf log t / t^2";
    return out;
}

double rhs_th2_mu(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("rhs_th2_mu requires x > 0");
    return kHalfInvPi2 * cos_minus_one(1.0 / x);
}

TruncatedSum rhs_th4_upsilon(const ArithmeticTable& t, double x, std::uint64_t n_terms) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("rhs_th4_upsilon requires x > 0");
    check_terms(t, n_terms);
    CompensatedSum<double> acc;
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
        const double nd = static_cast<double>(n);
        acc += t.upsilon[n] / (nd * nd) * cos_minus_one(nd / x);
    }
    TruncatedSum out;
    out.value = kHalfInvPi2 * acc.value();
    out.terms_used = static_cast<std::size_t>(n_terms);
    const double big_n = static_cast<double>(std::max<std::uint64_t>(n_terms, 1));
    // |Upsilon(n)| <= sqrt n, |cos - 1| <= 2, sum_{n>N} n^{-3/2} <= 2/sqrt N
    out.tail_bound = 2.0 / (kPi * kPi * std::sqrt(big_n));
    out.note = "|Upsilon(n)| <= sqrt n";
    return out;
}

SlopeFit rh_slope(std::span<const SlopePoint> values) {
    SlopeFit fit;
    for (const auto& v : values) {
        if (!(v.x > 0.0) || !(std::fabs(v.value) > 3.0 * v.noise_floor) || v.value == 0.0) {
            ++fit.dropped;
            continue;
        }
        fit.points.emplace_back(std::log(v.x), std::log(std::fabs(v.value)));
    }
    if (fit.points.size() < 5 || 2 * fit.dropped >= values.size())
        throw InsufficientDataError("rh_slope: " + std::to_string(fit.points.size()) + " usable points, " +
                                    std::to_string(fit.dropped) + " dropped");

    const double n = static_cast<double>(fit.points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [lx, ly] : fit.points) {
        mx += lx;
        my += ly;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [lx, ly] : fit.points) {
        sxx += (lx - mx) * (lx - mx);
        sxy += (lx - mx) * (ly - my);
        syy += (ly - my) * (ly - my);
    }
    if (sxx == 0.0) throw InsufficientDataError("rh_slope: all points share one abscissa");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (const auto& [lx, ly] : fit.points) {
        const double r = ly - (fit.intercept + fit.slope * lx);
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw ArgumentError("log_spaced requires 0 < lo < hi and n >= 2");
    std::vector<double> out(n);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

RhExploration rh_explore(const ArithmeticTable& t, double x_min, double x_max, std::size_t points,
                         std::uint64_t n_terms) {
    RhExploration out;
    for (const double x : log_spaced(x_min, x_max, points)) {
        const auto sum = lhs_weighted_sdot(t, Weight::mubar, 2.0, x, n_terms);
        out.samples.push_back({x, sum.value, sum.tail_bound});
    }
    out.fit = rh_slope(out.samples);
    return out;
}

}  // namespace fraczeta
