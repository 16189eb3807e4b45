#include "fraczeta/explicit_formula.hpp"

#include "fraczeta/bernpoly.hpp"
#include "fraczeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace fraczeta {

namespace {

constexpr double kPi = std::numbers::pi;

void check_k(int k) {
    if (k < 1 || k > 4) throw ArgumentError("explicit formula: k = " + std::to_string(k) + " outside 1..4");
}

void check_x(double x) {
    if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("explicit formula requires finite x > 1");
}

}  // namespace

TruncatedSum lhs_theorem1(const ArithmeticTable& t, int k, double x, std::uint64_t n_terms) {
    check_k(k);
    check_x(x);
    if (x == std::floor(x)) throw ArgumentError("lhs_theorem1: x must not be an integer");
    if (!(static_cast<double>(n_terms) > x))
        throw EmptyRangeError("lhs_theorem1: N = " + std::to_string(n_terms) + " does not exceed x");
    if (n_terms > t.n_max)
        throw ArgumentError("lhs_theorem1: N = " + std::to_string(n_terms) + " beyond table bound " +
                            std::to_string(t.n_max));

    const auto first = static_cast<std::uint64_t>(std::floor(x)) + 1;
    const auto ks = static_cast<std::size_t>(k);
    CompensatedSum<double> acc;
    for (std::uint64_t n = first; n <= n_terms; ++n) {
        const double lam = t.lambda[n];
        if (lam == 0.0) continue;
        const double nd = static_cast<double>(n);
        acc += lam * std::pow(nd, -static_cast<double>(k + 1)) * integral_Ik(ks, nd / x);
    }

    TruncatedSum out;
    out.value = acc.value();
    out.terms_used = static_cast<std::size_t>(n_terms - first + 1);
    // Lambda(n) <= log n, |I_k| <= M_k; int_N^inf log t t^{-k-1} dt = N^{-k}(log N / k + 1/k^2)
    const double big_n = static_cast<double>(n_terms);
    const double kd = k;
    out.tail_bound = integral_Ik_sup(ks) * std::pow(big_n, -kd) * (std::log(big_n) / kd + 1.0 / (kd * kd));
    out.note = "M_k * int_N^inf log(t) t^-(k+1) dt";
    return out;
}

Complex theorem1_integrand(int k, double x, Complex s) {
    const double kd = k;
    return std::exp((s - 1.0 - kd) * std::log(x)) * Hk_closed(k, 1.0 - s) * neg_zeta_log_deriv(s) / (kd + 1.0 - s);
}

Residue residue_at(int k, double x, double s0, double radius) {
    check_k(k);
    check_x(x);
    if (s0 != std::floor(s0) || s0 < 1.0 || s0 > k)
        throw ArgumentError("residue_at: s0 must be one of 1..k");
    if (!(radius > 0.0) || radius > 0.3) throw GeometryError("residue_at: radius must lie in (0, 0.3]");
    // singularities of G_k on the real line: s = 1, s = k+1, trivial zeros -2, -4, ...
    const double kd = k;
    for (double p : {1.0, kd + 1.0, -2.0}) {
        if (p == s0) continue;
        if (std::fabs(p - s0) <= radius) throw GeometryError("residue_at: contour meets another singularity");
    }

    constexpr int kNodes = 64;
    Complex full = 0.0, half = 0.0;
    for (int j = 0; j < kNodes; ++j) {
        const Complex w = std::polar(1.0, 2.0 * kPi * j / kNodes);
        // (1/2 pi i) * G(s0 + r w) * i r w dtheta  ->  r w G / n
        const Complex contrib = radius * w * theorem1_integrand(k, x, s0 + radius * w);
        full += contrib;
        if (j % 2 == 0) half += contrib;
    }
    full /= static_cast<double>(kNodes);
    half /= static_cast<double>(kNodes / 2);

    Residue r;
    r.s0 = s0;
    r.value = full.real();
    r.quadrature_bound = std::abs(full - half);
    return r;
}

std::vector<Complex> zero_pair_terms(int k, double x, const ZeroTable& zeros, std::size_t count, double sign) {
    check_k(k);
    check_x(x);
    count = std::min(count, zeros.entries.size());
    const double kd = k;
    const double log_x = std::log(x);
    std::vector<Complex> terms;
    terms.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double g = zeros.entries[i].gamma;
        Complex pair = 0.0;
        for (const Complex rho : {Complex(0.5, g), Complex(0.5, -g)})
            pair += std::exp((rho - 1.0 - kd) * log_x) * Hk_closed(k, 1.0 - rho) / (kd + 1.0 - rho);
        terms.push_back(sign * pair);
    }
    return terms;
}

double zero_amplitude_bound(int k, double t) {
    check_k(k);
    if (!(t >= 1.0)) throw DomainError("zero_amplitude_bound requires T >= 1");
    // |rho|, |rho-1-i|, |k+1-rho| >= gamma bounds every factor of the closed form
    const double kd = k;
    const auto& bern = bernoulli_cache();
    double k_fact = 1.0;
    for (int i = 2; i <= k; ++i) k_fact *= i;
    double amplitude = k_fact * std::pow(t, -kd);
    double falling = k_fact;  // k!/(j-1)!
    for (int j = 1; j <= k; ++j) {
        if (j > 1) falling /= (j - 1);
        amplitude += std::fabs(bern(j)) / j * falling * std::pow(t, j - kd);
    }
    return amplitude;
}

TruncatedSum zero_sum(int k, double x, const ZeroTable& zeros, std::size_t count, double sign) {
    check_k(k);
    check_x(x);
    if (zeros.entries.empty()) throw ArgumentError("zero_sum: empty zero table");
    count = std::min(count, zeros.entries.size());

    const auto terms = zero_pair_terms(k, x, zeros, count, sign);
    CompensatedSum<double> acc;
    for (const auto& t : terms) acc += t.real();

    const double kd = k;
    const double big_t = count == 0 ? 14.0 : zeros.entries[count - 1].gamma;
    const double amplitude = zero_amplitude_bound(k, big_t);
    // N(t) = (t/2pi) log(t/2pi e) + 7/8 + E(t), |E(t)| <= 0.112 log t + 0.278 log log t + 2.51 + 0.2/t
    // (Riemann-von Mangoldt with explicit constants). Stieltjes integration of A/t^2 over t > T,
    // doubled for conjugates: A [(log(T/2pi) + 1)/(pi T) + 4 (E(T) + 0.2)/T^2].
    const double density = std::max(std::log(big_t / (2.0 * kPi)), 0.0) + 1.0;
    const double count_error =
        0.112 * std::log(big_t) + 0.278 * std::log(std::log(big_t)) + 2.51 + 0.2 / big_t + 0.2;

    TruncatedSum out;
    out.value = acc.value();
    out.terms_used = count;
    out.tail_bound =
        std::pow(x, -0.5 - kd) * amplitude * (density / (kPi * big_t) + 4.0 * count_error / (big_t * big_t));
    out.note = "zero-counting majorant with closed-form amplitude bound";
    if (std::fabs(out.value) <= 10.0 * out.tail_bound) out.note += "; |sum| within 10x of tail bound";
    return out;
}

TruncatedSum trivial_sum(int k, double x, double sign) {
    check_k(k);
    if (!(x > 1.0)) throw DomainError("trivial_sum requires x > 1");
    const double kd = k;
    const double log_x = std::log(x);
    constexpr int kMaxTerms = 60;
    auto term = [&](int j) {
        const double s = 1.0 + 2.0 * j;
        return sign * std::exp((-2.0 * j - 1.0 - kd) * log_x) * Hk_closed(k, s).real() / (kd + 1.0 + 2.0 * j);
    };
    CompensatedSum<double> acc;
    TruncatedSum out;
    int j = 1;
    double next = term(1);
    while (j <= kMaxTerms && std::fabs(next) >= 1e-18) {
        acc += next;
        ++out.terms_used;
        ++j;
        next = term(j);
    }
    out.value = acc.value();
    out.tail_bound = std::fabs(next) / (1.0 - 1.0 / (x * x));
    out.note = "first omitted term / (1 - x^-2)";
    return out;
}

ExplicitFormulaRHS rhs_theorem1(int k, double x, const ZeroTable& zeros, double radius, double sign) {
    check_k(k);
    ExplicitFormulaRHS rhs;
    rhs.k = k;
    rhs.x = x;
    for (int s0 = 1; s0 <= k; ++s0) rhs.residues.push_back(residue_at(k, x, s0, radius));
    rhs.zero_sum = zero_sum(k, x, zeros, std::numeric_limits<std::size_t>::max(), sign);
    rhs.trivial_sum = trivial_sum(k, x, sign);

    CompensatedSum<double> total;
    double quad = 0.0;
    for (const auto& r : rhs.residues) {
        total += r.value;
        quad += r.quadrature_bound;
    }
    total += rhs.zero_sum.value;
    total += rhs.trivial_sum.value;
    rhs.total = total.value();
    rhs.budget = rhs.zero_sum.tail_bound + rhs.trivial_sum.tail_bound + quad;
    return rhs;
}

double printed_Pk(int k, double x) {
    const double log_2pi = std::log(2.0 * kPi);
    if (k == 1) return (log_2pi - 2.0) / (2.0 * x);
    if (k == 2) return (8.0 - kEulerGamma - 3.0 * log_2pi + std::log(x)) / (6.0 * x * x);
    throw UnsupportedError("printed_Pk: no printed main term for k = " + std::to_string(k));
}

}  // namespace fraczeta
