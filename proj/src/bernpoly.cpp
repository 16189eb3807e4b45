#include "fraczeta/bernpoly.hpp"

#include "fraczeta/errors.hpp"
#include "fraczeta/quadrature.hpp"
#include "fraczeta/summation.hpp"

#include <array>
#include <cmath>
#include <string>

namespace fraczeta {

namespace {

// Binomial coefficients as doubles; exact for n <= 66.
double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    if (k > n - k) k = n - k;
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(c);
}

}  // namespace

BernoulliCache::BernoulliCache(std::size_t max_index) : values_(max_index + 1, 0.0) {
    // B_{2n} = (-1)^{n+1} 2 (2n)! zeta(2n) / (2 pi)^{2n}. zeta(2n), 2n >= 4, by a
    // direct sum to K plus the Euler-Maclaurin tail; everything in long double.
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    constexpr int K = 1000;
    values_[0] = 1.0;
    if (max_index >= 1) values_[1] = -0.5;
    if (max_index >= 2) values_[2] = 1.0 / 6.0;
    for (std::size_t m = 4; m <= max_index; m += 2) {
        const long double p = static_cast<long double>(m);
        long double zeta = 0.0L;
        for (int j = K - 1; j >= 1; --j) zeta += std::pow(static_cast<long double>(j), -p);
        const long double kk = K;
        zeta += std::pow(kk, 1.0L - p) / (p - 1.0L) + 0.5L * std::pow(kk, -p) + p * std::pow(kk, -p - 1.0L) / 12.0L;
        long double scale = 2.0L;
        for (std::size_t i = 1; i <= m; ++i) scale *= static_cast<long double>(i) / two_pi;
        const long double sign = ((m / 2) % 2 == 1) ? 1.0L : -1.0L;
        values_[m] = static_cast<double>(sign * scale * zeta);
    }
}

double BernoulliCache::operator()(std::size_t j) const {
    if (j >= values_.size())
        throw IndexError("Bernoulli index " + std::to_string(j) + " beyond cache size " +
                         std::to_string(max_index()));
    return values_[j];
}

const BernoulliCache& bernoulli_cache() {
    static const BernoulliCache cache;
    return cache;
}

double bernoulli_number(const BernoulliCache& cache, std::size_t j) { return cache(j); }

double bernoulli_poly(std::size_t k, double t) {
    const auto& b = bernoulli_cache();
    if (k > b.max_index()) throw IndexError("Bernoulli polynomial order " + std::to_string(k) + " beyond 64");
    // B_k(t) = sum_i C(k,i) B_i t^{k-i}; Horner in t from the i = 0 coefficient.
    double acc = 0.0;
    for (std::size_t i = 0; i <= k; ++i) acc = acc * t + binomial(k, i) * b(i);
    return acc;
}

double frac(double x) { return x - std::floor(x); }

double periodic_bernoulli(std::size_t k, double x) { return bernoulli_poly(k, frac(x)); }

double integral_Ik(std::size_t k, double x) {
    // (B_2(f) - B_2)/2 reduces to (f^2 - f)/2; use the reduced form so I_1 and sdot agree bitwise
    if (k == 1) return sdot(x);
    const double kp1 = static_cast<double>(k + 1);
    return (bernoulli_poly(k + 1, frac(x)) - bernoulli_cache()(k + 1)) / kp1;
}

double integral_Ik_sup(std::size_t k) {
    // I_k is a polynomial on [0,1]; its extrema are at the endpoints or at
    // roots of B_k. Scan densely and polish by golden-section on the best cell.
    constexpr int cells = 4096;
    double best = 0.0;
    int best_i = 0;
    for (int i = 0; i <= cells; ++i) {
        const double v = std::fabs(integral_Ik(k, static_cast<double>(i) / cells));
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double lo = std::max(0, best_i - 1) / static_cast<double>(cells);
    double hi = std::min(cells, best_i + 1) / static_cast<double>(cells);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 60; ++it) {
        const double m1 = hi - g * (hi - lo);
        const double m2 = lo + g * (hi - lo);
        if (std::fabs(integral_Ik(k, m1)) > std::fabs(integral_Ik(k, m2)))
            hi = m2;
        else
            lo = m1;
    }
    return std::max(best, std::fabs(integral_Ik(k, 0.5 * (lo + hi))));
}

double sawtooth_S(double x) {
    const double f = frac(x);
    return f == 0.0 ? 0.0 : f - 0.5;
}

double sdot(double x) {
    const double f = frac(x);
    return 0.5 * (f * f - f);
}

EmFunction parse_em_function(std::string_view id) {
    if (id == "square") return EmFunction::square;
    if (id == "inverse_square") return EmFunction::inverse_square;
    if (id == "exp_decay") return EmFunction::exp_decay;
    throw ArgumentError("unknown test function '" + std::string(id) +
                        "' (expected square, inverse_square, exp_decay)");
}

std::string_view em_function_id(EmFunction f) {
    switch (f) {
        case EmFunction::square: return "square";
        case EmFunction::inverse_square: return "inverse_square";
        case EmFunction::exp_decay: return "exp_decay";
    }
    return "?";
}

double em_derivative(EmFunction f, std::size_t order, double t) {
    switch (f) {
        case EmFunction::square:
            if (order == 0) return t * t;
            if (order == 1) return 2.0 * t;
            if (order == 2) return 2.0;
            return 0.0;
        case EmFunction::inverse_square: {
            // d^l t^{-2} = (-1)^l (l+1)! t^{-2-l}
            double c = 1.0;
            for (std::size_t i = 2; i <= order + 1; ++i) c *= static_cast<double>(i);
            return ((order % 2) ? -c : c) * std::pow(t, -2.0 - static_cast<double>(order));
        }
        case EmFunction::exp_decay:
            return ((order % 2) ? -1.0 : 1.0) * std::exp(-t);
    }
    return 0.0;
}

namespace {
double em_antiderivative_integral(EmFunction f, double a, double b) {
    switch (f) {
        case EmFunction::square: return (b * b * b - a * a * a) / 3.0;
        case EmFunction::inverse_square: return 1.0 / a - 1.0 / b;
        case EmFunction::exp_decay: return std::exp(-a) - std::exp(-b);
    }
    return 0.0;
}
}  // namespace

EmSides em_identity_sides(EmFunction f, double a, double b, std::size_t k) {
    if (!(a >= 1.0 && a < b) || !std::isfinite(b))
        throw ArgumentError("em_identity_residual requires 1 <= a < b");
    if (k < 1 || k > 6) throw ArgumentError("em_identity_residual requires 1 <= k <= 6");

    double k_fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) k_fact *= static_cast<double>(i);
    const double sign_k = (k % 2) ? -1.0 : 1.0;
    const double lhs =
        sign_k / k_fact *
        integrate_per_period([&](double t) { return em_derivative(f, k, t) * periodic_bernoulli(k, t); }, a, b);

    CompensatedSum<double> rhs;
    rhs += em_antiderivative_integral(f, a, b);
    for (double n = std::floor(a) + 1.0; n <= b; n += 1.0) rhs += -em_derivative(f, 0, n);
    double l_fact = 1.0;
    for (std::size_t l = 1; l <= k; ++l) {
        l_fact *= static_cast<double>(l);
        const double sign_l = (l % 2) ? -1.0 : 1.0;
        rhs += sign_l / l_fact *
               (em_derivative(f, l - 1, b) * periodic_bernoulli(l, b) -
                em_derivative(f, l - 1, a) * periodic_bernoulli(l, a));
    }
    return {lhs, rhs.value()};
}

double em_identity_residual(EmFunction f, double a, double b, std::size_t k) {
    const auto sides = em_identity_sides(f, a, b, k);
    return std::fabs(sides.integral_side - sides.boundary_side);
}

double em_identity_residual(std::string_view f_id, double a, double b, std::size_t k) {
    return em_identity_residual(parse_em_function(f_id), a, b, k);
}

}  // namespace fraczeta
