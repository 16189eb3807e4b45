#include "fraczeta/bernpoly.hpp"
#include "fraczeta/errors.hpp"
#include "fraczeta/quadrature.hpp"
#include "fraczeta/summation.hpp"
#include "fraczeta/zeta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace fraczeta {

namespace {

void check_k(int k) {
    if (k < 1 || k > 4) throw ArgumentError("H_k: k = " + std::to_string(k) + " outside 1..4");
}

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

// C(-s, m) = prod_{i<m} (-s - i) / m!
Complex binom_neg(Complex s, int m) {
    Complex p = 1.0;
    for (int i = 0; i < m; ++i) p *= -s - static_cast<double>(i);
    return p / factorial(m);
}

// d/ds C(-s, m)
Complex binom_neg_deriv(Complex s, int m) {
    Complex total = 0.0;
    for (int i = 0; i < m; ++i) {
        Complex p = -1.0;
        for (int l = 0; l < m; ++l)
            if (l != i) p *= -s - static_cast<double>(l);
        total += p;
    }
    return total / factorial(m);
}

// zeta(s) + 1/(1-s) + sum_j C(-s, j-1) B_j / j
Complex bracket(int k, Complex s) {
    const auto& b = bernoulli_cache();
    CompensatedSum<Complex> acc(zeta_regular(s));
    for (int j = 1; j <= k; ++j) acc += binom_neg(s, j - 1) * (b(j) / j);
    return acc.value();
}

Complex bracket_deriv(int k, Complex s) {
    const auto& b = bernoulli_cache();
    // zeta_regular' = zeta' + 1/(s-1)^2
    const Complex d = s - 1.0;
    CompensatedSum<Complex> acc(zeta_deriv(s) + 1.0 / (d * d));
    for (int j = 2; j <= k; ++j) acc += binom_neg_deriv(s, j - 1) * (b(j) / j);
    return acc.value();
}

Complex closed_form(int k, Complex s) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k-1}
    return sign * bracket(k, s) / binom_neg(s, k);
}

}  // namespace

Complex Hk_closed(int k, Complex s) {
    check_k(k);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    // Removable points: zeros of C(-s, k) at s = 0, -1, .., -(k-1).
    for (int m = 0; m < k; ++m) {
        const Complex centre(-static_cast<double>(m), 0.0);
        const double dist = std::abs(s - centre);
        if (dist == 0.0) return sign * bracket_deriv(k, s) / binom_neg_deriv(s, k);
        if (dist < 1e-4) {
            // mean value over a small circle; H_k is analytic there
            constexpr int kNodes = 32;
            constexpr double kRadius = 0.01;
            CompensatedSum<Complex> acc;
            for (int j = 0; j < kNodes; ++j)
                acc += closed_form(k, s + std::polar(kRadius, 2.0 * std::numbers::pi * j / kNodes));
            return acc.value() / static_cast<double>(kNodes);
        }
    }
    return closed_form(k, s);
}

Complex Hk_quadrature(int k, Complex s) {
    check_k(k);
    const Complex a = s + static_cast<double>(k);
    if (!(a.real() > 0.0)) {
        std::ostringstream os;
        os << "H_k quadrature: Re s = " << s.real() << " must exceed -k = " << -k;
        throw DomainError(os.str());
    }
    const auto& rule = gauss_legendre(32);
    const auto& bern = bernoulli_cache();
    constexpr int kPeriods = 64;

    CompensatedSum<Complex> body;
    for (int m = 1; m < kPeriods; ++m) {
        const double lo = m;
        body += integrate_fixed(
            rule, [&](double t) { return std::exp(-a * std::log(t)) * bernoulli_poly(k, t - lo); }, lo, lo + 1.0);
    }

    // int_M^inf t^{-a} B_k({t}) dt = -sum_r [prod_{i<r} (a+i)/(k+1+i)] M^{-a-r} B_{k+1+r}/(k+1+r)
    const double big_m = kPeriods;
    CompensatedSum<Complex> tail;
    Complex coef = 1.0;
    Complex m_pow = std::exp(-a * std::log(big_m));
    for (int r = 0; k + 1 + r <= static_cast<int>(bern.max_index()); ++r) {
        const int order = k + 1 + r;
        const Complex term = -coef * m_pow * (bern(order) / order);
        tail += term;
        if (bern(order) != 0.0 && std::abs(term) < 1e-18 * (1.0 + std::abs(body.value()))) break;
        coef *= (a + static_cast<double>(r)) / static_cast<double>(k + 1 + r);
        m_pow /= big_m;
    }
    return body.value() + tail.value();
}

}  // namespace fraczeta
