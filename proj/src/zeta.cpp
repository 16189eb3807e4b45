#include "fraczeta/zeta.hpp"

#include "fraczeta/bernpoly.hpp"
#include "fraczeta/errors.hpp"
#include "fraczeta/summation.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fraczeta {

namespace {

constexpr double kPi = std::numbers::pi;

void check_region(Complex s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()) || std::fabs(s.imag()) > 500.0 || s.real() < -10.0) {
        std::ostringstream os;
        os << "zeta: s = " << s << " outside |Im s| <= 500, Re s >= -10";
        throw DomainError(os.str());
    }
}

// (e^z - 1) / z, accurate near z = 0.
Complex expm1_over_z(Complex z) {
    if (std::abs(z) > 0.5) return (std::exp(z) - 1.0) / z;
    Complex term = 1.0, acc = 1.0;
    for (int m = 2; m < 30; ++m) {
        term *= z / static_cast<double>(m);
        acc += term;
        if (std::abs(term) < 1e-18) break;
    }
    return acc;
}

// Euler-Maclaurin for zeta(s) - 1/(s-1), Re s >= 0 (usable slightly below).
Complex regular_part_em(Complex s) {
    const double sigma = s.real();
    const auto& bern = bernoulli_cache();
    constexpr int kMaxJ = 31;

    std::size_t n_cut = 20 + static_cast<std::size_t>(std::ceil(0.6 * std::abs(s.imag())));
    for (;;) {
        const double n = static_cast<double>(n_cut);
        const double log_n = std::log(n);

        CompensatedSum<Complex> head;
        for (std::size_t m = n_cut - 1; m >= 1; --m) head += std::exp(-s * std::log(static_cast<double>(m)));

        const Complex n_pow = std::exp(-s * log_n);  // N^{-s}
        CompensatedSum<Complex> acc(head.value());
        // N^{1-s}/(s-1) - 1/(s-1) = -log N * (e^{(1-s)log N} - 1) / ((1-s) log N)
        acc += -log_n * expm1_over_z((1.0 - s) * log_n);
        acc += 0.5 * n_pow;

        // T_j = B_2j/(2j)! (s)_{2j-1} N^{-s-2j+1}
        Complex rising = s;  // s (s+1) ... (s+2j-2)
        Complex power = n_pow / n;
        double fact = 2.0;  // (2j)!
        bool converged = false;
        for (int j = 1; j <= kMaxJ; ++j) {
            const Complex term = bern(2 * j) / fact * rising * power;
            acc += term;
            // Backlund-type remainder: |(s + 2j + 1) T_{j+1} / (sigma + 2j + 1)|
            const Complex next_rising = rising * (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
            const double next_fact = fact * (2.0 * j + 1.0) * (2.0 * j + 2.0);
            const Complex next = bern(2 * j + 2) / next_fact * next_rising * (power / (n * n));
            const double bound = std::abs(next) * std::abs(s + (2.0 * j + 1.0)) / (sigma + 2.0 * j + 1.0);
            if (sigma + 2.0 * j + 1.0 > 0.0 && bound <= 1e-16 * (1.0 + std::abs(acc.value()))) {
                converged = true;
                break;
            }
            rising = next_rising;
            fact = next_fact;
            power /= n * n;
        }
        if (converged) return acc.value();
        n_cut = n_cut * 3 / 2 + 8;
    }
}

// log Gamma(z) for Re z > 0 by Stirling after an upward shift.
Complex log_gamma(Complex z) {
    const auto& bern = bernoulli_cache();
    Complex shift_log = 0.0;
    while (std::abs(z) < 15.0 || z.real() < 8.0) {
        shift_log += std::log(z);
        z += 1.0;
    }
    Complex acc = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    const Complex z2 = z * z;
    Complex zp = z;
    for (int m = 1; m <= 12; ++m) {
        acc += bern(2 * m) / (2.0 * m * (2.0 * m - 1.0) * zp);
        zp *= z2;
    }
    return acc - shift_log;
}

// log sin(z) without overflow for large |Im z|.
Complex log_sin(Complex z) {
    const double b = z.imag();
    const Complex i(0.0, 1.0);
    if (b > 20.0) return -i * z - std::log(-2.0 * i) + std::log(1.0 - std::exp(2.0 * i * z));
    if (b < -20.0) return i * z - std::log(2.0 * i) + std::log(1.0 - std::exp(-2.0 * i * z));
    return std::log(std::sin(z));
}

// zeta(s) for Re s < 0 via zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s).
Complex zeta_reflected(Complex s) {
    const Complex w = 1.0 - s;
    const Complex zeta_w = regular_part_em(w) + 1.0 / (w - 1.0);
    const Complex sin_arg = 0.5 * kPi * s;
    if (s.imag() == 0.0 && std::sin(sin_arg.real()) == 0.0) return 0.0;
    const Complex log_factor = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_sin(sin_arg) + log_gamma(w);
    return std::exp(log_factor) * zeta_w;
}

Complex regular_unchecked(Complex s) {
    if (s.real() < 0.0) return zeta_reflected(s) - 1.0 / (s - 1.0);
    return regular_part_em(s);
}

Complex deriv_unchecked(Complex s) {
    constexpr int kNodes = 32;
    constexpr double kRadius = 0.05;
    CompensatedSum<Complex> acc;
    for (int j = 0; j < kNodes; ++j) {
        const Complex w = std::polar(1.0, 2.0 * kPi * j / kNodes);
        acc += regular_unchecked(s + kRadius * w) / w;
    }
    const Complex d = s - 1.0;
    return acc.value() / (kNodes * kRadius) - 1.0 / (d * d);
}

}  // namespace

Complex zeta_regular(Complex s) {
    check_region(s);
    return regular_unchecked(s);
}

Complex zeta_em(Complex s) {
    check_region(s);
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
    if (s.real() < 0.0) return zeta_reflected(s);
    return regular_part_em(s) + 1.0 / (s - 1.0);
}

Complex zeta_deriv(Complex s) {
    check_region(s);
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta': pole at s = 1");
    return deriv_unchecked(s);
}

Complex neg_zeta_log_deriv(Complex s) {
    const Complex z = zeta_em(s);
    if (std::abs(z) <= 1e-12) {
        std::ostringstream os;
        os << "-zeta'/zeta: |zeta(" << s << ")| = " << std::abs(z) << " is too close to a zero";
        throw PoleError(os.str());
    }
    return -deriv_unchecked(s) / z;
}

}  // namespace fraczeta
