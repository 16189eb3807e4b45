#include "fraczeta/selftest.hpp"

#include "fraczeta/bernpoly.hpp"
#include "fraczeta/errors.hpp"
#include "fraczeta/explicit_formula.hpp"
#include "fraczeta/fourier.hpp"
#include "fraczeta/quadrature.hpp"
#include "fraczeta/summation.hpp"
#include "fraczeta/zeta.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>

namespace fraczeta {

namespace {

using std::numbers::pi;

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

// A check returns an empty string on success and a description otherwise.
using Check = std::function<std::string()>;

class Suite {
public:
    void run(std::string name, const Check& check) {
        InvariantResult r;
        r.name = std::move(name);
        const auto start = std::chrono::steady_clock::now();
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const IoError& e) {
            r.detail = e.what();
            r.io_error = true;
        } catch (const FormatError& e) {
            r.detail = e.what();
            r.io_error = true;
        } catch (const std::exception& e) {
            r.detail = std::string("unexpected exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.results.push_back(std::move(r));
    }

    SelftestReport report;
};

// Sum over n > N of sum_{d|n} sqrt(d) n^-3.
double sigma_half_tail(std::uint64_t n) {
    const double nn = static_cast<double>(n);
    CompensatedSum<double> acc;
    for (std::uint64_t d = 1; d <= n; ++d) {
        const double y = std::floor(nn / static_cast<double>(d)) + 1.0;  // smallest m with dm > N
        const double m_tail = 1.0 / (y * y * y) + 1.0 / (2.0 * y * y);
        acc.add(std::pow(static_cast<double>(d), -2.5) * m_tail);
    }
    acc.add(zeta_em(3.0).real() * (std::pow(nn, -2.5) + std::pow(nn, -1.5) / 1.5));
    return acc.value();
}

void arith_checks(Suite& suite, const ArithmeticTable& t) {
    const std::uint64_t small = std::min<std::uint64_t>(t.n_max, 10000);

    suite.run("arith: sum of mu over divisors is [n=1]", [&] {
        std::vector<int> acc(small + 1, 0);
        for (std::uint64_t d = 1; d <= small; ++d)
            for (std::uint64_t m = d; m <= small; m += d) acc[m] += t.mu[d];
        for (std::uint64_t n = 1; n <= small; ++n)
            if (acc[n] != (n == 1 ? 1 : 0)) return fmt("fails at n = %.0f", double(n));
        return std::string();
    });

    suite.run("arith: sum of Lambda over divisors is log n", [&] {
        std::vector<double> acc(small + 1, 0.0);
        for (std::uint64_t d = 1; d <= small; ++d)
            for (std::uint64_t m = d; m <= small; m += d) acc[m] += t.lambda[d];
        for (std::uint64_t n = 1; n <= small; ++n)
            if (std::fabs(acc[n] - std::log(double(n))) > 1e-12) return fmt("fails at n = %.0f", double(n));
        return std::string();
    });

    suite.run("arith: mubar and upsilon equal their convolutions", [&] {
        std::vector<double> mu(small + 1, 0.0), mu_sqrt(small + 1, 0.0), one(small + 1, 1.0);
        one[0] = 0.0;
        for (std::uint64_t n = 1; n <= small; ++n) {
            mu[n] = t.mu[n];
            mu_sqrt[n] = t.mu[n] * std::sqrt(double(n));
        }
        const auto mb = dirichlet_convolve(mu, mu_sqrt);
        const auto up = dirichlet_convolve(mu_sqrt, one);
        for (std::uint64_t n = 1; n <= small; ++n) {
            if (std::fabs(mb[n] - t.mubar[n]) > 1e-12) return fmt("mubar differs at n = %.0f", double(n));
            if (std::fabs(up[n] - t.upsilon[n]) > 1e-12) return fmt("upsilon differs at n = %.0f", double(n));
        }
        return std::string();
    });

    suite.run("arith: sieve determinism", [&] {
        return build_sieve(t.n_max) == t ? std::string() : std::string("second build differs");
    });

    suite.run("arith: Dirichlet series cross-checks", [&] {
        CompensatedSum<double> s_mu, s_mubar, s_ups;
        for (std::uint64_t n = 1; n <= t.n_max; ++n) {
            const double x = double(n);
            s_mu.add(t.mu[n] / (x * x));
            s_mubar.add(t.mubar[n] / (x * x * x));
            s_ups.add(t.upsilon[n] / (x * x * x));
        }
        const double z3 = zeta_em(3.0).real();
        const double z25 = zeta_em(2.5).real();
        const double tail = sigma_half_tail(t.n_max);
        const double d_mu = std::fabs(s_mu.value() - 6.0 / (pi * pi));
        const double d_mubar = std::fabs(s_mubar.value() - 1.0 / (z3 * z25));
        const double d_ups = std::fabs(s_ups.value() - z3 / z25);
        if (d_mu > 1.0 / double(t.n_max)) return fmt("sum mu/n^2 off by %.3g", d_mu);
        if (d_mubar > 1e3 * tail) return fmt("sum mubar/n^3 off by %.3g (tail %.3g)", d_mubar, tail);
        if (d_ups > 1e3 * tail) return fmt("sum upsilon/n^3 off by %.3g (tail %.3g)", d_ups, tail);
        return std::string();
    });
}

void bernpoly_checks(Suite& suite) {
    suite.run("bernpoly: Bernoulli recurrence", [] {
        const auto& b = bernoulli_cache();
        for (std::size_t m = 1; m < 40; ++m) {
            // sum_{j<=m} C(m+1, j) B_j = 0
            CompensatedSum<double> acc;
            double scale = 0.0;
            double binom = 1.0;
            for (std::size_t j = 0; j <= m; ++j) {
                const double term = binom * b(j);
                acc.add(term);
                scale = std::max(scale, std::fabs(term));
                binom = binom * double(m + 1 - j) / double(j + 1);
            }
            if (std::fabs(acc.value()) > 1e-13 * scale) return fmt("fails at m = %.0f", double(m));
        }
        if (std::fabs(b(12) + 691.0 / 2730.0) > 1e-16) return std::string("B_12 wrong");
        return std::string();
    });

    suite.run("bernpoly: periodicity of I_k", [] {
        for (std::size_t k = 1; k <= 6; ++k)
            for (int i = 0; i < 1000; ++i) {
                const double x = 50.0 * i / 999.0;
                const double d = std::fabs(integral_Ik(k, x + 1.0) - integral_Ik(k, x));
                if (d > 1e-14) return fmt("k = %.0f, x = %.17g", double(k), x);
            }
        return std::string();
    });

    suite.run("bernpoly: Fourier oracle for Sdot", [] {
        constexpr int n_terms = 10000;
        const double bound = 1.0 / (pi * pi * n_terms) + 1e-12;
        for (int i = 0; i <= 300; ++i) {
            const double x = 3.0 * i / 300.0;
            CompensatedSum<double> acc;
            for (int n = 1; n <= n_terms; ++n) acc.add(cos_minus_one(n * x) / (double(n) * n));
            const double d = std::fabs(sdot(x) - acc.value() / (2.0 * pi * pi));
            if (d > bound) return fmt("x = %.6g, diff %.3g", x, d);
        }
        return std::string();
    });

    suite.run("bernpoly: sdot equals I_1", [] {
        for (int i = 0; i <= 2000; ++i) {
            const double x = -5.0 + 0.00731 * i;
            if (sdot(x) != integral_Ik(1, x)) return fmt("x = %.17g", x);
        }
        return std::string();
    });

    suite.run("bernpoly: I_k against quadrature", [] {
        for (std::size_t k = 1; k <= 4; ++k)
            for (const double x : {0.3, 2.7, 9.25}) {
                const double q = integrate_per_period([k](double t) { return periodic_bernoulli(k, t); }, 0.0, x);
                const double d = std::fabs(q - integral_Ik(k, x));
                if (d > 1e-10) return fmt("k = %.0f, diff %.3g", double(k), d);
            }
        return std::string();
    });

    suite.run("bernpoly: Euler-Maclaurin identity", [] {
        const struct {
            EmFunction f;
            double a, b;
            std::size_t k;
        } cases[] = {{EmFunction::square, 1, 5, 2},
                     {EmFunction::inverse_square, 1, 10, 3},
                     {EmFunction::exp_decay, 1, 4, 4},
                     {EmFunction::inverse_square, 1.5, 7.25, 5}};
        for (const auto& c : cases) {
            const double r = em_identity_residual(c.f, c.a, c.b, c.k);
            if (r > 1e-10) return std::string(em_function_id(c.f)) + fmt(" residual %.3g", r);
        }
        return std::string();
    });
}

void zeta_checks(Suite& suite) {
    suite.run("zeta: known values", [] {
        const struct {
            double s, expected;
        } cases[] = {{2.0, pi * pi / 6.0}, {4.0, std::pow(pi, 4) / 90.0}, {0.0, -0.5},
                     {-1.0, -1.0 / 12.0},  {-3.0, 1.0 / 120.0},          {0.5, -1.4603545088095868}};
        for (const auto& c : cases) {
            const double got = zeta_em(c.s).real();
            if (std::fabs(got - c.expected) > 1e-12 * std::fabs(c.expected)) return fmt("s = %.3g: %.17g", c.s, got);
        }
        return std::string();
    });

    suite.run("zeta: pole normalization", [] {
        auto f = [](int m) {
            const double h = std::pow(10.0, -m);
            return (h * zeta_em(1.0 + h)).real();
        };
        // (s-1) zeta(s) = 1 + gamma (s-1) + O((s-1)^2): Richardson on h = 1e-3, 1e-4
        const double limit = (10.0 * f(4) - f(3)) / 9.0;
        if (std::fabs(f(2) - 1.0) > 1e-2 || std::fabs(limit - 1.0) > 1e-6) return fmt("limit %.17g", limit);
        return std::string();
    });

    suite.run("zeta: Euler gamma", [] {
        const double s = 1.0 + 1e-6;
        const double v = (zeta_em(s) - 1.0 / (s - 1.0)).real();
        return std::fabs(v - kEulerGamma) <= 1e-5 ? std::string() : fmt("got %.17g", v);
    });

    suite.run("zeta: H_k closed form against quadrature", [] {
        for (int k = 1; k <= 4; ++k)
            for (const Complex s : {Complex(0.0), Complex(2.5), Complex(4.0), Complex(1.5, 3.0)}) {
                const Complex a = Hk_closed(k, s);
                const Complex b = Hk_quadrature(k, s);
                const double rel = std::abs(a - b) / std::abs(b);
                if (rel > 1e-8) return fmt("k = %.0f, rel %.3g", double(k), rel);
            }
        return std::string();
    });
}

void zero_checks(Suite& suite, const SelftestOptions& options) {
    std::optional<ZeroTable> zeros;
    suite.run("zeros: zero-table validation", [&] {
        zeros = refine_table(load_zero_table(options.zeros_file), options.zero_count);
        for (const auto& z : zeros->entries) {
            if (z.residual > 1e-8) return fmt("zero %.0f residual %.3g", double(z.index), z.residual);
            if (z.re_deviation > 1e-9) return fmt("zero %.0f off the line by %.3g", double(z.index), z.re_deviation);
        }
        if (std::fabs(zeros->entries.front().gamma - 14.134725) > 1e-6) return std::string("gamma_1 wrong");
        return std::string();
    });
    if (!zeros) return;

    suite.run("zeros: reflection", [&] {
        for (const auto& z : zeros->entries) {
            const double r = std::abs(zeta_em(Complex(0.5, z.gamma)));
            if (r > 1e-6) return fmt("zero %.0f: %.3g", double(z.index), r);
        }
        return std::string();
    });

    suite.run("explicit: conjugate-pair realness", [&] {
        for (int k = 1; k <= 3; ++k)
            for (const double x : {5.5, 10.5}) {
                for (const Complex& t : zero_pair_terms(k, x, *zeros, zeros->entries.size()))
                    if (std::fabs(t.imag()) > 1e-12 * std::abs(t) + 1e-300)
                        return fmt("k = %.0f, imaginary part %.3g", double(k), t.imag());
            }
        return std::string();
    });
}

void explicit_checks(Suite& suite) {
    suite.run("explicit: residue radius independence", [] {
        for (int k = 1; k <= 3; ++k)
            for (const double x : {5.5, 10.5})
                for (int s0 = 1; s0 <= k; ++s0) {
                    const double a = residue_at(k, x, s0, 0.15).value;
                    const double b = residue_at(k, x, s0, 0.30).value;
                    if (std::fabs(a - b) > 1e-10) return fmt("k = %.0f, s0 = %.0f", double(k), double(s0));
                }
        return std::string();
    });

    suite.run("explicit: residue at s = 1 reproduces P_1", [] {
        for (const double x : {5.0, 10.0, 50.0}) {
            const double d = std::fabs(residue_at(1, x, 1.0, 0.25).value - printed_Pk(1, x));
            if (d > 1e-9) return fmt("x = %.3g, diff %.3g", x, d);
        }
        return std::string();
    });
}

void fourier_checks(Suite& suite, const ArithmeticTable& t) {
    suite.run("fourier: mu form against cosine closed form", [&] {
        for (const double x : {2.0, 3.5, 10.25}) {
            const auto lhs = lhs_weighted_sdot(t, Weight::mu, 2.0, x, t.n_max);
            const double d = std::fabs(lhs.value - rhs_th2_mu(x));
            if (d > lhs.tail_bound + 1e-12) return fmt("x = %.3g, diff %.3g", x, d);
        }
        return std::string();
    });

    suite.run("fourier: upsilon identity", [&] {
        for (const double x : {1.0, 4.6, 9.5}) {
            const auto lhs = lhs_weighted_sdot(t, Weight::mu, 1.5, x, t.n_max);
            const auto rhs = rhs_th4_upsilon(t, x, t.n_max);
            const double d = std::fabs(lhs.value - rhs.value);
            if (d > lhs.tail_bound + rhs.tail_bound) return fmt("x = %.3g, diff %.3g", x, d);
        }
        return std::string();
    });

    suite.run("fourier: rearrangement of the Sdot expansion", [&] {
        constexpr std::uint64_t n_terms = 1000;
        constexpr int m_terms = 10000;
        const double x = 3.3;
        const auto lhs = lhs_weighted_sdot(t, Weight::mu, 2.0, x, n_terms);
        // the constant part of the expansion sums to zeta(2) exactly; only the cosines are truncated in m
        CompensatedSum<double> acc, mu_sum;
        for (std::uint64_t n = 1; n <= n_terms; ++n) mu_sum.add(t.mu[n] / (double(n) * n));
        acc.add(-pi * pi / 6.0 * mu_sum.value());
        for (int m = 1; m <= m_terms; ++m) {
            CompensatedSum<double> inner;
            for (std::uint64_t n = 1; n <= n_terms; ++n)
                if (t.mu[n] != 0) inner.add(t.mu[n] * std::cos(2.0 * pi * std::fmod(double(m) * double(n) / x, 1.0)) / (double(n) * n));
            acc.add(inner.value() / (double(m) * m));
        }
        const double d = std::fabs(acc.value() / (2.0 * pi * pi) - lhs.value);
        return d <= 1e-6 ? std::string() : fmt("diff %.3g", d);
    });

    suite.run("fourier: slope fit on exact power laws", [] {
        for (const double e : {-0.5, -1.0, -1.37}) {
            std::vector<SlopePoint> pts;
            for (const double x : log_spaced(10.0, 100.0, 20)) pts.push_back({x, 3.0 * std::pow(x, e), 0.0});
            const auto fit = rh_slope(pts);
            if (std::fabs(fit.slope - e) > 1e-12) return fmt("exponent %.3g fitted as %.17g", e, fit.slope);
        }
        return std::string();
    });
}

}  // namespace

bool SelftestReport::ok() const {
    return std::all_of(results.begin(), results.end(), [](const InvariantResult& r) { return r.passed; });
}

int SelftestReport::exit_code() const {
    if (ok()) return 0;
    for (const auto& r : results)
        if (!r.passed && r.io_error) return 3;
    return 1;
}

SelftestReport run_invariants(const SelftestOptions& options) {
    Suite suite;
    const auto table = build_sieve(options.n_max, options.memory_budget);
    arith_checks(suite, table);
    bernpoly_checks(suite);
    zeta_checks(suite);
    explicit_checks(suite);
    fourier_checks(suite, table);
    zero_checks(suite, options);
    return std::move(suite.report);
}

}  // namespace fraczeta
