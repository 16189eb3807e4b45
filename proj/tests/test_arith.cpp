#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fraczeta/arith.hpp"
#include "fraczeta/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace fraczeta;

namespace {

// independent trial-division oracles
int mu_trial(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
    }
    return n > 1 ? -sign : sign;
}

double lambda_trial(std::uint64_t n) {
    if (n < 2) return 0.0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? std::log(double(p)) : 0.0;
    }
    return std::log(double(n));
}

double mubar_divisors(std::uint64_t n) {
    double s = 0.0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += mu_trial(d) * mu_trial(n / d) * std::sqrt(double(n / d));
    return s;
}

double upsilon_divisors(std::uint64_t n) {
    double s = 0.0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += mu_trial(d) * std::sqrt(double(d));
    return s;
}

}  // namespace

TEST_CASE("small tables") {
    const auto t = build_sieve(10);
    CHECK(vonmangoldt(t, 8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(moebius(t, 10) == 1);
    CHECK(t.spf[1] == 1);

    const auto one = build_sieve(1);
    CHECK(vonmangoldt(one, 1) == 0.0);
    CHECK(moebius(one, 1) == 1);
    CHECK(mubar(one, 1) == 1.0);
    CHECK(upsilon(one, 1) == 1.0);
}

TEST_CASE("vonmangoldt and moebius values") {
    const auto t = build_sieve(100);
    CHECK(vonmangoldt(t, 9) == doctest::Approx(std::log(3.0)));
    CHECK(vonmangoldt(t, 12) == 0.0);
    double s = 0.0;
    for (int d : {1, 2, 3, 4, 6, 12}) s += vonmangoldt(t, d);
    CHECK(std::fabs(s - std::log(12.0)) <= 1e-12);
    CHECK(moebius(t, 1) == 1);
    CHECK(moebius(t, 12) == 0);
    CHECK(moebius(t, 30) == -1);
}

TEST_CASE("mubar and upsilon values") {
    const auto t = build_sieve(100);
    CHECK(mubar(t, 1) == 1.0);
    CHECK(mubar(t, 2) == doctest::Approx(-1.0 - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(mubar(t, 4) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(upsilon(t, 1) == 1.0);
    CHECK(upsilon(t, 3) == doctest::Approx(1.0 - std::sqrt(3.0)).epsilon(1e-15));
    CHECK(upsilon(t, 6) == doctest::Approx((1.0 - std::sqrt(2.0)) * (1.0 - std::sqrt(3.0))).epsilon(1e-14));
}

TEST_CASE("sieve agrees with trial division") {
    const auto t = build_sieve(3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        REQUIRE(moebius(t, n) == mu_trial(n));
        REQUIRE(std::fabs(vonmangoldt(t, n) - lambda_trial(n)) <= 1e-14);
        if (n <= 600) {
            REQUIRE(std::fabs(mubar(t, n) - mubar_divisors(n)) <= 1e-12);
            REQUIRE(std::fabs(upsilon(t, n) - upsilon_divisors(n)) <= 1e-12);
        }
        if (n > 1) {
            REQUIRE(n % t.spf[n] == 0);
            for (std::uint64_t p = 2; p < t.spf[n]; ++p) REQUIRE(n % p != 0);
        }
    }
}

TEST_CASE("dirichlet_convolve") {
    constexpr std::size_t n = 10000;
    const auto t = build_sieve(n);
    std::vector<double> mu(n + 1, 0.0), lam(n + 1, 0.0), one(n + 1, 1.0), mu_sqrt(n + 1, 0.0);
    one[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        mu[i] = t.mu[i];
        lam[i] = t.lambda[i];
        mu_sqrt[i] = t.mu[i] * std::sqrt(double(i));
    }
    const auto ind = dirichlet_convolve(mu, one);
    const auto logs = dirichlet_convolve(lam, one);
    const auto divs = dirichlet_convolve(one, one);
    const auto mb = dirichlet_convolve(mu, mu_sqrt);
    const auto up = dirichlet_convolve(mu_sqrt, one);
    CHECK(divs[6] == 4.0);
    for (std::size_t i = 1; i <= n; ++i) {
        REQUIRE(ind[i] == (i == 1 ? 1.0 : 0.0));
        REQUIRE(std::fabs(logs[i] - std::log(double(i))) <= 1e-12);
        REQUIRE(std::fabs(mb[i] - t.mubar[i]) <= 1e-12);
        REQUIRE(std::fabs(up[i] - t.upsilon[i]) <= 1e-12);
    }
    CHECK_THROWS_AS(dirichlet_convolve(std::vector<double>(5), std::vector<double>(6)), ArgumentError);
}

TEST_CASE("Dirichlet series of mu at 2") {
    const auto t = build_sieve(1000000);
    double s = 0.0;
    for (std::uint64_t n = 1; n <= t.n_max; ++n) s += t.mu[n] / (double(n) * double(n));
    CHECK(std::fabs(s - 6.0 / (std::numbers::pi * std::numbers::pi)) <= 2e-6);
}

TEST_CASE("determinism and errors") {
    CHECK(build_sieve(50000) == build_sieve(50000));
    const auto t = build_sieve(100);
    CHECK_THROWS_AS(vonmangoldt(t, 0), IndexError);
    CHECK_THROWS_AS(moebius(t, 101), IndexError);
    CHECK_THROWS_AS(mubar(t, 0), IndexError);
    CHECK_THROWS_AS(upsilon(t, 1000), IndexError);
    CHECK_THROWS_AS(build_sieve(0), CapacityError);
    CHECK_THROWS_AS(build_sieve(1000000, 1000), CapacityError);
    CHECK_THROWS_AS(build_sieve(kMaxSieveBound + 1), CapacityError);
    CHECK(table_footprint(1000) > 1000 * 8);
}
