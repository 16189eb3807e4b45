#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fraczeta/errors.hpp"
#include "fraczeta/zeta.hpp"

#include <cmath>

using namespace fraczeta;

#ifndef FRACZETA_SEED_ZEROS
#error "FRACZETA_SEED_ZEROS must name the bundled seed file"
#endif

TEST_CASE("bundled seed table") {
    const auto t = load_zero_table(FRACZETA_SEED_ZEROS);
    REQUIRE(t.entries.size() == 100);
    CHECK(t.entries[0].gamma == doctest::Approx(14.134725).epsilon(1e-7));
    CHECK(t.entries[99].index == 100);
    CHECK_FALSE(t.refined);
}

TEST_CASE("malformed tables") {
    CHECK_THROWS_AS(parse_zero_table(""), FormatError);
    CHECK_THROWS_AS(parse_zero_table("index,gamma\n"), FormatError);
    CHECK_THROWS_AS(parse_zero_table("index,gamma\n1,21.02\n2,14.13\n"), FormatError);
    CHECK_THROWS_AS(parse_zero_table("index,gamma\n1,abc\n"), FormatError);
    CHECK_THROWS_AS(parse_zero_table("idx,g\n1,14.13\n"), FormatError);
    CHECK_THROWS_AS(parse_zero_table("index,gamma\n1,-3\n"), FormatError);
    CHECK_THROWS_AS(load_zero_table("/nonexistent/zeros.csv"), IoError);
    CHECK(parse_zero_table("index,gamma\n1,14.1347\n2,21.022\n").entries.size() == 2);
}

TEST_CASE("refine_zero") {
    const auto z1 = refine_zero(14.1347);
    CHECK(std::fabs(z1.gamma - 14.134725141734693) <= 1e-9);
    CHECK(z1.residual <= 1e-8);
    CHECK(z1.re_deviation <= 1e-9);
    const auto z2 = refine_zero(21.0220);
    CHECK(std::fabs(z2.gamma - 21.022039638771555) <= 1e-9);
    CHECK(z2.residual <= 1e-8);
    CHECK_THROWS_AS(refine_zero(3.0), RefinementError);
    try {
        refine_zero(3.0);
    } catch (const RefinementError& e) {
        CHECK(std::isfinite(e.last_iterate().real()));
    }
}

TEST_CASE("refine_table validation") {
    const auto seeds = load_zero_table(FRACZETA_SEED_ZEROS);
    const auto t = refine_table(seeds);
    REQUIRE(t.entries.size() == 100);
    CHECK(t.refined);
    CHECK(std::fabs(t.entries[0].gamma - 14.134725) <= 1e-6);
    // gamma_100 from mpmath.zetazero(100)
    CHECK(std::fabs(t.entries[99].gamma - 236.524229665816205802) <= 1e-9);
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        CHECK(t.entries[i].residual <= 1e-8);
        CHECK(t.entries[i].re_deviation <= 1e-9);
        // conjugate reflection: zeta(1 - conj(rho)) = zeta(rho)
        CHECK(std::abs(zeta_em(Complex(0.5, t.entries[i].gamma))) <= 1e-6);
        if (i) CHECK(t.entries[i].gamma > t.entries[i - 1].gamma + 0.1);
    }
    CHECK(refine_table(seeds, 5).entries.size() == 5);

    // two seeds that collapse onto the same zero
    CHECK_THROWS_WITH_AS(refine_table(parse_zero_table("index,gamma\n1,14.13\n2,14.14\n")),
                         doctest::Contains("zero-table validation failed"), FormatError);
    // a seed that lands on the second zero first
    CHECK_THROWS_AS(refine_table(parse_zero_table("index,gamma\n1,21.02\n")), FormatError);
}

TEST_CASE("format round trip") {
    const auto t = refine_table(load_zero_table(FRACZETA_SEED_ZEROS), 10);
    const auto back = parse_zero_table(format_zero_table(t));
    REQUIRE(back.entries.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(back.entries[i].gamma == t.entries[i].gamma);
}
