#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fraczeta/errors.hpp"
#include "fraczeta/zeta.hpp"

#include <cmath>
#include <numbers>

using namespace fraczeta;
using std::numbers::pi;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// values frozen from mpmath at 30 digits
struct Frozen {
    Complex s, value;
};
const Frozen kZeta[] = {
    {{0.5, 10.0}, {1.54489522029675276692, -0.115336465271273375437}},
    {{-9.5, 0.0}, {-0.00667217229646664075676, 0.0}},
    {{0.3, 490.0}, {-0.221416037314069087132, 3.47411833936263430925}},
    {{2.0, -3.0}, {0.798021985146275720622, 0.113744308052938500216}},
    {{-2.5, 7.0}, {0.414675950790961738467, 1.46806314597332372968}},
};
const Frozen kZetaDeriv[] = {
    {{0.5, 20.0}, {0.71450679084377599238, 1.00524088394701315547}},
    {{3.0, 1.0}, {-0.0686306019951644646428, 0.149623732003899432420}},
};
// H_k(s) = int_1^inf t^{-s-k} B_k({t}) dt, mpmath nsum over unit intervals
struct FrozenH {
    int k;
    Complex s, value;
};
const FrozenH kH[] = {
    {1, {2.0, 0.0}, {-0.072467033424113218236, 0.0}},
    {2, {2.5, 0.0}, {0.007660055485504644625, 0.0}},
    {3, {1.5, 3.0}, {0.0055556217604194326848, -0.0021869146110455566378}},
    {4, {4.0, 0.0}, {-0.0023520923917468054719, 0.0}},
};

}  // namespace

TEST_CASE("zeta at classical points") {
    CHECK(rel(zeta_em(2.0), pi * pi / 6) <= 1e-12);
    CHECK(std::abs(zeta_em(0.0) + 0.5) <= 1e-12);
    CHECK(std::abs(zeta_em(-1.0) + 1.0 / 12) <= 1e-12);
    CHECK(std::abs(zeta_em(-2.0)) <= 1e-14);
    CHECK(rel(zeta_em(4.0), std::pow(pi, 4) / 90) <= 1e-12);
    CHECK(rel(zeta_em(-7.0), 1.0 / 240) <= 1e-12);
    CHECK_THROWS_AS(zeta_em(1.0), PoleError);
}

TEST_CASE("zeta against frozen mpmath values") {
    for (const auto& f : kZeta) CHECK(rel(zeta_em(f.s), f.value) <= 1e-12);
    for (const auto& f : kZetaDeriv) CHECK(rel(zeta_deriv(f.s), f.value) <= 1e-10);
}

TEST_CASE("zeta conjugate symmetry and regular part") {
    const Complex s(0.7, 33.3);
    CHECK(std::abs(zeta_em(std::conj(s)) - std::conj(zeta_em(s))) <= 1e-14);
    CHECK(std::abs(zeta_regular(1.0) - kEulerGamma) <= 1e-12);
    CHECK(std::abs(zeta_regular(2.0) - (zeta_em(2.0) - 1.0)) <= 1e-14);
}

TEST_CASE("zeta derivative") {
    CHECK(std::abs(zeta_deriv(2.0) + 0.937548254315843753702574) <= 1e-8);
    CHECK(std::abs(zeta_deriv(0.0) + 0.5 * std::log(2 * pi)) <= 1e-8);
    CHECK(std::abs(zeta_deriv(4.0) + 0.0689112658961253798488) <= 1e-8);
    CHECK_THROWS_AS(zeta_deriv(1.0), PoleError);
}

TEST_CASE("logarithmic derivative") {
    CHECK(std::abs(neg_zeta_log_deriv(2.0) - 0.569960993094532806400) <= 1e-8);
    CHECK(std::abs(neg_zeta_log_deriv(4.0) - 0.0636697649553711264962) <= 1e-8);
    const double v = ((1.001 - 1.0) * neg_zeta_log_deriv(1.001)).real();
    CHECK(v >= 0.9);
    CHECK(v <= 1.1);
    CHECK_THROWS_AS(neg_zeta_log_deriv(Complex(0.5, 14.134725141734693)), PoleError);
}

TEST_CASE("pole normalization and Euler gamma") {
    for (int m = 2; m <= 4; ++m) {
        const double s = 1.0 + std::pow(10.0, -m);
        CHECK(std::fabs(((s - 1.0) * zeta_em(s)).real() - 1.0) <= 1.5 * (s - 1.0));
    }
    const double s = 1.0 + 1e-6;
    CHECK(std::fabs((zeta_em(s) - 1.0 / (s - 1.0)).real() - kEulerGamma) <= 1e-5);
}

TEST_CASE("H_k closed form") {
    CHECK(std::abs(Hk_closed(1, 2.0) + (pi * pi / 6 - 1.5) / 2) <= 1e-10);
    CHECK(std::abs(Hk_closed(1, 0.0) - (0.5 * std::log(2 * pi) - 1.0)) <= 1e-8);
    CHECK(std::abs(Hk_closed(2, 0.0) - 0.00454373307601215022733) <= 1e-8);
    // H_1(3) = -(zeta(3) - 1)/3
    CHECK(std::abs(Hk_closed(1, 3.0) + (zeta_em(3.0) - 1.0) / 3.0) <= 1e-13);
    for (const auto& f : kH) CHECK(rel(Hk_closed(f.k, f.s), f.value) <= 1e-12);
    CHECK_THROWS_AS(Hk_closed(0, 2.0), ArgumentError);
    CHECK_THROWS_AS(Hk_closed(5, 2.0), ArgumentError);
}

TEST_CASE("H_k near removable points is continuous") {
    for (int k = 1; k <= 4; ++k)
        for (int j = 0; j < k; ++j) {
            const Complex at = Hk_closed(k, -double(j));
            const Complex near = Hk_closed(k, Complex(-double(j) + 3e-5, 2e-5));
            CHECK(std::abs(at - near) <= 1e-3 * std::abs(at) + 1e-9);
        }
}

TEST_CASE("H_k quadrature oracle") {
    CHECK(std::abs(Hk_quadrature(1, 2.0) + 0.072467033424113218236) <= 1e-8);
    CHECK(std::abs(Hk_quadrature(1, 0.0) - (0.5 * std::log(2 * pi) - 1.0)) <= 1e-8);
    CHECK(rel(Hk_quadrature(3, 2.5), Hk_closed(3, 2.5)) <= 1e-8);
    for (int k = 1; k <= 4; ++k)
        for (const Complex s : {Complex(0.0), Complex(2.5), Complex(4.0), Complex(-0.5), Complex(1.0), Complex(0.5, 9.0)})
            CHECK(rel(Hk_closed(k, s), Hk_quadrature(k, s)) <= 1e-8);
    for (const auto& f : kH) CHECK(rel(Hk_quadrature(f.k, f.s), f.value) <= 1e-10);
    CHECK_THROWS_AS(Hk_quadrature(1, -1.0), DomainError);
}
