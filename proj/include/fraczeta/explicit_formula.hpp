#pragma once

#include "fraczeta/arith.hpp"
#include "fraczeta/summation.hpp"
#include "fraczeta/zeta.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace fraczeta {

/// Sign attached to the zero and trivial-zero sums. The Dirichlet series of
/// Lambda is -zeta'/zeta, so each zero of zeta contributes with residue -1.
inline constexpr double kZeroSumSign = -1.0;

/// Contour residue of the Mellin integrand at a real point s0.
struct Residue {
    double s0 = 0.0;
    double value = 0.0;
    double quadrature_bound = 0.0;  // |64-node - 32-node| estimate
};

struct ExplicitFormulaRHS {
    int k = 0;
    double x = 0.0;
    std::vector<Residue> residues;
    TruncatedSum zero_sum;
    TruncatedSum trivial_sum;
    double total = 0.0;
    double budget = 0.0;
};

/// sum_{x<n<=N} Lambda(n) n^{-(k+1)} I_k(n/x) with a rigorous tail bound.
/// Requires 1 <= k <= 4, x > 1 non-integer, x < N <= t.n_max.
TruncatedSum lhs_theorem1(const ArithmeticTable& t, int k, double x, std::uint64_t n_terms);

/// G_k(s) = x^{s-1-k} H_k(1-s) (-zeta'(s)/zeta(s)) / (k+1-s).
Complex theorem1_integrand(int k, double x, Complex s);

/// Real part of (1/2 pi i) times the integral of G_k over |s - s0| = radius,
/// 64-node trapezoid rule. s0 must be one of 1..k and 0 < radius <= 0.3.
Residue residue_at(int k, double x, double s0, double radius);

/// Paired contributions sign * (z_rho + z_conj(rho)) for the first `count`
/// zeros, z_rho = x^{rho-1-k} H_k(1-rho)/(k+1-rho). Both members of each pair
/// are evaluated, so the imaginary parts measure conjugate symmetry.
std::vector<Complex> zero_pair_terms(int k, double x, const ZeroTable& zeros, std::size_t count,
                                     double sign = kZeroSumSign);

/// Bound A with |H_k(1-rho)/(k+1-rho)| gamma^2 <= A for every zero with
/// gamma >= t; nonincreasing in t.
double zero_amplitude_bound(int k, double t);

/// Sum over the first `count` zeros (all when count = npos) plus a tail
/// majorant: the amplitude bound at the last ordinate used, integrated
/// against the zero-counting function with its explicit error term.
TruncatedSum zero_sum(int k, double x, const ZeroTable& zeros,
                      std::size_t count = std::numeric_limits<std::size_t>::max(), double sign = kZeroSumSign);

/// sum_{j>=1} sign * x^{-2j-1-k} H_k(1+2j) / (k+1+2j). Requires x > 1.
TruncatedSum trivial_sum(int k, double x, double sign = kZeroSumSign);

/// Residues at s0 = 1..k, zero sum and trivial sum, assembled.
ExplicitFormulaRHS rhs_theorem1(int k, double x, const ZeroTable& zeros, double radius = 0.25,
                                double sign = kZeroSumSign);

/// Main terms as printed for k = 1, 2; UnsupportedError otherwise.
double printed_Pk(int k, double x);

}  // namespace fraczeta
