#pragma once

#include "fraczeta/arith.hpp"
#include "fraczeta/summation.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace fraczeta {

enum class Weight { lambda, mu, mubar };

Weight parse_weight(std::string_view name);
std::string_view weight_name(Weight w);

/// sum_{n<=N} w(n) n^{-p} Sdot(n/x) for (w, p) in {(lambda,2), (mu,2),
/// (mu,3/2), (mubar,2)}. ArgumentError for any other pair.
TruncatedSum lhs_weighted_sdot(const ArithmeticTable& t, Weight w, double p, double x, std::uint64_t n_terms);

/// (1/(2 pi^2)) sum_{2<=n<=N} log(n) n^{-2} (cos(2 pi n/x) - 1).
TruncatedSum rhs_th2_log(double x, std::uint64_t n_terms);

/// (1/(2 pi^2)) (cos(2 pi/x) - 1).
double rhs_th2_mu(double x);

/// (1/(2 pi^2)) sum_{n<=N} Upsilon(n) n^{-2} (cos(2 pi n/x) - 1).
TruncatedSum rhs_th4_upsilon(const ArithmeticTable& t, double x, std::uint64_t n_terms);

/// cos(2 pi y) - 1 evaluated as -2 sin^2(pi {y}).
double cos_minus_one(double y);

/// Ratio between the constant printed in the theorem statements (1/pi^2)
/// and the one the identities actually satisfy (1/(2 pi^2)).
inline constexpr double kPrintedConstantRatio = 2.0;

struct SlopePoint {
    double x = 0.0;
    double value = 0.0;
    double noise_floor = 0.0;
};

struct SlopeFit {
    std::vector<std::pair<double, double>> points;  // (log x, log |value|) kept in the fit
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t dropped = 0;

    /// Decay exponent delta' with value ~ x^{-delta' - 1}.
    double delta_prime() const { return -slope - 1.0; }
};

/// Least-squares line through (log x, log |value|), dropping points with
/// |value| <= 3 noise_floor. InsufficientDataError when fewer than 5 points
/// survive or half or more are dropped.
SlopeFit rh_slope(std::span<const SlopePoint> values);

/// n log-spaced points on [lo, hi].
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

struct RhExploration {
    std::vector<SlopePoint> samples;
    SlopeFit fit;
};

/// Evaluate the mubar-weighted Sdot sum on a log-spaced grid and fit the
/// decay slope; the noise floor is the sum's tail bound at N.
RhExploration rh_explore(const ArithmeticTable& t, double x_min, double x_max, std::size_t points,
                         std::uint64_t n_terms);

}  // namespace fraczeta
