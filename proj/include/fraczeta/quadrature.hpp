#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace fraczeta {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights for an n-point rule, computed by Newton iteration on
/// P_n. Cached per n; the returned reference stays valid for the program
/// lifetime.
const GaussLegendreRule& gauss_legendre(std::size_t n);

/// Fixed-rule integral of f over [a, b].
template <typename F>
auto integrate_fixed(const GaussLegendreRule& rule, F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    decltype(f(mid)) acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

/// Adaptive Gauss-Kronrod (15 point) integral of a smooth function on
/// [a, b]. Subintervals are bisected until the relative estimate is below
/// tol. Returns the integral; error_estimate receives the Kronrod estimate.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-14, double* error_estimate = nullptr);

/// Adaptive integral split at every integer in (a, b); used for integrands
/// with period-1 kinks such as B_k({t}).
double integrate_per_period(const std::function<double(double)>& f, double a, double b,
                            double tol = 1e-14, double* error_estimate = nullptr);

}  // namespace fraczeta
