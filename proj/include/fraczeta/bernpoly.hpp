#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace fraczeta {

/// Bernoulli numbers B_0..B_max under the B_1 = -1/2 convention.
class BernoulliCache {
public:
    static constexpr std::size_t kDefaultMaxIndex = 64;

    explicit BernoulliCache(std::size_t max_index = kDefaultMaxIndex);

    std::size_t max_index() const noexcept { return values_.size() - 1; }
    const std::vector<double>& values() const noexcept { return values_; }

    /// Throws IndexError beyond max_index.
    double operator()(std::size_t j) const;

private:
    std::vector<double> values_;
};

/// Process-wide default cache (max index 64).
const BernoulliCache& bernoulli_cache();

double bernoulli_number(const BernoulliCache& cache, std::size_t j);

/// B_k(t) = sum_i C(k,i) B_i t^(k-i), Horner form. 0 <= k <= 64.
double bernoulli_poly(std::size_t k, double t);

/// {x} = x - floor(x).
double frac(double x);

/// B_k({x}), k >= 1.
double periodic_bernoulli(std::size_t k, double x);

/// I_k(x) = int_0^x B_k({t}) dt = (B_{k+1}({x}) - B_{k+1}) / (k+1).
double integral_Ik(std::size_t k, double x);

/// max_{0<=u<=1} |I_k(u)|, i.e. the sup norm of I_k.
double integral_Ik_sup(std::size_t k);

/// Sawtooth: {x} - 1/2 off the integers, 0 on them.
double sawtooth_S(double x);

/// Antiderivative of the sawtooth, ({x}^2 - {x}) / 2.
double sdot(double x);

/// Registered test functions for the Euler-Maclaurin self-check.
enum class EmFunction { square, inverse_square, exp_decay };

EmFunction parse_em_function(std::string_view id);
std::string_view em_function_id(EmFunction f);

/// l-th derivative of a registered function at t.
double em_derivative(EmFunction f, std::size_t order, double t);

/// Both sides of the classical Euler-Maclaurin identity.
struct EmSides {
    double integral_side = 0.0;  // ((-1)^k/k!) int_a^b f^(k)(t) B_k({t}) dt, adaptive per period
    double boundary_side = 0.0;  // int f - sum f(n) + boundary Bernoulli terms
};

EmSides em_identity_sides(EmFunction f, double a, double b, std::size_t k);

/// |((-1)^k/k!) int_a^b f^(k) B_k({t}) dt - [int_a^b f - sum_{a<n<=b} f(n)
///  + sum_l ((-1)^l/l!) (f^(l-1)(b) B_l({b}) - f^(l-1)(a) B_l({a}))]|.
/// At integer endpoints B_l({.}) = B_l. Requires 1 <= a < b, 1 <= k <= 6.
double em_identity_residual(EmFunction f, double a, double b, std::size_t k);
double em_identity_residual(std::string_view f_id, double a, double b, std::size_t k);

}  // namespace fraczeta
