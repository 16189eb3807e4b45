#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>

namespace fraczeta {

namespace detail {
inline double abs1(double v) { return std::fabs(v); }
inline double abs1(const std::complex<double>& v) { return std::fabs(v.real()) + std::fabs(v.imag()); }
}  // namespace detail

/// Neumaier-compensated accumulator. Works for real and complex scalars.
template <typename Scalar>
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(Scalar init) { add(init); }

    void add(const Scalar& term) {
        if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
            re_.add(term.real());
            im_.add(term.imag());
        } else {
            const Scalar t = sum_ + term;
            if (detail::abs1(sum_) >= detail::abs1(term))
                comp_ += (sum_ - t) + term;
            else
                comp_ += (term - t) + sum_;
            sum_ = t;
        }
    }

    CompensatedSum& operator+=(const Scalar& term) {
        add(term);
        return *this;
    }

    Scalar value() const {
        if constexpr (std::is_same_v<Scalar, std::complex<double>>)
            return {re_.value(), im_.value()};
        else
            return sum_ + comp_;
    }

private:
    struct Empty {};
    Scalar sum_{};
    Scalar comp_{};
    // complex sums are carried as two independent real accumulators
    std::conditional_t<std::is_same_v<Scalar, std::complex<double>>, CompensatedSum<double>, Empty> re_{}, im_{};
};

/// A truncated series: value, number of terms summed, and a rigorous
/// majorant for the omitted remainder.
struct TruncatedSum {
    double value = 0.0;
    std::size_t terms_used = 0;
    double tail_bound = 0.0;
    std::string note;
};

}  // namespace fraczeta
