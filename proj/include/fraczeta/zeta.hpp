#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace fraczeta {

using Complex = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// zeta(s) by Euler-Maclaurin summation (reflected through the functional
/// equation when Re s < 0). Supported region |Im s| <= 500, Re s >= -10.
/// Throws PoleError at s = 1 and DomainError outside the region.
Complex zeta_em(Complex s);

/// zeta(s) - 1/(s-1): the entire part of zeta. Finite at s = 1, where it
/// equals Euler's constant.
Complex zeta_regular(Complex s);

/// zeta'(s) from the Cauchy derivative formula (radius 0.05, 32 nodes)
/// applied to zeta_regular, minus 1/(s-1)^2.
Complex zeta_deriv(Complex s);

/// -zeta'(s)/zeta(s). Throws PoleError when |zeta(s)| <= 1e-12.
Complex neg_zeta_log_deriv(Complex s);

/// H_k(s) = (-1)^{k-1} C(-s,k)^{-1} (zeta(s) + 1/(1-s) + sum_{j=1}^k C(-s,j-1) B_j/j).
/// The removable points s = 0, -1, .., -(k-1) are evaluated as limits.
/// 1 <= k <= 4.
Complex Hk_closed(int k, Complex s);

/// H_k(s) = int_1^inf t^{-s-k} B_k({t}) dt, integrated period by period with
/// a 32-node Gauss-Legendre rule, plus an integration-by-parts expansion of
/// the tail. Independent of zeta. Requires Re s > -k, 1 <= k <= 4.
Complex Hk_quadrature(int k, Complex s);

struct ZeroEntry {
    std::size_t index = 0;
    double gamma = 0.0;
    double residual = 0.0;
    double re_deviation = 0.0;
};

struct ZeroTable {
    std::vector<ZeroEntry> entries;
    std::string source;
    bool refined = false;
};

/// Parse a zeros CSV (header "index,gamma"). Throws IoError if unreadable,
/// FormatError on parse failure, empty data or non-increasing ordinates.
ZeroTable load_zero_table(const std::filesystem::path& path);
ZeroTable parse_zero_table(const std::string& text, std::string source = "<memory>");

/// Newton iteration s <- s - zeta(s)/zeta'(s) from 1/2 + i seed_gamma,
/// unconstrained in the plane. Throws RefinementError on divergence.
ZeroEntry refine_zero(double seed_gamma);

/// Refine the first `count` entries (all if count == 0) and validate the
/// result. Throws FormatError naming the violated invariant.
ZeroTable refine_table(const ZeroTable& seeds, std::size_t count = 0);

/// Serialize as zeros CSV; gamma written with 17 significant digits.
std::string format_zero_table(const ZeroTable& table);

}  // namespace fraczeta
