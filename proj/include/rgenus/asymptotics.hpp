#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace rgenus {

/// A truncated series: value, the index of the last summed term, and a
/// rigorous bound on the discarded tail.
struct SeriesEval {
    double value = 0.0;
    std::size_t truncation_index = 1;
    double tail_bound = 0.0;
};

/// Limiting components per vertex of G(n, cn/2):
///   u(c) = (1/c) sum_{r>=1} r^{r-2}/r! (c e^{-c})^r,  u(0) = 1.
/// Summation stops once the tail bound r^{-5/2} q^r / sqrt(2 pi), with
/// q = c e^{1-c}, summed geometrically or against the r^{-3/2} integral
/// (whichever is smaller), drops below tol.
SeriesEval u(double c, double tol);

/// Termwise derivative of u; requires c > 0.
SeriesEval u_prime(double c, double tol);

/// Limiting genus per edge of G(n, lambda n): (u(2 lambda) + lambda - 1) / (2 lambda).
/// Defined for lambda >= 0 (mu = 0 on [0, 1/2]); the tail bound is the one
/// inherited from u scaled by 1/(2 lambda).
SeriesEval mu(double lambda, double tol);

/// Mean of the limiting Poisson count of short "isolated-looking" cycles:
///   (1/sqrt(8 pi)) int_0^i int_0^inf (e^{4x} - 1) y^{-3/2} exp(-x^2/(2y) - 2y) dy dx,
/// by nested adaptive Gauss-Kronrod with y = t^2 and the y range truncated
/// where exp(-2y) is negligible. Throws ToleranceNotReached.
double lambda_i(double i, double tol);

enum class Regime {
    planar_subcritical,
    critical_window,
    slightly_supercritical,
    linear,
    near_linear,
    power_law_gap,
    power_law_boundary,
    dense,
};

std::string to_string(Regime r);

/// Finite-n cutoffs for the asymptotic regime table. All of them are choices,
/// not theorems.
struct RegimeThresholds {
    /// |m - n/2| <= factor * n^{2/3} is the critical window.
    double critical_window_factor = 1.0;
    /// s = m - n/2 below this fraction of n is "slightly" supercritical.
    double supercritical_max_fraction = 0.05;
    /// near-linear runs from n ln n up to n^{near_linear_max_exponent}.
    double near_linear_max_exponent = 1.05;
    /// m within this factor of n^{1+1/j} is a power-law boundary row.
    double boundary_band = 2.0;
    /// m at least this fraction of C(n,2) is dense.
    double dense_fraction = 0.01;
};

struct RegimePrediction {
    Regime regime = Regime::planar_subcritical;
    double lo = 0.0;
    double hi = 0.0;
    // Only the parameter of the selected row is meaningful.
    std::optional<double> lambda;
    std::optional<double> s;
    std::optional<int> j;

    double midpoint() const noexcept { return 0.5 * (lo + hi); }
};

/// Classifies (n, m) into exactly one row of the genus table and returns the
/// predicted genus interval. Throws DomainError if m > C(n,2) or n < 1.
RegimePrediction predict_genus(std::uint64_t n, std::uint64_t m, const RegimeThresholds& thresholds = {},
                               double tol = 1e-12);

enum class Contiguity { contiguous, not_contiguous, undetermined };

std::string to_string(Contiguity c);

/// With m absent, compares S_g(n) with G(n) at the n^2/24 threshold.
/// Otherwise uses the (n, m) row: contiguous when g >= (1+eps) hi (exactly
/// hi for the near-linear row), not contiguous when g <= (1-eps) lo, and
/// undetermined in between or in rows the thresholds do not cover.
Contiguity contiguity_verdict(std::uint64_t n, std::optional<std::uint64_t> m, double g, double eps,
                              const RegimeThresholds& thresholds = {});

}  // namespace rgenus
