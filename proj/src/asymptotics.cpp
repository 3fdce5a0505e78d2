#include "rgenus/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rgenus/error.hpp"
#include "rgenus/quadrature.hpp"

namespace rgenus {

namespace {

constexpr std::size_t kMaxTerms = 200'000'000;

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

void require_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tol must be positive and finite");
}

// Bound on sum_{k > r} k^{-p} q^k / sqrt(2 pi) for p > 1, 0 < q <= 1.
double tail_bound(std::size_t r, double log_q, double p) {
    const double rr = static_cast<double>(r);
    const double q_next = std::exp(log_q * (rr + 1));
    double bound = q_next * std::pow(rr, 1 - p) / (p - 1);
    if (log_q < 0) {
        bound = std::min(bound, std::pow(rr + 1, -p) * q_next / -std::expm1(log_q));
    }
    return bound / std::sqrt(2 * std::numbers::pi);
}

// The tail bound is only consulted every few terms once r is large; going
// past the first admissible r costs time, never accuracy.
bool check_due(std::size_t r) { return r < 64 || r % 16 == 0; }

// Walks the terms a_r = r^{r-2}/r! x^r with x = c e^{-c}, calling
// visit(r, a_r) until stop(r) says the remaining tail is small enough.
template <typename Visit, typename Stop>
std::size_t walk_terms(double c, Visit&& visit, Stop&& stop) {
    const double x = c * std::exp(-c);
    double a = x;  // r = 1: 1^{-1}/1! x
    for (std::size_t r = 1;; ++r) {
        visit(r, static_cast<long double>(a));
        if (stop(r)) return r;
        if (r >= kMaxTerms || a == 0.0) throw ToleranceNotReached(0.0, std::numeric_limits<double>::infinity());
        // a_{r+1} / a_r = x (1 + 1/r)^{r-2}
        const double rr = static_cast<double>(r);
        a *= x * std::exp((rr - 2.0) * std::log1p(1.0 / rr));
    }
}

}  // namespace

SeriesEval u(double c, double tol) {
    require_finite(c, "c");
    require_tol(tol);
    if (c < 0.0) throw DomainError("u requires c >= 0");
    if (c == 0.0) return {1.0, 1, 0.0};
    const double log_q = std::min(0.0, std::log(c) + 1 - c);
    long double sum = 0;
    double tail = 0;
    const std::size_t r = walk_terms(
        c, [&](std::size_t, long double a) { sum += a; },
        [&](std::size_t k) {
            if (!check_due(k)) return false;
            tail = tail_bound(k, log_q, 2.5) / c;
            return tail <= tol;
        });
    return {static_cast<double>(sum / c), r, static_cast<double>(tail)};
}

SeriesEval u_prime(double c, double tol) {
    require_finite(c, "c");
    require_tol(tol);
    if (!(c > 0.0)) throw DomainError("u_prime requires c > 0");
    const double log_q = std::min(0.0, std::log(c) + 1 - c);
    const long double cc = c;
    const long double slope = (1 - cc) / (cc * cc);
    const long double inv_c2 = 1 / (cc * cc);
    long double sum = 0;
    long double tail = 0;
    const std::size_t r = walk_terms(
        c, [&](std::size_t k, long double a) { sum += slope * static_cast<long double>(k) * a - inv_c2 * a; },
        [&](std::size_t k) {
            if (!check_due(k)) return false;
            tail = static_cast<double>(std::fabs(slope)) * tail_bound(k, log_q, 1.5) +
                   static_cast<double>(inv_c2) * tail_bound(k, log_q, 2.5);
            return tail <= tol;
        });
    return {static_cast<double>(sum), r, static_cast<double>(tail)};
}

SeriesEval mu(double lambda, double tol) {
    require_finite(lambda, "lambda");
    require_tol(tol);
    if (lambda < 0.0) throw DomainError("mu requires lambda >= 0");
    if (lambda == 0.0) return {0.0, 1, 0.0};
    const double scale = 2.0 * lambda;
    const SeriesEval ue = u(scale, std::min(tol, tol * scale));
    return {(ue.value + lambda - 1.0) / scale, ue.truncation_index, ue.tail_bound / scale};
}

double lambda_i(double i, double tol) {
    require_finite(i, "i");
    require_tol(tol);
    if (i < 0.0) throw DomainError("lambda_i requires i >= 0");
    if (i == 0.0) return 0.0;
    const double norm = 1.0 / std::sqrt(8.0 * std::numbers::pi);
    auto weight = [&](double x) { return std::expm1(4.0 * x) * norm; };
    // With y = t^2 the inner integrand is 2 t^{-2} exp(-x^2/(2t^2) - 2t^2).
    const double w_max = weight(i) * i + 1.0;
    const double cut = std::max(tol * 1e-2 / w_max, 1e-300);
    const double t_max = std::sqrt(-std::log(cut) / 2.0);
    auto inner = [&](double x) {
        if (x <= 0.0) return 0.0;
        const double w = weight(x);
        if (w == 0.0) return 0.0;
        auto f = [x](double t) {
            if (t <= 0.0) return 0.0;
            const double t2 = t * t;
            return 2.0 / t2 * std::exp(-x * x / (2.0 * t2) - 2.0 * t2);
        };
        const double inner_tol = 0.25 * tol / (i * w);
        return w * integrate_adaptive(f, 0.0, t_max, inner_tol, 20000).value;
    };
    return integrate_adaptive(inner, 0.0, i, 0.5 * tol, 20000).value;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::planar_subcritical: return "planar_subcritical";
        case Regime::critical_window: return "critical_window";
        case Regime::slightly_supercritical: return "slightly_supercritical";
        case Regime::linear: return "linear";
        case Regime::near_linear: return "near_linear";
        case Regime::power_law_gap: return "power_law_gap";
        case Regime::power_law_boundary: return "power_law_boundary";
        case Regime::dense: return "dense";
    }
    return "unknown";
}

std::string to_string(Contiguity c) {
    switch (c) {
        case Contiguity::contiguous: return "contiguous";
        case Contiguity::not_contiguous: return "not_contiguous";
        case Contiguity::undetermined: return "undetermined";
    }
    return "unknown";
}

RegimePrediction predict_genus(std::uint64_t n, std::uint64_t m, const RegimeThresholds& th, double tol) {
    if (n < 1) throw DomainError("predict_genus requires n >= 1");
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    const double pairs = nd * (nd - 1.0) / 2.0;
    if (md > pairs) throw DomainError("m exceeds C(n,2)");

    RegimePrediction out;
    const double s = md - nd / 2.0;
    const double window = th.critical_window_factor * std::pow(nd, 2.0 / 3.0);
    if (s < -window) {
        out.regime = Regime::planar_subcritical;
        return out;
    }
    if (s <= window) {
        out.regime = Regime::critical_window;
        out.s = s;
        return out;
    }
    if (s <= th.supercritical_max_fraction * nd) {
        out.regime = Regime::slightly_supercritical;
        out.s = s;
        out.lo = out.hi = 8.0 * s * s * s / (3.0 * nd * nd);
        return out;
    }
    const double log_n = std::log(nd);
    if (md < nd * log_n) {
        out.regime = Regime::linear;
        out.lambda = md / nd;
        out.lo = out.hi = mu(md / nd, tol).value * md;
        return out;
    }
    if (md >= th.dense_fraction * pairs) {
        out.regime = Regime::dense;
        out.lo = out.hi = md / 6.0;
        return out;
    }
    const double theta = std::log(md) / log_n - 1.0;
    if (md <= std::pow(nd, th.near_linear_max_exponent)) {
        // j = max{j : m < n^{1+1/j}}
        int j = std::max(1, static_cast<int>(std::ceil(1.0 / theta)) - 1);
        while (md >= std::pow(nd, 1.0 + 1.0 / j) && j > 1) --j;
        while (md < std::pow(nd, 1.0 + 1.0 / (j + 1))) ++j;
        const double delta = 2.0 / (j + 2.0) + nd / md;
        out.regime = Regime::near_linear;
        out.j = j;
        out.lo = std::max(0.0, md / 2.0 * (1.0 - delta));
        out.hi = md / 2.0;
        return out;
    }
    const int jb = static_cast<int>(std::lround(1.0 / theta));
    if (jb >= 1) {
        const double ratio = md / std::pow(nd, 1.0 + 1.0 / jb);
        if (ratio >= 1.0 / th.boundary_band && ratio <= th.boundary_band) {
            out.j = jb;
            if (jb == 1) {
                out.regime = Regime::dense;
                out.lo = out.hi = md / 6.0;
                return out;
            }
            out.regime = Regime::power_law_boundary;
            out.lo = (jb - 1.0) * md / (2.0 * (jb + 1.0));
            out.hi = jb * md / (2.0 * (jb + 2.0));
            return out;
        }
    }
    const int j = std::max(1, static_cast<int>(std::floor(1.0 / theta)));
    out.regime = Regime::power_law_gap;
    out.j = j;
    out.lo = out.hi = j * md / (2.0 * (j + 2.0));
    return out;
}

Contiguity contiguity_verdict(std::uint64_t n, std::optional<std::uint64_t> m, double g, double eps,
                              const RegimeThresholds& th) {
    require_finite(g, "g");
    if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("eps must be positive");
    if (!m) {
        const double threshold = static_cast<double>(n) * static_cast<double>(n) / 24.0;
        if (g >= (1.0 + eps) * threshold) return Contiguity::contiguous;
        if (g <= (1.0 - eps) * threshold) return Contiguity::not_contiguous;
        return Contiguity::undetermined;
    }
    const RegimePrediction p = predict_genus(n, *m, th);
    switch (p.regime) {
        case Regime::planar_subcritical:
        case Regime::critical_window:
            return Contiguity::undetermined;
        case Regime::near_linear:
            if (g >= p.hi) return Contiguity::contiguous;
            if (g <= (1.0 - eps) * p.hi) return Contiguity::not_contiguous;
            return Contiguity::undetermined;
        default:
            if (g >= (1.0 + eps) * p.hi) return Contiguity::contiguous;
            if (g <= (1.0 - eps) * p.lo) return Contiguity::not_contiguous;
            return Contiguity::undetermined;
    }
}

}  // namespace rgenus
