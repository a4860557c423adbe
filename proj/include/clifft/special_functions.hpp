#ifndef CLIFFT_SPECIAL_FUNCTIONS_HPP
#define CLIFFT_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "clifft/quadrature.hpp"

namespace clifft {

struct SpecialFnConfig {
    int series_terms = 40;     // minimum series length before adaptive cutoff
    double switchover_z = 25.0;
};

namespace detail {

inline bool is_half_multiple(double a)
{
    return std::abs(2.0 * a - std::round(2.0 * a)) < 1e-9;
}

inline bool is_integer(double a)
{
    return std::abs(a - std::round(a)) < 1e-9;
}

} // namespace detail

// Gamma at positive integer or half-integer argument, by the exact ladder
// from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
inline double gamma_int_or_half(double a)
{
    if (a <= 0.0 || !detail::is_half_multiple(a))
        throw std::invalid_argument("gamma ladder needs positive integer or half-integer");
    double v, x;
    if (detail::is_integer(a)) {
        v = 1.0;
        x = 1.0;
    } else {
        v = std::sqrt(std::numbers::pi);
        x = 0.5;
    }
    while (x + 0.5 < a) {
        v *= x;
        x += 1.0;
    }
    return v;
}

namespace detail {

// Ascending series J_alpha(z) = sum (-1)^n (z/2)^{2n+alpha} / (n! Gamma(n+alpha+1)),
// compensated summation. Loses accuracy past z ~ 30 from cancellation.
inline double bessel_series(double alpha, double z, const SpecialFnConfig& cfg)
{
    const double q = 0.25 * z * z;
    double term = std::pow(0.5 * z, alpha) / gamma_int_or_half(alpha + 1.0);
    if (z == 0.0) return alpha == 0.0 ? 1.0 : 0.0;
    double sum = 0.0, comp = 0.0;
    const int nmax = std::max(cfg.series_terms, 40 + static_cast<int>(z));
    for (int n = 0; n < nmax + 300; ++n) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        term *= -q / ((n + 1.0) * (n + 1.0 + alpha));
        if (n >= cfg.series_terms && std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

// Spherical Bessel j_n(z) for z beyond the series range: upward recurrence
// when stable, Miller downward otherwise.
inline double spherical_jn(int n, double z)
{
    const double j0 = std::sin(z) / z;
    if (n == 0) return j0;
    const double j1 = j0 / z - std::cos(z) / z;
    if (n == 1) return j1;
    if (n < 0.7 * z) {
        double sm = j0, sc = j1;
        for (int k = 1; k < n; ++k) {
            const double sn = (2.0 * k + 1.0) / z * sc - sm;
            sm = sc;
            sc = sn;
        }
        return sc;
    }
    const int start = n + 25 + static_cast<int>(std::sqrt(40.0 * n));
    double jp = 0.0, jc = 1e-280, at_n = 0.0;
    for (int k = start; k >= 1; --k) {
        const double jm = (2.0 * k + 1.0) / z * jc - jp;
        jp = jc;
        jc = jm;
        if (k - 1 == n) at_n = jc;
        if (std::abs(jc) > 1e250) {
            jp *= 1e-250;
            jc *= 1e-250;
            at_n *= 1e-250;
        }
    }
    // jc now plays j_0, jp plays j_1
    const double scale = std::abs(j0) > std::abs(j1) ? j0 / jc : j1 / jp;
    return at_n * scale;
}

// Large-argument Hankel asymptotic expansion, adequate once alpha^2 is small
// against z (we gate on alpha <= z/4). Valid for any order; for half-integer
// orders the series terminates and the result is exact.
inline double bessel_asymptotic(double alpha, double z)
{
    const double mu = 4.0 * alpha * alpha;
    double p = 0.0, q = 0.0;
    double term = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int j = 0; j < 40; ++j) {
        const double a = std::abs(term);
        if (a > prev) break; // asymptotic tail started growing
        prev = a;
        if (j % 4 == 0)
            p += term;
        else if (j % 4 == 1)
            q += term;
        else if (j % 4 == 2)
            p -= term;
        else
            q -= term;
        term *= (mu - (2.0 * j + 1.0) * (2.0 * j + 1.0)) / (8.0 * z * (j + 1.0));
        if (a < 1e-18) break;
    }
    const double omega = z - 0.5 * alpha * std::numbers::pi - 0.25 * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * std::cos(omega) - q * std::sin(omega));
}

// Integer order, large argument: composite Gauss-Legendre on the integral
// representation J_n(z) = (1/pi) int_0^pi cos(z sin t - n t) dt.
inline double bessel_integer_integral(int n, double z)
{
    static const Rule1D panel = gauss_legendre(32, 0.0, 1.0);
    const int npanels = 8 + static_cast<int>((z + n) / 10.0);
    const double h = std::numbers::pi / npanels;
    double sum = 0.0;
    for (int p = 0; p < npanels; ++p) {
        const double t0 = p * h;
        double acc = 0.0;
        for (int i = 0; i < panel.size(); ++i) {
            const double t = t0 + h * panel.x[i];
            acc += panel.w[i] * std::cos(z * std::sin(t) - n * t);
        }
        sum += h * acc;
    }
    return sum / std::numbers::pi;
}

// Unchecked evaluation, any z >= 0; order must be a multiple of 1/2.
inline double bessel_j_any(double alpha, double z, const SpecialFnConfig& cfg = {})
{
    if (z <= cfg.switchover_z) return bessel_series(alpha, z, cfg);
    if (alpha <= 0.25 * z) return bessel_asymptotic(alpha, z);
    if (is_integer(alpha)) return bessel_integer_integral(static_cast<int>(std::round(alpha)), z);
    const int n = static_cast<int>(std::round(alpha - 0.5));
    return std::sqrt(2.0 * z / std::numbers::pi) * spherical_jn(n, z);
}

inline void check_bessel_args(double alpha, double z)
{
    if (!(z >= 0.0) || z > 100.0) throw std::domain_error("bessel_j: z must be in [0,100]");
    if (!(alpha >= 0.0) || alpha > 60.0) throw std::domain_error("bessel_j: alpha must be in [0,60]");
    if (!is_half_multiple(alpha))
        throw std::domain_error("bessel_j: order must be integer or half-integer");
}

} // namespace detail

inline double bessel_j(double alpha, double z, const SpecialFnConfig& cfg = {})
{
    detail::check_bessel_args(alpha, z);
    if (cfg.series_terms < 10) throw std::invalid_argument("series_terms must be >= 10");
    return detail::bessel_j_any(alpha, z, cfg);
}

namespace detail {

// t^{-alpha} J_alpha(t) by its series in t^2; regular at t=0.
inline double bessel_j_tilde_series(double alpha, double t, const SpecialFnConfig& cfg)
{
    const double q = 0.25 * t * t;
    double term = 1.0 / (std::pow(2.0, alpha) * gamma_int_or_half(alpha + 1.0));
    double sum = 0.0, comp = 0.0;
    const int nmax = std::max(cfg.series_terms, 40 + static_cast<int>(t));
    for (int n = 0; n < nmax + 300; ++n) {
        const double y = term - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        term *= -q / ((n + 1.0) * (n + 1.0 + alpha));
        if (n >= cfg.series_terms && std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

inline double bessel_j_tilde_any(double alpha, double t, const SpecialFnConfig& cfg = {})
{
    if (t <= cfg.switchover_z) return bessel_j_tilde_series(alpha, t, cfg);
    return bessel_j_any(alpha, t, cfg) / std::pow(t, alpha);
}

} // namespace detail

inline double bessel_j_tilde(double alpha, double t, const SpecialFnConfig& cfg = {})
{
    detail::check_bessel_args(alpha, t);
    return detail::bessel_j_tilde_any(alpha, t, cfg);
}

// Gegenbauer C_k^lambda(w) by the three-term recurrence in the degree.
inline double gegenbauer(int k, double lambda, double w)
{
    if (lambda <= 0.0) throw std::domain_error("gegenbauer: lambda must be > 0");
    if (k < 0) return 0.0;
    if (k == 0) return 1.0;
    double pm = 1.0, pc = 2.0 * lambda * w;
    for (int n = 2; n <= k; ++n) {
        const double pn = (2.0 * (n + lambda - 1.0) * w * pc - (n + 2.0 * lambda - 2.0) * pm) / n;
        pm = pc;
        pc = pn;
    }
    return pc;
}

// d/dw C_k^lambda(w) = 2 lambda C_{k-1}^{lambda+1}(w).
inline double gegenbauer_deriv(int k, double lambda, double w)
{
    if (k <= 0) return 0.0;
    return 2.0 * lambda * gegenbauer(k - 1, lambda + 1.0, w);
}

inline double legendre(int k, double w) { return gegenbauer(k, 0.5, w); }

// Generalized Laguerre L_j^alpha(x).
inline double laguerre(int j, double alpha, double x)
{
    if (j < 0) return 0.0;
    if (j == 0) return 1.0;
    double pm = 1.0, pc = 1.0 + alpha - x;
    for (int n = 1; n < j; ++n) {
        const double pn = ((2.0 * n + 1.0 + alpha - x) * pc - (n + alpha) * pm) / (n + 1.0);
        pm = pc;
        pc = pn;
    }
    return pc;
}

} // namespace clifft

#endif
