#ifndef CLIFFT_KERNEL_HPP
#define CLIFFT_KERNEL_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "clifft/multivector.hpp"
#include "clifft/quadrature.hpp"
#include "clifft/special_functions.hpp"

namespace clifft {

enum class KernelSign { Minus, Plus };

struct KernelMethod {
    enum class Type { Dim2, ClosedEven, Series, OddIntegral3 };
    Type type = Type::Series;
    int terms = 60;        // Series truncation
    int quad_points = 128; // OddIntegral3 Gauss-Legendre points

    static KernelMethod dim2() { return {Type::Dim2, 60, 128}; }
    static KernelMethod closed_even() { return {Type::ClosedEven, 60, 128}; }
    static KernelMethod series(int n = 60)
    {
        if (n < 20) throw std::invalid_argument("series method needs terms >= 20");
        return {Type::Series, n, 128};
    }
    static KernelMethod odd_integral3(int q = 128)
    {
        if (q < 64) throw std::invalid_argument("odd integral method needs quad_points >= 64");
        return {Type::OddIntegral3, 60, q};
    }
};

// Scalar data derived from a point pair: z = |x||y|, w = <xi,eta> for the
// unit vectors, s = <x,y>, t = |x wedge y|. w is clamped into [-1,1] when the
// overshoot is at floating-point level.
struct KernelParams {
    int m = 0;
    double lambda = 0.0, z = 0.0, w = 0.0, s = 0.0, t = 0.0;

    KernelParams() = default;

    KernelParams(const Vector& x, const Vector& y)
    {
        if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
        m = static_cast<int>(x.size());
        lambda = 0.5 * (m - 2);
        const double nx = norm(x), ny = norm(y);
        z = nx * ny;
        s = inner(x, y);
        if (z > 0.0) {
            w = s / z;
            if (std::abs(w) > 1.0) {
                if (std::abs(w) - 1.0 > 1e-12) throw std::domain_error("cosine overshoot beyond tolerance");
                w = w > 0.0 ? 1.0 : -1.0;
            }
        }
        t = std::sqrt(std::max(0.0, z * z - s * s));
    }
};

inline std::vector<std::pair<int, int>> bivector_pairs(int m)
{
    std::vector<std::pair<int, int>> p;
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k) p.emplace_back(j, k);
    return p;
}

// Kernel value at one point pair: scalar part plus bivector parts (lex order
// over index pairs j < k), and the same data assembled as a Multivector.
struct KernelValue {
    int dim = 0;
    Complex scalar;
    std::vector<Complex> bivector;
    Multivector assembled;

    explicit KernelValue(int m) : dim(m), bivector(std::size_t(m) * (m - 1) / 2), assembled(m) {}

    static KernelValue from_parts(int m, Complex scalar_part, Complex wedge_coef, const Vector& x,
                                  const Vector& y)
    {
        KernelValue v(m);
        v.scalar = scalar_part;
        v.assembled[0] = scalar_part;
        int idx = 0;
        for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k, ++idx) {
                const Complex c = wedge_coef * (x[j] * y[k] - x[k] * y[j]);
                v.bivector[idx] = c;
                v.assembled[(1u << j) | (1u << k)] = c;
            }
        return v;
    }

    KernelValue conj() const
    {
        KernelValue v(dim);
        v.scalar = std::conj(scalar);
        for (std::size_t i = 0; i < bivector.size(); ++i) v.bivector[i] = std::conj(bivector[i]);
        v.assembled = assembled.conj();
        return v;
    }

    double max_component_abs() const
    {
        double r = std::abs(scalar);
        for (const auto& c : bivector) r = std::max(r, std::abs(c));
        return r;
    }
};

namespace detail {

inline Complex i_pow(int m)
{
    switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

} // namespace detail

struct SeriesComponents {
    Complex a, b, c;
};

// Truncated series for the three kernel components at given (w, z):
//   A = 2^{l-1} Gamma(l+1) sum_k (i^m + (-1)^k) z^k Jt_{k+l}(z) C_k^l(w)
//   B = -2^{l-1} Gamma(l)  sum_k (k+l)(i^m - (-1)^k) z^k Jt_{k+l}(z) C_k^l(w)
//   C = -2^l Gamma(l+1)    sum_{k>=1} (i^m + (-1)^k) z^{k-1} Jt_{k+l}(z) C_{k-1}^{l+1}(w)
// with l = (m-2)/2 and Jt the normalized Bessel function. The kernel is
// A + B + (x wedge y) C.
inline SeriesComponents series_components(int m, double w, double z, int n_terms)
{
    if (m < 3) throw std::invalid_argument("series components need m >= 3 (use the m=2 closed form)");
    if (n_terms < 20) throw std::invalid_argument("series needs at least 20 terms");
    if (z > 30.0 + 1e-9) throw std::domain_error("series kernel restricted to z <= 30");
    const double lambda = 0.5 * (m - 2);
    const Complex im = detail::i_pow(m);
    const double ga = gamma_int_or_half(lambda);
    const double prefA = std::pow(2.0, lambda - 1.0) * ga * lambda;
    const double prefB = -std::pow(2.0, lambda - 1.0) * ga;
    const double prefC = -std::pow(2.0, lambda) * ga * lambda;

    // Gegenbauer values by upward recurrence, orders lambda and lambda+1.
    std::vector<double> cl(n_terms + 1), clp(n_terms + 1);
    for (int k = 0; k <= n_terms; ++k) {
        cl[k] = gegenbauer(k, lambda, w);
        clp[k] = gegenbauer(k, lambda + 1.0, w);
    }

    Complex a{}, b{}, c{};
    double zk = 1.0; // z^k
    double sign = 1.0;
    for (int k = 0; k <= n_terms; ++k, sign = -sign) {
        const double jt = detail::bessel_j_tilde_any(k + lambda, z);
        const Complex plus = im + sign, minus = im - sign;
        a += plus * (zk * jt * cl[k]);
        b += (k + lambda) * minus * (zk * jt * cl[k]);
        if (k >= 1) {
            const double zkm1 = (k == 1) ? 1.0 : std::pow(z, k - 1);
            c += plus * (zkm1 * jt * clp[k - 1]);
        }
        zk *= z;
    }
    a *= prefA;
    b *= prefB;
    c *= prefC;

    // Tail refusal: |J_{k+l}(z)| <= (z/2)^{k+l}/Gamma(k+l+1), so the k = N
    // term of each sum is bounded by the quantity below.
    const int n1 = n_terms + 1;
    const double log_tail = (n1 + lambda) * std::log(std::max(z, 1e-300) / 2.0) -
                            std::lgamma(n1 + lambda + 1.0) - lambda * std::log(std::max(z, 1e-300));
    const double geg_bound =
        std::exp(std::lgamma(n1 + 2.0 * lambda + 2.0) - std::lgamma(2.0 * lambda + 2.0) -
                 std::lgamma(n1 + 1.0));
    const double tail = (z == 0.0) ? 0.0
                                   : 2.0 * (n1 + lambda + 1.0) * std::exp(log_tail) * geg_bound *
                                         (std::abs(prefA) + std::abs(prefB) + std::abs(prefC));
    const double mag = std::max({std::abs(a), std::abs(b), std::abs(c), 1.0});
    if (tail > 1e-12 * mag)
        throw std::domain_error("series truncation bound too large at this z; increase terms");
    return {a, b, c};
}

// lambda = 0 components in closed form (the m=2 limit): A vanishes,
// B = cos(z sin theta), C = sin(z sin theta) / (z sin theta).
inline SeriesComponents series_components_lambda0(double w, double z)
{
    const double sigma = std::sqrt(std::max(0.0, 1.0 - w * w));
    const double ts = z * sigma;
    const double b = std::cos(ts);
    const double c = std::abs(ts) < 1e-8 ? 1.0 - ts * ts / 6.0 : std::sin(ts) / ts;
    return {Complex(0.0), Complex(b), Complex(c)};
}

inline KernelValue kernel_series(const Vector& x, const Vector& y, int n_terms = 60)
{
    KernelParams p(x, y);
    const auto comps = series_components(p.m, p.w, p.z, n_terms);
    return KernelValue::from_parts(p.m, comps.a + comps.b, comps.c, x, y);
}

// m=2 closed form: cos(x1 y2 - x2 y1) + e1 e2 sin(x1 y2 - x2 y1).
inline KernelValue kernel_dim2(const Vector& x, const Vector& y)
{
    if (x.size() != 2 || y.size() != 2) throw std::invalid_argument("dim2 kernel needs m = 2");
    const double p = x[0] * y[1] - x[1] * y[0];
    KernelValue v(2);
    v.scalar = std::cos(p);
    v.bivector[0] = std::sin(p);
    v.assembled[0] = v.scalar;
    v.assembled[3] = v.bivector[0];
    return v;
}

namespace detail {

// Closed even-m form evaluated as (scalar part, wedge coefficient):
//   K = pref (A* + B*) + (x wedge y) pref C*,  pref = (-1)^{m/2} sqrt(pi/2).
struct EvenParts {
    double ab, c;
};

inline EvenParts closed_even_parts(int m, double s, double t)
{
    if (m == 4) {
        // pref (A*+B*) = (1-s) sin(t)/t;  pref C* = -s (sin t - t cos t)/t^3
        double sinc, g;
        if (t < 0.5) {
            const double t2 = t * t;
            sinc = 1.0 -
                   t2 / 6.0 *
                       (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0 * (1.0 - t2 / 110.0))));
            g = (1.0 / 3.0) -
                t2 / 30.0 * (1.0 - t2 / 28.0 * (1.0 - t2 / 54.0 * (1.0 - t2 / 88.0)));
        } else {
            const double st = std::sin(t), ct = std::cos(t);
            sinc = st / t;
            g = (st - t * ct) / (t * t * t);
        }
        return {(1.0 - s) * sinc, -s * g};
    }
    const double pref = ((m / 2) % 2 == 0 ? 1.0 : -1.0) * std::sqrt(0.5 * std::numbers::pi);
    const double gm = gamma_int_or_half(0.5 * m);
    double astar = 0.0, bstar = 0.0, cstar = 0.0;
    double twoell = 1.0; // 2^l l!
    for (int l = 0; l <= (m - 2) / 4; ++l) {
        const double coef = gm / (twoell * gamma_int_or_half(0.5 * m - 2.0 * l));
        bstar -= std::pow(s, m / 2 - 1 - 2 * l) * coef * bessel_j_tilde_any(0.5 * (m - 2 * l - 3), t);
        cstar -= std::pow(s, m / 2 - 1 - 2 * l) * coef * bessel_j_tilde_any(0.5 * (m - 2 * l - 1), t);
        twoell *= 2.0 * (l + 1);
    }
    twoell = 1.0;
    for (int l = 0; l <= (m - 3) / 4; ++l) {
        const double coef = gm / (twoell * gamma_int_or_half(0.5 * m - 2.0 * l - 1.0));
        astar += std::pow(s, m / 2 - 2 - 2 * l) * coef * bessel_j_tilde_any(0.5 * (m - 2 * l - 3), t);
        twoell *= 2.0 * (l + 1);
    }
    return {pref * (astar + bstar), pref * cstar};
}

} // namespace detail

// Even dimension m in {4,6,8}: finite Bessel sum form. Regular at s = 0 and
// t = 0 through the normalized Bessel functions.
inline KernelValue kernel_closed_even(const Vector& x, const Vector& y)
{
    KernelParams p(x, y);
    if (p.m % 2 != 0 || p.m < 4 || p.m > 8)
        throw std::invalid_argument("closed form requires even m in [4,8]");
    const auto parts = detail::closed_even_parts(p.m, p.s, p.t);
    return KernelValue::from_parts(p.m, parts.ab, parts.c, x, y);
}

// m=3 kernel pieces from single integrals over u in [-1,1]:
//   A+B = sqrt(pi/(2z)) (U(w,z) + V(-w,z) + i V(w,z))
//   C   = -(1/(lambda z)) d_w A_{1/2} at lambda = 1/2,
//   A_{1/2} = sqrt(pi/(2z)) (U(w,z) - i U(-w,z))/2
// with d_w applied analytically under the integral sign.
struct Odd3Scalar {
    Complex ab; // scalar part A_{1/2} + B_{1/2}
    Complex c;  // wedge coefficient C_{1/2}
};

namespace detail {

struct Odd3Integrals {
    Complex u, v, du; // U, V and d_w U at this w
};

inline Odd3Integrals odd3_integrals(double w, double z, const Rule1D& gl)
{
    const double sigma = std::sqrt(std::max(0.0, 1.0 - w * w));
    Complex u{}, v{}, du{};
    for (int i = 0; i < gl.size(); ++i) {
        const double uu = gl.x[i], wt = gl.w[i];
        const double a = 0.5 * z * (1.0 - uu * uu);
        const Complex osc = std::exp(Complex(0.0, z * uu));
        const double j0 = detail::bessel_j_any(0.0, a * sigma);
        const double j1t = a * detail::bessel_j_tilde_any(1.0, a * sigma); // J_1(a sigma)/sigma
        const double em = std::exp(-a * w), ep = std::exp(a * w);
        u += wt * osc * em * j0;
        v += wt * osc * ep * (1.0 - uu * uu) * (w * j0 - sigma * sigma * j1t);
        du += wt * osc * em * (-a * j0 + a * w * j1t);
    }
    const double c_u = std::sqrt(z / (2.0 * std::numbers::pi));
    const double c_v = std::pow(0.5 * z, 1.5) / std::sqrt(std::numbers::pi);
    return {c_u * u, c_v * v, c_u * du};
}

} // namespace detail

inline Odd3Scalar kernel_odd3_scalar(double w, double z, int quad_points = 128)
{
    if (quad_points < 64) throw std::invalid_argument("odd integral method needs quad_points >= 64");
    if (z <= 1e-14) return {Complex(1.0), Complex(0.0)};
    const Rule1D gl = gauss_legendre(quad_points);
    const auto at_w = detail::odd3_integrals(w, z, gl);
    const auto at_mw = detail::odd3_integrals(-w, z, gl);
    const double pref = std::sqrt(std::numbers::pi / (2.0 * z));
    const Complex ab = pref * (at_w.u + at_mw.v + Complex(0.0, 1.0) * at_w.v);
    const Complex dA = pref * 0.5 * (at_w.du + Complex(0.0, 1.0) * at_mw.du);
    return {ab, -dA / (0.5 * z)};
}

inline KernelValue kernel_odd3(const Vector& x, const Vector& y, int quad_points = 128)
{
    KernelParams p(x, y);
    if (p.m != 3) throw std::invalid_argument("integral kernel is for m = 3");
    const auto sc = kernel_odd3_scalar(p.w, p.z, quad_points);
    return KernelValue::from_parts(3, sc.ab, sc.c, x, y);
}

inline KernelValue kernel_minus(const Vector& x, const Vector& y, const KernelMethod& method)
{
    switch (method.type) {
    case KernelMethod::Type::Dim2: return kernel_dim2(x, y);
    case KernelMethod::Type::ClosedEven: return kernel_closed_even(x, y);
    case KernelMethod::Type::Series: return kernel_series(x, y, method.terms);
    case KernelMethod::Type::OddIntegral3: return kernel_odd3(x, y, method.quad_points);
    }
    throw std::logic_error("unknown kernel method");
}

// K_+(x,y) = conj(K_-(x,-y)); computed by delegation, not a separate series.
inline KernelValue kernel_plus(const Vector& x, const Vector& y, const KernelMethod& method)
{
    Vector my(y);
    for (auto& v : my) v = -v;
    return kernel_minus(x, my, method).conj();
}

inline KernelValue kernel_eval(KernelSign sign, const Vector& x, const Vector& y,
                               const KernelMethod& method)
{
    return sign == KernelSign::Minus ? kernel_minus(x, y, method) : kernel_plus(x, y, method);
}

// Inverse kernels are the complex conjugates of the forward ones.
inline KernelValue kernel_inverse(KernelSign sign, const Vector& x, const Vector& y,
                                  const KernelMethod& method)
{
    return kernel_eval(sign, x, y, method).conj();
}

// max_component |K| / ((1+|x|)(1+|y|))^{(m-2)/2}; the even-m kernel bound.
inline double bound_ratio(const Vector& x, const Vector& y, const KernelMethod& method)
{
    const int m = static_cast<int>(x.size());
    if (m % 2 != 0) throw std::invalid_argument("bound ratio is defined for even m");
    const KernelValue v = kernel_minus(x, y, method);
    const double denom = std::pow((1.0 + norm(x)) * (1.0 + norm(y)), 0.5 * (m - 2));
    return v.max_component_abs() / denom;
}

} // namespace clifft

#endif
