#ifndef CLIFFT_QUADRATURE_HPP
#define CLIFFT_QUADRATURE_HPP

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "clifft/multivector.hpp"

namespace clifft {

struct Rule1D {
    std::vector<double> x, w;
    int size() const { return static_cast<int>(x.size()); }
};

namespace detail {

// Golub-Welsch: nodes and weights from the symmetric tridiagonal Jacobi
// matrix of the orthonormal recurrence. mu0 is the total mass of the weight.
inline Rule1D gauss_from_recurrence(const std::vector<double>& diag,
                                    const std::vector<double>& offdiag, double mu0)
{
    const int n = static_cast<int>(diag.size());
    Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), n);
    Eigen::VectorXd e(n - 1);
    for (int i = 0; i + 1 < n; ++i) e[i] = offdiag[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw std::runtime_error("quadrature eigensolve failed");
    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        r.x[i] = solver.eigenvalues()[i];
        const double v0 = solver.eigenvectors()(0, i);
        r.w[i] = mu0 * v0 * v0;
    }
    return r;
}

} // namespace detail

// Weight (1-x)^a (1+x)^b on [-1,1].
inline Rule1D gauss_jacobi(int n, double a, double b)
{
    if (n < 1) throw std::invalid_argument("rule size must be >= 1");
    std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
    const double apb = a + b;
    diag[0] = (b - a) / (apb + 2.0);
    for (int k = 1; k < n; ++k) {
        const double den = (2.0 * k + apb) * (2.0 * k + apb + 2.0);
        diag[k] = (b * b - a * a) / den;
    }
    for (int k = 1; k < n; ++k) {
        double a2;
        if (k == 1)
            a2 = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + apb) * (2.0 + apb) * (3.0 + apb));
        else
            a2 = 4.0 * k * (k + a) * (k + b) * (k + apb) /
                 ((2.0 * k + apb) * (2.0 * k + apb) * (2.0 * k + apb + 1.0) * (2.0 * k + apb - 1.0));
        off[k - 1] = std::sqrt(a2);
    }
    const double mu0 = std::pow(2.0, apb + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) /
                       std::tgamma(apb + 2.0);
    return detail::gauss_from_recurrence(diag, off, mu0);
}

inline Rule1D gauss_legendre(int n, double a = -1.0, double b = 1.0)
{
    Rule1D r = gauss_jacobi(n, 0.0, 0.0);
    if (a != -1.0 || b != 1.0) {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < n; ++i) {
            r.x[i] = mid + half * r.x[i];
            r.w[i] *= half;
        }
    }
    return r;
}

// Weight x^alpha e^{-x} on [0, inf).
inline Rule1D gauss_laguerre(int n, double alpha)
{
    if (n < 1) throw std::invalid_argument("rule size must be >= 1");
    if (alpha <= -1.0) throw std::invalid_argument("laguerre alpha must be > -1");
    std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k * (k + alpha));
    return detail::gauss_from_recurrence(diag, off, std::tgamma(alpha + 1.0));
}

// Weight e^{-x^2} on (-inf, inf).
inline Rule1D gauss_hermite(int n)
{
    if (n < 1) throw std::invalid_argument("rule size must be >= 1");
    std::vector<double> diag(n, 0.0), off(n > 1 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * k);
    return detail::gauss_from_recurrence(diag, off, std::sqrt(std::numbers::pi));
}

// Rule for int_{-inf}^{inf} g(x) dx, exact for g = poly * e^{-x^2/(2 sigma^2)}.
// The e^{+t^2} factor is folded into the weights.
inline Rule1D hermite_axis_rule(int n, double sigma = 1.0)
{
    Rule1D h = gauss_hermite(n);
    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    const double c = sigma * std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
        r.x[i] = c * h.x[i];
        r.w[i] = c * h.w[i] * std::exp(h.x[i] * h.x[i]);
    }
    return r;
}

enum class GridKind { Interval, Sphere, Radial, FullSpace };
enum class FullSpaceStyle { Tensor, Polar };

// Nodes and positive weights for one of the integration domains used by the
// transforms. Sphere weights are normalized to total 1; Radial rules embed
// the r^{m-1} surface factor; FullSpace reproduces int e^{-|x|^2/2} dx.
struct ProductGrid {
    GridKind kind = GridKind::Interval;
    int dim = 1;                 // ambient dimension m
    std::vector<Vector> nodes;   // Radial/Interval nodes have size-1 vectors
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

inline double sphere_area(int m)
{
    return 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
}

inline ProductGrid interval_rule(int n, double a, double b)
{
    if (n < 2) throw std::invalid_argument("interval rule needs n >= 2");
    Rule1D r = gauss_legendre(n, a, b);
    ProductGrid g;
    g.kind = GridKind::Interval;
    g.dim = 1;
    for (int i = 0; i < n; ++i) {
        g.nodes.push_back({r.x[i]});
        g.weights.push_back(r.w[i]);
    }
    return g;
}

// Normalized-measure rule on S^{m-1}, m in {2,3,4}.
//   m=2: uniform angles (trapezoid, exact for trig degree < resolution)
//   m=3: Gauss-Legendre in cos(theta) x uniform phi
//   m=4: Gauss-Gegenbauer in cos(theta1) x Gauss-Legendre x uniform
inline ProductGrid sphere_rule(int m, int resolution)
{
    if (resolution < 8) throw std::invalid_argument("sphere resolution must be >= 8");
    ProductGrid g;
    g.kind = GridKind::Sphere;
    g.dim = m;
    if (m == 2) {
        const int n = resolution;
        for (int i = 0; i < n; ++i) {
            const double th = 2.0 * std::numbers::pi * i / n;
            g.nodes.push_back({std::cos(th), std::sin(th)});
            g.weights.push_back(1.0 / n);
        }
    } else if (m == 3) {
        const int n1 = resolution, n2 = 2 * resolution;
        Rule1D gl = gauss_legendre(n1);
        for (int i = 0; i < n1; ++i) {
            const double c = gl.x[i], s = std::sqrt(std::max(0.0, 1.0 - c * c));
            const double wi = 0.5 * gl.w[i] / n2;
            for (int j = 0; j < n2; ++j) {
                const double ph = 2.0 * std::numbers::pi * j / n2;
                g.nodes.push_back({s * std::cos(ph), s * std::sin(ph), c});
                g.weights.push_back(wi);
            }
        }
    } else if (m == 4) {
        const int n1 = resolution, n2 = resolution, n3 = 2 * resolution;
        Rule1D gj = gauss_jacobi(n1, 0.5, 0.5); // weight (1-u^2)^{1/2}, mass pi/2
        Rule1D gl = gauss_legendre(n2);
        for (int i = 0; i < n1; ++i) {
            const double u = gj.x[i], su = std::sqrt(std::max(0.0, 1.0 - u * u));
            const double wi = gj.w[i] / (0.5 * std::numbers::pi);
            for (int j = 0; j < n2; ++j) {
                const double v = gl.x[j], sv = std::sqrt(std::max(0.0, 1.0 - v * v));
                const double wij = wi * 0.5 * gl.w[j];
                for (int k = 0; k < n3; ++k) {
                    const double ph = 2.0 * std::numbers::pi * k / n3;
                    g.nodes.push_back({u, su * v, su * sv * std::cos(ph), su * sv * std::sin(ph)});
                    g.weights.push_back(wij / n3);
                }
            }
        }
    } else {
        throw std::invalid_argument("sphere rule supports m in {2,3,4}");
    }
    return g;
}

// Rule for int_0^inf g(r) r^{m-1} dr with g = poly(r^2) * e^{-r^2/(2 scale^2)}
// style decay: generalized Gauss-Laguerre in the r^2 substitution.
inline ProductGrid radial_rule(int m, int n, double scale = 1.0)
{
    if (n < 8) throw std::invalid_argument("radial rule needs n >= 8");
    if (m < 1) throw std::invalid_argument("radial rule needs m >= 1");
    Rule1D la = gauss_laguerre(n, 0.5 * m - 1.0);
    ProductGrid g;
    g.kind = GridKind::Radial;
    g.dim = m;
    const double pref = std::pow(2.0, 0.5 * m - 1.0) * std::pow(scale, m);
    for (int i = 0; i < n; ++i) {
        const double v = la.x[i];
        g.nodes.push_back({scale * std::sqrt(2.0 * v)});
        g.weights.push_back(pref * la.w[i] * std::exp(v));
    }
    return g;
}

// Full-space rule for Gaussian-decay integrands. Tensor: per-axis Hermite
// adapted to e^{-x_i^2/2}; Polar: radial_rule x sphere_rule.
inline ProductGrid fullspace_rule(int m, int n, FullSpaceStyle style, double scale = 1.0,
                                  int sphere_res = 0)
{
    if (n < 8) throw std::invalid_argument("fullspace rule needs n >= 8");
    ProductGrid g;
    g.kind = GridKind::FullSpace;
    g.dim = m;
    if (style == FullSpaceStyle::Tensor) {
        Rule1D axis = hermite_axis_rule(n, scale);
        std::vector<int> idx(m, 0);
        const std::size_t total = [&] {
            std::size_t t = 1;
            for (int i = 0; i < m; ++i) t *= n;
            return t;
        }();
        g.nodes.reserve(total);
        g.weights.reserve(total);
        for (;;) {
            Vector x(m);
            double w = 1.0;
            for (int i = 0; i < m; ++i) {
                x[i] = axis.x[idx[i]];
                w *= axis.w[idx[i]];
            }
            g.nodes.push_back(std::move(x));
            g.weights.push_back(w);
            int i = m - 1;
            while (i >= 0 && ++idx[i] == n) idx[i--] = 0;
            if (i < 0) break;
        }
    } else {
        const int res = sphere_res > 0 ? sphere_res : n;
        ProductGrid rad = radial_rule(m, n, scale);
        ProductGrid sph = sphere_rule(m, res);
        const double area = sphere_area(m);
        for (std::size_t i = 0; i < rad.size(); ++i) {
            const double r = rad.nodes[i][0];
            for (std::size_t j = 0; j < sph.size(); ++j) {
                Vector x(m);
                for (int d = 0; d < m; ++d) x[d] = r * sph.nodes[j][d];
                g.nodes.push_back(std::move(x));
                g.weights.push_back(area * rad.weights[i] * sph.weights[j]);
            }
        }
    }
    return g;
}

inline void grid_to_csv(const ProductGrid& g, std::ostream& os)
{
    const int nd = g.nodes.empty() ? 0 : static_cast<int>(g.nodes[0].size());
    for (int d = 0; d < nd; ++d) os << "x" << (d + 1) << ",";
    os << "w\n";
    char buf[64];
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (int d = 0; d < nd; ++d) {
            std::snprintf(buf, sizeof buf, "%.17g,", g.nodes[i][d]);
            os << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g\n", g.weights[i]);
        os << buf;
    }
}

} // namespace clifft

#endif
