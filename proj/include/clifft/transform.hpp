#ifndef CLIFFT_TRANSFORM_HPP
#define CLIFFT_TRANSFORM_HPP

#include <functional>
#include <thread>

#include "clifft/kernel.hpp"
#include "clifft/polynomial.hpp"
#include "clifft/quadrature.hpp"

namespace clifft {

namespace detail {

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (hw == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const unsigned nt = std::min<std::size_t>(hw, n);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += nt) body(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace detail

enum class Parity { Even, Odd };

// Index (parity, j, k, l) into the eigenfunction family: Laguerre degree j,
// monogenic degree k, l-th basis monogenic.
struct BasisIndex {
    Parity parity = Parity::Even;
    int j = 0, k = 0, l = 0;
};

struct CliffordFunction {
    int dim = 0;
    std::function<Multivector(const Vector&)> eval;
};

// Eigenvalue of the transform on the basis family:
//   even parity: (-1)^{j+k} u^k,  odd parity: i^m (-1)^{j+1} u^{k+m-1}
// where u = +1 for the Minus transform and -1 for Plus.
inline Complex expected_eigenvalue(const BasisIndex& idx, KernelSign sign, int m)
{
    const double u = (sign == KernelSign::Minus) ? 1.0 : -1.0;
    if (idx.parity == Parity::Even)
        return Complex(((idx.j + idx.k) % 2 ? -1.0 : 1.0) * std::pow(u, idx.k));
    return detail::i_pow(m) * Complex((idx.j % 2 ? 1.0 : -1.0) * std::pow(u, idx.k + m - 1));
}

// psi_{2j,k,l} = L_j^{m/2+k-1}(|x|^2) M_k^{(l)} e^{-|x|^2/2}
// psi_{2j+1,k,l} = L_j^{m/2+k}(|x|^2) x M_k^{(l)} e^{-|x|^2/2}
struct PsiFunction {
    BasisIndex idx;
    int m = 0;
    double laguerre_order = 0.0;
    MvPolynomial monogenic;

    PsiFunction() : monogenic(1) {}

    Multivector operator()(const Vector& x) const
    {
        const double r2 = norm2(x);
        const double scale = laguerre(idx.j, laguerre_order, r2) * std::exp(-0.5 * r2);
        Multivector v = monogenic.evaluate(x);
        if (idx.parity == Parity::Odd) v = embed_vector(x) * v;
        return v *= Complex(scale);
    }

    CliffordFunction fn() const
    {
        return {m, [*this](const Vector& x) { return (*this)(x); }};
    }
};

inline PsiFunction basis_psi(const BasisIndex& idx, int m)
{
    if (idx.j < 0 || idx.k < 0) throw std::invalid_argument("basis index must be nonnegative");
    const auto basis = monogenic_basis(m, idx.k);
    if (idx.l < 0 || idx.l >= static_cast<int>(basis.size()))
        throw std::invalid_argument("monogenic index l out of range");
    PsiFunction psi;
    psi.idx = idx;
    psi.m = m;
    psi.laguerre_order = 0.5 * m + idx.k - (idx.parity == Parity::Even ? 1.0 : 0.0);
    psi.monogenic = basis[idx.l];
    return psi;
}

// Transform by direct quadrature: (2 pi)^{-m/2} sum_i w_i K(x_i, y) f(x_i),
// with the kernel multiplying from the left and the integration running over
// the kernel's first slot. The grid must match f's decay (Gaussian-type).
inline std::vector<Multivector> cft(const CliffordFunction& f, KernelSign sign,
                                    const ProductGrid& grid, const std::vector<Vector>& evals,
                                    const KernelMethod& method, bool inverse = false)
{
    const int m = f.dim;
    if (grid.dim != m) throw std::invalid_argument("grid dimension mismatch");
    std::vector<Multivector> fx;
    fx.reserve(grid.size());
    for (const auto& node : grid.nodes) fx.push_back(f.eval(node));
    const double pref = std::pow(2.0 * std::numbers::pi, -0.5 * m);
    std::vector<Multivector> out(evals.size(), Multivector(m));
    detail::parallel_for(evals.size(), [&](std::size_t e) {
        Multivector acc(m);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            KernelValue kv = inverse ? kernel_inverse(sign, grid.nodes[i], evals[e], method)
                                     : kernel_eval(sign, grid.nodes[i], evals[e], method);
            acc.add_scaled_product(kv.assembled, fx[i], Complex(grid.weights[i]));
        }
        out[e] = acc *= Complex(pref);
    });
    return out;
}

inline std::vector<Multivector> cft_inverse(const CliffordFunction& f, KernelSign sign,
                                            const ProductGrid& grid,
                                            const std::vector<Vector>& evals,
                                            const KernelMethod& method)
{
    return cft(f, sign, grid, evals, method, true);
}

// ---- batched even-m machinery ----------------------------------------------

// Real multivector-valued function sampled on a grid, stored per blade
// component. Blades whose samples are identically zero are dropped.
struct RealField {
    int dim = 0;
    std::vector<unsigned> masks;
    std::vector<std::vector<double>> comp; // comp[c][node]
};

// Zero a sampled field outside |x| <= r_cut. Used on spectral-side fields:
// the transform of a Gaussian-enveloped function is Gaussian-enveloped, so
// past r_cut the true values are below tolerance while quadrature values
// computed there would be unresolved-oscillation noise.
inline void truncate_field_beyond(RealField& f, const ProductGrid& grid, double r_cut)
{
    const double r2 = r_cut * r_cut;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (norm2(grid.nodes[i]) > r2)
            for (auto& comp : f.comp) comp[i] = 0.0;
}

inline RealField sample_real_field(const ProductGrid& grid,
                                   const std::function<Multivector(const Vector&)>& f,
                                   double imag_tol = 1e-10)
{
    const int m = grid.dim;
    const std::size_t nb = std::size_t(1) << m, n = grid.size();
    std::vector<std::vector<double>> dense(nb);
    std::vector<char> used(nb, 0);
    double max_imag = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Multivector v = f(grid.nodes[i]);
        for (unsigned c = 0; c < nb; ++c) {
            const Complex cc = v[c];
            max_imag = std::max(max_imag, std::abs(cc.imag()));
            scale = std::max(scale, std::abs(cc.real()));
            if (cc.real() != 0.0) {
                if (!used[c]) {
                    used[c] = 1;
                    dense[c].assign(n, 0.0);
                }
                dense[c][i] = cc.real();
            }
        }
    }
    if (max_imag > imag_tol * std::max(scale, 1.0))
        throw std::invalid_argument("field is not real-valued");
    RealField field;
    field.dim = m;
    for (unsigned c = 0; c < nb; ++c)
        if (used[c]) {
            field.masks.push_back(c);
            field.comp.push_back(std::move(dense[c]));
        }
    return field;
}

// Minus-kernel component fields (weights folded in) at a fixed list of eval
// points, for even m with a closed-form kernel method. Since the even-m
// kernel is real and equals its inverse kernel, and K_+(x,y) = K_-(x,-y),
// one instance evaluated at +-y serves both signs and the inverse.
class BatchEvenTransform {
public:
    BatchEvenTransform(const ProductGrid* grid, std::vector<Vector> evals, KernelMethod method)
        : grid_(grid), evals_(std::move(evals)), method_(method), m_(grid->dim)
    {
        if (m_ % 2 != 0) throw std::invalid_argument("batched transform requires even m");
        if (method.type != KernelMethod::Type::Dim2 && method.type != KernelMethod::Type::ClosedEven)
            throw std::invalid_argument("batched transform requires a closed-form kernel method");
        if ((m_ == 2) != (method.type == KernelMethod::Type::Dim2))
            throw std::invalid_argument("kernel method does not match dimension");
        masks_.push_back(0);
        for (const auto& [j, k] : bivector_pairs(m_)) masks_.push_back((1u << j) | (1u << k));
        fields_.resize(evals_.size());
        detail::parallel_for(evals_.size(), [&](std::size_t e) { build_field(e); });
    }

    const std::vector<Vector>& evals() const { return evals_; }
    int dim() const { return m_; }

    // (2 pi)^{-m/2} sum_i w_i K_-(x_i, y_e) f(x_i) for every eval point.
    std::vector<Multivector> apply(const RealField& f) const
    {
        if (f.dim != m_) throw std::invalid_argument("field dimension mismatch");
        std::vector<Multivector> out(evals_.size(), Multivector(m_));
        const double pref = std::pow(2.0 * std::numbers::pi, -0.5 * m_);
        detail::parallel_for(evals_.size(), [&](std::size_t e) {
            Multivector acc(m_);
            const auto& kf = fields_[e];
            const std::size_t n = grid_->size();
            for (std::size_t kc = 0; kc < masks_.size(); ++kc) {
                const double* kd = kf[kc].data();
                for (std::size_t fc = 0; fc < f.masks.size(); ++fc) {
                    const double* fd = f.comp[fc].data();
                    double dot = 0.0;
                    for (std::size_t i = 0; i < n; ++i) dot += kd[i] * fd[i];
                    acc[masks_[kc] ^ f.masks[fc]] +=
                        double(blade_sign(masks_[kc], f.masks[fc])) * dot;
                }
            }
            out[e] = acc *= Complex(pref);
        });
        return out;
    }

private:
    void build_field(std::size_t e)
    {
        const Vector& y = evals_[e];
        const std::size_t n = grid_->size();
        auto& kf = fields_[e];
        kf.assign(masks_.size(), std::vector<double>(n));
        const auto pairs = bivector_pairs(m_);
        for (std::size_t i = 0; i < n; ++i) {
            const Vector& x = grid_->nodes[i];
            const double wgt = grid_->weights[i];
            if (m_ == 2) {
                const double p = x[0] * y[1] - x[1] * y[0];
                kf[0][i] = wgt * std::cos(p);
                kf[1][i] = wgt * std::sin(p);
            } else {
                const double s = inner(x, y);
                const double t2 = norm2(x) * norm2(y) - s * s;
                const auto parts = detail::closed_even_parts(m_, s, std::sqrt(std::max(0.0, t2)));
                kf[0][i] = wgt * parts.ab;
                for (std::size_t b = 0; b < pairs.size(); ++b)
                    kf[b + 1][i] =
                        wgt * parts.c * (x[pairs[b].first] * y[pairs[b].second] -
                                         x[pairs[b].second] * y[pairs[b].first]);
            }
        }
    }

    const ProductGrid* grid_;
    std::vector<Vector> evals_;
    KernelMethod method_;
    int m_;
    std::vector<unsigned> masks_;
    std::vector<std::vector<std::vector<double>>> fields_; // [eval][comp][node]
};

// ---- radial reductions ------------------------------------------------------

// Hankel transform H_l f(s) = int_0^inf f(r) J_l(rs) (rs)^{-l} r^{2l+1} dr.
// The grid must be radial_rule(2l+2, n) so the r^{2l+1} factor sits in the
// weights.
inline std::vector<double> hankel_radial(const std::function<double(double)>& f0, double lambda,
                                         const std::vector<double>& s_points,
                                         const ProductGrid& radial)
{
    if (radial.kind != GridKind::Radial || radial.dim != static_cast<int>(2.0 * lambda + 2.0))
        throw std::invalid_argument("hankel needs a radial rule of dimension 2*lambda+2");
    std::vector<double> fr(radial.size());
    for (std::size_t i = 0; i < radial.size(); ++i) fr[i] = f0(radial.nodes[i][0]);
    std::vector<double> out(s_points.size(), 0.0);
    for (std::size_t q = 0; q < s_points.size(); ++q) {
        double acc = 0.0;
        for (std::size_t i = 0; i < radial.size(); ++i)
            acc += radial.weights[i] * fr[i] *
                   detail::bessel_j_tilde_any(lambda, radial.nodes[i][0] * s_points[q]);
        out[q] = acc;
    }
    return out;
}

// Minus transform of f0(r) M_ell (and of f0(r) x M_ell for the odd variant):
//   F_-(f0 M)(y)   = (-1)^ell M(y)   int r^{m+2 ell-1} f0(r) Jt_{ell+lambda}(r|y|) dr
//   F_-(f0 x M)(y) = -i^m y M(y) int r^{m+2 ell+1} f0(r) Jt_{ell+1+lambda}(r|y|) dr
// both regular at y = 0. Plus transform via evaluation at -y (even m).
inline std::vector<Multivector> cft_radial_monogenic(const std::function<double(double)>& f0,
                                                     int ell, const MvPolynomial& monogenic,
                                                     bool odd_variant, KernelSign sign,
                                                     const std::vector<Vector>& evals,
                                                     int n_radial = 64)
{
    const int m = monogenic.dim();
    if (sign == KernelSign::Plus && m % 2 != 0)
        throw std::invalid_argument("plus transform fast path requires even m");
    const double lambda = 0.5 * (m - 2);
    const double order = odd_variant ? ell + 1 + lambda : ell + lambda;
    const int rdim = odd_variant ? m + 2 * ell + 2 : m + 2 * ell;
    const ProductGrid radial = radial_rule(rdim, n_radial);
    std::vector<double> fr(radial.size());
    for (std::size_t i = 0; i < radial.size(); ++i) fr[i] = f0(radial.nodes[i][0]);

    std::vector<Multivector> out;
    out.reserve(evals.size());
    for (const auto& y0 : evals) {
        Vector y(y0);
        if (sign == KernelSign::Plus)
            for (auto& v : y) v = -v;
        double integral = 0.0;
        const double s = norm(y);
        for (std::size_t i = 0; i < radial.size(); ++i)
            integral += radial.weights[i] * fr[i] *
                        detail::bessel_j_tilde_any(order, radial.nodes[i][0] * s);
        Multivector v = monogenic.evaluate(y);
        if (odd_variant)
            v = Complex(-1.0) * detail::i_pow(m) * (embed_vector(y) * v);
        else
            v *= Complex(ell % 2 ? -1.0 : 1.0);
        out.push_back(v *= Complex(integral));
    }
    return out;
}

// Chebyshev interpolant on [0, b]; used to tabulate smooth radial profiles.
class Chebyshev {
public:
    Chebyshev(double b, int n, const std::function<double(double)>& f) : b_(b), coef_(n)
    {
        std::vector<double> fv(n);
        for (int i = 0; i < n; ++i) {
            const double th = std::numbers::pi * (i + 0.5) / n;
            fv[i] = f(0.5 * b_ * (std::cos(th) + 1.0));
        }
        for (int k = 0; k < n; ++k) {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                s += fv[i] * std::cos(std::numbers::pi * k * (i + 0.5) / n);
            coef_[k] = 2.0 * s / n;
        }
    }

    double operator()(double x) const
    {
        const double u = 2.0 * x / b_ - 1.0;
        double bk1 = 0.0, bk2 = 0.0;
        for (std::size_t k = coef_.size(); k-- > 1;) {
            const double bk = 2.0 * u * bk1 - bk2 + coef_[k];
            bk2 = bk1;
            bk1 = bk;
        }
        return u * bk1 - bk2 + 0.5 * coef_[0];
    }

private:
    double b_;
    std::vector<double> coef_;
};

inline double max_node_norm(const ProductGrid& grid)
{
    double r = 0.0;
    for (const auto& x : grid.nodes) r = std::max(r, norm(x));
    return r;
}

} // namespace clifft

#endif
