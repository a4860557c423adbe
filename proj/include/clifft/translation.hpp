#ifndef CLIFFT_TRANSLATION_HPP
#define CLIFFT_TRANSLATION_HPP

#include "clifft/transform.hpp"

namespace clifft {

struct TranslationPlan {
    int m = 0;
    Vector y;
    const ProductGrid* grid = nullptr; // spectral-side grid
    KernelMethod method;
};

// ---- spectral-side evaluators ------------------------------------------------

// F_- f at the grid nodes by direct quadrature over the same grid. O(N^2)
// kernel evaluations; intended for the small m=2 grids.
inline std::vector<Multivector> spectral_by_quadrature(const CliffordFunction& f,
                                                       const ProductGrid& grid,
                                                       const KernelMethod& method)
{
    return cft(f, KernelSign::Minus, grid, grid.nodes, method);
}

// F_- f for radial f: the Hankel profile H_lambda f0 evaluated at |xi|,
// tabulated once on a Chebyshev grid.
inline std::vector<double> spectral_radial(const std::function<double(double)>& f0,
                                           const ProductGrid& grid, int n_radial = 64)
{
    const int m = grid.dim;
    const double lambda = 0.5 * (m - 2);
    const ProductGrid radial = radial_rule(m, n_radial);
    const double smax = max_node_norm(grid) + 1.0;
    Chebyshev table(smax, 160, [&](double s) {
        return hankel_radial(f0, lambda, {s}, radial)[0];
    });
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = table(norm(grid.nodes[i]));
    return out;
}

// F_- f for f = f0(r) M_ell (or f0(r) x M_ell) as a sampled real field.
inline RealField spectral_radial_monogenic(const std::function<double(double)>& f0, int ell,
                                           const MvPolynomial& monogenic, bool odd_variant,
                                           const ProductGrid& grid, int n_radial = 64)
{
    const int m = grid.dim;
    const double lambda = 0.5 * (m - 2);
    const double order = odd_variant ? ell + 1 + lambda : ell + lambda;
    const int rdim = odd_variant ? m + 2 * ell + 2 : m + 2 * ell;
    const ProductGrid radial = radial_rule(rdim, n_radial);
    std::vector<double> fr(radial.size());
    for (std::size_t i = 0; i < radial.size(); ++i) fr[i] = f0(radial.nodes[i][0]);
    const double smax = max_node_norm(grid) + 1.0;
    Chebyshev table(smax, 160, [&](double s) {
        double acc = 0.0;
        for (std::size_t i = 0; i < radial.size(); ++i)
            acc += radial.weights[i] * fr[i] *
                   detail::bessel_j_tilde_any(order, radial.nodes[i][0] * s);
        return acc;
    });
    const Complex pref = odd_variant ? Complex(-1.0) * detail::i_pow(m)
                                     : Complex(ell % 2 ? -1.0 : 1.0);
    return sample_real_field(grid, [&](const Vector& xi) {
        Multivector v = monogenic.evaluate(xi);
        if (odd_variant) v = embed_vector(xi) * v;
        return v *= pref * Complex(table(norm(xi)));
    });
}

// ---- synthesis ---------------------------------------------------------------

// (2 pi)^{-m/2} sum_xi w K_-(xi, x_e) P(xi) for even m with the closed-form
// kernel, computed streaming (no kernel storage). Since the even-m kernel is
// real this is simultaneously the inverse-kernel synthesis.
inline std::vector<Multivector> synthesize_even(const RealField& P, const ProductGrid& grid,
                                                const std::vector<Vector>& evals)
{
    const int m = grid.dim;
    if (m % 2 != 0) throw std::invalid_argument("synthesis fast path requires even m");
    const auto pairs = bivector_pairs(m);
    std::vector<unsigned> kmasks{0};
    for (const auto& [j, k] : pairs) kmasks.push_back((1u << j) | (1u << k));
    // sign/mask tables for kernel-component times field-component products
    const std::size_t nk = kmasks.size(), nf = P.masks.size();
    std::vector<double> sgn(nk * nf);
    std::vector<unsigned> tgt(nk * nf);
    for (std::size_t a = 0; a < nk; ++a)
        for (std::size_t b = 0; b < nf; ++b) {
            sgn[a * nf + b] = blade_sign(kmasks[a], P.masks[b]);
            tgt[a * nf + b] = kmasks[a] ^ P.masks[b];
        }
    const double pref = std::pow(2.0 * std::numbers::pi, -0.5 * m);
    std::vector<double> norms2(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) norms2[i] = norm2(grid.nodes[i]);

    std::vector<Multivector> out(evals.size(), Multivector(m));
    detail::parallel_for(evals.size(), [&](std::size_t e) {
        const Vector& x = evals[e];
        const double nx2 = norm2(x);
        std::vector<double> acc(std::size_t(1) << m, 0.0);
        std::vector<double> kcomp(nk);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Vector& xi = grid.nodes[i];
            const double wgt = grid.weights[i];
            if (m == 2) {
                const double p = xi[0] * x[1] - xi[1] * x[0];
                kcomp[0] = std::cos(p);
                kcomp[1] = std::sin(p);
            } else {
                const double s = inner(xi, x);
                const auto parts = detail::closed_even_parts(
                    m, s, std::sqrt(std::max(0.0, norms2[i] * nx2 - s * s)));
                kcomp[0] = parts.ab;
                for (std::size_t b = 0; b < pairs.size(); ++b)
                    kcomp[b + 1] = parts.c * (xi[pairs[b].first] * x[pairs[b].second] -
                                              xi[pairs[b].second] * x[pairs[b].first]);
            }
            for (std::size_t a = 0; a < nk; ++a) {
                const double ka = wgt * kcomp[a];
                if (ka == 0.0) continue;
                for (std::size_t b = 0; b < nf; ++b)
                    acc[tgt[a * nf + b]] += sgn[a * nf + b] * ka * P.comp[b][i];
            }
        }
        Multivector r(m);
        for (unsigned c = 0; c < acc.size(); ++c)
            if (acc[c] != 0.0) r[c] = pref * acc[c];
        out[e] = std::move(r);
    });
    return out;
}

// ---- generalized translation --------------------------------------------------

// tau_y f(x) = (2 pi)^{-m/2} int conj(K_-(xi,x)) K_-(y,xi) F(xi) dxi with
// F = F_- f given at the grid nodes. Odd m is refused: the inversion backing
// this formula is only certified for even m.
inline std::vector<Multivector> translate(const std::vector<Multivector>& spectral,
                                          const TranslationPlan& plan,
                                          const std::vector<Vector>& evals)
{
    const int m = plan.m;
    if (m % 2 != 0)
        throw std::invalid_argument(
            "generalized translation requires even m: the inversion formula backing it is not "
            "certified in odd dimension");
    const ProductGrid& grid = *plan.grid;
    if (spectral.size() != grid.size()) throw std::invalid_argument("spectral size mismatch");
    // P(xi) = K_-(y,xi) F(xi), independent of the eval point
    std::vector<Multivector> P;
    P.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        P.push_back(kernel_minus(plan.y, grid.nodes[i], plan.method).assembled * spectral[i]);

    const double pref = std::pow(2.0 * std::numbers::pi, -0.5 * m);
    std::vector<Multivector> out(evals.size(), Multivector(m));
    detail::parallel_for(evals.size(), [&](std::size_t e) {
        Multivector acc(m);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const KernelValue kv = kernel_minus(grid.nodes[i], evals[e], plan.method);
            acc.add_scaled_product(kv.assembled.conj(), P[i], Complex(grid.weights[i]));
        }
        out[e] = acc *= Complex(pref);
    });
    return out;
}

// Convenience for radial f: scalar spectral values.
inline std::vector<Multivector> translate_radial(const std::vector<double>& spectral,
                                                 const TranslationPlan& plan,
                                                 const std::vector<Vector>& evals)
{
    std::vector<Multivector> F;
    F.reserve(spectral.size());
    for (double v : spectral) F.push_back(Multivector::scalar(plan.m, v));
    return translate(F, plan, evals);
}

// ---- sphere identity -----------------------------------------------------------

// lhs = int_{S^{m-1}} conj(K_-(r eta, x)) K_-(y, r eta) domega(eta)
// rhs = 2^lambda Gamma(lambda+1) Jt_lambda(r |x-y|)
inline std::pair<Multivector, double> sphere_identity_check(double r, const Vector& x,
                                                            const Vector& y,
                                                            const ProductGrid& sphere,
                                                            const KernelMethod& method)
{
    const int m = sphere.dim;
    if (sphere.kind != GridKind::Sphere) throw std::invalid_argument("sphere grid required");
    Multivector lhs(m);
    for (std::size_t i = 0; i < sphere.size(); ++i) {
        Vector node(m);
        for (int d = 0; d < m; ++d) node[d] = r * sphere.nodes[i][d];
        const KernelValue k1 = kernel_minus(node, x, method);
        const KernelValue k2 = kernel_minus(y, node, method);
        lhs.add_scaled_product(k1.assembled.conj(), k2.assembled, Complex(sphere.weights[i]));
    }
    const double lambda = 0.5 * (m - 2);
    Vector d(x);
    for (int i = 0; i < m; ++i) d[i] -= y[i];
    const double u = r * norm(d);
    const double rhs = std::pow(2.0, lambda) * gamma_int_or_half(lambda + 1.0) *
                       detail::bessel_j_tilde_any(lambda, u);
    return {lhs, rhs};
}

// ---- convolution ----------------------------------------------------------------

// Convolution against a radial left factor, evaluated from spectral data:
// conv(x) = (2 pi)^{-m/2} sum_xi w K_-(xi,x) Ff(xi) Fg(xi). This is the
// tau-integral with the y-quadrature folded in (the radial Ff commutes).
inline std::vector<Multivector> convolve_radial_spectral(const std::vector<double>& Ff,
                                                         const RealField& Fg,
                                                         const ProductGrid& grid,
                                                         const std::vector<Vector>& evals)
{
    if (Ff.size() != grid.size()) throw std::invalid_argument("spectral size mismatch");
    RealField P(Fg);
    for (auto& compdata : P.comp)
        for (std::size_t i = 0; i < compdata.size(); ++i) compdata[i] *= Ff[i];
    return synthesize_even(P, grid, evals);
}

// Fully nested convolution (no reordering): conv(x) =
// (2 pi)^{-m/2} sum_y w_y tau_y f(x) g(y). O(N^2) per eval point; m=2 scale.
inline std::vector<Multivector> convolve_direct(const std::vector<Multivector>& spectral_f,
                                                const CliffordFunction& g,
                                                const TranslationPlan& plan,
                                                const std::vector<Vector>& evals)
{
    const ProductGrid& grid = *plan.grid;
    std::vector<Multivector> gy;
    gy.reserve(grid.size());
    for (const auto& node : grid.nodes) gy.push_back(g.eval(node));
    const double pref = std::pow(2.0 * std::numbers::pi, -0.5 * plan.m);
    std::vector<Multivector> out(evals.size(), Multivector(plan.m));
    for (std::size_t yi = 0; yi < grid.size(); ++yi) {
        TranslationPlan shift(plan);
        shift.y = grid.nodes[yi];
        const auto tau = translate(spectral_f, shift, evals);
        for (std::size_t e = 0; e < evals.size(); ++e)
            out[e].add_scaled_product(tau[e], gy[yi], Complex(pref * grid.weights[yi]));
    }
    return out;
}

// phi_t smoothing from spectral data: (2 pi)^{-m/2} int K_-(xi,x) F(xi)
// e^{-t |xi|^2 / 2} dxi. As t drops to 0 this becomes the inversion integral.
inline std::vector<Multivector> gaussian_smooth(const RealField& spectral, double t,
                                                const ProductGrid& grid,
                                                const std::vector<Vector>& evals)
{
    if (t <= 0.0) throw std::invalid_argument("smoothing time must be positive");
    RealField P(spectral);
    for (auto& compdata : P.comp)
        for (std::size_t i = 0; i < compdata.size(); ++i)
            compdata[i] *= std::exp(-0.5 * t * norm2(grid.nodes[i]));
    return synthesize_even(P, grid, evals);
}

} // namespace clifft

#endif
