#ifndef CLIFFT_POLYNOMIAL_HPP
#define CLIFFT_POLYNOMIAL_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clifft/multivector.hpp"

namespace clifft {

using Exponents = std::vector<int>;

// Polynomial in x_1..x_m with Multivector coefficients. Terms are kept in a
// map with lexicographic exponent ordering so arithmetic is reproducible;
// exact-zero coefficients are not stored.
class MvPolynomial {
public:
    explicit MvPolynomial(int dim) : dim_(dim) {}

    static MvPolynomial constant(int dim, Complex v)
    {
        return monomial(dim, Exponents(dim, 0), Multivector::scalar(dim, v));
    }

    static MvPolynomial monomial(int dim, const Exponents& e, Multivector coeff)
    {
        if (static_cast<int>(e.size()) != dim) throw std::invalid_argument("exponent size mismatch");
        MvPolynomial p(dim);
        if (coeff.max_abs() != 0.0) p.terms_.emplace(e, std::move(coeff));
        return p;
    }

    // Coordinate variable x_i as a scalar-coefficient polynomial.
    static MvPolynomial variable(int dim, int i)
    {
        Exponents e(dim, 0);
        e[i] = 1;
        return monomial(dim, e, Multivector::scalar(dim, 1.0));
    }

    int dim() const { return dim_; }
    bool empty() const { return terms_.empty(); }
    const std::map<Exponents, Multivector>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Multivector& c)
    {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c.max_abs() != 0.0) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.max_abs() == 0.0) terms_.erase(it);
        }
    }

    MvPolynomial& operator+=(const MvPolynomial& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MvPolynomial& operator-=(const MvPolynomial& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    MvPolynomial& operator*=(Complex s)
    {
        if (s == 0.0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend MvPolynomial operator+(MvPolynomial a, const MvPolynomial& b) { return a += b; }
    friend MvPolynomial operator-(MvPolynomial a, const MvPolynomial& b) { return a -= b; }
    friend MvPolynomial operator*(MvPolynomial a, Complex s) { return a *= s; }
    friend MvPolynomial operator*(Complex s, MvPolynomial a) { return a *= s; }

    // Product with coefficients multiplied in term order (left factor first).
    friend MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b)
    {
        MvPolynomial r(a.dim_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (int i = 0; i < r.dim_; ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    MvPolynomial derivative(int i) const
    {
        MvPolynomial r(dim_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents d(e);
            d[i] -= 1;
            r.add_term(d, double(e[i]) * c);
        }
        return r;
    }

    Multivector evaluate(const Vector& x) const
    {
        Multivector acc(dim_);
        for (const auto& [e, c] : terms_) {
            double v = 1.0;
            for (int i = 0; i < dim_; ++i)
                for (int p = 0; p < e[i]; ++p) v *= x[i];
            for (unsigned mask = 0; mask < c.size(); ++mask) {
                const Complex cc = c[mask];
                if (cc != 0.0) acc[mask] += v * cc;
            }
        }
        return acc;
    }

    int degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    // Degree if every stored term has the same total degree, else -1.
    int homogeneous_degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            const int t = std::accumulate(e.begin(), e.end(), 0);
            if (d < 0)
                d = t;
            else if (t != d)
                return -1;
        }
        return d;
    }

    double max_abs_coeff() const
    {
        double v = 0.0;
        for (const auto& [e, c] : terms_) v = std::max(v, c.max_abs());
        return v;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += "  +  ";
            s += "[" + c.to_string() + "]";
            for (int i = 0; i < dim_; ++i)
                if (e[i] > 0) {
                    s += " x" + std::to_string(i + 1);
                    if (e[i] > 1) s += "^" + std::to_string(e[i]);
                }
        }
        return s;
    }

private:
    int dim_;
    std::map<Exponents, Multivector> terms_;
};

// Dirac operator: sum_i e_i d/dx_i (left Clifford multiplication).
inline MvPolynomial dirac(const MvPolynomial& p)
{
    const int m = p.dim();
    MvPolynomial r(m);
    for (int i = 0; i < m; ++i) {
        const Multivector ei = Multivector::blade(m, 1u << i);
        const MvPolynomial di = p.derivative(i);
        for (const auto& [e, c] : di.terms()) r.add_term(e, ei * c);
    }
    return r;
}

// Left multiplication by the vector variable x = sum_i x_i e_i.
inline MvPolynomial vector_multiply(const MvPolynomial& p)
{
    const int m = p.dim();
    MvPolynomial r(m);
    for (int i = 0; i < m; ++i) {
        const Multivector ei = Multivector::blade(m, 1u << i);
        for (const auto& [e, c] : p.terms()) {
            Exponents d(e);
            d[i] += 1;
            r.add_term(d, ei * c);
        }
    }
    return r;
}

inline MvPolynomial r2_multiply(const MvPolynomial& p)
{
    const int m = p.dim();
    MvPolynomial r(m);
    for (int i = 0; i < m; ++i)
        for (const auto& [e, c] : p.terms()) {
            Exponents d(e);
            d[i] += 2;
            r.add_term(d, c);
        }
    return r;
}

inline MvPolynomial euler(const MvPolynomial& p)
{
    MvPolynomial r(p.dim());
    for (const auto& [e, c] : p.terms()) {
        const int deg = std::accumulate(e.begin(), e.end(), 0);
        if (deg != 0) r.add_term(e, double(deg) * c);
    }
    return r;
}

inline MvPolynomial laplace(const MvPolynomial& p)
{
    const int m = p.dim();
    MvPolynomial r(m);
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < m; ++i) {
            if (e[i] < 2) continue;
            Exponents d(e);
            d[i] -= 2;
            r.add_term(d, double(e[i]) * double(e[i] - 1) * c);
        }
    return r;
}

// Gamma operator: -x d_x - E.
inline MvPolynomial gamma_op(const MvPolynomial& p)
{
    MvPolynomial r = vector_multiply(dirac(p));
    r *= Complex(-1.0);
    r -= euler(p);
    return r;
}

namespace detail {

inline void require_harmonic_homogeneous(const MvPolynomial& h, int k, const char* who)
{
    if (h.empty()) return;
    if (h.homogeneous_degree() != k)
        throw std::invalid_argument(std::string(who) + ": input not homogeneous of the stated degree");
    const double scale = h.max_abs_coeff();
    if (laplace(h).max_abs_coeff() > 1e-9 * std::max(scale, 1.0))
        throw std::invalid_argument(std::string(who) + ": input not harmonic");
}

} // namespace detail

// Splits a degree-k harmonic H into its monogenic part and x times a
// degree-(k-1) monogenic: P1 = 1 + x d_x / (2k+m-2), P2 = -x d_x / (2k+m-2).
// Returns (P1 H, P2 H); their sum is H.
inline std::pair<MvPolynomial, MvPolynomial> fischer_project(const MvPolynomial& h, int k)
{
    detail::require_harmonic_homogeneous(h, k, "fischer_project");
    const int m = h.dim();
    if (k == 0) return {h, MvPolynomial(m)};
    MvPolynomial t = vector_multiply(dirac(h));
    t *= Complex(1.0 / (2.0 * k + m - 2.0));
    MvPolynomial mk = h + t;
    t *= Complex(-1.0);
    return {mk, t};
}

// e^{i phase Gamma} H for harmonic homogeneous H of degree k: the monogenic
// part picks up e^{-i phase k}, the x-monogenic part e^{+i phase (k+m-2)}.
inline MvPolynomial gamma_exp_on_harmonic(const MvPolynomial& h, int k, double phase)
{
    const int m = h.dim();
    auto [f, g] = fischer_project(h, k);
    f *= std::exp(Complex(0.0, -phase * k));
    g *= std::exp(Complex(0.0, phase * (k + m - 2.0)));
    return f + g;
}

inline std::vector<Exponents> monomials_of_degree(int m, int k)
{
    std::vector<Exponents> out;
    Exponents e(m, 0);
    // lexicographic enumeration
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == m - 1) {
            e[pos] = rest;
            out.push_back(e);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            e[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (k >= 0) rec(rec, 0, k);
    return out;
}

// Real scalar harmonic homogeneous polynomials of degree k: nullspace of the
// Laplacian on the monomial basis.
inline std::vector<MvPolynomial> scalar_harmonic_basis(int m, int k)
{
    std::vector<MvPolynomial> out;
    if (k == 0) {
        out.push_back(MvPolynomial::constant(m, 1.0));
        return out;
    }
    if (k == 1) {
        for (int i = 0; i < m; ++i) out.push_back(MvPolynomial::variable(m, i));
        return out;
    }
    const auto monos = monomials_of_degree(m, k);
    const auto rows = monomials_of_degree(m, k - 2);
    std::map<Exponents, int> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = static_cast<int>(r);
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(rows.size(), monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c)
        for (int i = 0; i < m; ++i) {
            if (monos[c][i] < 2) continue;
            Exponents d(monos[c]);
            d[i] -= 2;
            lap(row_index.at(d), c) += double(monos[c][i]) * double(monos[c][i] - 1);
        }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(lap);
    Eigen::MatrixXd ker = lu.kernel();
    for (int c = 0; c < ker.cols(); ++c) {
        MvPolynomial p(m);
        for (std::size_t r = 0; r < monos.size(); ++r)
            if (std::abs(ker(r, c)) > 1e-13)
                p.add_term(monos[r], Multivector::scalar(m, ker(r, c)));
        out.push_back(std::move(p));
    }
    return out;
}

// Basis of spherical monogenics of degree k, built by projecting the scalar
// harmonic basis. Elements are left unnormalized.
inline std::vector<MvPolynomial> monogenic_basis(int m, int k)
{
    if (k < 0) throw std::invalid_argument("monogenic_basis: k must be >= 0");
    if (k == 0) return {MvPolynomial::constant(m, 1.0)};
    std::vector<MvPolynomial> out;
    for (const auto& h : scalar_harmonic_basis(m, k)) out.push_back(fischer_project(h, k).first);
    return out;
}

inline int monogenic_dim(int m, int k)
{
    if (k == 0) return 1;
    if (k == 1) return m;
    const auto n = [&](int kk) {
        return kk < 0 ? 0 : static_cast<int>(monomials_of_degree(m, kk).size());
    };
    return n(k) - n(k - 2);
}

// Harmonic decomposition of a homogeneous p of degree n:
// p = sum_a |x|^{2a} h_{n-2a}. Returns h indexed by a. Uses
// Delta(|x|^{2b} h_d) = 2b(2d + m + 2b - 2) |x|^{2b-2} h_d to back-substitute
// from repeated Laplacians, so no linear solve is needed.
inline std::vector<MvPolynomial> harmonic_components(const MvPolynomial& p)
{
    const int m = p.dim();
    const int n = p.homogeneous_degree();
    if (n < 0) throw std::invalid_argument("harmonic_components: input must be homogeneous");
    const int jmax = n / 2;
    std::vector<MvPolynomial> lap_pows;
    lap_pows.push_back(p);
    for (int j = 1; j <= jmax; ++j) lap_pows.push_back(laplace(lap_pows.back()));

    auto coef = [&](int a, int j) {
        double c = 1.0;
        for (int i = 1; i <= j; ++i) {
            const double b = a - i + 1;
            c *= 2.0 * b * (2.0 * (n - 2 * a) + m + 2.0 * b - 2.0);
        }
        return c;
    };

    std::vector<MvPolynomial> h(jmax + 1, MvPolynomial(m));
    for (int a = jmax; a >= 0; --a) {
        MvPolynomial rhs = lap_pows[a];
        for (int b = a + 1; b <= jmax; ++b) {
            MvPolynomial t = h[b];
            for (int q = 0; q < b - a; ++q) t = r2_multiply(t);
            rhs -= coef(b, a) * t;
        }
        rhs *= Complex(1.0 / coef(a, a));
        h[a] = std::move(rhs);
    }
    return h;
}

} // namespace clifft

#endif
