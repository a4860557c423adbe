#ifndef CLIFFT_MULTIVECTOR_HPP
#define CLIFFT_MULTIVECTOR_HPP

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clifft {

using Complex = std::complex<double>;
using Vector = std::vector<double>;

constexpr int kMaxDim = 8;

// Sign picked up when multiplying the basis blades encoded by bitmasks a and b
// (bit i set <=> generator e_{i+1} present, generators in increasing order).
// Counts the transpositions needed to interleave the two factor lists, plus
// one minus sign per repeated generator (e_i^2 = -1).
inline int blade_sign(unsigned a, unsigned b)
{
    int swaps = 0;
    for (unsigned t = a >> 1; t != 0; t >>= 1)
        swaps += std::popcount(t & b);
    swaps += std::popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

inline std::string blade_name(unsigned mask)
{
    if (mask == 0) return "1";
    std::string s = "e";
    for (int i = 0; i < kMaxDim; ++i)
        if (mask & (1u << i)) s += static_cast<char>('1' + i);
    return s;
}

// Element of Cl(0,m) with complex scalars, stored as a dense array of 2^m
// blade coefficients indexed by bitmask. Immutable use is intended: all
// arithmetic returns new values.
class Multivector {
public:
    explicit Multivector(int dim)
        : dim_(check_dim(dim)), c_(std::size_t(1) << dim)
    {
    }

    static Multivector scalar(int dim, Complex v)
    {
        Multivector r(dim);
        r.c_[0] = v;
        return r;
    }

    static Multivector blade(int dim, unsigned mask, Complex v = 1.0)
    {
        Multivector r(dim);
        if (mask >= r.c_.size()) throw std::invalid_argument("blade mask out of range");
        r.c_[mask] = v;
        return r;
    }

    int dim() const { return dim_; }
    std::size_t size() const { return c_.size(); }

    Complex operator[](unsigned mask) const { return c_[mask]; }
    Complex& operator[](unsigned mask) { return c_[mask]; }

    Complex scalar_part() const { return c_[0]; }

    Multivector& operator+=(const Multivector& o)
    {
        require_same_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    Multivector& operator-=(const Multivector& o)
    {
        require_same_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    Multivector& operator*=(Complex s)
    {
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, Complex s) { return a *= s; }
    friend Multivector operator*(Complex s, Multivector a) { return a *= s; }
    friend Multivector operator*(Multivector a, double s) { return a *= Complex(s); }
    friend Multivector operator*(double s, Multivector a) { return a *= Complex(s); }
    friend Multivector operator-(Multivector a) { return a *= Complex(-1.0); }

    // Geometric product.
    friend Multivector operator*(const Multivector& a, const Multivector& b)
    {
        a.require_same_dim(b);
        Multivector r(a.dim_);
        const std::size_t n = a.c_.size();
        for (unsigned ma = 0; ma < n; ++ma) {
            const Complex ca = a.c_[ma];
            if (ca == 0.0) continue;
            for (unsigned mb = 0; mb < n; ++mb) {
                const Complex cb = b.c_[mb];
                if (cb == 0.0) continue;
                r.c_[ma ^ mb] += double(blade_sign(ma, mb)) * ca * cb;
            }
        }
        return r;
    }

    // Fused acc += s * (a * b); avoids temporaries in hot loops.
    void add_scaled_product(const Multivector& a, const Multivector& b, Complex s)
    {
        const std::size_t n = c_.size();
        for (unsigned ma = 0; ma < n; ++ma) {
            const Complex ca = a.c_[ma];
            if (ca == 0.0) continue;
            for (unsigned mb = 0; mb < n; ++mb) {
                const Complex cb = b.c_[mb];
                if (cb == 0.0) continue;
                c_[ma ^ mb] += double(blade_sign(ma, mb)) * s * ca * cb;
            }
        }
    }

    Multivector grade_part(int k) const
    {
        Multivector r(dim_);
        for (unsigned m = 0; m < c_.size(); ++m)
            if (std::popcount(m) == static_cast<unsigned>(k)) r.c_[m] = c_[m];
        return r;
    }

    // Complex conjugation of every coefficient (an algebra automorphism here,
    // since the structure constants are real).
    Multivector conj() const
    {
        Multivector r(dim_);
        for (unsigned m = 0; m < c_.size(); ++m) r.c_[m] = std::conj(c_[m]);
        return r;
    }

    double max_abs() const
    {
        double v = 0.0;
        for (const auto& x : c_) v = std::max(v, std::abs(x));
        return v;
    }

    double max_abs_imag() const
    {
        double v = 0.0;
        for (const auto& x : c_) v = std::max(v, std::abs(x.imag()));
        return v;
    }

    bool near_zero(double tol) const { return max_abs() <= tol; }

    std::string to_string() const
    {
        std::string s;
        for (unsigned m = 0; m < c_.size(); ++m) {
            if (c_[m] == 0.0) continue;
            if (!s.empty()) s += " + ";
            s += "(" + std::to_string(c_[m].real()) + (c_[m].imag() < 0 ? "" : "+") +
                 std::to_string(c_[m].imag()) + "i)*" + blade_name(m);
        }
        return s.empty() ? "0" : s;
    }

private:
    static int check_dim(int dim)
    {
        if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension must be in [1,8]");
        return dim;
    }

    void require_same_dim(const Multivector& o) const
    {
        if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    }

    int dim_;
    std::vector<Complex> c_;
};

inline double max_abs_diff(const Multivector& a, const Multivector& b)
{
    return (a - b).max_abs();
}

// Grade-1 embedding x -> sum_i x_i e_i.
inline Multivector embed_vector(const Vector& x)
{
    Multivector r(static_cast<int>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) r[1u << i] = x[i];
    return r;
}

inline double inner(const Vector& x, const Vector& y)
{
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm2(const Vector& x) { return inner(x, x); }

inline double norm(const Vector& x) { return std::sqrt(norm2(x)); }

// Grade-2 wedge: sum_{j<k} e_j e_k (x_j y_k - x_k y_j).
inline Multivector wedge(const Vector& x, const Vector& y)
{
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    Multivector r(static_cast<int>(x.size()));
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = j + 1; k < x.size(); ++k)
            r[(1u << j) | (1u << k)] = x[j] * y[k] - x[k] * y[j];
    return r;
}

} // namespace clifft

#endif
