#ifndef CLIFFT_VERIFY_HPP
#define CLIFFT_VERIFY_HPP

#include <chrono>
#include <json.hpp>

#include "clifft/rng.hpp"
#include "clifft/translation.hpp"

namespace clifft::verify {

struct CheckRecord {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    bool overall() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name},
                           {"max_error", c.max_error},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass},
                           {"seconds", c.seconds}});
        return {{"suite", suite}, {"checks", arr}, {"pass", overall()}};
    }
};

struct VerifyConfig {
    std::uint64_t seed = 42;
    int samples = 100;
    int dim = 0;       // 0: suite default
    int grid_n = 0;    // 0: suite default
    int terms = 60;
    double tol = 0.0;  // 0: per-check defaults
};

class SuiteRunner {
public:
    explicit SuiteRunner(std::string name) { report_.suite = std::move(name); }

    // err_fn returns the measured maximum error; pass iff err <= tol.
    void check(const std::string& name, double tol, const std::function<double()>& err_fn)
    {
        CheckRecord rec;
        rec.name = name;
        rec.tolerance = tol;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            rec.max_error = err_fn();
            rec.pass = rec.max_error <= tol;
        } catch (const std::exception& ex) {
            rec.max_error = std::numeric_limits<double>::infinity();
            rec.pass = false;
            rec.name += std::string(" [exception: ") + ex.what() + "]";
        }
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.checks.push_back(rec);
    }

    // for witness-style checks where the measured quantity must EXCEED a bound
    void check_at_least(const std::string& name, double bound, const std::function<double()>& fn)
    {
        CheckRecord rec;
        rec.name = name;
        rec.tolerance = bound;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            rec.max_error = fn();
            rec.pass = rec.max_error > bound;
        } catch (const std::exception& ex) {
            rec.max_error = 0.0;
            rec.pass = false;
            rec.name += std::string(" [exception: ") + ex.what() + "]";
        }
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.checks.push_back(rec);
    }

    VerificationReport take() { return std::move(report_); }

private:
    VerificationReport report_;
};

// ---- shared numerical checks ---------------------------------------------------

inline MvPolynomial random_poly(Rng& rng, int m, int max_deg = 3, int n_terms = 4)
{
    MvPolynomial p(m);
    for (int t = 0; t < n_terms; ++t) {
        Exponents e(m, 0);
        for (int i = 0; i < m; ++i) e[i] = int(rng.next_u64() % (max_deg + 1));
        Multivector c(m);
        for (unsigned mask = 0; mask < c.size(); ++mask)
            c[mask] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        p.add_term(e, c);
    }
    return p;
}

inline double poly_dist(const MvPolynomial& a, const MvPolynomial& b)
{
    MvPolynomial d = a;
    d -= b;
    return d.max_abs_coeff();
}

// All ten operator relations of the osp(1|2) family on random polynomials.
inline double osp_relations_error(std::uint64_t seed, int n_polys)
{
    Rng rng(seed);
    double worst = 0.0;
    for (int m = 2; m <= 4; ++m)
        for (int trial = 0; trial < n_polys; ++trial) {
            const MvPolynomial p = random_poly(rng, m);
            const double scale = std::max(1.0, p.max_abs_coeff());
            const auto X = [](const MvPolynomial& q) { return vector_multiply(q); };
            const auto D = [](const MvPolynomial& q) { return dirac(q); };
            const auto R2 = [](const MvPolynomial& q) { return r2_multiply(q); };
            const auto L = [](const MvPolynomial& q) { return laplace(q); };
            const auto Em = [m](const MvPolynomial& q) {
                MvPolynomial r = euler(q);
                r += Complex(0.5 * m) * q;
                return r;
            };
            const double errs[] = {
                poly_dist(Complex(2.0) * X(X(p)), Complex(-2.0) * R2(p)),
                poly_dist(Complex(2.0) * D(D(p)), Complex(-2.0) * L(p)),
                poly_dist(X(D(p)) + D(X(p)), Complex(-2.0) * Em(p)),
                poly_dist(Em(D(p)) - D(Em(p)), Complex(-1.0) * D(p)),
                poly_dist(R2(D(p)) - D(R2(p)), Complex(-2.0) * X(p)),
                poly_dist(Em(X(p)) - X(Em(p)), X(p)),
                poly_dist(L(X(p)) - X(L(p)), Complex(2.0) * D(p)),
                poly_dist(Em(L(p)) - L(Em(p)), Complex(-2.0) * L(p)),
                poly_dist(L(R2(p)) - R2(L(p)), Complex(4.0) * Em(p)),
                poly_dist(Em(R2(p)) - R2(Em(p)), Complex(2.0) * R2(p)),
            };
            for (double e : errs) worst = std::max(worst, e / scale);
        }
    return worst;
}

// Kernel definition lock: compare the closed-form kernel against
// e^{i pi/2 Gamma_y} applied term by term to the Taylor series of
// e^{-i <x,y>}, using only the polynomial machinery.
inline double kernel_definition_lock_error(int m, int taylor_terms = 18)
{
    Rng rng(977);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const Vector x = rng.ball_point(m, 0.9), y = rng.ball_point(m, 0.9);
        // <x,y> as a polynomial in y with numeric x
        MvPolynomial ip(m);
        for (int i = 0; i < m; ++i) {
            Exponents e(m, 0);
            e[i] = 1;
            ip.add_term(e, Multivector::scalar(m, x[i]));
        }
        Multivector acc(m);
        MvPolynomial power = MvPolynomial::constant(m, 1.0);
        double factorial = 1.0;
        for (int n = 0; n <= taylor_terms; ++n) {
            if (n > 0) {
                power = power * ip;
                factorial *= n;
            }
            const Complex coef = std::pow(Complex(0.0, -1.0), n) / factorial;
            const auto comps = harmonic_components(power);
            for (std::size_t a = 0; a < comps.size(); ++a) {
                if (comps[a].empty()) continue;
                const int deg = n - 2 * static_cast<int>(a);
                const MvPolynomial twisted =
                    gamma_exp_on_harmonic(comps[a], deg, 0.5 * std::numbers::pi);
                const double r2 = norm2(y);
                double r2a = 1.0;
                for (std::size_t q = 0; q < a; ++q) r2a *= r2;
                acc += (coef * r2a) * twisted.evaluate(y);
            }
        }
        const KernelValue closed = (m == 2) ? kernel_dim2(x, y) : kernel_closed_even(x, y);
        worst = std::max(worst, max_abs_diff(acc, closed.assembled));
    }
    return worst;
}

// ---- eigenfunction machinery (criterion 7 engine) -------------------------------

struct EigenCheckOptions {
    int m = 2;
    int jmax = 2, kmax = 2;
    int grid_n = 40;
    int eval_count = 20;
    double eval_radius = 1.5;
    std::uint64_t seed = 42;
    bool roundtrip = true;
};

struct EigenCheckResult {
    double forward_err = 0.0;   // max relative sup-norm error over the family
    double roundtrip_err = 0.0;
    int functions = 0;
};

inline EigenCheckResult eigen_check(const EigenCheckOptions& opt)
{
    const int m = opt.m;
    if (m != 2 && m != 4) throw std::invalid_argument("eigen check supports m in {2,4}");
    const KernelMethod method = m == 2 ? KernelMethod::dim2() : KernelMethod::closed_even();
    const ProductGrid grid = fullspace_rule(m, opt.grid_n, FullSpaceStyle::Tensor);

    Rng rng(opt.seed);
    std::vector<Vector> evals;
    for (int e = 0; e < opt.eval_count; ++e) evals.push_back(rng.ball_point(m, opt.eval_radius));
    std::vector<Vector> all_evals = evals;
    for (const auto& y : evals) {
        Vector neg(y);
        for (auto& v : neg) v = -v;
        all_evals.push_back(neg);
    }
    BatchEvenTransform batch(&grid, all_evals, method);

    // m=2 roundtrip: honest double quadrature needs the inner transform on the
    // grid itself, for both signs.
    std::unique_ptr<BatchEvenTransform> inner_minus, inner_plus;
    if (opt.roundtrip && m == 2) {
        std::vector<Vector> neg_nodes = grid.nodes;
        for (auto& v : neg_nodes)
            for (auto& c : v) c = -c;
        inner_minus = std::make_unique<BatchEvenTransform>(&grid, grid.nodes, method);
        inner_plus = std::make_unique<BatchEvenTransform>(&grid, neg_nodes, method);
    }

    EigenCheckResult res;
    const std::size_t ne = evals.size();
    for (int k = 0; k <= opt.kmax; ++k) {
        const auto basis = monogenic_basis(m, k);
        for (int l = 0; l < static_cast<int>(basis.size()); ++l)
            for (Parity parity : {Parity::Even, Parity::Odd})
                for (int j = 0; j <= opt.jmax; ++j) {
                    const BasisIndex idx{parity, j, k, l};
                    const PsiFunction psi = basis_psi(idx, m);
                    const RealField field =
                        sample_real_field(grid, [&](const Vector& x) { return psi(x); });
                    const auto vals = batch.apply(field);

                    std::vector<Multivector> psi_at(ne, Multivector(m));
                    double psi_scale = 0.0;
                    for (std::size_t e = 0; e < ne; ++e) {
                        psi_at[e] = psi(evals[e]);
                        psi_scale = std::max(psi_scale, psi_at[e].max_abs());
                    }
                    ++res.functions;

                    for (KernelSign sign : {KernelSign::Minus, KernelSign::Plus}) {
                        const Complex eig = expected_eigenvalue(idx, sign, m);
                        const std::size_t off = sign == KernelSign::Minus ? 0 : ne;
                        double err = 0.0;
                        for (std::size_t e = 0; e < ne; ++e)
                            err = std::max(err,
                                           max_abs_diff(vals[off + e], eig * psi_at[e]));
                        res.forward_err = std::max(res.forward_err, err / psi_scale);
                    }

                    if (!opt.roundtrip) continue;

                    if (m == 2) {
                        for (KernelSign sign : {KernelSign::Minus, KernelSign::Plus}) {
                            const auto& inner =
                                sign == KernelSign::Minus ? *inner_minus : *inner_plus;
                            const auto gvals = inner.apply(field);
                            // spectral samples, repacked as a component field
                            RealField gf;
                            gf.dim = m;
                            std::vector<std::vector<double>> dense(std::size_t(1) << m);
                            for (unsigned c = 0; c < dense.size(); ++c)
                                dense[c].assign(grid.size(), 0.0);
                            for (std::size_t i = 0; i < grid.size(); ++i)
                                for (unsigned c = 0; c < dense.size(); ++c)
                                    dense[c][i] = gvals[i][c].real();
                            for (unsigned c = 0; c < dense.size(); ++c) {
                                bool nz = false;
                                for (double v : dense[c])
                                    if (v != 0.0) {
                                        nz = true;
                                        break;
                                    }
                                if (nz) {
                                    gf.masks.push_back(c);
                                    gf.comp.push_back(std::move(dense[c]));
                                }
                            }
                            // Beyond ~sqrt(2n) the inner rule cannot resolve
                            // the kernel oscillation; the true spectral values
                            // there are Gaussian-small, so cut them.
                            truncate_field_beyond(gf, grid, 0.9 * std::sqrt(2.0 * opt.grid_n));
                            const auto back = batch.apply(gf);
                            const std::size_t off = sign == KernelSign::Minus ? 0 : ne;
                            double err = 0.0;
                            for (std::size_t e = 0; e < ne; ++e)
                                err = std::max(err, max_abs_diff(back[off + e], psi_at[e]));
                            res.roundtrip_err = std::max(res.roundtrip_err, err / psi_scale);
                        }
                    } else {
                        // inner transform via the radial-monogenic reduction
                        const double order = psi.laguerre_order;
                        auto f0 = [&](double r) {
                            return laguerre(j, order, r * r) * std::exp(-0.5 * r * r);
                        };
                        RealField gminus = spectral_radial_monogenic(
                            f0, k, psi.monogenic, parity == Parity::Odd, grid);
                        // radial quadrature certified out to |xi| ~ 11
                        truncate_field_beyond(gminus, grid, 11.0);
                        const auto back = batch.apply(gminus);
                        // F_+ psi(xi) = F_- psi(-xi) = parity_sign * F_- psi(xi)
                        const double psign =
                            ((parity == Parity::Even ? k : k + 1) % 2) ? -1.0 : 1.0;
                        for (KernelSign sign : {KernelSign::Minus, KernelSign::Plus}) {
                            const std::size_t off = sign == KernelSign::Minus ? 0 : ne;
                            const double scale = sign == KernelSign::Minus ? 1.0 : psign;
                            double err = 0.0;
                            for (std::size_t e = 0; e < ne; ++e)
                                err = std::max(err, max_abs_diff(Complex(scale) * back[off + e],
                                                                 psi_at[e]));
                            res.roundtrip_err = std::max(res.roundtrip_err, err / psi_scale);
                        }
                    }
                }
    }
    return res;
}

} // namespace clifft::verify

#endif
