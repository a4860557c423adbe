#include <catch2/catch_amalgamated.hpp>

#include "clifft/rng.hpp"
#include "clifft/transform.hpp"
#include "clifft/verify.hpp"

using namespace clifft;

TEST_CASE("expected eigenvalues")
{
    CHECK(expected_eigenvalue({Parity::Even, 0, 0, 0}, KernelSign::Minus, 4) == Complex(1.0));
    CHECK(expected_eigenvalue({Parity::Even, 1, 0, 0}, KernelSign::Minus, 4) == Complex(-1.0));
    // odd parity, j=0, k=0, m=2: i^2 (-1)^1 (+1)^1 = +1
    CHECK(expected_eigenvalue({Parity::Odd, 0, 0, 0}, KernelSign::Minus, 2) == Complex(1.0));
    SECTION("eigenvalue families")
    {
        for (int m : {2, 4})
            for (int j = 0; j <= 3; ++j)
                for (int k = 0; k <= 3; ++k)
                    for (Parity p : {Parity::Even, Parity::Odd})
                        for (KernelSign s : {KernelSign::Minus, KernelSign::Plus}) {
                            const Complex ev = expected_eigenvalue({p, j, k, 0}, s, m);
                            CHECK(std::abs(ev.imag()) < 1e-15);
                            CHECK(std::abs(std::abs(ev.real()) - 1.0) < 1e-15);
                        }
        bool saw_imag = false;
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k)
                for (Parity p : {Parity::Even, Parity::Odd}) {
                    const Complex ev = expected_eigenvalue({p, j, k, 0}, KernelSign::Minus, 3);
                    CHECK(std::abs(std::abs(ev) - 1.0) < 1e-15);
                    const bool axis = std::abs(ev.real()) < 1e-15 || std::abs(ev.imag()) < 1e-15;
                    CHECK(axis); // in {1,-1,i,-i}
                    if (std::abs(ev.imag()) > 0.5) saw_imag = true;
                }
        CHECK(saw_imag);
    }
}

TEST_CASE("basis functions")
{
    const PsiFunction even0 = basis_psi({Parity::Even, 0, 0, 0}, 3);
    const Vector x{0.3, -0.2, 0.5};
    CHECK(max_abs_diff(even0(x), Multivector::scalar(3, std::exp(-0.5 * norm2(x)))) < 1e-15);

    const PsiFunction odd0 = basis_psi({Parity::Odd, 0, 0, 0}, 3);
    CHECK(max_abs_diff(odd0(x), embed_vector(x) * Complex(std::exp(-0.5 * norm2(x)))) < 1e-15);

    const PsiFunction p21 = basis_psi({Parity::Even, 0, 2, 1}, 3);
    CHECK(dirac(p21.monogenic).max_abs_coeff() < 1e-10);

    CHECK_THROWS_AS(basis_psi({Parity::Even, 0, 1, 99}, 3), std::invalid_argument);
}

TEST_CASE("transform of the gaussian is the gaussian")
{
    Rng rng(3);
    SECTION("m=2")
    {
        const ProductGrid grid = fullspace_rule(2, 40, FullSpaceStyle::Tensor);
        CliffordFunction f{2, [](const Vector& x) {
                               return Multivector::scalar(2, std::exp(-0.5 * norm2(x)));
                           }};
        std::vector<Vector> evals;
        for (int i = 0; i < 5; ++i) evals.push_back(rng.ball_point(2, 2.0));
        const auto vals = cft(f, KernelSign::Minus, grid, evals, KernelMethod::dim2());
        for (std::size_t e = 0; e < evals.size(); ++e)
            CHECK(max_abs_diff(vals[e],
                               Multivector::scalar(2, std::exp(-0.5 * norm2(evals[e])))) < 1e-8);
    }
    SECTION("m=4")
    {
        const ProductGrid grid = fullspace_rule(4, 20, FullSpaceStyle::Tensor);
        CliffordFunction f{4, [](const Vector& x) {
                               return Multivector::scalar(4, std::exp(-0.5 * norm2(x)));
                           }};
        std::vector<Vector> evals;
        for (int i = 0; i < 3; ++i) evals.push_back(rng.ball_point(4, 1.5));
        const auto vals = cft(f, KernelSign::Minus, grid, evals, KernelMethod::closed_even());
        for (std::size_t e = 0; e < evals.size(); ++e)
            CHECK(max_abs_diff(vals[e],
                               Multivector::scalar(4, std::exp(-0.5 * norm2(evals[e])))) < 1e-8);
    }
}

TEST_CASE("zero transforms to zero")
{
    const ProductGrid grid = fullspace_rule(2, 16, FullSpaceStyle::Tensor);
    CliffordFunction zero{2, [](const Vector&) { return Multivector(2); }};
    const auto vals = cft(zero, KernelSign::Minus, grid, {{0.5, 0.5}}, KernelMethod::dim2());
    CHECK(vals[0].max_abs() == 0.0);
}

TEST_CASE("first eigenfunctions under the quadrature transform")
{
    const ProductGrid grid = fullspace_rule(2, 40, FullSpaceStyle::Tensor);
    Rng rng(7);
    std::vector<Vector> evals;
    for (int i = 0; i < 8; ++i) evals.push_back(rng.ball_point(2, 1.5));
    for (int l = 0; l < 2; ++l) {
        const PsiFunction psi = basis_psi({Parity::Even, 0, 1, l}, 2);
        const auto vals = cft(psi.fn(), KernelSign::Minus, grid, evals, KernelMethod::dim2());
        for (std::size_t e = 0; e < evals.size(); ++e)
            CHECK(max_abs_diff(vals[e], Complex(-1.0) * psi(evals[e])) < 1e-8);
    }
}

TEST_CASE("batched transform agrees with the generic path")
{
    Rng rng(11);
    const ProductGrid grid = fullspace_rule(2, 24, FullSpaceStyle::Tensor);
    std::vector<Vector> evals;
    for (int i = 0; i < 6; ++i) evals.push_back(rng.ball_point(2, 1.5));
    BatchEvenTransform batch(&grid, evals, KernelMethod::dim2());
    const PsiFunction psi = basis_psi({Parity::Odd, 1, 1, 0}, 2);
    const RealField field = sample_real_field(grid, [&](const Vector& x) { return psi(x); });
    const auto fast = batch.apply(field);
    const auto slow = cft(psi.fn(), KernelSign::Minus, grid, evals, KernelMethod::dim2());
    for (std::size_t e = 0; e < evals.size(); ++e)
        CHECK(max_abs_diff(fast[e], slow[e]) < 1e-12);
}

TEST_CASE("inverse transform round trip on the gaussian")
{
    // psi_{0,0,1}-style smoke check: F^{-1} F psi = psi with honest
    // double quadrature at m=2
    const ProductGrid grid = fullspace_rule(2, 32, FullSpaceStyle::Tensor);
    const PsiFunction psi = basis_psi({Parity::Even, 0, 0, 0}, 2);
    CliffordFunction f = psi.fn();
    // inner transform sampled on the grid
    const auto inner = cft(f, KernelSign::Minus, grid, grid.nodes, KernelMethod::dim2());
    CliffordFunction g{2, [&](const Vector& x) -> Multivector {
                           for (std::size_t i = 0; i < grid.size(); ++i)
                               if (grid.nodes[i] == x) return inner[i];
                           throw std::logic_error("eval off grid");
                       }};
    Rng rng(13);
    std::vector<Vector> evals;
    for (int i = 0; i < 5; ++i) evals.push_back(rng.ball_point(2, 1.2));
    const auto back = cft_inverse(g, KernelSign::Minus, grid, evals, KernelMethod::dim2());
    for (std::size_t e = 0; e < evals.size(); ++e)
        CHECK(max_abs_diff(back[e], psi(evals[e])) < 1e-7);
}

TEST_CASE("hankel transform")
{
    const ProductGrid radial = radial_rule(4, 64);
    const double lambda = 1.0;
    std::vector<double> s{0.0, 0.4, 1.1, 2.0, 3.2};
    SECTION("gaussian is self-reciprocal")
    {
        const auto vals =
            hankel_radial([](double r) { return std::exp(-0.5 * r * r); }, lambda, s, radial);
        for (std::size_t i = 0; i < s.size(); ++i)
            CHECK(vals[i] == Catch::Approx(std::exp(-0.5 * s[i] * s[i])).margin(1e-9));
    }
    SECTION("double application inverts")
    {
        auto f0 = [](double r) { return (1.0 + r * r) * std::exp(-0.5 * r * r); };
        const ProductGrid fine = radial_rule(4, 80);
        const double rmax = max_node_norm(fine) + 1.0;
        Chebyshev table(rmax, 240, [&](double ss) {
            return hankel_radial(f0, lambda, {ss}, fine)[0];
        });
        const auto twice =
            hankel_radial([&](double r) { return table(r); }, lambda, s, fine);
        for (std::size_t i = 0; i < s.size(); ++i)
            CHECK(twice[i] == Catch::Approx(f0(s[i])).margin(1e-8));
    }
    SECTION("zero stays zero")
    {
        const auto vals = hankel_radial([](double) { return 0.0; }, lambda, s, radial);
        for (double v : vals) CHECK(v == 0.0);
    }
    CHECK_THROWS_AS(hankel_radial([](double) { return 0.0; }, 0.5, s, radial),
                    std::invalid_argument);
}

TEST_CASE("radial-monogenic reduction vs full quadrature")
{
    Rng rng(17);
    SECTION("ell = 0 reduces to the hankel transform")
    {
        const auto M0 = monogenic_basis(4, 0)[0];
        std::vector<Vector> evals;
        for (int i = 0; i < 4; ++i) evals.push_back(rng.ball_point(4, 1.5));
        const auto vals = cft_radial_monogenic([](double r) { return std::exp(-0.5 * r * r); }, 0,
                                               M0, false, KernelSign::Minus, evals);
        for (std::size_t e = 0; e < evals.size(); ++e)
            CHECK(max_abs_diff(vals[e],
                               Multivector::scalar(4, std::exp(-0.5 * norm2(evals[e])))) < 1e-9);
    }
    SECTION("m=2, ell=1 against the full transform")
    {
        const ProductGrid grid = fullspace_rule(2, 40, FullSpaceStyle::Tensor);
        const auto basis = monogenic_basis(2, 1);
        std::vector<Vector> evals;
        for (int i = 0; i < 6; ++i) evals.push_back(rng.ball_point(2, 1.5));
        auto f0 = [](double r) { return std::exp(-0.5 * r * r); };
        for (const auto& M : basis) {
            CliffordFunction f{2, [&](const Vector& x) {
                                   return M.evaluate(x) * Complex(f0(norm(x)));
                               }};
            const auto fast =
                cft_radial_monogenic(f0, 1, M, false, KernelSign::Minus, evals);
            const auto slow = cft(f, KernelSign::Minus, grid, evals, KernelMethod::dim2());
            for (std::size_t e = 0; e < evals.size(); ++e)
                CHECK(max_abs_diff(fast[e], slow[e]) < 1e-6);
        }
    }
    SECTION("odd variant, m=2, against the full transform")
    {
        const ProductGrid grid = fullspace_rule(2, 40, FullSpaceStyle::Tensor);
        const auto M0 = monogenic_basis(2, 0)[0];
        std::vector<Vector> evals;
        for (int i = 0; i < 6; ++i) evals.push_back(rng.ball_point(2, 1.5));
        auto f0 = [](double r) { return std::exp(-0.5 * r * r); };
        CliffordFunction f{2, [&](const Vector& x) {
                               return embed_vector(x) * Complex(f0(norm(x)));
                           }};
        const auto fast = cft_radial_monogenic(f0, 0, M0, true, KernelSign::Minus, evals);
        const auto slow = cft(f, KernelSign::Minus, grid, evals, KernelMethod::dim2());
        for (std::size_t e = 0; e < evals.size(); ++e)
            CHECK(max_abs_diff(fast[e], slow[e]) < 1e-6);
    }
    SECTION("zero profile")
    {
        const auto M0 = monogenic_basis(4, 0)[0];
        const auto vals = cft_radial_monogenic([](double) { return 0.0; }, 0, M0, false,
                                               KernelSign::Minus, {Vector{0.5, 0, 0, 0}});
        CHECK(vals[0].max_abs() == 0.0);
    }
}

TEST_CASE("intertwining with the vector variable")
{
    // F_-(x f) = (-1)^{m/2} d_y F_+(f) for even m, f the gaussian
    Rng rng(19);
    const int m = 2;
    const ProductGrid grid = fullspace_rule(m, 36, FullSpaceStyle::Tensor);
    CliffordFunction xf{m, [](const Vector& x) {
                            return embed_vector(x) * Complex(std::exp(-0.5 * norm2(x)));
                        }};
    CliffordFunction f{m, [](const Vector& x) {
                           return Multivector::scalar(2, std::exp(-0.5 * norm2(x)));
                       }};
    const double h = 1e-4;
    for (int trial = 0; trial < 3; ++trial) {
        const Vector y = rng.ball_point(m, 1.2);
        const auto lhs = cft(xf, KernelSign::Minus, grid, {y}, KernelMethod::dim2())[0];
        Multivector rhs(m);
        for (int i = 0; i < m; ++i) {
            Vector yu(y), yd(y);
            yu[i] += h;
            yd[i] -= h;
            const auto up = cft(f, KernelSign::Plus, grid, {yu}, KernelMethod::dim2())[0];
            const auto dn = cft(f, KernelSign::Plus, grid, {yd}, KernelMethod::dim2())[0];
            rhs += Multivector::blade(m, 1u << i) * (up - dn) * Complex(0.5 / h);
        }
        rhs *= Complex((m / 2) % 2 ? -1.0 : 1.0);
        CHECK(max_abs_diff(lhs, rhs) < 1e-5);
    }
}

TEST_CASE("kernel definition lock")
{
    CHECK(verify::kernel_definition_lock_error(2) < 1e-10);
    CHECK(verify::kernel_definition_lock_error(4) < 1e-9);
}

TEST_CASE("eigenvalue engine, small m=2 configuration")
{
    verify::EigenCheckOptions opt;
    opt.m = 2;
    opt.jmax = 1;
    opt.kmax = 1;
    opt.grid_n = 36;
    opt.eval_count = 6;
    const auto res = verify::eigen_check(opt);
    CHECK(res.functions == 12);
    CHECK(res.forward_err < 1e-6);
    CHECK(res.roundtrip_err < 1e-6);
}

TEST_CASE("eigenvalue engine, small m=4 configuration")
{
    verify::EigenCheckOptions opt;
    opt.m = 4;
    opt.jmax = 1;
    opt.kmax = 1;
    opt.grid_n = 14;
    opt.eval_count = 4;
    opt.eval_radius = 1.2;
    const auto res = verify::eigen_check(opt);
    CHECK(res.functions == 20);
    CHECK(res.forward_err < 1e-4);
    CHECK(res.roundtrip_err < 1e-4);
}
