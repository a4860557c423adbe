#include <catch2/catch_amalgamated.hpp>

#include "clifft/quadrature.hpp"
#include "clifft/rng.hpp"
#include "clifft/special_functions.hpp"

using namespace clifft;
using std::numbers::pi;

TEST_CASE("gamma ladder")
{
    CHECK(gamma_int_or_half(1.0) == 1.0);
    CHECK(gamma_int_or_half(5.0) == 24.0);
    CHECK(gamma_int_or_half(0.5) == Catch::Approx(std::sqrt(pi)).epsilon(1e-15));
    CHECK(gamma_int_or_half(2.5) == Catch::Approx(0.75 * std::sqrt(pi)).epsilon(1e-15));
    for (double a = 0.5; a <= 20.0; a += 0.5)
        CHECK(gamma_int_or_half(a) == Catch::Approx(std::tgamma(a)).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_int_or_half(0.25), std::invalid_argument);
}

TEST_CASE("bessel basics")
{
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(0.5, 0.5 * pi) == Catch::Approx(2.0 / pi).epsilon(1e-13));
    // integral oracle (1/pi) int_0^pi cos(z sin t) dt at z = 2
    const Rule1D gl = gauss_legendre(64, 0.0, pi);
    double oracle = 0.0;
    for (int i = 0; i < gl.size(); ++i) oracle += gl.w[i] * std::cos(2.0 * std::sin(gl.x[i]));
    oracle /= pi;
    CHECK(bessel_j(0.0, 2.0) == Catch::Approx(oracle).epsilon(1e-10));
    CHECK_THROWS_AS(bessel_j(0.0, 101.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(61.0, 1.0), std::domain_error);
}

TEST_CASE("bessel against the finite integral representation")
{
    // J_a(z) = (z/2)^a / (Gamma(a+1/2) Gamma(1/2)) int_{-1}^{1} e^{izu} (1-u^2)^{a-1/2} du,
    // with the endpoint weight handled by Gauss-Jacobi.
    for (double alpha : {0.0, 1.0, 1.5, 2.5, 4.0}) {
        const Rule1D gj = gauss_jacobi(300, alpha - 0.5, alpha - 0.5);
        for (double z : {0.5, 2.0, 8.0, 20.0, 40.0, 75.0}) {
            Complex integral = 0.0;
            for (int i = 0; i < gj.size(); ++i)
                integral += gj.w[i] * std::exp(Complex(0.0, z * gj.x[i]));
            const double expect = std::pow(0.5 * z, alpha) /
                                  (gamma_int_or_half(alpha + 0.5) * std::sqrt(pi)) *
                                  integral.real();
            CHECK(bessel_j(alpha, z) == Catch::Approx(expect).margin(2e-11));
        }
    }
}

TEST_CASE("branch consistency around the switchover")
{
    // The large-argument branches must join the series up to the series' own
    // cancellation error, which is about e^z * eps past the switchover.
    SpecialFnConfig lo;             // default switchover 25
    SpecialFnConfig hi;
    hi.switchover_z = 40.0;         // force the series a bit further out
    for (double alpha : {0.0, 1.0, 2.0, 0.5, 1.5, 3.5})
        for (double z : {26.0, 28.0, 30.0}) {
            const double a = bessel_j(alpha, z, lo);
            const double b = bessel_j(alpha, z, hi);
            CHECK(a == Catch::Approx(b).margin(3e-5));
        }
}

TEST_CASE("normalized bessel")
{
    for (double alpha : {0.0, 0.5, 1.0, 1.5, 3.0})
        CHECK(bessel_j_tilde(alpha, 0.0) ==
              Catch::Approx(1.0 / (std::pow(2.0, alpha) * gamma_int_or_half(alpha + 1.0)))
                  .epsilon(1e-14));
    for (double t : {0.1, 1.0, 3.0})
        CHECK(bessel_j_tilde(0.5, t) ==
              Catch::Approx(std::sqrt(2.0 / pi) * std::sin(t) / t).epsilon(1e-13));
    CHECK(bessel_j_tilde(2.0, 3.0) == Catch::Approx(bessel_j(2.0, 3.0) / 9.0).epsilon(1e-13));
}

TEST_CASE("gegenbauer")
{
    Rng rng(17);
    CHECK(gegenbauer(0, 1.3, 0.4) == 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double lam = rng.uniform(0.3, 3.0), w = rng.uniform(-1.0, 1.0);
        CHECK(gegenbauer(1, lam, w) == Catch::Approx(2.0 * lam * w).epsilon(1e-13));
        const int n = 2 + int(rng.next_u64() % 8);
        // (lam+n)/lam C_n^lam = C_n^{lam+1} - C_{n-2}^{lam+1}
        const double lhs = (lam + n) / lam * gegenbauer(n, lam, w);
        const double rhs = gegenbauer(n, lam + 1.0, w) - gegenbauer(n - 2, lam + 1.0, w);
        CHECK(lhs == Catch::Approx(rhs).margin(1e-11));
        // w C_{n-1}^{lam+1} = n/(2(n+lam)) C_n^{lam+1} + (n+2 lam)/(2(n+lam)) C_{n-2}^{lam+1}
        const double lhs2 = w * gegenbauer(n - 1, lam + 1.0, w);
        const double rhs2 = n / (2.0 * (n + lam)) * gegenbauer(n, lam + 1.0, w) +
                            (n + 2.0 * lam) / (2.0 * (n + lam)) * gegenbauer(n - 2, lam + 1.0, w);
        CHECK(lhs2 == Catch::Approx(rhs2).margin(1e-12));
        // C_n^{lam+1} = sum_k (lam + n - 2k)/lam C_{n-2k}^lam
        double acc = 0.0;
        for (int k = 0; 2 * k <= n; ++k)
            acc += (lam + n - 2.0 * k) / lam * gegenbauer(n - 2 * k, lam, w);
        CHECK(gegenbauer(n, lam + 1.0, w) == Catch::Approx(acc).margin(1e-11));
        // derivative rule
        CHECK(gegenbauer_deriv(n, lam, w) ==
              Catch::Approx(2.0 * lam * gegenbauer(n - 1, lam + 1.0, w)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gegenbauer(2, 0.0, 0.5), std::domain_error);
}

TEST_CASE("legendre and laguerre")
{
    Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const double w = rng.uniform(-1.0, 1.0);
        CHECK(legendre(2, w) == Catch::Approx(0.5 * (3.0 * w * w - 1.0)).margin(1e-14));
        const double a = rng.uniform(-0.5, 3.0), x = rng.uniform(0.0, 5.0);
        CHECK(laguerre(0, a, x) == 1.0);
        CHECK(laguerre(1, a, x) == Catch::Approx(1.0 + a - x).margin(1e-14));
        // closed form for j=2: ((a+1)(a+2) - 2(a+2)x + x^2)/2
        const double l2 = 0.5 * ((a + 1.0) * (a + 2.0) - 2.0 * (a + 2.0) * x + x * x);
        CHECK(laguerre(2, a, x) == Catch::Approx(l2).margin(1e-12));
    }
}

TEST_CASE("legendre generating function")
{
    // sum_n P_n(cos th) r^n / n! = e^{r cos th} J_0(r sin th)
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const double r = rng.uniform(0.1, 2.0), th = rng.uniform(0.1, 3.0);
        double acc = 0.0, rn = 1.0, fact = 1.0;
        for (int n = 0; n <= 30; ++n) {
            acc += legendre(n, std::cos(th)) * rn / fact;
            rn *= r;
            fact *= (n + 1.0);
        }
        const double expect = std::exp(r * std::cos(th)) * bessel_j(0.0, r * std::sin(th));
        CHECK(acc == Catch::Approx(expect).margin(1e-10));
    }
}

TEST_CASE("laguerre-hankel eigenrelation")
{
    // int_0^inf r^{2l+1} (rs)^{-l} J_{k+l}(rs) r^k L_j^{k+l}(r^2) e^{-r^2/2} dr
    //   = (-1)^j s^k L_j^{k+l}(s^2) e^{-s^2/2}
    Rng rng(43);
    for (int m : {2, 4}) {
        const double lam = 0.5 * (m - 2);
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= 2; ++j) {
                const ProductGrid radial = radial_rule(m + 2 * k, 64);
                const double s = rng.uniform(0.2, 2.5);
                double acc = 0.0;
                for (std::size_t i = 0; i < radial.size(); ++i) {
                    const double r = radial.nodes[i][0];
                    acc += radial.weights[i] * laguerre(j, k + lam, r * r) *
                           std::exp(-0.5 * r * r) *
                           detail::bessel_j_tilde_any(k + lam, r * s);
                }
                acc *= std::pow(s, k);
                const double expect = (j % 2 ? -1.0 : 1.0) * std::pow(s, k) *
                                      laguerre(j, k + lam, s * s) * std::exp(-0.5 * s * s);
                CHECK(acc == Catch::Approx(expect).margin(1e-7));
            }
    }
}
