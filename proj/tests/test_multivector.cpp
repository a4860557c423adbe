#include <catch2/catch_amalgamated.hpp>

#include "clifft/multivector.hpp"
#include "clifft/multivector_json.hpp"
#include "clifft/rng.hpp"

using namespace clifft;

namespace {

Multivector e(int dim, int i) { return Multivector::blade(dim, 1u << i); }

Multivector random_mv(Rng& rng, int dim)
{
    Multivector v(dim);
    for (unsigned m = 0; m < v.size(); ++m)
        v[m] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return v;
}

} // namespace

TEST_CASE("generator relations")
{
    const int m = 3;
    for (int i = 0; i < m; ++i) {
        const Multivector sq = e(m, i) * e(m, i);
        CHECK(sq.scalar_part() == Complex(-1.0));
        CHECK(sq.grade_part(0).max_abs() == std::abs(sq.scalar_part()));
    }
    // e1 e2 = -e2 e1, exactly
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Multivector anti = e(m, i) * e(m, j) + e(m, j) * e(m, i);
            if (i == j)
                CHECK(anti.scalar_part() == Complex(-2.0));
            else
                CHECK(anti.max_abs() == 0.0);
        }
    // (e1 e2)^2 = -1
    const Multivector b = e(2, 0) * e(2, 1);
    CHECK((b * b).scalar_part() == Complex(-1.0));
}

TEST_CASE("embedding and vector square")
{
    CHECK(max_abs_diff(embed_vector({1.0, 0.0}), e(2, 0)) == 0.0);
    CHECK(embed_vector({0.0, 0.0}).max_abs() == 0.0);
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + int(rng.next_u64() % 3);
        const Vector x = rng.point(m, -2.0, 2.0);
        const Multivector xe = embed_vector(x);
        const Multivector sq = xe * xe;
        CHECK(std::abs(sq.scalar_part().real() + norm2(x)) < 1e-12);
        CHECK((sq - Multivector::scalar(m, sq.scalar_part())).max_abs() < 1e-12);
    }
}

TEST_CASE("inner and wedge against the geometric product")
{
    SECTION("m=2 axes")
    {
        const Vector x{1.0, 0.0}, y{0.0, 1.0};
        CHECK(inner(x, y) == 0.0);
        CHECK(max_abs_diff(wedge(x, y), e(2, 0) * e(2, 1)) == 0.0);
    }
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + int(rng.next_u64() % 3);
        const Vector x = rng.point(m, -2.0, 2.0), y = rng.point(m, -2.0, 2.0);
        const Multivector xe = embed_vector(x), ye = embed_vector(y);
        // <x,y> = -(xy + yx)/2 and x^y = (xy - yx)/2
        const Multivector sym = Complex(-0.5) * (xe * ye + ye * xe);
        CHECK(std::abs(sym.scalar_part().real() - inner(x, y)) < 1e-12);
        CHECK(max_abs_diff(Complex(0.5) * (xe * ye - ye * xe), wedge(x, y)) < 1e-12);
        // (x^y)^2 = <x,y>^2 - |x|^2 |y|^2, scalar
        const Multivector w = wedge(x, y);
        const Multivector wsq = w * w;
        const double expect = inner(x, y) * inner(x, y) - norm2(x) * norm2(y);
        CHECK(std::abs(wsq.scalar_part().real() - expect) < 1e-12);
        CHECK((wsq - Multivector::scalar(m, wsq.scalar_part())).max_abs() < 1e-12);
        CHECK(wedge(x, x).max_abs() == 0.0);
        // component bound |x_j y_k - x_k y_j| <= sqrt(|x|^2|y|^2 - <x,y>^2)
        const double bound = std::sqrt(std::max(0.0, -expect));
        for (unsigned mask = 0; mask < w.size(); ++mask)
            CHECK(std::abs(w[mask]) <= bound + 1e-12);
    }
}

TEST_CASE("associativity on random triples")
{
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + int(rng.next_u64() % 3);
        const Multivector a = random_mv(rng, m), b = random_mv(rng, m), c = random_mv(rng, m);
        const Multivector lhs = (a * b) * c, rhs = a * (b * c);
        CHECK(max_abs_diff(lhs, rhs) < 1e-12 * std::max(1.0, lhs.max_abs()));
    }
}

TEST_CASE("grades and conjugation")
{
    Multivector a(2);
    a[0] = 3.0;
    a[1] = 2.0;
    a[3] = 5.0;
    const Multivector g2 = a.grade_part(2);
    CHECK(g2[3] == Complex(5.0));
    CHECK(g2[0] == Complex(0.0));
    CHECK(g2[1] == Complex(0.0));

    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 2 + int(rng.next_u64() % 3);
        const Multivector v = random_mv(rng, m);
        CHECK(max_abs_diff(v.conj().conj(), v) == 0.0);
        Multivector sum(m);
        for (int k = 0; k <= m; ++k) sum += v.grade_part(k);
        CHECK(max_abs_diff(sum, v) == 0.0);
    }
}

TEST_CASE("dimension mismatch is refused")
{
    CHECK_THROWS_AS(Multivector(2) * Multivector(3), std::invalid_argument);
    CHECK_THROWS_AS(inner({1.0, 0.0}, {1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("json round trip omits zeros")
{
    Multivector a(3);
    a[0] = Complex(1.5, -2.0);
    a[5] = Complex(0.0, 3.25);
    const auto j = to_json(a);
    CHECK(j.at("dim") == 3);
    CHECK(j.at("coeffs").size() == 2);
    CHECK_FALSE(j.at("coeffs").contains("1"));
    const Multivector b = multivector_from_json(j);
    CHECK(max_abs_diff(a, b) == 0.0);
}
