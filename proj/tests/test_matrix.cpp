#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"
#include "hecke/cyclotomic.hpp"

using hecke::Matrix;
using hecke::Rational;
using hecke::Zeta8;

namespace {

Matrix<Rational> random_rational(int n, int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    Matrix<Rational> a(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) a(i, j) = Rational(d(rng), 1 + std::abs(d(rng)));
    return a;
}

}  // namespace

TEST_CASE("product, identity, kron basics") {
    Matrix<Rational> a(2, 3), b(3, 2);
    int v = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = Rational(v++);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) b(i, j) = Rational(v++);
    Matrix<Rational> c = a * b;
    CHECK(c(0, 0) == Rational(7 + 2 * 9 + 3 * 11));
    CHECK(c(1, 1) == Rational(4 * 8 + 5 * 10 + 6 * 12));

    auto id3 = Matrix<Rational>::identity(3);
    CHECK(a * id3 == a);
    CHECK(Matrix<Rational>::kronecker(id3, id3) == Matrix<Rational>::identity(9));
    CHECK((a - a).is_zero());
}

TEST_CASE("kronecker mixed product rule") {
    std::mt19937_64 rng(5);
    auto a = random_rational(2, 3, rng), b = random_rational(3, 2, rng);
    auto c = random_rational(2, 2, rng), d = random_rational(2, 3, rng);
    using M = Matrix<Rational>;
    CHECK(M::kronecker(a, c) * M::kronecker(b, d) == M::kronecker(a * b, c * d));
}

TEST_CASE("rref, rank, inverse over rationals") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 30; ++iter) {
        auto a = random_rational(5, 5, rng);
        if (a.rank() < 5) continue;
        auto inv = a.inverse();
        CHECK(a * inv == Matrix<Rational>::identity(5));
        CHECK(inv * a == Matrix<Rational>::identity(5));
    }
    Matrix<Rational> sing(3, 3);
    sing(0, 0) = Rational(1);
    sing(1, 0) = Rational(2);
    CHECK(sing.rank() == 1);
    CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("kernel basis spans the exact null space") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        auto a = random_rational(4, 7, rng);
        auto k = a.kernel_basis();
        CHECK(a.rank() + k.cols() == 7);
        CHECK((a * k).is_zero());
        CHECK(k.rank() == k.cols());  // columns independent
    }
}

TEST_CASE("kernel over the cyclotomic field") {
    // rows: (1, i, 0), (sqrt2, sqrt2*i, 0): rank 1, kernel dim 2
    Matrix<Zeta8> a(2, 3);
    a(0, 0) = Zeta8(1);
    a(0, 1) = Zeta8::i();
    a(1, 0) = Zeta8::sqrt2();
    a(1, 1) = Zeta8::sqrt2() * Zeta8::i();
    CHECK(a.rank() == 1);
    auto k = a.kernel_basis();
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());

    Matrix<Zeta8> u(2, 2);
    u(0, 0) = Zeta8::inv_sqrt2();
    u(0, 1) = Zeta8::inv_sqrt2();
    u(1, 0) = Zeta8::inv_sqrt2() * Zeta8::i();
    u(1, 1) = -Zeta8::inv_sqrt2() * Zeta8::i();
    CHECK(u * u.inverse() == Matrix<Zeta8>::identity(2));
    CHECK(u.kernel_basis().cols() == 0);
}
