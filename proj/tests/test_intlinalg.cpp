#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equibir/intlinalg.hpp"

using namespace equibir;

namespace {

bool is_unimodular(const IntMat& m) {
    BigInt d = determinant(m);
    return d == 1 || d == -1;
}

void check_snf(const IntMat& m) {
    SmithForm s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(s.d(i, i) >= 0);
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
        if (i + 1 < n && s.d(i + 1, i + 1) != 0) {
            CHECK(s.d(i, i) != 0);
            CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        }
        if (i + 1 < n && s.d(i, i) == 0) CHECK(s.d(i + 1, i + 1) == 0);
    }
}

} // namespace

TEST_CASE("snf basics") {
    check_snf(IntMat::identity(3));
    IntMat d(2, 2, {2, 0, 0, 4});
    SmithForm s = smith_normal_form(d);
    CHECK(s.d == d);

    IntMat m(2, 2, {2, 4, 6, 8});
    SmithForm s2 = smith_normal_form(m);
    CHECK(s2.d(0, 0) == 2);
    CHECK(s2.d(1, 1) == 4);
    CHECK(abs(determinant(m)) == s2.d(0, 0) * s2.d(1, 1));
}

TEST_CASE("snf on 500 random matrices") {
    std::mt19937 rng(20240505);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = static_cast<long>(rng() % 41) - 20;
        check_snf(m);
    }
}

TEST_CASE("integer kernel is saturated") {
    IntMat m(2, 4, {2, 4, 6, 8, 1, 2, 3, 4});
    IntMat k = integer_kernel(m);
    CHECK(k.cols() == 3);
    // m * k == 0
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            BigInt acc = 0;
            for (std::size_t t = 0; t < m.cols(); ++t) acc += m(i, t) * k(t, j);
            CHECK(acc == 0);
        }
    // saturation: the inclusion has all elementary divisors 1
    auto divs = elementary_divisors(k);
    for (std::size_t i = 0; i < 3; ++i) CHECK(divs[i] == 1);
}

TEST_CASE("integer solve") {
    IntMat m(2, 2, {2, 0, 0, 3});
    auto sol = solve_integer(m, {4, 9});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 3);
    CHECK(!solve_integer(m, {1, 1}).has_value());
}

TEST_CASE("integer inverse") {
    IntMat m(2, 2, {2, 1, 1, 1});
    auto inv = integer_inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv * m == IntMat::identity(2));
    IntMat n(2, 2, {2, 0, 0, 1});
    CHECK(!integer_inverse(n).has_value());
}

TEST_CASE("rational rref and solve") {
    RatMat m(2, 2, {BigRat(1), BigRat(2), BigRat(2), BigRat(4)});
    CHECK(rank_of(m) == 1);
    RatMat a(2, 2, {BigRat(1), BigRat(1), BigRat(0), BigRat(1)});
    auto x = solve_rational(a, {BigRat(3), BigRat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);
}
