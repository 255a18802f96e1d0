#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "tilekit/scalar.hpp"

using tilekit::Scalar;

namespace {
std::mt19937_64 rng(20240917);

Scalar random_scalar() {
    std::uniform_int_distribution<long> coef(-1000, 1000);
    std::uniform_int_distribution<unsigned> kk(0, 5);
    return Scalar(coef(rng), coef(rng), kk(rng));
}
}  // namespace

TEST_CASE("scalar arithmetic examples") {
    Scalar r2 = Scalar::sqrt2();
    CHECK(r2 * r2 == Scalar(2));                                // (sqrt2)^2 = 2
    CHECK(Scalar(1, 0, 1) + Scalar(1, 0, 1) == Scalar(1));      // 1/2 + 1/2 = 1
    CHECK(Scalar(1, 1, 0) * Scalar(1, -1, 0) == Scalar(-1));    // (1+s)(1-s) = -1
}

TEST_CASE("scalar canonical form") {
    Scalar s(2, 0, 1);  // 2/2 -> 1
    CHECK(s == Scalar(1));
    CHECK(s.k() == 0);
    Scalar t(2, 4, 3);  // (2+4s)/8 -> (1+2s)/4
    CHECK(t.a() == 1);
    CHECK(t.b() == 2);
    CHECK(t.k() == 2);
    CHECK(Scalar(0, 0, 5) == Scalar(0));
}

TEST_CASE("scalar compare examples") {
    CHECK(tilekit::compare(Scalar(3), Scalar(0, 2, 0)) > 0);   // 3 > 2*sqrt2
    CHECK(tilekit::compare(Scalar(1, 0, 1), Scalar(0, 1, 1)) < 0);  // 1/2 < sqrt2/2
    Scalar x = random_scalar();
    CHECK(tilekit::compare(x, x) == 0);
}

TEST_CASE("ring laws on random canonical scalars") {
    for (int i = 0; i < 10000; ++i) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        // canonical-form idempotence: rebuilding from parts is the identity
        CHECK(Scalar(a.a(), a.b(), a.k()) == a);
    }
}

TEST_CASE("compare is a total order consistent with floating evaluation") {
    for (int i = 0; i < 10000; ++i) {
        Scalar a = random_scalar(), b = random_scalar();
        double fa = a.to_double(), fb = b.to_double();
        int c = tilekit::compare(a, b);
        if (std::abs(fa - fb) > 1e-9) {
            CHECK(c == (fa < fb ? -1 : 1));
        }
        if (c == 0) CHECK(a == b);
        CHECK(tilekit::compare(b, a) == -c);
    }
}

TEST_CASE("div_exact") {
    CHECK(Scalar(10, 4, 0).div_exact(2) == Scalar(5, 2, 1));
    CHECK(Scalar(10, 15, 0).div_exact(5) == Scalar(2, 3, 0));
    CHECK_THROWS_AS(Scalar(1, 0, 0).div_exact(5), std::domain_error);
    CHECK(Scalar(6).div_exact(2) == Scalar(3));
}

TEST_CASE("sign of mixed-sign combinations") {
    CHECK(Scalar(3, -2, 0).sign() == 1);    // 3 - 2 sqrt2 > 0
    CHECK(Scalar(-3, 2, 0).sign() == -1);   // 2 sqrt2 - 3 < 0
    CHECK(Scalar(-1, 1, 0).sign() == 1);    // sqrt2 - 1 > 0
    CHECK(Scalar(0).sign() == 0);
}
