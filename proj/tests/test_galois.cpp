#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "esbch/galois.hpp"

using namespace esbch;

TEST_CASE("GF(2^4) with x^4+x+1: alpha^4 = alpha + 1") {
    GaloisField gf(4, 0x13);
    CHECK(gf.exp_table()[0] == 1);
    CHECK(gf.exp_table()[4] == 0x3);
    CHECK(gf.order() == 15);
}

TEST_CASE("x^4+x^2+1 is rejected as non-primitive") {
    CHECK_THROWS_AS(GaloisField(4, 0x15), NonPrimitivePolynomial);
}

TEST_CASE("degree mismatch is rejected") {
    CHECK_THROWS_AS(GaloisField(4, 0x13u << 1), DegreeMismatch);
    CHECK_THROWS_AS(GaloisField(5, 0x13), DegreeMismatch);
}

TEST_CASE("GF(2^2) has the three nonzero elements 1, alpha, alpha+1") {
    GaloisField gf(2, 0x7);
    CHECK(gf.order() == 3);
    CHECK(gf.exp_table()[0] == 1);
    CHECK(gf.exp_table()[1] == 2);
    CHECK(gf.exp_table()[2] == 3);
}

TEST_CASE("multiplication basics in GF(2^4)") {
    GaloisField gf(4);
    CHECK(gf.primitive_poly() == 0x13);
    for (GfElement x = 0; x < 16; ++x) {
        CHECK(gf.mul(0, x) == 0);
        CHECK(gf.mul(1, x) == x);
    }
    CHECK(gf.mul(0x2, 0x8) == 0x3); // x * x^3 = x^4 = x + 1
}

TEST_CASE("addition is xor; a + a = 0") {
    GaloisField gf(5);
    for (GfElement x = 0; x < 32; ++x) CHECK(gf.add(x, x) == 0);
    CHECK(gf.add(0x5, 0x3) == 0x6);
}

TEST_CASE("inverses") {
    GaloisField gf(4);
    CHECK(gf.inv(1) == 1);
    CHECK(gf.inv(0x2) == 0x9);
    CHECK_THROWS_AS(gf.inv(0), DivisionByZero);
    for (GfElement a = 1; a < 16; ++a) CHECK(gf.mul(a, gf.inv(a)) == 1);
}

TEST_CASE("log/exp consistency and the log-of-product identity") {
    for (int m : {3, 5, 8}) {
        GaloisField gf(m);
        const auto n = gf.order();
        for (std::uint32_t i = 0; i < n; ++i)
            CHECK(gf.log(gf.exp_table()[i]) == i);
        for (GfElement a = 1; a <= 20 && a < gf.size(); ++a)
            for (GfElement b = 1; b <= 20 && b < gf.size(); ++b)
                CHECK(gf.log(gf.mul(a, b)) == (gf.log(a) + gf.log(b)) % n);
    }
}

TEST_CASE("field axioms hold exhaustively for m <= 6") {
    for (int m : {2, 3, 4, 5, 6}) {
        GaloisField gf(m);
        const GfElement sz = static_cast<GfElement>(gf.size());
        for (GfElement a = 0; a < sz; ++a)
            for (GfElement b = 0; b < sz; ++b) {
                CHECK(gf.mul(a, b) == gf.mul(b, a));
                for (GfElement c = 0; c < sz; ++c) {
                    if (m <= 5 || ((a & 3) == 0)) { // thin out the m=6 cube
                        CHECK(gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c)));
                        CHECK(gf.mul(a, gf.add(b, c)) ==
                              gf.add(gf.mul(a, b), gf.mul(a, c)));
                    }
                }
            }
        // unique inverse per nonzero element
        for (GfElement a = 1; a < sz; ++a) {
            int count = 0;
            for (GfElement b = 1; b < sz; ++b)
                if (gf.mul(a, b) == 1) ++count;
            CHECK(count == 1);
        }
    }
}

TEST_CASE("gf_pow: Fermat and exponent arithmetic") {
    GaloisField gf(6);
    for (GfElement a = 1; a < gf.size(); ++a) {
        CHECK(gf.pow(a, gf.order()) == 1);
        CHECK(gf.pow(a, 0) == 1);
        CHECK(gf.pow(a, -1) == gf.inv(a));
    }
    CHECK(gf.pow(0, 0) == 1);
    CHECK(gf.pow(0, 5) == 0);
    CHECK(gf.pow(2, 3) == 8);
}

TEST_CASE("default polynomial table builds a valid field for every m") {
    for (int m = 2; m <= 16; ++m) {
        GaloisField gf(m); // constructor verifies primitivity by the period check
        CHECK(gf.order() == (1u << m) - 1);
    }
    CHECK(GaloisField::default_primitive_poly(4) == 0x13);
    CHECK(GaloisField::default_primitive_poly(5) == 0x25);
    CHECK(GaloisField::default_primitive_poly(10) == 0x409);
    CHECK_THROWS_AS(GaloisField::default_primitive_poly(17), DomainError);
}

TEST_CASE("alpha_pow reduces exponents mod 2^m - 1") {
    GaloisField gf(4);
    CHECK(gf.alpha_pow(0) == 1);
    CHECK(gf.alpha_pow(15) == 1);
    CHECK(gf.alpha_pow(-1) == gf.alpha_pow(14));
    CHECK(gf.alpha_pow(4) == 0x3);
}
