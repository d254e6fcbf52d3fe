#include <catch2/catch_amalgamated.hpp>

#include "pione/mpreal.hpp"

using namespace pione;

TEST_CASE("published digit checks") {
    // 50 digits of pi
    MPReal pi = pi_digits(50);
    MPReal pi_ref("3.14159265358979323846264338327950288419716939937510", bits_for_digits(50));
    CHECK(digits_close(pi, pi_ref, 50));

    // 30 digits of the Euler-Mascheroni constant
    MPReal ge = euler_digits(30);
    MPReal ge_ref("0.577215664901532860606512090082", bits_for_digits(30));
    CHECK(digits_close(ge, ge_ref, 30));

    CHECK(ln(MPReal(1L, 128)).is_zero());
    CHECK_THROWS_AS(ln(MPReal(-2L, 128)), std::domain_error);
    CHECK_THROWS_AS(ln(MPReal(0L, 128)), std::domain_error);
}

TEST_CASE("gamma at half integers") {
    mpfr_prec_t bits = bits_for_digits(60);
    MPReal sqrt_pi = sqrt(const_pi(bits));

    CHECK(ulp_distance(gamma_half(HalfInt::plus_half(0), bits), sqrt_pi) < 2.0);
    // Gamma(5/2) = 3/4 sqrt(pi)
    CHECK(ulp_distance(gamma_half(HalfInt::plus_half(2), bits), sqrt_pi * 3 / 4) < 2.0);

    // Gamma(19.5) against repeated multiplication Gamma(1/2) * prod (k+1/2)
    MPReal g = sqrt_pi;
    for (long k = 0; k < 19; ++k) g = g * (2 * k + 1) / 2;
    CHECK(ulp_distance(gamma_half(HalfInt{39}, bits), g) < 4.0);

    CHECK_THROWS_AS(gamma_half(HalfInt{-3}, bits), std::domain_error);
    CHECK_THROWS_AS(gamma_half(HalfInt{4}, bits), std::domain_error);
}

TEST_CASE("gamma recurrence property") {
    mpfr_prec_t bits = bits_for_digits(80);
    for (long n = 0; n < 1000; n += 37) {
        HalfInt h = HalfInt::plus_half(n);
        MPReal lhs = gamma_half(HalfInt{h.twice + 2}, bits);
        MPReal rhs = gamma_half(h, bits) * MPReal(make_rational(h.twice, 2), bits);
        REQUIRE(ulp_distance(lhs, rhs) < 8.0);
    }
}

TEST_CASE("psi at half integers") {
    mpfr_prec_t bits = bits_for_digits(60);
    MPReal base = -const_euler(bits) - 2 * const_ln2(bits);
    CHECK(ulp_distance(psi_half(HalfInt::plus_half(0), bits), base) < 4.0);
    CHECK(ulp_distance(psi_half(HalfInt::plus_half(1), bits), base + 2) < 4.0);

    // recurrence psi(h+1) = psi(h) + 1/h
    for (long n = 1; n < 1000; n += 97) {
        HalfInt h = HalfInt::plus_half(n);
        MPReal lhs = psi_half(HalfInt{h.twice + 2}, bits);
        MPReal rhs = psi_half(h, bits) + MPReal(make_rational(2, h.twice), bits);
        REQUIRE(ulp_distance(lhs, rhs) < 8.0);
    }

    CHECK_THROWS_AS(psi_half(HalfInt{-1}, bits), std::domain_error);
}

TEST_CASE("psi matches its large-argument expansion") {
    // psi(n+1/2) - log n = (beta - 1/2)/n + O(1/n^2) = O(1/n^2) for beta = 1/2
    mpfr_prec_t bits = bits_for_digits(60);
    long n = 10000;
    MPReal d = psi_half(HalfInt::plus_half(n), bits) - ln(MPReal(n, bits));
    CHECK(std::abs(d.to_double()) < 1.0 / (double(n) * n) * 2.0);
}

TEST_CASE("stability under precision refinement") {
    MPReal lo = gamma_half(HalfInt::plus_half(40), bits_for_digits(60));
    MPReal hi = gamma_half(HalfInt::plus_half(40), bits_for_digits(90));
    CHECK(ulp_distance(lo, MPReal(hi, lo.prec())) < 2.0);

    MPReal pl = pi_digits(60), ph = pi_digits(90);
    CHECK(ulp_distance(pl, MPReal(ph, pl.prec())) < 2.0);
}

TEST_CASE("wide exponent range") {
    // Gamma(500) ~ 10^1132 must be representable
    MPReal g = gamma_int(500, bits_for_digits(40));
    CHECK(mpfr_get_exp(g.get()) > 3000);
    MPReal h = gamma_half(HalfInt::plus_half(999), bits_for_digits(40));
    CHECK(h.sign() > 0);
    CHECK(!h.is_nan());
}

TEST_CASE("string round trip and formatting") {
    MPReal x("1.25e-7", bits_for_digits(30));
    CHECK(MPReal(x.to_string(), x.prec()) == x);
    MPReal z(0L, 64);
    CHECK(z.to_string() == "0");
    CHECK(MPReal("-3.5e2", 64).to_double() == -350.0);
    CHECK(x.to_string(3) == "1.25e-7");
    CHECK_THROWS_AS(MPReal("zzz", 64), std::invalid_argument);
}
