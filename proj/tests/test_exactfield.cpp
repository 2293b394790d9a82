#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "e8fold/exactfield.hpp"

using namespace e8fold;

namespace {

std::mt19937_64 rng(0x5eedf00du);

BigInt random_bigint(int max_limbs) {
    std::uniform_int_distribution<int> limbs(1, max_limbs);
    int n = limbs(rng);
    BigInt r = 0;
    for (int i = 0; i < n; ++i) {
        r = r * BigInt(1ll << 32) + BigInt(static_cast<int64_t>(rng() & 0xffffffffull));
    }
    if (rng() & 1) r = -r;
    return r;
}

Rational random_rational(int64_t range = 200) {
    std::uniform_int_distribution<int64_t> num(-range, range);
    std::uniform_int_distribution<int64_t> den(1, range);
    return Rational(num(rng), den(rng));
}

TowerScalar random_tower(int64_t range = 30) {
    std::array<Rational, 8> cs;
    for (auto& c : cs) c = random_rational(range);
    return TowerScalar::from_coeffs(cs);
}

}  // namespace

TEST_CASE("bigint string round trip and arithmetic identities") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt::from_string("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK(BigInt::from_string("-000123").to_string() == "-123");

    for (int iter = 0; iter < 500; ++iter) {
        BigInt a = random_bigint(4);
        BigInt b = random_bigint(4);
        CHECK(a + b == b + a);
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        CHECK(BigInt::from_string(a.to_string()) == a);
    }
}

TEST_CASE("bigint division reconstructs the dividend") {
    for (int iter = 0; iter < 2000; ++iter) {
        BigInt a = random_bigint(5);
        BigInt b = random_bigint(3);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint small division matches native") {
    std::uniform_int_distribution<int64_t> d(-1000000, 1000000);
    for (int iter = 0; iter < 2000; ++iter) {
        int64_t x = d(rng), y = d(rng);
        if (y == 0) continue;
        CHECK(BigInt(x) / BigInt(y) == BigInt(x / y));
        CHECK(BigInt(x) % BigInt(y) == BigInt(x % y));
    }
}

TEST_CASE("bigint gcd") {
    CHECK(gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(gcd(BigInt(0), BigInt(-5)) == BigInt(5));
    for (int iter = 0; iter < 200; ++iter) {
        BigInt a = random_bigint(3), b = random_bigint(3), g = gcd(a, b);
        if (g.is_zero()) continue;
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
    }
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7).to_string() == "0/1");
    CHECK(Rational(-10, 5).to_string() == "-2/1");
    CHECK(Rational::from_string("6/4") == Rational(3, 2));
    // Normalizing twice equals normalizing once.
    Rational r(34, -51);
    Rational again(r.num(), r.den());
    CHECK(r == again);
}

TEST_CASE("rational field ops") {
    for (int iter = 0; iter < 500; ++iter) {
        Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("ts_from_parts builds a + b*phi") {
    TowerScalar phi = ts_from_parts(Rational(0), Rational(1));
    CHECK(phi == TowerScalar::phi());
    CHECK(phi.to_double() == doctest::Approx(1.6180339887).epsilon(1e-9));

    CHECK(ts_from_parts(Rational(1), Rational(0)) == TowerScalar::one());

    // 1/phi = phi - 1: multiplying by phi gives exactly 1.
    TowerScalar inv_phi = ts_from_parts(Rational(-1), Rational(1));
    CHECK(ts_mul(inv_phi, phi) == TowerScalar::one());
}

TEST_CASE("ts_mul defining relations") {
    TowerScalar phi = TowerScalar::phi();
    CHECK(ts_mul(phi, phi) == phi + TowerScalar::one());
    TowerScalar sp = TowerScalar::sqrt_phi();
    CHECK(ts_mul(sp, sp) == phi);
    TowerScalar two_sp = TowerScalar(2) * sp;
    CHECK(ts_mul(two_sp, two_sp) == TowerScalar(4) * phi);
    CHECK(TowerScalar::sqrt2() * TowerScalar::sqrt5() == TowerScalar::sqrt10());
    CHECK(TowerScalar::sqrt2() * TowerScalar::sqrt2() == TowerScalar(2));
}

TEST_CASE("ts_inv") {
    CHECK(ts_inv(TowerScalar::one()) == TowerScalar::one());
    CHECK(ts_inv(TowerScalar::phi()) == TowerScalar::phi() - TowerScalar::one());
    TowerScalar sp = TowerScalar::sqrt_phi();
    CHECK(ts_mul(sp, ts_mul(sp, TowerScalar::phi() - TowerScalar::one())) == TowerScalar::one());
    CHECK(ts_mul(sp, ts_inv(sp)) == TowerScalar::one());
    CHECK_THROWS_AS(ts_inv(TowerScalar::zero()), std::domain_error);
}

TEST_CASE("ts_sign examples") {
    CHECK(ts_sign(TowerScalar::zero()) == 0);
    CHECK(ts_sign(TowerScalar::phi() - TowerScalar(Rational(8, 5))) == 1);
    // sqrt2 < (9/8) * sqrt(phi)
    TowerScalar x = TowerScalar::sqrt2() - TowerScalar(Rational(9, 8)) * TowerScalar::sqrt_phi();
    CHECK(ts_sign(x) == -1);
}

TEST_CASE("field axioms on random tower scalars") {
    for (int iter = 0; iter < 200; ++iter) {
        TowerScalar a = random_tower(), b = random_tower(), c = random_tower();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a * a.inverse() == TowerScalar::one());
    }
}

TEST_CASE("float embedding agrees with exact sign") {
    for (int iter = 0; iter < 2000; ++iter) {
        TowerScalar x = random_tower(50);
        double f = x.to_double();
        if (std::abs(f) > 1e-9) {
            CHECK(ts_sign(x) == (f > 0 ? 1 : -1));
        }
    }
}

TEST_CASE("tower encode canonical round trip") {
    for (int iter = 0; iter < 100; ++iter) {
        TowerScalar x = random_tower();
        CHECK(TowerScalar::decode(x.encode()) == x);
    }
    CHECK(TowerScalar::phi().encode() == "1/2;0/1;1/2;0/1;0/1;0/1;0/1;0/1");
}

TEST_CASE("exact sign never disagrees with high-precision comparisons") {
    // sqrt10 vs sqrt2*sqrt5 is an identity, not a near-tie.
    CHECK(ts_sign(TowerScalar::sqrt10() - TowerScalar::sqrt2() * TowerScalar::sqrt5()) == 0);
    // A genuinely tight comparison: phi^4 vs 47/10 + phi/59.
    TowerScalar phi = TowerScalar::phi();
    TowerScalar p4 = phi * phi * phi * phi;  // 2 + 3 phi = 6.854...
    TowerScalar rhs = TowerScalar(Rational(47, 10)) + TowerScalar(Rational(1, 59)) * phi;
    CHECK(ts_sign(p4 - rhs) == ((p4.to_double() > rhs.to_double()) ? 1 : -1));
}
