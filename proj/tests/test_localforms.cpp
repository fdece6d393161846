#include "bicontact/localforms.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace bct;

TEST_CASE("contact volumes of the collar models") {
    VolumeCoefficient neg = contact_volume(alpha_minus());
    REQUIRE(neg.is_constant());
    CHECK(neg.constant() == -1);
    for (long long n = 1; n <= 12; ++n) {
        VolumeCoefficient pos = contact_volume(alpha_plus(n));
        REQUIRE(pos.is_constant());
        CHECK(pos.constant() == n);
    }
    for (long long k = 1; k <= 6; ++k) {
        for (long long h = -4; h <= 4; ++h) {
            VolumeCoefficient vb = contact_volume(alpha_plus_boundary(k, h));
            REQUIRE(vb.is_constant());
            CHECK(vb.constant() == k);
            VolumeCoefficient nb = contact_volume(alpha_minus_boundary(k, h));
            REQUIRE(nb.is_constant());
            CHECK(nb.constant() == -1);
        }
    }
}

TEST_CASE("grid evaluation matches the symbolic volume") {
    for (long long n : {1LL, 5LL, 12LL}) {
        VolumeCoefficient v = contact_volume(alpha_plus(n));
        const int g = 16;
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                for (int l = 0; l < g; ++l) {
                    std::array<double, 3> x{2 * M_PI * i / g, 2.0 * j / g - 1,
                                            2.0 * l / g - 1};
                    CHECK(std::abs(v.eval(x) - double(n)) < 1e-9);
                }
    }
}

TEST_CASE("zero and degenerate forms") {
    OneForm zero;
    CHECK(contact_volume(zero).value.is_zero());
    CHECK_THROWS_AS(reeb_field(zero), DegenerateForm);
    // dw alone is nowhere contact
    OneForm dw;
    dw.coeff[0] = TrigPoly::constant(Rational(1));
    CHECK(contact_volume(dw).value.is_zero());
    CHECK_THROWS_AS(reeb_field(dw), DegenerateForm);
}

TEST_CASE("Reeb field of the negative collar form is d/dw") {
    ReebField r = reeb_field(alpha_minus());
    REQUIRE(r.comp[0].as_constant().has_value());
    CHECK(*r.comp[0].as_constant() == 1);
    CHECK(r.comp[1].is_zero());
    CHECK(r.comp[2].is_zero());
}

TEST_CASE("Reeb field normalization: a(R) = 1") {
    for (long long n = 1; n <= 6; ++n) {
        OneForm a = alpha_plus(n);
        ReebField r = reeb_field(a);
        TrigPoly pairing = a.coeff[0] * r.comp[0] + a.coeff[1] * r.comp[1] +
                           a.coeff[2] * r.comp[2];
        REQUIRE(pairing.as_constant().has_value());
        CHECK(*pairing.as_constant() == 1);
    }
}

TEST_CASE("strong adaptedness") {
    for (long long n = 1; n <= 12; ++n)
        CHECK(strong_adaptedness_check(alpha_minus(), alpha_plus(n)));
    for (long long k = 1; k <= 4; ++k)
        for (long long h = -3; h < 0; ++h)
            CHECK(strong_adaptedness_check(alpha_minus_boundary(k, h),
                                           alpha_plus_boundary(k, h)));
    // dw + alpha_plus(1) is positive contact but pairs to 1 against d/dw
    OneForm bad = alpha_plus(1);
    bad.coeff[0] = bad.coeff[0] + TrigPoly::constant(Rational(1));
    REQUIRE(contact_volume(bad).is_constant());
    CHECK(contact_volume(bad).constant() == 1);
    CHECK_FALSE(strong_adaptedness_check(alpha_minus(), bad));
    // dw is not even contact, let alone strongly adapted
    OneForm dw;
    dw.coeff[0] = TrigPoly::constant(Rational(1));
    CHECK_FALSE(strong_adaptedness_check(alpha_minus(), dw));
}

TEST_CASE("boundary foliation slopes reduce") {
    CHECK(boundary_foliation_slope(6, -4) == ReducedFraction(Int(-2), Int(3)));
    CHECK(boundary_foliation_slope(3, 0) == ReducedFraction(Int(0), Int(1)));
    CHECK(boundary_foliation_slope(5, 5) == ReducedFraction(Int(1), Int(1)));
}

TEST_CASE("tangency locus component counts") {
    auto expected = [](long long k, long long h) {
        return 2 * static_cast<int>(std::gcd(k, std::abs(h)));
    };
    for (auto [k, h] : std::vector<std::pair<long long, long long>>{
             {1, 0}, {2, 1}, {2, 2}, {3, -6}, {4, 6}, {5, -2}}) {
        int grid = 8 * static_cast<int>(k + std::abs(h));
        CHECK(tangency_components(k, h, grid) == expected(k, h));
    }
    CHECK_THROWS(tangency_components(0, 0, 64));
    CHECK_THROWS(tangency_components(3, 2, 16));  // grid too coarse
}

TEST_CASE("glued collar continuity") {
    for (long long n = 1; n <= 3; ++n) {
        CollarReport rep = glued_collar_check(n);
        CHECK(rep.pass);
        CHECK(rep.worst_error < 1e-9);
    }
    CollarReport wrong = glued_collar_check(2, Rational(0));
    CHECK_FALSE(wrong.pass);
    CHECK(wrong.worst_error > 1e-3);
    CHECK_FALSE(wrong.detail.empty());
}

TEST_CASE("collar check is deterministic for a fixed seed") {
    CollarReport a = glued_collar_check(3, Rational(1, 3), 2000, 1e-9, 42);
    CollarReport b = glued_collar_check(3, Rational(1, 3), 2000, 1e-9, 42);
    CHECK(a.pass == b.pass);
    CHECK(a.worst_error == b.worst_error);
    CHECK(a.worst_point == b.worst_point);
}
