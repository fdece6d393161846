#include "bicontact/lattice.hpp"

#include <doctest.h>

#include <random>

using namespace bct;

namespace {

H1Class wt(long long a, long long b) { return {Int(a), Int(b), "w,theta"}; }

}  // namespace

TEST_CASE("intersection pairing") {
    CHECK(intersection(wt(1, 0), wt(0, 1)) == 1);
    CHECK(intersection(wt(3, 7), wt(3, 7)) == 0);
    CHECK(intersection(wt(-1, 3), wt(0, 1)) == -1);
    H1Class other_basis{1, 0, "mu,lambda"};
    CHECK_THROWS_AS(intersection(wt(1, 0), other_basis), BasisMismatch);
}

TEST_CASE("intersection is bilinear and alternating (fuzz)") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        H1Class x = wt(d(rng), d(rng));
        H1Class y = wt(d(rng), d(rng));
        H1Class z = wt(d(rng), d(rng));
        CHECK(intersection(x, y) == -intersection(y, x));
        CHECK(intersection(x + y, z) == intersection(x, z) + intersection(y, z));
        CHECK(intersection(x, x) == 0);
        Int t = d(rng);
        CHECK(intersection(x.scaled(t), y) == t * intersection(x, y));
    }
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(wt(1, 0)));
    CHECK_FALSE(is_primitive(wt(2, 4)));
    CHECK(is_primitive(wt(-1, 3)));
    CHECK_FALSE(is_primitive(wt(0, 0)));
    CHECK(is_primitive(wt(0, -1)));
}

TEST_CASE("once-intersecting complement canonical values") {
    CHECK(once_intersecting_complement(wt(1, 0)) == wt(0, 1));
    CHECK(once_intersecting_complement(wt(-1, 3)) == wt(0, 1));
    // The longitude-parallel choice for figure-eight boundary orbits.
    for (long long n = 2; n <= 8; ++n) {
        H1Class orbit{1, n, "mu,lambda"};
        H1Class lambda{0, 1, "mu,lambda"};
        CHECK(once_intersecting_complement(orbit) == lambda);
    }
    CHECK_THROWS_AS(once_intersecting_complement(wt(2, 4)), NonPrimitiveClass);
}

TEST_CASE("complement is unimodular for every primitive class and shift") {
    for (long long a = -50; a <= 50; ++a) {
        for (long long b = -50; b <= 50; ++b) {
            H1Class x = wt(a, b);
            if (!is_primitive(x)) continue;
            for (long long h = -5; h <= 5; ++h) {
                H1Class y = once_intersecting_complement(x, h);
                CHECK(abs_int(intersection(x, y)) == 1);
            }
        }
    }
}

TEST_CASE("complement is deterministic") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> d(-80, 80);
    for (int i = 0; i < 500; ++i) {
        H1Class x = wt(d(rng), d(rng));
        if (!is_primitive(x)) continue;
        CHECK(once_intersecting_complement(x, 2) ==
              once_intersecting_complement(x, 2));
    }
}

TEST_CASE("reduced fractions") {
    ReducedFraction f(Int(6), Int(-4));
    CHECK(f.num == -3);
    CHECK(f.den == 2);
    CHECK(ReducedFraction(Int(0), Int(7)) == ReducedFraction(Int(0), Int(1)));
    CHECK_THROWS(ReducedFraction(Int(1), Int(0)));
}
