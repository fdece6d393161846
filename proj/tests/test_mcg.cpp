#include "bicontact/mcg.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace bct;

namespace {

TwistGenerator gen(const std::string& id, long long a, long long b) {
    return {id, H1Class{Int(a), Int(b), "fiber"}};
}

H1Matrix mat(long long a, long long b, long long c, long long d) {
    H1Matrix m;
    m.m[0][0] = a;
    m.m[0][1] = b;
    m.m[1][0] = c;
    m.m[1][1] = d;
    return m;
}

}  // namespace

TEST_CASE("transvection matrices for the standard generators") {
    CHECK(twist_matrix(gen("c1", 1, 0), 1) == mat(1, 1, 0, 1));
    CHECK(twist_matrix(gen("c2", 0, 1), 1) == mat(1, 0, -1, 1));
    CHECK(twist_matrix(gen("c1", 1, 0), -1) == mat(1, -1, 0, 1));
    CHECK(twist_matrix(gen("c", 1, -1), 2) == mat(3, 2, -2, -1));
}

TEST_CASE("every twist matrix has determinant +1") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> d(-20, 20);
    int done = 0;
    while (done < 500) {
        H1Class c{Int(d(rng)), Int(d(rng)), "fiber"};
        if (!is_primitive(c)) continue;
        Int p = d(rng);
        if (p == 0) continue;
        H1Matrix m = twist_matrix({"c", c}, p);
        CHECK(m.det() == 1);
        // twist about c fixes c
        CHECK(m.apply(c) == c);
        ++done;
    }
}

TEST_CASE("cat map word") {
    TwistWord w;
    w.insert({gen("c1", 1, 0), 1, Level(Rational(1))});
    w.insert({gen("c2", 0, 1), -1, Level(Rational(2))});
    H1Matrix m = word_matrix(w);
    CHECK(m == mat(2, 1, 1, 1));
    CHECK(m.trace() == 3);
    CHECK(m.det() == 1);
}

TEST_CASE("word matrix ignores insertion order") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long long> cls(-5, 5);
    std::uniform_int_distribution<long long> pw(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<TwistEntry> entries;
        for (int i = 0; i < 6; ++i) {
            H1Class c{Int(cls(rng)), Int(cls(rng)), "fiber"};
            if (!is_primitive(c)) c = {Int(1), Int(0), "fiber"};
            Int p = pw(rng);
            if (p == 0) p = 1;
            entries.push_back({{"c" + std::to_string(i), c}, p,
                               Level(Rational(i + 1, 2))});
        }
        TwistWord sorted_in;
        for (const TwistEntry& e : entries) sorted_in.insert(e);
        std::shuffle(entries.begin(), entries.end(), rng);
        TwistWord shuffled_in;
        for (const TwistEntry& e : entries) shuffled_in.insert(e);
        CHECK(word_matrix(sorted_in) == word_matrix(shuffled_in));
    }
}

TEST_CASE("word followed by its reverse-inverse is the identity") {
    TwistWord w;
    w.insert({gen("c1", 1, 0), 2, Level(Rational(1, 2))});
    w.insert({gen("c2", 0, 1), -1, Level(Rational(1))});
    w.insert({gen("c3", 1, 1), 3, Level(Rational(3, 2))});
    TwistWord winv;
    winv.insert({gen("c3", 1, 1), -3, Level(Rational(2))});
    winv.insert({gen("c2", 0, 1), 1, Level(Rational(5, 2))});
    winv.insert({gen("c1", 1, 0), -2, Level(Rational(3))});
    // concatenating at higher levels multiplies on the right
    TwistWord both;
    for (const TwistEntry& e : w.entries) both.insert(e);
    for (const TwistEntry& e : winv.entries) both.insert(e);
    CHECK(word_matrix(both) == H1Matrix::identity());
}

TEST_CASE("duplicate levels and bad entries are rejected") {
    TwistWord w;
    w.insert({gen("c1", 1, 0), 1, Level(Rational(1))});
    TwistEntry dup{gen("c2", 0, 1), 1, Level(Rational(1))};
    CHECK_THROWS_AS(w.insert(dup), DuplicateLevel);
    TwistEntry zero_power{gen("c2", 0, 1), 0, Level(Rational(2))};
    CHECK_THROWS(w.insert(zero_power));
    TwistEntry imprimitive{gen("c2", 2, 4), 1, Level(Rational(2))};
    CHECK_THROWS_AS(w.insert(imprimitive), NonPrimitiveClass);
    CHECK_THROWS(Level(Rational(0)));
    CHECK_THROWS(Level(Rational(7)));
}

TEST_CASE("chain relation on homology") {
    H1Matrix ab = twist_matrix(gen("c1", 1, 0), 1) * twist_matrix(gen("c2", 0, 1), 1);
    CHECK(ab.trace() == 1);
    H1Matrix minus_id = mat(-1, 0, 0, -1);
    CHECK(ab.pow(3) == minus_id);
    for (int k = 1; k <= 24; ++k) {
        bool is_id = ab.pow(k) == H1Matrix::identity();
        CHECK(is_id == (k % 6 == 0));
    }
    ChainRelationReport rep = check_chain_relation();
    CHECK(rep.ok);
    CHECK_FALSE(rep.lines.empty());
}
