#pragma once

// Dehn-twist word algebra for punctured-torus fibers: the transvection
// representation on H1, level-ordered word composition and the chain
// relation check.

#include "bicontact/lattice.hpp"

#include <cmath>
#include <vector>

namespace bct {

struct TwistGenerator {
    std::string id;       // curve label, c1, c2, ...
    H1Class h1_class;     // primitive class of the curve
};

// A rational level in (0, 2*pi) fixing where along the circle direction the
// corresponding surgery annulus sits. Levels order compositions.
struct Level {
    Rational value;

    Level() : value(1) {}
    explicit Level(Rational v) : value(std::move(v)) {
        if (value <= 0 ||
            static_cast<double>(value) >= 6.283185307179586)
            throw std::invalid_argument("Level: must lie in (0, 2*pi)");
    }
    bool operator==(const Level& o) const { return value == o.value; }
    bool operator<(const Level& o) const { return value < o.value; }
};

struct TwistEntry {
    TwistGenerator generator;
    Int power;  // nonzero
    Level level;
};

struct DuplicateLevel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 2x2 integer matrix acting on column vectors (a,b); twist words always have
// determinant +1.
struct H1Matrix {
    Int m[2][2]{{1, 0}, {0, 1}};

    static H1Matrix identity() { return {}; }

    H1Matrix operator*(const H1Matrix& o) const {
        H1Matrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }

    bool operator==(const H1Matrix& o) const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (m[i][j] != o.m[i][j]) return false;
        return true;
    }

    Int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    Int trace() const { return m[0][0] + m[1][1]; }

    H1Class apply(const H1Class& v) const {
        return {m[0][0] * v.a + m[0][1] * v.b, m[1][0] * v.a + m[1][1] * v.b,
                v.basis_tag};
    }

    H1Matrix pow(int e) const;
    std::string str() const;
};

// Entries kept sorted ascending by level; pairwise distinct levels.
struct TwistWord {
    std::vector<TwistEntry> entries;

    void insert(TwistEntry e);
    bool empty() const { return entries.empty(); }
};

// Transvection along the generator's class c, raised to the given power:
// v -> v - power * <v, c> * c. The sign is the unique choice under which two
// positive twists about once-intersecting curves compose to a trace-1
// (order-6) matrix, making the chain relation hold on H1.
H1Matrix twist_matrix(const TwistGenerator& g, const Int& power);

// Product of twist matrices in ascending-level order (lowest level leftmost);
// independent of insertion order.
H1Matrix word_matrix(const TwistWord& w);

struct ChainRelationReport {
    bool ok{true};
    std::vector<std::string> lines;
};

// Verifies on H1 that (t1 t2)^j != Id for 1 <= j < 6, (t1 t2)^6 = Id, and the
// factorization into the 4th and 2nd powers.
ChainRelationReport check_chain_relation();

}  // namespace bct
