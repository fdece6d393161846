#pragma once

// Exact rank-2 lattice arithmetic on boundary-torus homology: classes in a
// declared basis, the alternating intersection pairing, primitivity, and the
// extended-Euclid construction of once-intersecting complements.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace bct {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

// Floor division (round toward -infinity), for solving nearest-lattice-point
// problems with signed operands.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

struct BasisMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonPrimitiveClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A fraction kept reduced with positive denominator; zero is 0/1.
struct ReducedFraction {
    Int num{0};
    Int den{1};

    ReducedFraction() = default;
    ReducedFraction(Int n, Int d) {
        if (d == 0) throw std::invalid_argument("ReducedFraction: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        Int g = gcd_int(n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
        num = std::move(n);
        den = std::move(d);
    }

    bool operator==(const ReducedFraction&) const = default;
};

// An integer homology class a[e1] + b[e2] on a boundary torus. The pairing is
// only defined between classes carrying the same basis tag, e.g. "w,theta"
// for ([w],[theta]) or "mu,lambda" for (mu,lambda).
struct H1Class {
    Int a{0};
    Int b{0};
    std::string basis_tag;

    H1Class() = default;
    H1Class(Int a_, Int b_, std::string tag)
        : a(std::move(a_)), b(std::move(b_)), basis_tag(std::move(tag)) {}

    bool operator==(const H1Class&) const = default;

    H1Class operator-() const { return {-a, -b, basis_tag}; }
    H1Class operator+(const H1Class& o) const {
        if (basis_tag != o.basis_tag)
            throw BasisMismatch("H1Class sum across different bases");
        return {a + o.a, b + o.b, basis_tag};
    }
    H1Class scaled(const Int& t) const { return {a * t, b * t, basis_tag}; }
};

// Orientation convention: intersection((1,0),(0,1)) = +1 on every torus.
inline Int intersection(const H1Class& x, const H1Class& y) {
    if (x.basis_tag != y.basis_tag)
        throw BasisMismatch("intersection pairing across incompatible tori: '" +
                            x.basis_tag + "' vs '" + y.basis_tag + "'");
    return x.a * y.b - x.b * y.a;
}

inline bool is_primitive(const H1Class& x) {
    if (x.a == 0 && x.b == 0) return false;
    return gcd_int(x.a, x.b) == 1;
}

namespace detail {

// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a,b) >= 0.
inline std::array<Int, 3> ext_gcd(Int a, Int b) {
    Int s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = std::move(b);
        b = std::move(r);
        Int s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        t0 = std::move(t1);
        s1 = std::move(s2);
        t1 = std::move(t2);
    }
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    return {a, s0, t0};
}

// Canonical ordering key for complement candidates: minimal |b| first, then
// b >= 0, then minimal |a|, then a >= 0.
struct ComplementKey {
    Int abs_b, neg_b, abs_a, neg_a;
    explicit ComplementKey(const H1Class& y)
        : abs_b(abs_int(y.b)),
          neg_b(y.b < 0 ? 1 : 0),
          abs_a(abs_int(y.a)),
          neg_a(y.a < 0 ? 1 : 0) {}
    std::strong_ordering operator<=>(const ComplementKey&) const = default;
};

}  // namespace detail

// Returns y with |intersection(x, y)| = 1, canonicalized over both signs of
// the pairing (the family of solutions is y0 + t*x), then shifted to
// y + shift*x. The shift never changes |intersection(x, y)|.
inline H1Class once_intersecting_complement(const H1Class& x, const Int& shift = 0) {
    if (!is_primitive(x))
        throw NonPrimitiveClass("once_intersecting_complement: class (" +
                                x.a.str() + "," + x.b.str() + ") is not primitive");

    // One solution of x.a*v - x.b*u = 1.
    auto [g, s, t] = detail::ext_gcd(x.a, x.b);
    H1Class y0{-t, s, x.basis_tag};  // intersection(x, y0) = +1

    bool have = false;
    H1Class best;
    auto consider = [&](const H1Class& y) {
        if (!have || detail::ComplementKey(y) < detail::ComplementKey(best)) {
            best = y;
            have = true;
        }
    };
    for (int sign = 0; sign < 2; ++sign) {
        H1Class base = (sign == 0) ? y0 : -y0;
        // Minimize the key over base + t*x; the optimum of each coordinate is
        // near a rational point, so a small window of t suffices.
        Int tc = 0;
        if (x.b != 0)
            tc = floor_div(-base.b, x.b);
        else
            tc = floor_div(-base.a, x.a);
        for (Int dt = -2; dt <= 2; ++dt)
            consider(base + x.scaled(tc + dt));
    }
    return best + x.scaled(shift);
}

}  // namespace bct
