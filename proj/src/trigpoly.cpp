#include "bicontact/trigpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bct {

LinArg LinArg::operator+(const LinArg& o) const {
    LinArg r;
    for (int i = 0; i < 3; ++i) r.coeff[i] = coeff[i] + o.coeff[i];
    r.phase = phase + o.phase;
    return r;
}

LinArg LinArg::operator-(const LinArg& o) const { return *this + (-o); }

LinArg LinArg::operator-() const {
    LinArg r;
    for (int i = 0; i < 3; ++i) r.coeff[i] = -coeff[i];
    r.phase = -phase;
    return r;
}

bool LinArg::is_zero() const {
    return coeff == std::array<long long, 3>{0, 0, 0} && phase == 0;
}

bool LinArg::operator==(const LinArg& o) const {
    return coeff == o.coeff && phase == o.phase;
}

bool LinArg::operator<(const LinArg& o) const {
    if (coeff != o.coeff) return coeff < o.coeff;
    return phase < o.phase;
}

bool MonoKey::operator==(const MonoKey& o) const {
    return pow == o.pow && kind == o.kind && arg == o.arg;
}

bool MonoKey::operator<(const MonoKey& o) const {
    if (pow != o.pow) return pow < o.pow;
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    return arg < o.arg;
}

namespace {

// Reduced trig factor: factor * kind(arg), or factor alone when resolved to a
// rational constant (kind == One).
struct ReducedTrig {
    Rational factor;
    TrigKind kind;
    LinArg arg;
};

Rational mod2(Rational p) {
    // phase into [0, 2) in units of pi
    Int n = boost::multiprecision::numerator(p);
    Int d = boost::multiprecision::denominator(p);
    Int q = floor_div(n, 2 * d);
    return p - Rational(2 * q);
}

ReducedTrig reduce(TrigKind kind, LinArg arg) {
    Rational factor(1);

    // Make the leading coordinate coefficient positive; sin is odd, cos even.
    int lead = -1;
    for (int i = 0; i < 3; ++i)
        if (arg.coeff[i] != 0) { lead = i; break; }
    if (lead >= 0 && arg.coeff[lead] < 0) {
        arg = -arg;
        if (kind == TrigKind::Sin) factor = -factor;
    }

    // Phase into [0,1): a shift by pi flips the sign of both functions.
    arg.phase = mod2(arg.phase);
    if (arg.phase >= 1) {
        arg.phase -= 1;
        factor = -factor;
    }
    // A residual quarter turn swaps sin and cos.
    if (arg.phase == Rational(1, 2)) {
        arg.phase = 0;
        if (kind == TrigKind::Sin) {
            kind = TrigKind::Cos;
        } else {
            kind = TrigKind::Sin;
            factor = -factor;
        }
    }

    if (lead < 0 && arg.phase == 0) {
        // sin(0) = 0, cos(0) = 1
        if (kind == TrigKind::Sin) return {Rational(0), TrigKind::One, {}};
        return {factor, TrigKind::One, {}};
    }
    return {factor, kind, arg};
}

}  // namespace

void TrigPoly::add_term(std::array<int, 3> pow, TrigKind kind, LinArg arg,
                        Rational coeff) {
    if (coeff == 0) return;
    if (kind != TrigKind::One) {
        ReducedTrig r = reduce(kind, arg);
        coeff *= r.factor;
        kind = r.kind;
        arg = r.arg;
        if (coeff == 0) return;
    } else {
        arg = {};
    }
    MonoKey key{pow, kind, arg};
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

TrigPoly TrigPoly::constant(const Rational& c) {
    TrigPoly p;
    p.add_term({0, 0, 0}, TrigKind::One, {}, c);
    return p;
}

TrigPoly TrigPoly::coordinate(int i) {
    TrigPoly p;
    std::array<int, 3> pow{0, 0, 0};
    pow[i] = 1;
    p.add_term(pow, TrigKind::One, {}, Rational(1));
    return p;
}

TrigPoly TrigPoly::sin_of(const LinArg& arg) {
    TrigPoly p;
    p.add_term({0, 0, 0}, TrigKind::Sin, arg, Rational(1));
    return p;
}

TrigPoly TrigPoly::cos_of(const LinArg& arg) {
    TrigPoly p;
    p.add_term({0, 0, 0}, TrigKind::Cos, arg, Rational(1));
    return p;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
    TrigPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.pow, k.kind, k.arg, c);
    return r;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const { return *this + (-o); }

TrigPoly TrigPoly::operator-() const { return scaled(Rational(-1)); }

TrigPoly TrigPoly::scaled(const Rational& c) const {
    TrigPoly r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
    TrigPoly r;
    const Rational half(1, 2);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            std::array<int, 3> pow{};
            for (int i = 0; i < 3; ++i) pow[i] = ka.pow[i] + kb.pow[i];
            Rational c = ca * cb;
            if (ka.kind == TrigKind::One) {
                r.add_term(pow, kb.kind, kb.arg, c);
            } else if (kb.kind == TrigKind::One) {
                r.add_term(pow, ka.kind, ka.arg, c);
            } else {
                // product-to-sum keeps every monomial with one trig factor
                LinArg diff = ka.arg - kb.arg;
                LinArg sum = ka.arg + kb.arg;
                Rational ch = c * half;
                if (ka.kind == TrigKind::Sin && kb.kind == TrigKind::Sin) {
                    r.add_term(pow, TrigKind::Cos, diff, ch);
                    r.add_term(pow, TrigKind::Cos, sum, -ch);
                } else if (ka.kind == TrigKind::Cos && kb.kind == TrigKind::Cos) {
                    r.add_term(pow, TrigKind::Cos, diff, ch);
                    r.add_term(pow, TrigKind::Cos, sum, ch);
                } else if (ka.kind == TrigKind::Sin) {
                    r.add_term(pow, TrigKind::Sin, sum, ch);
                    r.add_term(pow, TrigKind::Sin, diff, ch);
                } else {
                    // cos * sin: sin(sum) - sin(this - other)
                    r.add_term(pow, TrigKind::Sin, sum, ch);
                    r.add_term(pow, TrigKind::Sin, diff, -ch);
                }
            }
        }
    }
    return r;
}

TrigPoly TrigPoly::derivative(int i) const {
    TrigPoly r;
    for (const auto& [k, c] : terms_) {
        if (k.pow[i] > 0) {
            std::array<int, 3> pow = k.pow;
            pow[i] -= 1;
            r.add_term(pow, k.kind, k.arg, c * Rational(k.pow[i]));
        }
        if (k.kind == TrigKind::Sin && k.arg.coeff[i] != 0)
            r.add_term(k.pow, TrigKind::Cos, k.arg, c * Rational(k.arg.coeff[i]));
        if (k.kind == TrigKind::Cos && k.arg.coeff[i] != 0)
            r.add_term(k.pow, TrigKind::Sin, k.arg, -c * Rational(k.arg.coeff[i]));
    }
    return r;
}

std::optional<Rational> TrigPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    if (k.kind != TrigKind::One || k.pow != std::array<int, 3>{0, 0, 0})
        return std::nullopt;
    return c;
}

double TrigPoly::eval(const std::array<double, 3>& x) const {
    double total = 0.0;
    for (const auto& [k, c] : terms_) {
        double t = static_cast<double>(c);
        for (int i = 0; i < 3; ++i)
            for (int p = 0; p < k.pow[i]; ++p) t *= x[i];
        if (k.kind != TrigKind::One) {
            double arg = static_cast<double>(k.arg.phase) * M_PI;
            for (int i = 0; i < 3; ++i) arg += static_cast<double>(k.arg.coeff[i]) * x[i];
            t *= (k.kind == TrigKind::Sin) ? std::sin(arg) : std::cos(arg);
        }
        total += t;
    }
    return total;
}

TrigPoly TrigPoly::substitute(const std::array<int, 3>& sign,
                              const std::array<Rational, 3>& shift_pi) const {
    TrigPoly r;
    for (const auto& [k, c] : terms_) {
        Rational coeff = c;
        for (int i = 0; i < 3; ++i) {
            if (k.pow[i] == 0) continue;
            if (shift_pi[i] != 0)
                throw std::invalid_argument(
                    "substitute: pi-shift of a coordinate occurring polynomially");
            if (sign[i] < 0 && (k.pow[i] % 2) != 0) coeff = -coeff;
        }
        LinArg arg = k.arg;
        if (k.kind != TrigKind::One) {
            for (int i = 0; i < 3; ++i) {
                arg.phase += Rational(k.arg.coeff[i]) * shift_pi[i];
                arg.coeff[i] = sign[i] < 0 ? -k.arg.coeff[i] : k.arg.coeff[i];
            }
        }
        r.add_term(k.pow, k.kind, arg, coeff);
    }
    return r;
}

std::string TrigPoly::str(const std::array<std::string, 3>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c << ")";
        first = false;
        for (int i = 0; i < 3; ++i)
            for (int p = 0; p < k.pow[i]; ++p) os << "*" << names[i];
        if (k.kind != TrigKind::One) {
            os << "*" << (k.kind == TrigKind::Sin ? "sin(" : "cos(");
            bool inner = true;
            for (int i = 0; i < 3; ++i) {
                if (k.arg.coeff[i] == 0) continue;
                if (!inner || k.arg.coeff[i] < 0)
                    os << (k.arg.coeff[i] < 0 ? "-" : "+");
                if (std::abs(k.arg.coeff[i]) != 1) os << std::abs(k.arg.coeff[i]) << "*";
                os << names[i];
                inner = false;
            }
            if (k.arg.phase != 0) {
                os << (inner ? "" : "+") << "(" << k.arg.phase << ")*pi";
                inner = false;
            }
            if (inner) os << "0";
            os << ")";
        }
    }
    return os.str();
}

}  // namespace bct
