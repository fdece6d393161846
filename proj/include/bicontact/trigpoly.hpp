#pragma once

// Exact scalar expressions over three chart coordinates: polynomials with
// rational coefficients times at most one sine or cosine of an integer-linear
// combination of coordinates plus a rational multiple of pi. The class is
// closed under +, *, and exact differentiation; products of trig factors are
// rewritten to sums, so zero and constant tests are exact.

#include "bicontact/lattice.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace bct {

// Integer-linear argument a0*x0 + a1*x1 + a2*x2 + phase*pi.
struct LinArg {
    std::array<long long, 3> coeff{0, 0, 0};
    Rational phase{0};  // in units of pi

    LinArg operator+(const LinArg& o) const;
    LinArg operator-(const LinArg& o) const;
    LinArg operator-() const;
    bool is_zero() const;
    bool operator==(const LinArg& o) const;
    bool operator<(const LinArg& o) const;
};

enum class TrigKind { One, Sin, Cos };

struct MonoKey {
    std::array<int, 3> pow{0, 0, 0};
    TrigKind kind{TrigKind::One};
    LinArg arg;  // meaningful when kind != One

    bool operator==(const MonoKey& o) const;
    bool operator<(const MonoKey& o) const;
};

class TrigPoly {
  public:
    TrigPoly() = default;

    static TrigPoly constant(const Rational& c);
    static TrigPoly coordinate(int i);
    static TrigPoly sin_of(const LinArg& arg);
    static TrigPoly cos_of(const LinArg& arg);

    TrigPoly operator+(const TrigPoly& o) const;
    TrigPoly operator-(const TrigPoly& o) const;
    TrigPoly operator-() const;
    TrigPoly operator*(const TrigPoly& o) const;
    TrigPoly scaled(const Rational& c) const;

    bool operator==(const TrigPoly& o) const { return terms_ == o.terms_; }

    // Exact partial derivative with respect to coordinate i.
    TrigPoly derivative(int i) const;

    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> as_constant() const;

    double eval(const std::array<double, 3>& x) const;

    // Pullback under x_i -> sign_i * x_i + shift_i * pi. A coordinate with a
    // nonzero shift must not occur in any polynomial part.
    TrigPoly substitute(const std::array<int, 3>& sign,
                        const std::array<Rational, 3>& shift_pi) const;

    std::string str(const std::array<std::string, 3>& names) const;

    const std::map<MonoKey, Rational>& terms() const { return terms_; }

  private:
    void add_term(std::array<int, 3> pow, TrigKind kind, LinArg arg,
                  Rational coeff);
    std::map<MonoKey, Rational> terms_;
};

}  // namespace bct
