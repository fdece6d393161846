#pragma once

// Exact verification of the explicit collar contact forms: contact volume
// signs, Reeb fields, strong adaptedness, boundary characteristic-foliation
// slopes, the grid oracle for the tangency locus, and the glued-collar
// continuity check.

#include "bicontact/trigpoly.hpp"

#include <array>
#include <string>

namespace bct {

// A 1-form in a named three-coordinate chart; the chart orientation is the
// coordinate order (right-handed volume dx0^dx1^dx2).
struct OneForm {
    std::array<std::string, 3> chart{"w", "s", "v"};
    std::array<TrigPoly, 3> coeff;

    std::string str() const;
};

// Coefficient of the oriented chart volume in a ^ da.
struct VolumeCoefficient {
    TrigPoly value;

    bool is_constant() const { return value.as_constant().has_value(); }
    Rational constant() const { return *value.as_constant(); }
    double eval(const std::array<double, 3>& x) const { return value.eval(x); }
};

struct DegenerateForm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Collar model forms. Interior collar chart (w, s, v):
//   alpha_minus      = dw + v ds           (negative contact, volume -1)
//   alpha_plus(n)    = sin(n w) ds + cos(n w) dv   (positive contact, volume n)
// Boundary annulus chart (w, theta, r):
//   alpha_minus_boundary(k,h) = dw + (r - h/k) dtheta
//   alpha_plus_boundary(k,h)  = sin(k w - h theta) dtheta + cos(k w - h theta) dr
OneForm alpha_minus();
OneForm alpha_plus(long long n);
OneForm alpha_minus_boundary(long long k, long long h);
OneForm alpha_plus_boundary(long long k, long long h);

VolumeCoefficient contact_volume(const OneForm& a);

// Reeb field of a contact form whose volume coefficient is a nonzero
// constant: the kernel direction of da scaled so a(R) = 1, exact.
struct ReebField {
    std::array<std::string, 3> chart;
    std::array<TrigPoly, 3> comp;
};

ReebField reeb_field(const OneForm& a);

// True iff pos evaluated on the Reeb field of neg vanishes identically.
bool strong_adaptedness_check(const OneForm& neg, const OneForm& pos);

// Slope of the characteristic foliation of alpha_minus_boundary on the
// boundary torus: h/k reduced.
ReducedFraction boundary_foliation_slope(long long k, long long h);

// Connected components of the tangency locus {sin(k w - h theta) = 0} on the
// boundary torus, counted by union-find over an N x N grid band. Expected
// value 2*gcd(k,|h|); requires N >= 8*(k+|h|).
int tangency_components(long long k, long long h, int grid);

struct CollarReport {
    bool pass{false};
    double worst_error{0.0};
    std::array<double, 3> worst_point{0, 0, 0};
    std::string detail;
};

// Samples the canonical collar forms on both sides of the gluing
// w1 -> w2 + shift*pi, s1 -> -s2, v1 -> -v2 (default shift 1/n) and verifies
// the pulled-back forms match the far-side forms within tol at `samples`
// points, and that the contact signs survive the orientation bookkeeping.
CollarReport glued_collar_check(long long n, const Rational& shift_pi,
                                int samples = 10000, double tol = 1e-9,
                                unsigned seed = 7);

inline CollarReport glued_collar_check(long long n) {
    return glued_collar_check(n, Rational(1, n));
}

}  // namespace bct
