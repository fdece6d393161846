#pragma once

// Fibers with a singular vector field, the Poincare-Hopf gate, polygonal
// curves in a flow-box chart, and winding profiles of closed curves with
// respect to the horizontal characteristic foliation.

#include "bicontact/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bct {

// A genus-g fiber with one puncture per singularity of the reference field.
struct Fiber {
    int genus{0};
    std::vector<Int> indices;  // one per puncture, each <= 0

    int punctures() const { return static_cast<int>(indices.size()); }
};

struct FiberCheck {
    bool ok{false};
    std::string reason;  // empty when ok
};

// Accepts exactly the index lists with every entry <= 0 summing to 2 - 2g.
FiberCheck validate_fiber(const Fiber& f);

// Per-boundary datum h_i = ind_i - 1 < 0.
inline Int boundary_h(const Int& index) { return index - 1; }

struct RationalPoint {
    Rational x;
    Rational y;
    bool operator==(const RationalPoint&) const = default;
};

// Piecewise-linear curve in a single flow-box chart where the field is the
// +x coordinate direction. Closed curves implicitly join last to first; the
// basepoint is vertex 0.
struct PLCurve {
    std::vector<RationalPoint> vertices;
    bool closed{true};

    PLCurve reversed() const;
    PLCurve cycled(int offset) const;  // same curve, basepoint moved
};

struct DegenerateCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tangency scan of a closed curve against the horizontal foliation.
// tangency_values holds, in traversal order from the basepoint, the signed
// value of every run transition of the y-increment sign (0 where the flowline
// sits on both sides). wind is their sum; delta_w is max - min of the running
// partial sums starting from 0.
struct WindingProfile {
    std::vector<int> tangency_values;
    Int wind{0};
    Int delta_w{0};
};

WindingProfile winding_profile(const PLCurve& c);

// Twisting bound k = max(1, 2 * sum of delta_w) over biLegendrian-realizable
// curves; every input must have wind = 0.
Int min_twisting(const std::vector<PLCurve>& curves);

}  // namespace bct
