#pragma once

// The fibered-piece record: fiber, twisting of the positive structure,
// boundary-torus data with derived orbit counts and slopes, and the
// monodromy twist word.

#include "bicontact/lattice.hpp"
#include "bicontact/mcg.hpp"
#include "bicontact/surface.hpp"

#include <string>
#include <vector>

namespace bct {

inline const std::string kBoundaryBasis = "w,theta";

struct BoundaryTorus {
    std::string id;
    Int h{-1};                 // ind - 1, negative for plugs built from a fiber
    H1Class orbit_class;       // primitive, reduced from (h, k)
    Int orbit_count{2};        // 2 * gcd(k, |h|)
    H1Class reeb_class;        // (1,0) before any boundary surgery
    ReducedFraction orbit_slope;  // h/k, sign kept
};

struct SurgeryRecord {
    std::string type;      // "boundary" or "interior"
    std::string boundary;  // boundary surgery only
    Rational coefficient;  // boundary surgery: (q-1)/q + shift
    Int shift{0};
    std::string curve;     // interior surgery only
    Int power{0};
    Rational level{0};
    Int delta_w{0};        // twisting budget consumed by an attached realization
};

struct Plug {
    Fiber fiber;
    Int k{1};  // twisting of the positive contact structure
    std::vector<BoundaryTorus> boundaries;
    TwistWord monodromy;
    std::vector<SurgeryRecord> surgeries;

    const BoundaryTorus& boundary(const std::string& id) const;
    BoundaryTorus& boundary(const std::string& id);
};

struct InvalidPlug : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Builds the plug record for a validated fiber: per boundary, h = ind - 1,
// orbit count 2*gcd(k,|h|), orbit class (h,k) reduced, Reeb class (1,0).
Plug new_plug(const Fiber& fiber, const Int& k);

// True iff the tangent orbits meet the Reeb orbits once: the intersection of
// orbit and Reeb class is +-1. For the initial Reeb class this is k | h.
bool reeb_hits_once(const BoundaryTorus& b);

}  // namespace bct
