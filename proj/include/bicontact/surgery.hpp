#pragma once

// The two surgery operations: boundary Legendrian-transverse surgery, which
// replaces the Reeb class on one boundary torus, and interior biLegendrian
// surgery, which appends to the monodromy word. Sequences compose with curve
// transport: lower-level twists act on higher-level curves.

#include "bicontact/plug.hpp"

#include <optional>

namespace bct {

// Replaces the Reeb class of the target boundary with the canonical
// once-intersecting complement of the orbit class, shifted by shift * orbit.
// Orbit class, orbit count and topology are unchanged; the rational surgery
// coefficient (q-1)/q + shift is logged, q = |<orbit, old Reeb>|.
Plug boundary_surgery(const Plug& p, const std::string& boundary_id,
                      const Int& shift);

// Appends (curve, power, level) to the monodromy word. When a polygonal
// realization of the curve is supplied, its winding number must vanish and
// the accumulated twisting budget 2 * sum(delta_w) must stay within k.
Plug interior_surgery(const Plug& p, const TwistGenerator& curve,
                      const Int& power, const Level& level,
                      const std::optional<PLCurve>& realization = std::nullopt);

struct SequenceEntry {
    TwistGenerator curve;
    Int power;
    Level level;
};

struct SequenceReport {
    H1Matrix achieved;                  // word matrix after transport
    std::optional<H1Matrix> claimed;    // (ti tj)^2 for the 3-entry pattern
    bool pattern_detected{false};
    bool matches{false};
    std::string summary;
};

// Applies the entries in order. A curve seen for the first time twists about
// its own class; re-surgery on a curve already in the word transports its
// class by the sub-word of strictly lower levels first (conjugation on H1),
// so a one-pass sequence over distinct curves is the plain level-ordered
// product. For the pattern [(ci,1),(cj,1),(ci,1)] at increasing levels the
// report compares the resulting H1 matrix with (ti tj)^2 without asserting
// agreement.
std::pair<Plug, SequenceReport> surgery_sequence(
    const Plug& p, const std::vector<SequenceEntry>& seq);

}  // namespace bct
