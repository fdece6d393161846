#include "bicontact/surgery.hpp"

#include <sstream>

namespace bct {

Plug boundary_surgery(const Plug& p, const std::string& boundary_id,
                      const Int& shift) {
    Plug out = p;
    BoundaryTorus& b = out.boundary(boundary_id);
    if (!is_primitive(b.orbit_class))
        throw NonPrimitiveClass("boundary_surgery: non-primitive orbit class");

    Int q = abs_int(intersection(b.orbit_class, b.reeb_class));
    b.reeb_class = once_intersecting_complement(b.orbit_class, shift);

    SurgeryRecord rec;
    rec.type = "boundary";
    rec.boundary = boundary_id;
    rec.shift = shift;
    rec.coefficient = (q == 0) ? Rational(shift)
                               : Rational(q - 1, q) + Rational(shift);
    out.surgeries.push_back(std::move(rec));
    return out;
}

Plug interior_surgery(const Plug& p, const TwistGenerator& curve,
                      const Int& power, const Level& level,
                      const std::optional<PLCurve>& realization) {
    Plug out = p;
    Int dw = 0;
    if (realization) {
        WindingProfile prof = winding_profile(*realization);
        if (prof.wind != 0)
            throw DegenerateCurve(
                "interior_surgery: curve has nonzero winding number, not "
                "realizable as a biLegendrian");
        dw = prof.delta_w;
        Int budget = dw;
        for (const SurgeryRecord& r : out.surgeries)
            if (r.type == "interior") budget += r.delta_w;
        if (2 * budget > out.k)
            throw InvalidPlug("interior_surgery: twisting budget 2*sum(delta_w) "
                              "exceeds k = " + out.k.str());
    }

    out.monodromy.insert({curve, power, level});

    SurgeryRecord rec;
    rec.type = "interior";
    rec.curve = curve.id;
    rec.power = power;
    rec.level = level.value;
    rec.delta_w = dw;
    out.surgeries.push_back(std::move(rec));
    return out;
}

std::pair<Plug, SequenceReport> surgery_sequence(
    const Plug& p, const std::vector<SequenceEntry>& seq) {
    Plug cur = p;
    TwistWord added;
    for (const SequenceEntry& e : seq) {
        // A first pass over a curve twists about the curve itself. Re-surgery
        // sees the curve displaced by every twist below its level, so its
        // class is transported by that sub-word before the twist is taken.
        bool repeat = false;
        for (const TwistEntry& t : cur.monodromy.entries)
            if (t.generator.id == e.curve.id) repeat = true;
        H1Class image = e.curve.h1_class;
        if (repeat) {
            TwistWord lower;
            for (const TwistEntry& t : cur.monodromy.entries)
                if (t.level < e.level) lower.insert(t);
            image = word_matrix(lower).apply(image);
        }
        TwistGenerator transported{e.curve.id, image};
        cur = interior_surgery(cur, transported, e.power, e.level);
        added.insert({transported, e.power, e.level});
    }

    SequenceReport rep;
    rep.achieved = word_matrix(added);

    bool pattern = seq.size() == 3 && seq[0].curve.id == seq[2].curve.id &&
                   seq[0].curve.h1_class == seq[2].curve.h1_class &&
                   seq[0].curve.id != seq[1].curve.id &&
                   seq[0].power == 1 && seq[1].power == 1 && seq[2].power == 1 &&
                   seq[0].level < seq[1].level && seq[1].level < seq[2].level &&
                   abs_int(intersection(seq[0].curve.h1_class,
                                        seq[1].curve.h1_class)) == 1;
    if (pattern) {
        rep.pattern_detected = true;
        H1Matrix titj =
            twist_matrix(seq[0].curve, 1) * twist_matrix(seq[1].curve, 1);
        rep.claimed = titj * titj;
        rep.matches = rep.achieved == *rep.claimed;
    }

    std::ostringstream os;
    os << "achieved " << rep.achieved.str();
    if (rep.pattern_detected) {
        os << "; (ti tj)^2 = " << rep.claimed->str() << "; "
           << (rep.matches ? "agreement" : "mismatch")
           << " with the claimed monodromy change on H1";
    } else {
        os << "; no 3-entry self-surgery pattern detected";
    }
    rep.summary = os.str();
    return {cur, rep};
}

}  // namespace bct
