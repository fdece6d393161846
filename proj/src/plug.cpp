#include "bicontact/plug.hpp"

namespace bct {

const BoundaryTorus& Plug::boundary(const std::string& id) const {
    for (const auto& b : boundaries)
        if (b.id == id) return b;
    throw InvalidPlug("no boundary torus with id '" + id + "'");
}

BoundaryTorus& Plug::boundary(const std::string& id) {
    for (auto& b : boundaries)
        if (b.id == id) return b;
    throw InvalidPlug("no boundary torus with id '" + id + "'");
}

Plug new_plug(const Fiber& fiber, const Int& k) {
    FiberCheck check = validate_fiber(fiber);
    if (!check.ok) throw InvalidPlug("invalid fiber: " + check.reason);
    if (k < 1) throw InvalidPlug("twisting k must be a positive integer");

    Plug p;
    p.fiber = fiber;
    p.k = k;
    for (int i = 0; i < fiber.punctures(); ++i) {
        BoundaryTorus b;
        b.id = "B" + std::to_string(i + 1);
        b.h = boundary_h(fiber.indices[i]);
        Int g = gcd_int(k, b.h);
        b.orbit_class = {b.h / g, k / g, kBoundaryBasis};
        b.orbit_count = 2 * g;
        b.reeb_class = {1, 0, kBoundaryBasis};
        b.orbit_slope = ReducedFraction(b.h, k);
        p.boundaries.push_back(std::move(b));
    }
    return p;
}

bool reeb_hits_once(const BoundaryTorus& b) {
    return abs_int(intersection(b.orbit_class, b.reeb_class)) == 1;
}

}  // namespace bct
