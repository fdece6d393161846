#include "bicontact/assembly.hpp"

#include "bicontact/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bct {

bool compatible(const BoundaryTorus& b1, const BoundaryTorus& b2) {
    return b1.orbit_count == b2.orbit_count;
}

namespace {

// The basis of each boundary torus is only fixed up to the sign of each
// generator, so images are compared componentwise in absolute value.
bool matches_up_to_signs(const H1Class& image, const H1Class& target) {
    return abs_int(image.a) == abs_int(target.a) &&
           abs_int(image.b) == abs_int(target.b);
}

void check_gluing(const BoundaryTorus& b1, const BoundaryTorus& b2,
                  const GluingMap& g) {
    if (!compatible(b1, b2))
        throw IncompatibleGluing("gluing: orbit counts differ (" +
                                 b1.orbit_count.str() + " vs " +
                                 b2.orbit_count.str() + ")");
    if (g.det() != -1)
        throw IncompatibleGluing("gluing: determinant must be -1, got " +
                                 g.det().str());
    H1Class orbit_image = g.apply_to(b1.orbit_class, b2.orbit_class.basis_tag);
    if (!matches_up_to_signs(orbit_image, b2.orbit_class))
        throw IncompatibleGluing("gluing: tangent orbits are not matched");
    H1Class reeb_image = g.apply_to(b1.reeb_class, b2.reeb_class.basis_tag);
    if (!matches_up_to_signs(reeb_image, b2.reeb_class))
        throw IncompatibleGluing("gluing: Reeb orbits are not matched");
}

H1Class sign_normalized(H1Class c) {
    if (c.a < 0 || (c.a == 0 && c.b < 0)) return -c;
    return c;
}

}  // namespace

void validate_model(const ClosedModel& m) {
    std::set<std::pair<int, std::string>> seen;
    auto use = [&](int piece, const std::string& bid) {
        if (piece < 0 || piece >= static_cast<int>(m.pieces.size()))
            throw IncompatibleGluing("model: gluing references missing piece");
        m.pieces[piece].plug.boundary(bid);  // throws if absent
        if (!seen.insert({piece, bid}).second)
            throw IncompatibleGluing("model: boundary glued twice");
    };
    for (const Gluing& g : m.gluings) {
        use(g.from_piece, g.from_boundary);
        use(g.to_piece, g.to_boundary);
        check_gluing(m.pieces[g.from_piece].plug.boundary(g.from_boundary),
                     m.pieces[g.to_piece].plug.boundary(g.to_boundary), g.map);
    }
    for (int i = 0; i < static_cast<int>(m.pieces.size()); ++i)
        for (const BoundaryTorus& b : m.pieces[i].plug.boundaries)
            if (!seen.count({i, b.id}))
                throw IncompatibleGluing("model: unmatched boundary " +
                                         m.pieces[i].tag + "/" + b.id);
}

GluingMap standard_gluing(const BoundaryTorus& b1, const BoundaryTorus& b2) {
    GluingMap g{H1Matrix{{{1, 0}, {0, -1}}}};
    check_gluing(b1, b2, g);
    return g;
}

GluingMap fig8_gluing(const Int& k) {
    return GluingMap{H1Matrix{{{-1, 0}, {-2 * k, 1}}}};
}

namespace {

ModelPiece fig8_piece(const Int& n) {
    ModelPiece piece;
    piece.tag = "fig8:catmap";
    Plug& p = piece.plug;
    p.fiber = Fiber{1, {Int(0)}};
    p.k = n;  // twisting of the positive structure along the circle
    BoundaryTorus b;
    b.id = "B1";
    b.h = -1;
    b.orbit_class = {1, n, "mu,lambda"};
    b.orbit_count = 2;
    b.reeb_class = {0, 1, "mu,lambda"};  // Reeb orbits parallel to the longitude
    b.orbit_slope = ReducedFraction(n, 1);
    p.boundaries.push_back(std::move(b));
    p.monodromy.insert({{"c1", {1, 0, "fiber"}}, 1, Level(Rational(1))});
    p.monodromy.insert({{"c2", {0, 1, "fiber"}}, -1, Level(Rational(2))});
    return piece;
}

}  // namespace

ClosedModel fig8_model(const Int& n, const Int& m) {
    if (n < 0 || m < 0 || (n + m) % 2 != 0)
        throw IncompatibleGluing("fig8_model: n + m must be even, n, m >= 0");
    Int k = (n + m) / 2;

    ClosedModel model;
    model.pieces.push_back(fig8_piece(n));
    model.pieces.push_back(fig8_piece(m));

    GluingMap psi = fig8_gluing(k);
    H1Class image = psi.apply_to(model.pieces[0].plug.boundary("B1").orbit_class,
                                 "mu,lambda");
    if (!(image == -model.pieces[1].plug.boundary("B1").orbit_class))
        throw IncompatibleGluing("fig8_model: Psi_k does not match the orbits");

    model.gluings.push_back({0, "B1", 1, "B1", psi});
    validate_model(model);
    return model;
}

ClosedModel ht_model(const Int& k, const Int& h) {
    Fiber torus{1, {Int(0)}};
    Plug p1 = boundary_surgery(new_plug(torus, k), "B1", 0);
    Plug p2 = boundary_surgery(new_plug(torus, h), "B1", 0);

    ClosedModel model;
    model.pieces.push_back({std::move(p1), "cover:k=" + k.str()});
    model.pieces.push_back({std::move(p2), "cover:k=" + h.str()});
    // Sends the slope -1/k orbit to the slope -1/h orbit and Reeb to -Reeb.
    GluingMap g{H1Matrix{{{1, 0}, {-(k + h), -1}}}};
    model.gluings.push_back({0, "B1", 1, "B1", g});
    validate_model(model);
    return model;
}

std::string flow_invariant(const ClosedModel& m) {
    std::vector<std::string> pieces;
    for (const ModelPiece& piece : m.pieces) {
        std::vector<std::string> slopes;
        for (const BoundaryTorus& b : piece.plug.boundaries) {
            H1Class c = sign_normalized(b.orbit_class);
            slopes.push_back("(" + c.a.str() + "," + c.b.str() + ")");
        }
        std::sort(slopes.begin(), slopes.end());
        std::string s = piece.tag + "{";
        for (const std::string& sl : slopes) s += sl;
        s += "}";
        pieces.push_back(std::move(s));
    }
    std::sort(pieces.begin(), pieces.end());
    std::string out;
    for (const std::string& s : pieces) out += s + ";";
    return out;
}

std::vector<std::vector<int>> classify(const std::vector<ClosedModel>& models) {
    std::map<std::string, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(models.size()); ++i)
        groups[flow_invariant(models[i])].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [key, idx] : groups) out.push_back(idx);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace bct
