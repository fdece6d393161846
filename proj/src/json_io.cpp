#include "bicontact/json_io.hpp"

#include <limits>

namespace bct {

namespace {

long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::invalid_argument("json: integer too large to persist");
    return v.convert_to<long long>();
}

Json int_json(const Int& v) { return Json(to_ll(v)); }

}  // namespace

Json to_json(const Rational& r) {
    return Json::array({to_ll(boost::multiprecision::numerator(r)),
                        to_ll(boost::multiprecision::denominator(r))});
}

Json to_json(const ReducedFraction& f) {
    return Json::array({to_ll(f.num), to_ll(f.den)});
}

Json to_json(const H1Class& c) {
    return Json::array({to_ll(c.a), to_ll(c.b)});
}

Rational rational_from_json(const Json& j) {
    return Rational(Int(j.at(0).get<long long>()), Int(j.at(1).get<long long>()));
}

H1Class h1_from_json(const Json& j, const std::string& basis_tag) {
    return {Int(j.at(0).get<long long>()), Int(j.at(1).get<long long>()),
            basis_tag};
}

Json to_json(const PLCurve& c) {
    Json verts = Json::array();
    for (const RationalPoint& p : c.vertices)
        verts.push_back(Json::array({to_json(p.x), to_json(p.y)}));
    return Json{{"vertices", verts}, {"closed", c.closed}};
}

PLCurve curve_from_json(const Json& j) {
    PLCurve c;
    c.closed = j.value("closed", true);
    for (const Json& v : j.at("vertices"))
        c.vertices.push_back(
            {rational_from_json(v.at(0)), rational_from_json(v.at(1))});
    return c;
}

Json to_json(const TwistWord& w) {
    Json out = Json::array();
    for (const TwistEntry& e : w.entries) {
        out.push_back(Json{{"curve", e.generator.id},
                           {"class", to_json(e.generator.h1_class)},
                           {"basis", e.generator.h1_class.basis_tag},
                           {"power", to_ll(e.power)},
                           {"level", to_json(e.level.value)}});
    }
    return out;
}

TwistWord word_from_json(const Json& j) {
    TwistWord w;
    for (const Json& e : j) {
        TwistGenerator g{e.at("curve").get<std::string>(),
                         h1_from_json(e.at("class"),
                                      e.value("basis", std::string("fiber")))};
        w.insert({g, Int(e.at("power").get<long long>()),
                  Level(rational_from_json(e.at("level")))});
    }
    return w;
}

namespace {

Json boundary_to_json(const BoundaryTorus& b) {
    return Json{{"id", b.id},
                {"h", to_ll(b.h)},
                {"basis", b.orbit_class.basis_tag},
                {"orbit_class", to_json(b.orbit_class)},
                {"orbit_count", to_ll(b.orbit_count)},
                {"reeb_class", to_json(b.reeb_class)},
                {"orbit_slope", to_json(b.orbit_slope)}};
}

BoundaryTorus boundary_from_json(const Json& j) {
    BoundaryTorus b;
    b.id = j.at("id").get<std::string>();
    b.h = j.at("h").get<long long>();
    std::string basis = j.at("basis").get<std::string>();
    b.orbit_class = h1_from_json(j.at("orbit_class"), basis);
    b.orbit_count = j.at("orbit_count").get<long long>();
    b.reeb_class = h1_from_json(j.at("reeb_class"), basis);
    Json slope = j.at("orbit_slope");
    b.orbit_slope = ReducedFraction(Int(slope.at(0).get<long long>()),
                                    Int(slope.at(1).get<long long>()));
    return b;
}

Json surgery_to_json(const SurgeryRecord& r) {
    Json j{{"type", r.type}};
    if (r.type == "boundary") {
        j["boundary"] = r.boundary;
        j["coefficient"] = to_json(r.coefficient);
        j["shift"] = to_ll(r.shift);
    } else {
        j["curve"] = r.curve;
        j["power"] = to_ll(r.power);
        j["level"] = to_json(r.level);
        j["delta_w"] = to_ll(r.delta_w);
    }
    return j;
}

SurgeryRecord surgery_from_json(const Json& j) {
    SurgeryRecord r;
    r.type = j.at("type").get<std::string>();
    if (r.type == "boundary") {
        r.boundary = j.at("boundary").get<std::string>();
        r.coefficient = rational_from_json(j.at("coefficient"));
        r.shift = j.at("shift").get<long long>();
    } else {
        r.curve = j.at("curve").get<std::string>();
        r.power = j.at("power").get<long long>();
        r.level = rational_from_json(j.at("level"));
        r.delta_w = j.value("delta_w", 0LL);
    }
    return r;
}

}  // namespace

Json to_json(const Plug& p) {
    Json indices = Json::array();
    for (const Int& i : p.fiber.indices) indices.push_back(to_ll(i));
    Json boundaries = Json::array();
    for (const BoundaryTorus& b : p.boundaries)
        boundaries.push_back(boundary_to_json(b));
    Json surgeries = Json::array();
    for (const SurgeryRecord& r : p.surgeries)
        surgeries.push_back(surgery_to_json(r));
    return Json{{"genus", p.fiber.genus},
                {"punctures", p.fiber.punctures()},
                {"indices", indices},
                {"k", to_ll(p.k)},
                {"boundaries", boundaries},
                {"monodromy", to_json(p.monodromy)},
                {"surgeries", surgeries}};
}

Plug plug_from_json(const Json& j) {
    Plug p;
    p.fiber.genus = j.at("genus").get<int>();
    for (const Json& i : j.at("indices"))
        p.fiber.indices.push_back(Int(i.get<long long>()));
    p.k = j.at("k").get<long long>();
    for (const Json& b : j.at("boundaries"))
        p.boundaries.push_back(boundary_from_json(b));
    p.monodromy = word_from_json(j.at("monodromy"));
    for (const Json& s : j.value("surgeries", Json::array()))
        p.surgeries.push_back(surgery_from_json(s));
    return p;
}

Json to_json(const ClosedModel& m) {
    Json pieces = Json::array();
    for (const ModelPiece& piece : m.pieces)
        pieces.push_back(Json{{"tag", piece.tag}, {"plug", to_json(piece.plug)}});
    Json gluings = Json::array();
    for (const Gluing& g : m.gluings) {
        Json matrix = Json::array(
            {Json::array({int_json(g.map.matrix.m[0][0]),
                          int_json(g.map.matrix.m[0][1])}),
             Json::array({int_json(g.map.matrix.m[1][0]),
                          int_json(g.map.matrix.m[1][1])})});
        gluings.push_back(Json{{"from", Json::array({g.from_piece, g.from_boundary})},
                               {"to", Json::array({g.to_piece, g.to_boundary})},
                               {"matrix", matrix}});
    }
    return Json{{"pieces", pieces}, {"gluings", gluings}};
}

ClosedModel model_from_json(const Json& j) {
    ClosedModel m;
    for (const Json& piece : j.at("pieces"))
        m.pieces.push_back({plug_from_json(piece.at("plug")),
                            piece.value("tag", std::string())});
    for (const Json& g : j.at("gluings")) {
        Gluing gl;
        gl.from_piece = g.at("from").at(0).get<int>();
        gl.from_boundary = g.at("from").at(1).get<std::string>();
        gl.to_piece = g.at("to").at(0).get<int>();
        gl.to_boundary = g.at("to").at(1).get<std::string>();
        const Json& mat = g.at("matrix");
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                gl.map.matrix.m[r][c] = Int(mat.at(r).at(c).get<long long>());
        m.gluings.push_back(std::move(gl));
    }
    return m;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bct
