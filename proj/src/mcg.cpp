#include "bicontact/mcg.hpp"

#include <algorithm>
#include <sstream>

namespace bct {

H1Matrix H1Matrix::pow(int e) const {
    H1Matrix r = identity();
    H1Matrix base = *this;
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

std::string H1Matrix::str() const {
    std::ostringstream os;
    os << "[[" << m[0][0] << "," << m[0][1] << "],[" << m[1][0] << "," << m[1][1]
       << "]]";
    return os.str();
}

void TwistWord::insert(TwistEntry e) {
    if (e.power == 0) throw std::invalid_argument("TwistWord: zero power");
    if (!is_primitive(e.generator.h1_class))
        throw NonPrimitiveClass("TwistWord: generator class must be primitive");
    auto it = std::lower_bound(
        entries.begin(), entries.end(), e,
        [](const TwistEntry& a, const TwistEntry& b) { return a.level < b.level; });
    if (it != entries.end() && it->level == e.level)
        throw DuplicateLevel("TwistWord: duplicate level");
    entries.insert(it, std::move(e));
}

H1Matrix twist_matrix(const TwistGenerator& g, const Int& power) {
    const Int& a = g.h1_class.a;
    const Int& b = g.h1_class.b;
    H1Matrix r;
    // v - power * <v,c> * c, columns are the images of the basis vectors.
    r.m[0][0] = 1 - power * b * a;
    r.m[1][0] = -power * b * b;
    r.m[0][1] = power * a * a;
    r.m[1][1] = 1 + power * a * b;
    return r;
}

H1Matrix word_matrix(const TwistWord& w) {
    H1Matrix r = H1Matrix::identity();
    for (const TwistEntry& e : w.entries)
        r = r * twist_matrix(e.generator, e.power);
    return r;
}

ChainRelationReport check_chain_relation() {
    ChainRelationReport rep;
    TwistGenerator t1{"c1", {1, 0, "fiber"}};
    TwistGenerator t2{"c2", {0, 1, "fiber"}};
    H1Matrix ab = twist_matrix(t1, 1) * twist_matrix(t2, 1);

    auto record = [&rep](bool cond, const std::string& line) {
        rep.lines.push_back((cond ? "ok: " : "FAIL: ") + line);
        rep.ok = rep.ok && cond;
    };

    record(ab.trace() == 1, "(t1 t2) has trace 1, elliptic of order 6");
    for (int j = 1; j < 6; ++j)
        record(!(ab.pow(j) == H1Matrix::identity()),
               "(t1 t2)^" + std::to_string(j) + " != Id");
    record(ab.pow(3) == H1Matrix{{{-1, 0}, {0, -1}}}, "(t1 t2)^3 = -Id");
    record(ab.pow(6) == H1Matrix::identity(), "(t1 t2)^6 = Id");
    record(ab.pow(6) == ab.pow(4) * ab.pow(2),
           "(t1 t2)^6 factors as (t1 t2)^4 (t1 t2)^2");
    return rep;
}

}  // namespace bct
