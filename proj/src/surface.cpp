#include "bicontact/surface.hpp"

#include <algorithm>

namespace bct {

FiberCheck validate_fiber(const Fiber& f) {
    if (f.genus < 0) return {false, "negative genus"};
    if (f.indices.empty()) return {false, "no punctures"};
    Int sum = 0;
    for (const Int& ind : f.indices) {
        if (ind > 0) return {false, "positive singularity index"};
        sum += ind;
    }
    if (sum != Int(2 - 2 * f.genus)) return {false, "index sum differs from 2-2g"};
    return {true, ""};
}

PLCurve PLCurve::reversed() const {
    PLCurve r;
    r.closed = closed;
    r.vertices.assign(vertices.rbegin(), vertices.rend());
    return r;
}

PLCurve PLCurve::cycled(int offset) const {
    // Basepoint rotation for explicitly closed polygons (first == last).
    if (!closed || vertices.size() < 2 || !(vertices.front() == vertices.back()))
        throw DegenerateCurve("cycled: requires an explicitly closed polygon");
    int n = static_cast<int>(vertices.size()) - 1;
    offset = ((offset % n) + n) % n;
    PLCurve r;
    r.closed = true;
    r.vertices.reserve(vertices.size());
    for (int i = 0; i <= n; ++i) r.vertices.push_back(vertices[(offset + i) % n]);
    return r;
}

namespace {

int sgn(const Rational& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

struct Edge {
    Rational dx, dy;
    int sy;  // sign of dy
};

}  // namespace

// Curve representation convention: a closed curve whose first and last listed
// vertices coincide is a polygon and its edge cycle is exactly the listed
// edges. When first != last, the curve wraps the chart (the endpoints are
// identified through the chart boundary) and the run sequence closes up
// cyclically across the basepoint with no extra geometric edge. The wrap is
// assumed monotone in the second coordinate; list an extra vertex when the
// closing segment crosses a vertical extremum.
WindingProfile winding_profile(const PLCurve& c) {
    if (!c.closed) throw DegenerateCurve("winding_profile: curve must be closed");
    if (c.vertices.size() < 2)
        throw DegenerateCurve("winding_profile: too few vertices");

    std::vector<RationalPoint> vs = c.vertices;
    bool polygon = vs.front() == vs.back();
    if (polygon) vs.pop_back();
    const int n = static_cast<int>(vs.size());
    if (n < 2) throw DegenerateCurve("winding_profile: too few vertices");

    const int edge_count = polygon ? n : n - 1;
    std::vector<Edge> edges;
    edges.reserve(edge_count);
    for (int e = 0; e < edge_count; ++e) {
        const RationalPoint& p = vs[e];
        const RationalPoint& q = vs[(e + 1) % n];
        Rational dx = q.x - p.x, dy = q.y - p.y;
        if (dx == 0 && dy == 0)
            throw DegenerateCurve("winding_profile: zero-length edge at vertex " +
                                  std::to_string(e));
        edges.push_back({dx, dy, sgn(dy)});
    }

    // Vertex index at which the run starting with edge e begins. For a
    // wrapping curve the junction after the last edge is the basepoint.
    auto run_start_pos = [&](int e) {
        if (polygon) return (e + 1) % n;
        return e + 1 == edge_count ? 0 : e + 1;
    };

    std::vector<int> nz;  // edges with nonzero vertical increment
    for (int e = 0; e < edge_count; ++e)
        if (edges[e].sy != 0) nz.push_back(e);

    WindingProfile out;
    if (nz.empty()) return out;  // curve runs along the foliation throughout

    struct Entry {
        int pos;
        int value;
    };
    std::vector<Entry> entries;

    const int k = static_cast<int>(nz.size());
    for (int j = 0; j < k; ++j) {
        int e1 = nz[j];
        int e2 = nz[(j + 1) % k];
        int s1 = edges[e1].sy, s2 = edges[e2].sy;
        bool has_gap = (e2 != (e1 + 1) % edge_count) || (k == 1);
        if (s1 == s2 && !has_gap) continue;  // interior of a monotone run

        int value = 0;
        if (s1 != s2) {
            // Up-to-down is a vertical maximum: the flowline through the
            // tangency sits above the curve. Side (left/right) follows from
            // the horizontal direction of traversal.
            int s_type = (s1 > 0) ? 1 : -1;
            Rational dx_sum = 0;
            if (has_gap)
                for (int e = (e1 + 1) % edge_count; e != e2; e = (e + 1) % edge_count)
                    dx_sum += edges[e].dx;
            int s_x = sgn(dx_sum);
            if (s_x == 0) s_x = sgn(edges[e1].dx + edges[e2].dx);
            value = s_x * s_type;
        }
        // Equal flanking signs across a flat run touch the foliation from one
        // side only: recorded as 0, no side change.
        entries.push_back({run_start_pos(e1), value});
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.pos < b.pos; });

    Int running = 0, mx = 0, mn = 0;
    for (const Entry& e : entries) {
        out.tangency_values.push_back(e.value);
        running += e.value;
        mx = std::max(mx, running);
        mn = std::min(mn, running);
    }
    out.wind = running;
    out.delta_w = mx - mn;
    return out;
}

Int min_twisting(const std::vector<PLCurve>& curves) {
    Int total = 0;
    for (const PLCurve& c : curves) {
        WindingProfile p = winding_profile(c);
        if (p.wind != 0)
            throw DegenerateCurve(
                "min_twisting: curve with nonzero winding number is not "
                "realizable as a biLegendrian");
        total += p.delta_w;
    }
    Int k = 2 * total;
    return k < 1 ? Int(1) : k;
}

}  // namespace bct
