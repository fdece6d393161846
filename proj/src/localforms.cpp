#include "bicontact/localforms.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

namespace bct {

std::string OneForm::str() const {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        if (i) os << " + ";
        os << "(" << coeff[i].str(chart) << ") d" << chart[i];
    }
    return os.str();
}

OneForm alpha_minus() {
    OneForm a;
    a.chart = {"w", "s", "v"};
    a.coeff[0] = TrigPoly::constant(Rational(1));
    a.coeff[1] = TrigPoly::coordinate(2);  // v ds
    a.coeff[2] = TrigPoly();
    return a;
}

OneForm alpha_plus(long long n) {
    OneForm a;
    a.chart = {"w", "s", "v"};
    a.coeff[0] = TrigPoly();
    a.coeff[1] = TrigPoly::sin_of({{n, 0, 0}, Rational(0)});
    a.coeff[2] = TrigPoly::cos_of({{n, 0, 0}, Rational(0)});
    return a;
}

OneForm alpha_minus_boundary(long long k, long long h) {
    OneForm a;
    a.chart = {"w", "theta", "r"};
    a.coeff[0] = TrigPoly::constant(Rational(1));
    a.coeff[1] = TrigPoly::coordinate(2) - TrigPoly::constant(Rational(h, k));
    a.coeff[2] = TrigPoly();
    return a;
}

OneForm alpha_plus_boundary(long long k, long long h) {
    OneForm a;
    a.chart = {"w", "theta", "r"};
    a.coeff[0] = TrigPoly();
    a.coeff[1] = TrigPoly::sin_of({{k, -h, 0}, Rational(0)});
    a.coeff[2] = TrigPoly::cos_of({{k, -h, 0}, Rational(0)});
    return a;
}

namespace {

struct Curl {
    TrigPoly f01, f02, f12;
};

Curl exterior_derivative(const OneForm& a) {
    return {a.coeff[1].derivative(0) - a.coeff[0].derivative(1),
            a.coeff[2].derivative(0) - a.coeff[0].derivative(2),
            a.coeff[2].derivative(1) - a.coeff[1].derivative(2)};
}

}  // namespace

VolumeCoefficient contact_volume(const OneForm& a) {
    Curl d = exterior_derivative(a);
    TrigPoly vol = a.coeff[0] * d.f12 - a.coeff[1] * d.f02 + a.coeff[2] * d.f01;
    return {vol};
}

ReebField reeb_field(const OneForm& a) {
    Curl d = exterior_derivative(a);
    VolumeCoefficient vol = contact_volume(a);
    if (!vol.is_constant())
        throw DegenerateForm("reeb_field: non-constant contact volume");
    Rational c = vol.constant();
    if (c == 0)
        throw DegenerateForm("reeb_field: vanishing contact volume, not contact");
    // (f12, -f02, f01) spans the kernel of da; a evaluates to the volume on it.
    Rational inv = Rational(1) / c;
    return {a.chart,
            {d.f12.scaled(inv), (-d.f02).scaled(inv), d.f01.scaled(inv)}};
}

bool strong_adaptedness_check(const OneForm& neg, const OneForm& pos) {
    if (neg.chart != pos.chart)
        throw DegenerateForm("strong_adaptedness_check: charts differ");
    VolumeCoefficient vn = contact_volume(neg);
    VolumeCoefficient vp = contact_volume(pos);
    if (!vn.is_constant() || vn.constant() >= 0)
        throw DegenerateForm("strong_adaptedness_check: first form not negative contact");
    // a candidate that is not positive contact cannot be strongly adapted
    if (!vp.is_constant() || vp.constant() <= 0) return false;

    ReebField r = reeb_field(neg);
    TrigPoly pairing;
    for (int i = 0; i < 3; ++i) pairing = pairing + pos.coeff[i] * r.comp[i];
    if (pairing.is_zero()) return true;

    // numeric fallback on a 64^3 grid
    const int n = 64;
    const double step = 2.0 * M_PI / n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                if (std::fabs(pairing.eval({i * step, j * step, l * step - 1.0})) >
                    1e-9)
                    return false;
    return true;
}

ReducedFraction boundary_foliation_slope(long long k, long long h) {
    return ReducedFraction(Int(h), Int(k));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

}  // namespace

int tangency_components(long long k, long long h, int grid) {
    if (k == 0 && h == 0)
        throw DegenerateForm("tangency_components: (k,h) = (0,0)");
    long long freq = std::llabs(k) + std::llabs(h);
    if (grid < 8 * freq)
        throw DegenerateForm("tangency_components: grid resolution too coarse");

    const double step = 2.0 * M_PI / grid;
    const double band = std::sin(M_PI * static_cast<double>(freq) / grid);
    std::vector<char> in_band(static_cast<size_t>(grid) * grid, 0);
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            double val = std::sin(k * (i * step) - h * (j * step));
            if (std::fabs(val) < band) in_band[static_cast<size_t>(i) * grid + j] = 1;
        }
    }

    UnionFind uf(grid * grid);
    auto idx = [grid](int i, int j) {
        return ((i % grid + grid) % grid) * grid + ((j % grid + grid) % grid);
    };
    // 8-connected on the torus; the diagonal links keep thin bands joined
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            if (!in_band[idx(i, j)]) continue;
            const int di[4] = {1, 0, 1, 1};
            const int dj[4] = {0, 1, 1, -1};
            for (int d = 0; d < 4; ++d) {
                int ni = i + di[d], nj = j + dj[d];
                if (in_band[idx(ni, nj)]) uf.unite(idx(i, j), idx(ni, nj));
            }
        }
    }
    std::vector<char> root_seen(static_cast<size_t>(grid) * grid, 0);
    int count = 0;
    for (int i = 0; i < grid * grid; ++i) {
        if (!in_band[i]) continue;
        int r = uf.find(i);
        if (!root_seen[r]) {
            root_seen[r] = 1;
            ++count;
        }
    }
    return count;
}

CollarReport glued_collar_check(long long n, const Rational& shift_pi,
                                int samples, double tol, unsigned seed) {
    OneForm am = alpha_minus();
    OneForm ap = alpha_plus(n);

    // Pullback under w1 = w2 + shift*pi, s1 = -s2, v1 = -v2. The Jacobian
    // sends (dw1, ds1, dv1) to (dw2, -ds2, -dv2).
    std::array<int, 3> sign{1, -1, -1};
    std::array<Rational, 3> shift{shift_pi, Rational(0), Rational(0)};
    auto pull = [&](const OneForm& a) {
        OneForm r = a;
        for (int i = 0; i < 3; ++i) {
            r.coeff[i] = a.coeff[i].substitute(sign, shift);
            if (sign[i] < 0) r.coeff[i] = -r.coeff[i];
        }
        return r;
    };
    OneForm pam = pull(am);
    OneForm pap = pull(ap);

    CollarReport rep;
    std::array<TrigPoly, 6> diffs = {
        pam.coeff[0] - am.coeff[0], pam.coeff[1] - am.coeff[1],
        pam.coeff[2] - am.coeff[2], pap.coeff[0] - ap.coeff[0],
        pap.coeff[1] - ap.coeff[1], pap.coeff[2] - ap.coeff[2]};

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> circle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> collar(-1.0, 0.0);
    rep.worst_error = 0.0;
    for (int s = 0; s < samples; ++s) {
        std::array<double, 3> x{circle(rng), circle(rng), collar(rng)};
        for (const TrigPoly& d : diffs) {
            double err = std::fabs(d.eval(x));
            if (err > rep.worst_error) {
                rep.worst_error = err;
                rep.worst_point = x;
            }
        }
    }

    VolumeCoefficient vn = contact_volume(pam);
    VolumeCoefficient vp = contact_volume(pap);
    bool signs_ok = vn.is_constant() && vn.constant() == -1 &&
                    vp.is_constant() && vp.constant() == Rational(n);
    rep.pass = signs_ok && rep.worst_error <= tol;

    std::ostringstream os;
    os << "collar gluing n=" << n << " shift=" << shift_pi << "*pi: "
       << (rep.pass ? "pass" : "FAIL") << ", worst |error| = " << rep.worst_error
       << " at (" << rep.worst_point[0] << ", " << rep.worst_point[1] << ", "
       << rep.worst_point[2] << ")";
    if (!signs_ok) os << "; contact signs not preserved";
    rep.detail = os.str();
    return rep;
}

}  // namespace bct
