#include "folkit/puiseux.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "folkit/blowup.hpp"
#include "folkit/errors.hpp"

namespace folkit {

namespace {

FieldElem cxy(const MPoly& f, unsigned i, unsigned j) { return f.coeff(Exponents{i, j}); }

FieldPtr coefficient_field(const MPoly& f) {
    FieldPtr k = nullptr;
    for (const auto& [e, c] : f.terms()) k = common_field(k, c.field());
    return k;
}

// Rebuild a series as an exact polynomial (guarantee lifted); used for
// Newton-iteration candidates whose tails are corrected later.
PuiseuxSeries exact_poly(const PuiseuxSeries& s) {
    PuiseuxSeries out = PuiseuxSeries::zero(kOrdInfL, s.ramification());
    for (const auto& [k, c] : s.coeffs())
        out = out + PuiseuxSeries::monomial(c, k, s.ramification());
    return out;
}

// Solve g(x, s(x)) = 0, s(0) = 0, for g with g(0,0) = 0 and g_y(0,0) != 0,
// by Newton iteration with doubling precision.
PuiseuxSeries implicit_solve(const MPoly& g, long uprec) {
    MPoly gy = g.derivative(1);
    PuiseuxSeries xs = PuiseuxSeries::monomial(FieldElem(1), 1);
    PuiseuxSeries s = PuiseuxSeries::zero(); // exact zero candidate
    long p = 1;
    while (p < uprec) {
        long p2 = std::min(2 * p, uprec);
        PuiseuxSeries val = eval_mpoly(g, xs, s);
        PuiseuxSeries gv = eval_mpoly(gy, xs, s);
        s = exact_poly((s - val.divide(gv, p2)).truncated(p2));
        p = p2;
    }
    return s.truncated(uprec);
}

struct NPResult {
    long q;          // x = u^q
    PuiseuxSeries y; // y(u), integer exponents
};

// Core recursion: f(0,0) = 0, x does not divide f. Appends parameterizations.
void np_rec(const MPoly& f, long uprec, int ext_bound, int depth, std::vector<NPResult>& out) {
    if (depth > 64) throw DepthExceeded("newton-puiseux recursion too deep");
    const auto& vars = f.vars();
    MPoly X = MPoly::variable(vars, 0);
    MPoly Y = MPoly::variable(vars, 1);
    MPoly g = f;
    if (auto q = g.divide_exact(Y)) { // exact branch y = 0
        out.push_back({1, PuiseuxSeries::zero()});
        g = *q;
    }
    if (!cxy(g, 0, 0).is_zero()) return; // unit: nothing further through 0

    MPoly zero_p = MPoly::constant(vars, FieldElem(0));
    UPoly fy0 = g.subst_var(0, zero_p).to_upoly(1);
    long j0 = fy0.ord(); // >= 1; finite since x does not divide g
    if (j0 == 1) {
        out.push_back({1, implicit_solve(g, uprec)});
        return;
    }

    // Newton polygon: minimal y-exponent per x-exponent, lower convex hull.
    std::map<long, long> jm;
    for (const auto& [e, c] : g.terms()) {
        long i = e[0], j = e[1];
        auto it = jm.find(i);
        if (it == jm.end() || j < it->second) jm[i] = j;
    }
    std::vector<std::pair<long, long>> hull;
    for (const auto& p : jm) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            long cross = (b.first - a.first) * (p.second - a.second) -
                         (b.second - a.second) * (p.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    FieldPtr K = coefficient_field(g);
    for (size_t t = 0; t + 1 < hull.size(); ++t) {
        auto [i1, j1] = hull[t];
        auto [i2, j2] = hull[t + 1];
        if (j1 <= j2) break; // only the strictly descending part carries branches
        long di = i2 - i1, dj = j1 - j2;
        long gg = std::gcd(di, dj);
        long qh = dj / gg, ph = di / gg; // weights: x = xi^qh, y = xi^ph (c + y1)
        long m = qh * i1 + ph * j1;
        // edge polynomial in T = c^qh (exponents on the edge step by qh in j)
        std::vector<FieldElem> pc(static_cast<size_t>((j1 - j2) / qh) + 1);
        for (const auto& [e, cf] : g.terms())
            if (qh * static_cast<long>(e[0]) + ph * static_cast<long>(e[1]) == m)
                pc[static_cast<size_t>((e[1] - j2) / qh)] = cf;
        UPoly psi{std::move(pc)};
        for (const auto& [t0, mult] : all_roots(psi, K, ext_bound)) {
            FieldElem c = kth_root_elem(t0, static_cast<int>(qh), ext_bound);
            MPoly sub_y = (MPoly::constant(vars, c) + Y) * X.pow(static_cast<int>(ph));
            MPoly f1 = g.subst({X.pow(static_cast<int>(qh)), sub_y});
            auto quot = f1.divide_exact(X.pow(static_cast<int>(m)));
            if (!quot) throw std::logic_error("internal: newton polygon weight mismatch");
            std::vector<NPResult> kids;
            np_rec(*quot, uprec, ext_bound, depth + 1, kids);
            for (const auto& kid : kids) {
                PuiseuxSeries ys = (PuiseuxSeries::monomial(c, 0) + kid.y) *
                                   PuiseuxSeries::monomial(FieldElem(1), ph * kid.q);
                out.push_back({qh * kid.q, ys});
            }
        }
    }
}

} // namespace

std::vector<PuiseuxBranch> newton_puiseux(const MPoly& f, long order, int ext_bound) {
    if (f.is_zero()) throw AllZero("zero curve has no well-defined branches");
    const auto& vars = f.vars();
    if (vars.size() != 2) throw DimensionUnsupported();
    if (!cxy(f, 0, 0).is_zero()) return {}; // curve misses the origin

    MPoly d = MPoly::gcd(MPoly::gcd(f, f.derivative(0)), f.derivative(1));
    if (!d.is_constant()) throw NotSquarefree();

    MPoly g = f;
    MPoly X = MPoly::variable(vars, 0);
    std::vector<PuiseuxBranch> out;
    if (auto q = g.divide_exact(X)) { // y-axis component x = 0
        g = *q;
        PuiseuxBranch b;
        b.x = PuiseuxSeries::zero();
        b.y = PuiseuxSeries::monomial(FieldElem(1), 1);
        b.equation = X;
        out.push_back(b);
    }
    if (cxy(g, 0, 0).is_zero() && !g.is_constant()) {
        std::vector<NPResult> rs;
        np_rec(g, order, ext_bound, 0, rs);
        for (const auto& r : rs) {
            PuiseuxBranch b;
            b.x = PuiseuxSeries::monomial(FieldElem(1), r.q);
            b.y = r.y;
            out.push_back(b);
        }
    }
    for (auto& b : out) b = normalize_branch(b, ext_bound);
    if (out.size() == 1 && !out[0].equation) out[0].equation = f;
    return out;
}

bool is_invariant_branch(const VectorField& x, const PuiseuxBranch& v) {
    if (v.equation) {
        const MPoly& f = *v.equation;
        MPoly xf = x.components()[0] * f.derivative(0) + x.components()[1] * f.derivative(1);
        return xf.divisible_by(f);
    }
    PuiseuxSeries u = eval_mpoly(x.components()[0], v.x, v.y);
    PuiseuxSeries w = eval_mpoly(x.components()[1], v.x, v.y);
    return (u * v.y.derivative() - w * v.x.derivative()).is_zero_term_free();
}

namespace {

// Graph solve at a regular point: y = phi(x) with phi(0) = 0 from
// B(x, phi) = phi' * A(x, phi), where A(0,0) != 0.
PuiseuxSeries regular_graph_solve(const MPoly& a, const MPoly& b, long uprec) {
    FieldElem a00 = cxy(a, 0, 0);
    PuiseuxSeries xs = PuiseuxSeries::monomial(FieldElem(1), 1);
    PuiseuxSeries s = PuiseuxSeries::zero();
    for (long k = 1; k < uprec; ++k) {
        PuiseuxSeries e =
            eval_mpoly(b, xs, s) - s.derivative() * eval_mpoly(a, xs, s);
        FieldElem ek = e.coeff_u(k - 1);
        if (!ek.is_zero())
            s = s + PuiseuxSeries::monomial(ek / (FieldElem(k) * a00), k);
    }
    return s.truncated(uprec);
}

// Graph solve at a singular point with non-nilpotent linear part, in sheared
// coordinates where the tangent direction is (1, 0) (so B has no x term and
// the degree-k obstruction is c_k * (b01 - k * a10)). Returns nullopt when an
// integer resonance is obstructed; free coefficients are set to 0 and
// flagged.
std::optional<PuiseuxSeries> graph_solve(const MPoly& a, const MPoly& b, long uprec,
                                         bool& family, bool& formal) {
    FieldElem l1 = cxy(a, 1, 0);
    FieldElem l2 = cxy(b, 0, 1);
    formal = l1.is_zero() && !l2.is_zero(); // weak direction of a saddle-node
    PuiseuxSeries xs = PuiseuxSeries::monomial(FieldElem(1), 1);
    PuiseuxSeries s = PuiseuxSeries::zero();
    for (long k = 2; k < uprec; ++k) {
        PuiseuxSeries e =
            eval_mpoly(b, xs, s) - s.derivative() * eval_mpoly(a, xs, s);
        FieldElem ek = e.coeff_u(k);
        FieldElem lk = l2 - FieldElem(k) * l1;
        if (lk.is_zero()) {
            if (!ek.is_zero()) return std::nullopt; // obstructed resonance
            family = true;                          // free coefficient, pick 0
            continue;
        }
        if (!ek.is_zero()) s = s + PuiseuxSeries::monomial(-ek / lk, k);
    }
    return s.truncated(uprec);
}

struct RawSep {
    PuiseuxSeries sx, sy;
    bool formal = false, family = false;
};

bool lies_in_divisor(const ChartGerm& g, const RawSep& r) {
    const auto& vars = g.field.vars();
    MPoly v0 = MPoly::variable(vars, 0);
    MPoly v1 = MPoly::variable(vars, 1);
    for (const auto& d : g.divisor) {
        if (d == v0 && r.sx.is_zero_term_free()) return true;
        if (d == v1 && r.sy.is_zero_term_free()) return true;
    }
    return false;
}

std::vector<RawSep> sep_rec(const ChartGerm& g, long uprec, int max_depth, int ext_bound,
                            int depth) {
    const VectorField& f = g.field;
    const auto& vars = f.vars();
    const MPoly& p = f.components()[0];
    const MPoly& q = f.components()[1];
    MPoly x = MPoly::variable(vars, 0);
    MPoly y = MPoly::variable(vars, 1);
    PuiseuxSeries ts = PuiseuxSeries::monomial(FieldElem(1), 1, 1, uprec);
    std::vector<RawSep> out;

    if (f.algebraic_multiplicity() == 0) {
        // regular germ (root only): the unique leaf through the origin
        if (!cxy(p, 0, 0).is_zero()) {
            out.push_back({ts, regular_graph_solve(p, q, uprec), false, false});
        } else {
            MPoly ps = q.subst({y, x});
            MPoly qs = p.subst({y, x});
            out.push_back({regular_graph_solve(ps, qs, uprec), ts, false, false});
        }
        return out;
    }

    if (f.is_dicritical()) throw DicriticalInfinitelyMany();

    if (f.spectrum_nonzero()) {
        // one candidate per tangent direction: roots of T(1, z), plus the
        // vertical direction when the y^2 coefficient of T vanishes
        MPoly t = f.tangent_cone_form();
        MPoly one = MPoly::constant(vars, FieldElem(1));
        UPoly tz = t.subst_var(0, one).to_upoly(1);
        FieldPtr k = coefficient_field(t);
        for (const auto& [z0, mu] : all_roots(tz, k, ext_bound)) {
            MPoly z0x = MPoly::constant(vars, z0) * x;
            MPoly p2 = p.subst({x, y + z0x});
            MPoly q2 = q.subst({x, y + z0x}) - MPoly::constant(vars, z0) * p2;
            bool fam = false, fo = false;
            auto phi = graph_solve(p2, q2, uprec, fam, fo);
            if (phi)
                out.push_back({ts, *phi + ts * z0, fo, fam});
        }
        if (cxy(t, 0, 2).is_zero()) {
            MPoly ps = q.subst({y, x});
            MPoly qs = p.subst({y, x});
            bool fam = false, fo = false;
            auto psi = graph_solve(ps, qs, uprec, fam, fo);
            if (psi) out.push_back({*psi, ts, fo, fam});
        }
        return out;
    }

    // degenerate: resolve by blow-up
    if (depth >= max_depth) throw DepthExceeded();
    for (const auto& pt : singular_points_on_divisor(g, ext_bound)) {
        ChartGerm child = child_at(g, pt);
        for (const auto& r : sep_rec(child, uprec, max_depth, ext_bound, depth + 1)) {
            if (lies_in_divisor(child, r)) continue; // divisor components contract to 0
            auto [dx, dy] = push_down({ChartStep{pt.chart, pt.coord}}, r.sx, r.sy);
            out.push_back({dx, dy, r.formal, r.family});
        }
    }
    return out;
}

} // namespace

std::vector<PuiseuxBranch> solve_separatrices(const VectorField& x, long order, int max_depth,
                                              int ext_bound) {
    ChartGerm g = origin_germ(x);
    auto raw = sep_rec(g, order + 2, max_depth, ext_bound, 0);
    std::vector<PuiseuxBranch> out;
    for (auto& r : raw) {
        PuiseuxBranch b;
        b.x = r.sx;
        b.y = r.sy;
        b.formal = r.formal;
        b.family_rep = r.family;
        out.push_back(normalize_branch(std::move(b), ext_bound));
    }
    return out;
}

PuiseuxBranch sample_dicritical_leaf(const VectorField& x, const FieldElem& c, long order,
                                     int ext_bound) {
    ChartGerm g = origin_germ(x);
    if (!g.dicritical())
        throw NonGenericDirection("germ is not dicritical at the origin");
    ChartGerm child = child_at(g, DivisorPoint{kFirstChart, c});
    const MPoly& a = child.field.components()[0];
    const MPoly& b = child.field.components()[1];
    if (child.nu() >= 1 || cxy(a, 0, 0).is_zero())
        throw NonGenericDirection("transform is singular or tangent to the divisor at z = " +
                                  c.str());
    PuiseuxSeries phi = regular_graph_solve(a, b, order + 2);
    auto [dx, dy] = push_down(child.path, PuiseuxSeries::monomial(FieldElem(1), 1), phi);
    PuiseuxBranch v;
    v.x = dx;
    v.y = dy;
    return normalize_branch(std::move(v), ext_bound);
}

} // namespace folkit
