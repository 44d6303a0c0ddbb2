#include "folkit/blowup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "folkit/errors.hpp"
#include "folkit/factor.hpp"

namespace folkit {

namespace {

MPoly exact_quotient(const MPoly& p, const MPoly& d, const char* where) {
    auto q = p.divide_exact(d);
    if (!q) throw std::logic_error(std::string("internal: inexact division in ") + where);
    return *q;
}

FieldElem const_term(const MPoly& p) { return p.coeff(Exponents{0, 0}); }

} // namespace

const char* reduced_tag_name(ReducedTag t) {
    switch (t) {
        case ReducedTag::regular: return "regular";
        case ReducedTag::nondegenerate_hyperbolic: return "nondegenerate_hyperbolic";
        case ReducedTag::saddle_node: return "saddle_node";
        case ReducedTag::resonant_nonreduced: return "resonant_nonreduced";
        case ReducedTag::degenerate: return "degenerate";
    }
    return "?";
}

ChartGerm origin_germ(const VectorField& x) {
    if (x.dim() != 2) throw DimensionUnsupported();
    return ChartGerm{{}, x, {}};
}

ChartGerm translate(const ChartGerm& g, const FieldElem& c0, const FieldElem& c1) {
    std::vector<FieldElem> c{c0, c1};
    std::vector<MPoly> comps;
    for (const auto& f : g.field.components()) comps.push_back(f.shift(c));
    std::vector<MPoly> div;
    for (const auto& d : g.divisor) {
        MPoly s = d.shift(c);
        if (const_term(s).is_zero()) div.push_back(s);
    }
    return ChartGerm{g.path, g.field.with_components(std::move(comps)), std::move(div)};
}

ChartGerm blow_up(const ChartGerm& g, int chart) {
    const auto& vars = g.field.vars();
    int nt = g.nu_tilde();
    MPoly V0 = MPoly::variable(vars, 0);
    MPoly V1 = MPoly::variable(vars, 1);
    const MPoly& P = g.field.components()[0];
    const MPoly& Q = g.field.components()[1];
    MPoly c0, c1, ex;
    std::vector<MPoly> pullback_args;
    if (chart == kFirstChart) {
        pullback_args = {V0, V1 * V0}; // (x, z) -> (x, z*x)
        ex = V0;
        MPoly Pp = P.subst(pullback_args);
        MPoly Qp = Q.subst(pullback_args);
        c0 = exact_quotient(Pp, ex.pow(nt), "blow_up/1");
        c1 = exact_quotient(Qp - V1 * Pp, ex.pow(nt + 1), "blow_up/1");
    } else {
        pullback_args = {V0 * V1, V1}; // (w, y) -> (w*y, y)
        ex = V1;
        MPoly Pp = P.subst(pullback_args);
        MPoly Qp = Q.subst(pullback_args);
        c0 = exact_quotient(Pp - V0 * Qp, ex.pow(nt + 1), "blow_up/2");
        c1 = exact_quotient(Qp, ex.pow(nt), "blow_up/2");
    }
    std::vector<MPoly> div{ex};
    for (const auto& d : g.divisor) {
        MPoly t = d.subst(pullback_args);
        while (true) {
            auto q = t.divide_exact(ex);
            if (!q) break;
            t = *q;
        }
        if (!t.is_constant() && const_term(t).is_zero()) div.push_back(t);
    }
    auto path = g.path;
    path.push_back(ChartStep{chart, FieldElem(0)});
    return ChartGerm{std::move(path), g.field.with_components({c0, c1}), std::move(div)};
}

std::vector<DivisorPoint> singular_points_on_divisor(const ChartGerm& g, int ext_bound) {
    std::vector<DivisorPoint> pts;
    const auto& vars = g.field.vars();
    MPoly zero_p = MPoly::constant(vars, FieldElem(0));

    ChartGerm g1 = blow_up(g, kFirstChart);
    UPoly a = g1.field.components()[0].subst_var(0, zero_p).to_upoly(1);
    UPoly b = g1.field.components()[1].subst_var(0, zero_p).to_upoly(1);
    if (a.is_zero() && b.is_zero())
        throw std::logic_error("internal: exceptional divisor contained in singular set");
    UPoly h = UPoly::gcd(a, b);
    if (h.degree() >= 1)
        for (const auto& [r, m] : all_roots(h, nullptr, ext_bound))
            pts.push_back(DivisorPoint{kFirstChart, r});

    ChartGerm g2 = blow_up(g, kSecondChart);
    bool sing2 = true;
    for (const auto& f : g2.field.components())
        if (!const_term(f).is_zero()) sing2 = false;
    if (sing2) pts.push_back(DivisorPoint{kSecondChart, FieldElem(0)});
    return pts;
}

ChartGerm child_at(const ChartGerm& g, const DivisorPoint& p) {
    ChartGerm b = blow_up(g, p.chart);
    ChartGerm t = (p.chart == kFirstChart) ? translate(b, FieldElem(0), p.coord)
                                           : translate(b, p.coord, FieldElem(0));
    t.path.back().center = p.coord;
    return t;
}

std::pair<PuiseuxSeries, PuiseuxSeries> push_down(const std::vector<ChartStep>& path,
                                                  PuiseuxSeries u, PuiseuxSeries v) {
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        PuiseuxSeries c = PuiseuxSeries::monomial(it->center, 0);
        if (it->chart == kFirstChart) {
            v = u * (v + c);
        } else {
            u = v * (u + c);
        }
    }
    return {std::move(u), std::move(v)};
}

ReducedClass classify_germ(const VectorField& f) {
    if (f.algebraic_multiplicity() == 0) return {ReducedTag::regular, std::nullopt};
    auto L = f.linear_part();
    const FieldElem &a = L[0][0], &b = L[0][1], &c = L[1][0], &d = L[1][1];
    if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero())
        return {ReducedTag::degenerate, std::nullopt};
    FieldElem tr = a + d;
    FieldElem det = a * d - b * c;
    if (det.is_zero()) {
        if (tr.is_zero()) return {ReducedTag::degenerate, std::nullopt}; // nilpotent
        return {ReducedTag::saddle_node, std::nullopt};
    }
    if (tr.is_zero()) // eigenvalues +/- lambda, ratio -1
        return {ReducedTag::nondegenerate_hyperbolic, Rat(-1)};
    // The eigenvalue ratio r satisfies s = r / (1 + r)^2 with s = det / tr^2.
    FieldElem s = det / (tr * tr);
    if (!s.is_rational()) return {ReducedTag::nondegenerate_hyperbolic, std::nullopt};
    Rat sr = s.rational();
    Rat disc = Rat(1) - Rat(4) * sr;
    if (disc < 0) // complex conjugate eigenvalues
        return {ReducedTag::nondegenerate_hyperbolic, std::nullopt};
    auto root = rat_kth_root(disc, 2);
    if (!root) // irrational real ratio
        return {ReducedTag::nondegenerate_hyperbolic, std::nullopt};
    Rat r1 = (Rat(1) - Rat(2) * sr + *root) / (Rat(2) * sr);
    Rat r2 = (Rat(1) - Rat(2) * sr - *root) / (Rat(2) * sr);
    if (r1 > 0 || r2 > 0) return {ReducedTag::resonant_nonreduced, r1 > 0 ? r1 : r2};
    return {ReducedTag::nondegenerate_hyperbolic, r1};
}

std::pair<FieldElem, FieldElem> weak_direction(const VectorField& f) {
    auto L = f.linear_part();
    const FieldElem &a = L[0][0], &b = L[0][1], &c = L[1][0], &d = L[1][1];
    if (!a.is_zero() || !b.is_zero()) return {b, -a};
    return {d, -c};
}

ResolutionTree resolve(const VectorField& x, int max_depth, int ext_bound) {
    ResolutionTree T;
    struct Item {
        ChartGerm g;
        int parent;
        int depth;
    };
    std::deque<Item> queue;
    queue.push_back({origin_germ(x), -1, 0});
    while (!queue.empty()) {
        Item it = std::move(queue.front());
        queue.pop_front();
        int id = static_cast<int>(T.nodes.size());
        ResolutionNode n{it.g,
                         it.g.nu(),
                         it.g.nu_tilde(),
                         it.g.dicritical(),
                         classify_germ(it.g.field),
                         it.parent,
                         {},
                         it.depth};
        if (n.dicritical && n.nu >= 1) T.strictly_nondicritical = false;
        if (n.cls.tag == ReducedTag::saddle_node) {
            auto w = weak_direction(it.g.field);
            for (const auto& d : it.g.divisor) {
                FieldElem al = d.coeff(Exponents{1, 0});
                FieldElem be = d.coeff(Exponents{0, 1});
                if ((al * w.first + be * w.second).is_zero()) T.second_type = false;
            }
        }
        if (!n.cls.reduced()) {
            if (it.depth >= max_depth) {
                T.complete = false;
            } else {
                for (const auto& p : singular_points_on_divisor(it.g, ext_bound))
                    queue.push_back({child_at(it.g, p), id, it.depth + 1});
            }
        }
        if (it.parent >= 0) T.nodes[static_cast<size_t>(it.parent)].children.push_back(id);
        T.nodes.push_back(std::move(n));
    }
    return T;
}

std::string ResolutionTree::to_dot() const {
    std::string s = "digraph resolution {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (size_t i = 0; i < nodes.size(); ++i) {
        const ResolutionNode& n = nodes[i];
        std::string label = "#" + std::to_string(i) + "  nu=" + std::to_string(n.nu) +
                            "  nu~=" + std::to_string(n.nu_tilde) + "\\n" +
                            reduced_tag_name(n.cls.tag);
        if (n.dicritical) label += "\\ndicritical";
        if (n.cls.ratio) label += "\\nratio=" + rat_str(*n.cls.ratio);
        s += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
        const ResolutionNode& n = nodes[i];
        if (n.parent < 0) continue;
        const ChartStep& st = n.germ.path.back();
        std::string elabel = (st.chart == kFirstChart ? "z=" : "w=") + st.center.str();
        s += "  n" + std::to_string(n.parent) + " -> n" + std::to_string(i) + " [label=\"" +
             elabel + "\"];\n";
    }
    s += "}\n";
    return s;
}

int index_along_series(const VectorField& x, const PuiseuxSeries& a, const PuiseuxSeries& b) {
    PuiseuxSeries u = eval_mpoly(x.components()[0], a, b);
    PuiseuxSeries v = eval_mpoly(x.components()[1], a, b);
    PuiseuxSeries da = a.derivative();
    PuiseuxSeries db = b.derivative();
    PuiseuxSeries cross = u * db - v * da;
    if (!cross.is_zero_term_free())
        throw NotInvariant("curve is not invariant: X(alpha) is not parallel to alpha'");
    // A component whose derivative is term-free up to its guaranteed order is
    // treated as zero; the index is then read off the other component.
    auto soft = [](const PuiseuxSeries& s) -> std::optional<Rat> {
        if (s.is_zero_term_free()) return std::nullopt;
        return s.ord();
    };
    std::optional<Rat> oda = soft(da), odb = soft(db);
    std::optional<Rat> onum;
    Rat oden;
    if (oda) {
        onum = u.ord();
        oden = *oda;
    } else if (odb) {
        onum = v.ord();
        oden = *odb;
    } else {
        throw InvalidBranch("constant parameterization");
    }
    if (!onum)
        throw NotInvariant("vector field vanishes identically along the curve");
    Rat r = *onum - oden;
    if (r.get_den() != 1)
        throw InvalidBranch("non-integral cofactor order; normalize the branch first");
    return static_cast<int>(r.get_num().get_si());
}

BranchTower branch_tower(const VectorField& x, const PuiseuxBranch& v0, int k, int ext_bound) {
    BranchTower T;
    PuiseuxBranch v = normalize_branch(v0, ext_bound);
    ChartGerm g = origin_germ(x);
    PuiseuxSeries sx = v.x, sy = v.y;

    // Working precision: keep everything on a finite grid so that divisions
    // stay well defined; adaptivity happens at the caller on
    // PrecisionExhausted.
    long maxe = 0;
    for (const auto& s : {sx, sy})
        if (!s.coeffs().empty()) maxe = std::max(maxe, s.coeffs().rbegin()->first);
    long W = std::min(std::min(sx.guaranteed_order(), sy.guaranteed_order()),
                      4 * (maxe + 2) * (k + 2) + 64);
    auto cap = [&](const PuiseuxSeries& s) {
        return s.guaranteed_order() > W ? s.truncated(W) : s;
    };

    // Order with "zero to working precision" collapsed to nullopt: a branch
    // component that is term-free up to its guaranteed order is treated as
    // zero for chart selection (the quotient series below stay consistent).
    auto soft_ord = [](const PuiseuxSeries& s) -> std::optional<Rat> {
        if (s.is_zero_term_free()) return std::nullopt;
        return s.ord();
    };

    DivisorPoint pt{kFirstChart, FieldElem(0)};
    for (int j = 0;; ++j) {
        std::optional<Rat> ox = soft_ord(sx), oy = soft_ord(sy);
        if (!ox && !oy) throw InvalidBranch("branch collapses during the tower");
        Rat om = !ox ? *oy : (!oy ? *ox : std::min(*ox, *oy));
        if (om.get_den() != 1) throw InvalidBranch("non-integral multiplicity in tower");

        TowerLevel L{g,
                     PuiseuxBranch{},
                     pt,
                     static_cast<int>(om.get_num().get_si()),
                     g.nu(),
                     g.nu_tilde(),
                     g.dicritical(),
                     0};
        L.branch.x = sx;
        L.branch.y = sy;
        L.branch.mult = L.m;
        L.ind = index_along_series(g.field, sx, sy);
        T.levels.push_back(std::move(L));
        if (j == k) break;

        bool first = ox && (!oy || *ox <= *oy);
        if (first) {
            PuiseuxSeries z = cap(sy).divide(cap(sx), W);
            FieldElem c = z.coeff_u(0);
            pt = DivisorPoint{kFirstChart, c};
            g = child_at(g, pt);
            sy = z - PuiseuxSeries::monomial(c, 0);
        } else {
            PuiseuxSeries w = cap(sx).divide(cap(sy), W);
            pt = DivisorPoint{kSecondChart, FieldElem(0)};
            g = child_at(g, pt);
            sx = w;
        }
    }
    return T;
}

} // namespace folkit
