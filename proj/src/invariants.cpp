#include "folkit/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "folkit/errors.hpp"
#include "folkit/puiseux.hpp"
#include "folkit/rat.hpp"

namespace folkit {

namespace {

std::optional<Rat> soft_ord(const PuiseuxSeries& s) {
    if (s.is_zero_term_free()) return std::nullopt;
    return s.ord();
}

long rat_to_long(const Rat& q, const char* what) {
    if (q.get_den() != 1)
        throw InvalidBranch(std::string(what) + ": expected an integer, got " + rat_str(q));
    return q.get_num().get_si();
}

std::string fmt(const Rat& q) { return rat_str(q); }

} // namespace

IndexReport index_along(const VectorField& x, const PuiseuxBranch& v) {
    if (x.dim() != 2) throw DimensionUnsupported();
    const auto& f = x.components();
    PuiseuxSeries u = eval_mpoly(f[0], v.x, v.y);
    PuiseuxSeries w = eval_mpoly(f[1], v.x, v.y);
    PuiseuxSeries da = v.x.derivative();
    PuiseuxSeries db = v.y.derivative();

    PuiseuxSeries cross = u * db - w * da;
    if (!cross.is_zero_term_free())
        throw NotInvariant("X o alpha is not proportional to alpha'");

    auto oda = soft_ord(da), odb = soft_ord(db);
    const PuiseuxSeries* num = nullptr;
    const PuiseuxSeries* den = nullptr;
    if (oda && (!odb || *oda <= *odb)) {
        num = &u;
        den = &da;
    } else if (odb) {
        num = &w;
        den = &db;
    } else {
        throw InvalidBranch("constant parameterization");
    }

    long prec = std::min(num->guaranteed_order(), den->guaranteed_order());
    PuiseuxSeries g = num->divide(*den, prec);
    auto og = g.ord();
    if (!og) throw PrecisionExhausted("cofactor vanishes to working precision");

    IndexReport r;
    r.cofactor_ord = rat_to_long(*og, "cofactor order");
    r.ind = r.cofactor_ord;
    r.m = v.mult;
    r.cofactor = g;

    auto ou = soft_ord(u), ow = soft_ord(w);
    if (!ou && !ow) throw PrecisionExhausted("X o alpha vanishes to working precision");
    Rat oc = !ou ? *ow : (!ow ? *ou : std::min(*ou, *ow));
    r.composition_ord = rat_to_long(oc, "composition order");
    return r;
}

Evidence check_ineq1(const VectorField& x, const PuiseuxBranch& v) {
    IndexReport r = index_along(x, v);
    long nu = x.algebraic_multiplicity();
    long lhs = nu * r.m;
    long rhs = r.ind + r.m - 1;
    Evidence e;
    e.holds = lhs <= rhs;
    e.statement = "nu * m(V) <= ind(X|V) + m(V) - 1";
    std::ostringstream os;
    os << nu << " * " << r.m << " = " << lhs << (e.holds ? " <= " : " > ") << rhs;
    e.detail = os.str();
    return e;
}

Rat ratio_rV(const VectorField& x, const PuiseuxBranch& v) {
    IndexReport r = index_along(x, v);
    return rat(r.ind - 1, r.m);
}

std::optional<Rat> ratio_r(const VectorField& x,
                           const std::vector<PuiseuxBranch>& branches,
                           bool provably_none) {
    if (branches.empty()) {
        if (provably_none) return std::nullopt; // r = +infinity
        throw EmptyBranchList();
    }
    std::optional<Rat> best;
    for (const auto& v : branches) {
        Rat rv = ratio_rV(x, v);
        if (!best || rv < *best) best = rv;
    }
    return best;
}

Evidence check_formula_mult(const VectorField& x, const PuiseuxBranch& v) {
    long nu = x.algebraic_multiplicity();
    Rat rv = ratio_rV(x, v);

    // Restrict in(X) to the tangent cone line of V, parameterized as
    // (a t, b t) for the branch tangent (a : b).
    PuiseuxSeries lx = PuiseuxSeries::monomial(v.tangent.first, 1);
    PuiseuxSeries ly = PuiseuxSeries::monomial(v.tangent.second, 1);
    bool initial_nonzero = false;
    for (const MPoly& comp : x.initial_part())
        if (!eval_mpoly(comp, lx, ly).is_zero_term_free()) initial_nonzero = true;

    bool mult_matches = Rat(nu) == Rat(1) + rv;
    Evidence e;
    e.holds = initial_nonzero == mult_matches;
    e.statement = "in(X)|_{C(V,0)} != 0  <=>  nu = 1 + r_V";
    std::ostringstream os;
    os << "in(X) on cone line " << (initial_nonzero ? "nonzero" : "zero")
       << "; nu = " << nu << ", 1 + r_V = " << fmt(Rat(1) + rv);
    e.detail = os.str();
    return e;
}

TowerInvariants tower_invariants(const VectorField& x, const PuiseuxBranch& v,
                                 int max_depth, int ext_bound) {
    TowerInvariants out;
    long delta = 0;
    auto endpoint = EndpointKind::nondicritical_endpoint;

    // Grow the tower one level at a time: past the stopping depth the germ
    // may be regular and admit no further blow-up, so never over-request.
    BranchTower bt;
    for (int k = 1; k <= max_depth; ++k) {
        bt = branch_tower(x, v, k, ext_bound);
        const auto& L = bt.levels;
        bool all_nondicr = true;
        for (int j = 0; j < k; ++j) all_nondicr = all_nondicr && !L[j].dicritical;
        if (L[k - 1].m == 1) {
            if (all_nondicr && L[k].ind == 1) {
                delta = k;
                endpoint = EndpointKind::nondicritical_endpoint;
                break;
            }
            if (L[k - 1].dicritical && L[k].ind == 0) {
                delta = k;
                endpoint = EndpointKind::dicritical_endpoint;
                break;
            }
        }
        if (L[k].nu == 0)
            throw DepthExceeded("tower reached a regular point without the endpoint index");
    }
    if (delta == 0) throw DepthExceeded("no tower level satisfies the endpoint condition");

    for (const auto& L : bt.levels)
        out.levels.push_back(TowerLevelData{L.m, L.nu, L.nu_tilde, L.ind, L.dicritical});
    out.delta = delta;
    out.endpoint_kind = endpoint;

    const auto& lv = out.levels;
    long depth = static_cast<long>(lv.size()) - 1;
    Rat m0(lv[0].m);

    out.drop_ok = true;
    out.telescope_ok = true;
    out.r_index_ok = true;
    Rat acc_R(0), acc_G(0);
    long partial = 0; // sum_{j<k} m_j * nu~_j
    for (long k = 1; k <= depth; ++k) {
        long j = k - 1;
        if (lv[j + 1].ind != lv[j].ind - lv[j].m * lv[j].nu_tilde) out.drop_ok = false;
        partial += lv[j].m * lv[j].nu_tilde;
        if (lv[k].ind != lv[0].ind - partial) out.telescope_ok = false;

        acc_R += Rat(lv[j].m * lv[j].nu_tilde) / m0;
        out.R.push_back(acc_R);
        if (j >= 1) acc_G += Rat(lv[j].m * lv[j].nu_tilde) / m0;
        out.Gamma.push_back(acc_G);

        if (acc_R != Rat(lv[0].ind - lv[k].ind) / m0) out.r_index_ok = false;
    }
    return out;
}

Evidence check_corollary1(const VectorField& x, const PuiseuxBranch& v,
                          int max_depth, int ext_bound) {
    TowerInvariants t = tower_invariants(x, v, max_depth, ext_bound);
    long nu = x.algebraic_multiplicity();
    const Rat& Rd = t.R[t.delta - 1];
    const Rat& Gd = t.Gamma[t.delta - 1];
    bool left = Rat(nu) == Rat(1) + Rd;
    bool right = Gd == 0;
    Evidence e;
    e.holds = left == right;
    e.statement = "nu = 1 + R_delta  <=>  Gamma_delta = 0";
    std::ostringstream os;
    os << "delta = " << t.delta << ", nu = " << nu << ", R_delta = " << fmt(Rd)
       << ", Gamma_delta = " << fmt(Gd);
    e.detail = os.str();
    return e;
}

Evidence second_type_multiplicity_check(const VectorField& x, int order,
                                        int max_depth, int ext_bound) {
    ResolutionTree tree = resolve(x, max_depth, ext_bound);
    if (!tree.strictly_nondicritical) throw DicriticalInfinitelyMany();
    if (!tree.second_type) throw NotSecondType();

    std::vector<PuiseuxBranch> seps = solve_separatrices(x, order, max_depth, ext_bound);
    long mS = 0;
    for (const auto& b : seps) mS += b.mult;
    long nu = x.algebraic_multiplicity();
    Evidence e;
    e.holds = nu == mS - 1;
    e.statement = "nu = m(S) - 1 for S the union of separatrices";
    std::ostringstream os;
    os << "nu = " << nu << ", m(S) = " << mS << " over " << seps.size() << " branches";
    e.detail = os.str();
    return e;
}

VectorField transform_by_automorphism(const VectorField& x,
                                      const std::vector<MPoly>& phi,
                                      const std::vector<MPoly>& phi_inv) {
    size_t n = x.dim();
    if (phi.size() != n || phi_inv.size() != n)
        throw NotAnAutomorphism("component count does not match the dimension");

    Exponents zero(n, 0);
    for (const auto& c : phi)
        if (!c.coeff(zero).is_zero()) throw NotAnAutomorphism("phi does not fix the origin");
    for (const auto& c : phi_inv)
        if (!c.coeff(zero).is_zero())
            throw NotAnAutomorphism("phi inverse does not fix the origin");

    const auto& vars = x.vars();
    for (size_t i = 0; i < n; ++i) {
        if (phi_inv[i].subst(phi) != MPoly::variable(vars, i))
            throw NotAnAutomorphism("supplied inverse does not compose to the identity");
        if (phi[i].subst(phi_inv) != MPoly::variable(vars, i))
            throw NotAnAutomorphism("supplied inverse does not compose to the identity");
    }

    // Y = (Dphi . X) o phi^{-1}
    std::vector<MPoly> y;
    y.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        MPoly acc(vars);
        for (size_t j = 0; j < n; ++j)
            acc = acc + phi[i].derivative(j) * x.components()[j];
        y.push_back(acc.subst(phi_inv));
    }
    return VectorField(vars, std::move(y));
}

TheoremDReport theorem_d_report(
    const VectorField& x, const VectorField& y,
    const std::vector<std::pair<PuiseuxBranch, PuiseuxBranch>>& pairs,
    int ext_bound) {
    if (pairs.empty()) throw EmptyBranchList("theorem D report needs at least one branch pair");

    TheoremDReport r;
    r.nu_x = x.algebraic_multiplicity();
    r.nu_y = y.algebraic_multiplicity();

    long sum_x = 0, sum_y = 0;
    bool some_equal = false, all_equal = true, singletons_equal = true;
    for (const auto& [v, w] : pairs) {
        BranchTower tx = branch_tower(x, v, 1, ext_bound);
        BranchTower ty = branch_tower(y, w, 1, ext_bound);
        TheoremDPair p;
        p.ind_x = tx.levels[1].ind;
        p.ind_y = ty.levels[1].ind;
        p.m_x = tx.levels[0].m;
        p.m_y = ty.levels[0].m;
        if (p.m_x != p.m_y) {
            r.precondition_ok = false;
            std::ostringstream os;
            os << "multiplicity mismatch: m(V) = " << p.m_x << ", m(W) = " << p.m_y;
            r.detail = os.str();
        }
        sum_x += p.ind_x;
        sum_y += p.ind_y;
        bool eq = p.ind_x == p.ind_y;
        some_equal = some_equal || eq;
        all_equal = all_equal && eq;
        singletons_equal = singletons_equal && eq;
        r.pairs.push_back(p);
    }

    r.item_i = r.nu_x == r.nu_y;
    r.item_ii = some_equal;
    r.item_iii = all_equal;
    r.item_iv = singletons_equal && sum_x == sum_y;
    r.items_equivalent = r.precondition_ok && r.item_i == r.item_iii &&
                         r.item_ii == r.item_iii && r.item_iv == r.item_iii;
    return r;
}

} // namespace folkit
