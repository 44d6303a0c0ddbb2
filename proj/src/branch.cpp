#include "folkit/branch.hpp"

#include <algorithm>
#include <numeric>

#include "folkit/errors.hpp"
#include "folkit/factor.hpp"
#include "folkit/rat.hpp"

namespace folkit {

int branch_multiplicity(const PuiseuxBranch& v) { return v.mult; }

MPoly branch_tangent_cone(const PuiseuxBranch& v, const std::vector<std::string>& vars) {
    MPoly X = MPoly::variable(vars, 0);
    MPoly Y = MPoly::variable(vars, 1);
    return X * v.tangent.second - Y * v.tangent.first;
}

std::string PuiseuxBranch::str() const {
    std::string s = "(x(t), y(t)) = (" + x.str() + ", " + y.str() + ")";
    if (formal) s += " [formal]";
    if (family_rep) s += " [family representative]";
    return s;
}

FieldElem kth_root_elem(const FieldElem& c, int k, int ext_bound) {
    if (k == 1 || c.is_one()) return c;
    if (c.is_rational()) {
        auto r = rat_kth_root(c.rational(), k);
        if (r) return FieldElem(*r);
    }
    std::vector<FieldElem> pc(static_cast<size_t>(k) + 1);
    pc[0] = -c;
    pc[static_cast<size_t>(k)] = FieldElem(1);
    UPoly p{std::move(pc)};
    auto fs = factor_univariate(p, c.field(), ext_bound);
    for (const auto& [f, m] : fs)
        if (f.degree() == 1) return -f.coeff(0);
    return some_root_of_irreducible(fs.front().first, c.field(), ext_bound);
}

namespace {

// Reinterpret a series in the uniformizer u = t^(1/e) as a series in a new
// parameter s = u (ramification 1): a legitimate reparameterization of the
// branch, exponents kept in u units.
PuiseuxSeries as_parameter(const PuiseuxSeries& s) {
    if (s.ramification() == 1) return s;
    PuiseuxSeries out = PuiseuxSeries::zero(s.guaranteed_order(), 1);
    for (const auto& [k, c] : s.coeffs())
        out = out + PuiseuxSeries::monomial(c, k, 1, s.guaranteed_order());
    return out;
}

long max_stored_exponent(const PuiseuxSeries& s) {
    return s.coeffs().empty() ? 0 : s.coeffs().rbegin()->first;
}

bool is_unit_monomial(const PuiseuxSeries& s, long k) {
    return s.is_exact() && s.coeffs().size() == 1 && s.coeffs().begin()->first == k &&
           s.coeffs().begin()->second.is_one();
}

} // namespace

PuiseuxBranch normalize_branch(PuiseuxBranch v, int ext_bound) {
    // Align the two components on a common parameter grid.
    int e = std::lcm(v.x.ramification(), v.y.ramification());
    PuiseuxSeries sx = as_parameter(v.x.with_ramification(e));
    PuiseuxSeries sy = as_parameter(v.y.with_ramification(e));

    // A component with no term up to its guaranteed order comes from a
    // recurrence whose coefficients all vanished; promote it to exact zero.
    if (sx.is_zero_term_free()) sx = PuiseuxSeries();
    if (sy.is_zero_term_free()) sy = PuiseuxSeries();

    std::optional<Rat> ox = sx.ord(), oy = sy.ord();
    if (!ox && !oy) throw InvalidBranch("zero parameterization");
    if ((ox && *ox < 1) || (oy && *oy < 1))
        throw InvalidBranch("parameterization does not pass through the origin");
    bool swapped = !ox || (oy && *oy < *ox);

    PuiseuxSeries& prim = swapped ? sy : sx;
    PuiseuxSeries& sec = swapped ? sx : sy;
    Rat om = swapped ? *oy : *ox;
    if (om.get_den() != 1) throw InvalidBranch("non-integral order after reparameterization");
    long k = om.get_num().get_si();

    if (!is_unit_monomial(prim, k)) {
        long prec = std::min(sx.guaranteed_order(), sy.guaranteed_order());
        if (prec == kOrdInfL)
            prec = 2 * std::max(max_stored_exponent(sx), max_stored_exponent(sy)) + 2 * k + 8;
        FieldElem r = kth_root_elem(prim.coeff_u(k), static_cast<int>(k), ext_bound);
        PuiseuxSeries tau = prim.root(static_cast<int>(k), r, prec);
        PuiseuxSeries inv = tau.reverse_series(prec);
        sec = sec.compose(inv);
        prim = PuiseuxSeries::monomial(FieldElem(1), k, 1, sec.guaranteed_order());
    }

    v.x = sx;
    v.y = sy;
    v.swapped = swapped;
    v.mult = static_cast<int>(k);
    FieldElem cross = sec.coeff_u(k);
    v.tangent = swapped ? std::make_pair(cross, FieldElem(1))
                        : std::make_pair(FieldElem(1), cross);
    long g = std::min(v.x.guaranteed_order(), v.y.guaranteed_order());
    v.determinacy = g == kOrdInfL ? kOrdInfL : g;
    return v;
}

} // namespace folkit
