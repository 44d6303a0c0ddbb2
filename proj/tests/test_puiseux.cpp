#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "folkit/errors.hpp"
#include "folkit/parser.hpp"
#include "folkit/puiseux.hpp"

using namespace folkit;

static const std::vector<std::string> XY = {"x", "y"};
static MPoly P(const std::string& s) { return parse_expression(s, XY); }
static VectorField VF(const std::string& p, const std::string& q) {
    return VectorField(XY, {P(p), P(q)});
}
static PuiseuxSeries S(const std::string& s) {
    return PuiseuxSeries::from_upoly(parse_expression(s, {"t"}).to_upoly(0));
}
static bool vanishes_on(const MPoly& f, const PuiseuxBranch& b) {
    return eval_mpoly(f, b.x, b.y).is_zero_term_free();
}

TEST_CASE("newton-puiseux: smooth and basic singular curves") {
    auto smooth = newton_puiseux(P("y - x^2"), 16);
    REQUIRE(smooth.size() == 1);
    CHECK(smooth[0].mult == 1);
    CHECK(smooth[0].y.coeff_u(2) == FieldElem(1));
    CHECK(smooth[0].equation.has_value());

    auto cusp = newton_puiseux(P("y^2 - x^3"), 16);
    REQUIRE(cusp.size() == 1);
    CHECK(cusp[0].mult == 2);
    CHECK(!cusp[0].swapped);
    CHECK(cusp[0].x.coeff_u(2) == FieldElem(1));
    CHECK(cusp[0].y.coeff_u(3) == FieldElem(1));
    CHECK(vanishes_on(P("y^2 - x^3"), cusp[0]));

    auto node = newton_puiseux(P("y^2 - x^2 - x^3"), 16);
    REQUIRE(node.size() == 2);
    for (const auto& b : node) {
        CHECK(b.mult == 1);
        CHECK(vanishes_on(P("y^2 - x^2 - x^3"), b));
    }
    // tangents +1 and -1
    std::vector<FieldElem> tg{node[0].tangent.second, node[1].tangent.second};
    CHECK(((tg[0] == FieldElem(1) && tg[1] == FieldElem(-1)) ||
           (tg[0] == FieldElem(-1) && tg[1] == FieldElem(1))));

    auto lines = newton_puiseux(P("x*y*(y - x)"), 16);
    CHECK(lines.size() == 3);

    auto e6 = newton_puiseux(P("y^3 - x^4"), 16);
    REQUIRE(e6.size() == 1);
    CHECK(e6[0].mult == 3);
    CHECK(vanishes_on(P("y^3 - x^4"), e6[0]));

    auto sw = newton_puiseux(P("x - y^2"), 16);
    REQUIRE(sw.size() == 1);
    CHECK(sw[0].swapped);
    CHECK(sw[0].mult == 1);
    CHECK(vanishes_on(P("x - y^2"), sw[0]));
}

TEST_CASE("newton-puiseux: squarefree guard and extensions") {
    CHECK_THROWS_AS(newton_puiseux(P("y^2"), 16), NotSquarefree);
    CHECK_THROWS_AS(newton_puiseux(P("(y - x)^2"), 16), NotSquarefree);
    CHECK(newton_puiseux(P("1 + y - x"), 16).empty()); // misses the origin

    // y^2 = 2x^2: tangent slopes are the square roots of 2
    auto irr = newton_puiseux(P("y^2 - 2*x^2"), 16);
    REQUIRE(irr.size() == 2);
    for (const auto& b : irr) {
        CHECK(!b.tangent.second.is_rational());
        CHECK((b.tangent.second * b.tangent.second) == FieldElem(2));
        CHECK(vanishes_on(P("y^2 - 2*x^2"), b));
    }

    // product: smooth line + cusp
    auto mix = newton_puiseux(P("(y^2 - x^3)*(y - x)"), 16);
    REQUIRE(mix.size() == 2);
    int mults = mix[0].mult + mix[1].mult;
    CHECK(mults == 3);
    for (const auto& b : mix) CHECK(vanishes_on(P("(y^2 - x^3)*(y - x)"), b));

    // implicit tail: y = t^3 * sqrt(1 + t^2) on x = t^2
    auto tail = newton_puiseux(P("y^2 - x^3 - x^4"), 24);
    REQUIRE(tail.size() == 1);
    CHECK(tail[0].y.coeff_u(3) == FieldElem(1));
    CHECK(tail[0].y.coeff_u(5) == FieldElem(rat(1, 2)));
    CHECK(vanishes_on(P("y^2 - x^3 - x^4"), tail[0]));
}

TEST_CASE("invariance certificates") {
    VectorField cusp = VF("2*y", "3*x^2");
    auto b = newton_puiseux(P("y^2 - x^3"), 16);
    REQUIRE(b.size() == 1);
    CHECK(is_invariant_branch(cusp, b[0])); // exact cofactor division

    auto line = newton_puiseux(P("y - x"), 16);
    REQUIRE(line.size() == 1);
    CHECK(!is_invariant_branch(cusp, line[0]));

    // without an equation: series cross-product check
    PuiseuxBranch c;
    c.x = S("t^2");
    c.y = S("t^3");
    c.mult = 2;
    CHECK(is_invariant_branch(cusp, c));
    PuiseuxBranch d;
    d.x = S("t");
    d.y = S("t^2");
    CHECK(!is_invariant_branch(cusp, d));
}

TEST_CASE("separatrices: reduced linear models") {
    auto node = solve_separatrices(VF("x", "2*y"), 16);
    REQUIRE(node.size() == 2);
    int families = 0, axes = 0;
    for (const auto& b : node) {
        if (b.family_rep) families++;
        if (b.swapped ? b.x.is_zero_term_free() : b.y.is_zero_term_free()) axes++;
        CHECK(!b.formal);
        CHECK(is_invariant_branch(VF("x", "2*y"), b));
    }
    CHECK(families == 1); // y = c x^2 family, representative y = 0
    CHECK(axes == 2);

    auto saddle = solve_separatrices(VF("x", "-y"), 16);
    REQUIRE(saddle.size() == 2);
    for (const auto& b : saddle) {
        CHECK(!b.formal);
        CHECK(!b.family_rep);
    }

    auto sn = solve_separatrices(VF("x^2", "y"), 16);
    REQUIRE(sn.size() == 2);
    int formals = 0;
    for (const auto& b : sn) formals += b.formal ? 1 : 0;
    CHECK(formals == 1);

    // only the y-axis: the x-direction resonance is obstructed
    auto res = solve_separatrices(VF("x", "2*y + x^2"), 16);
    REQUIRE(res.size() == 1);
    CHECK(res[0].swapped);
    CHECK(res[0].x.is_zero_term_free());
}

TEST_CASE("separatrices: euler equation") {
    VectorField euler = VF("x^2", "y - x");
    auto seps = solve_separatrices(euler, 8);
    REQUIRE(seps.size() == 2);
    const PuiseuxBranch* weak = nullptr;
    const PuiseuxBranch* strong = nullptr;
    for (const auto& b : seps) (b.formal ? weak : strong) = &b;
    REQUIRE(weak != nullptr);
    REQUIRE(strong != nullptr);
    CHECK(strong->swapped); // x = 0
    CHECK(strong->x.is_zero_term_free());
    // y = sum (k-1)! x^k
    CHECK(weak->y.coeff_u(1) == FieldElem(1));
    CHECK(weak->y.coeff_u(2) == FieldElem(1));
    CHECK(weak->y.coeff_u(3) == FieldElem(2));
    CHECK(weak->y.coeff_u(4) == FieldElem(6));
    CHECK(is_invariant_branch(euler, *weak));
}

TEST_CASE("separatrices: nilpotent germs through resolution") {
    VectorField cusp = VF("2*y", "3*x^2");
    auto seps = solve_separatrices(cusp, 16);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0].mult == 2);
    CHECK(seps[0].x.coeff_u(2) == FieldElem(1));
    CHECK(seps[0].y.coeff_u(3) == FieldElem(1));
    CHECK(is_invariant_branch(cusp, seps[0]));
    CHECK(vanishes_on(P("y^2 - x^3"), seps[0]));

    // hamiltonian of y^2 - x^4: two smooth tangent branches y = x^2, y = -x^2
    VectorField tac = VF("2*y", "4*x^3");
    auto ts = solve_separatrices(tac, 16);
    REQUIRE(ts.size() == 2);
    for (const auto& b : ts) {
        CHECK(b.mult == 1);
        CHECK(is_invariant_branch(tac, b));
        CHECK(vanishes_on(P("y^2 - x^4"), b));
    }
    CHECK(ts[0].y.coeff_u(2) * ts[1].y.coeff_u(2) == FieldElem(-1));

    // hamiltonian of y^3 - x^4: single branch of multiplicity 3
    VectorField e6 = VF("3*y^2", "4*x^3");
    auto es = solve_separatrices(e6, 24);
    REQUIRE(es.size() == 1);
    CHECK(es[0].mult == 3);
    CHECK(is_invariant_branch(e6, es[0]));
    CHECK(vanishes_on(P("y^3 - x^4"), es[0]));
}

TEST_CASE("separatrices: dicritical refusal and regular germs") {
    CHECK_THROWS_AS(solve_separatrices(VF("x", "y"), 16), DicriticalInfinitelyMany);
    CHECK_THROWS_AS(solve_separatrices(VF("x", "y + x^2"), 16), DicriticalInfinitelyMany);

    // regular germ: the unique leaf through the origin
    auto reg = solve_separatrices(VF("1 + x", "y"), 16);
    REQUIRE(reg.size() == 1);
    CHECK(reg[0].y.is_zero_term_free());
}

TEST_CASE("dicritical leaf sampling") {
    // radial: leaves y = c x
    auto leaf = sample_dicritical_leaf(VF("x", "y"), FieldElem(5), 16);
    CHECK(leaf.x.coeff_u(1) == FieldElem(1));
    CHECK(leaf.y.coeff_u(1) == FieldElem(5));

    // (x, y + x^2): leaves y = c x + x^2
    auto leaf2 = sample_dicritical_leaf(VF("x", "y + x^2"), FieldElem(3), 16);
    CHECK(leaf2.y.coeff_u(1) == FieldElem(3));
    CHECK(leaf2.y.coeff_u(2) == FieldElem(1));
    VectorField f2 = VF("x", "y + x^2");
    PuiseuxSeries cross = eval_mpoly(f2.components()[0], leaf2.x, leaf2.y) * leaf2.y.derivative() -
                          eval_mpoly(f2.components()[1], leaf2.x, leaf2.y) * leaf2.x.derivative();
    CHECK(cross.is_zero_term_free());

    CHECK_THROWS_AS(sample_dicritical_leaf(VF("x", "2*y"), FieldElem(1), 16),
                    NonGenericDirection);
    // dicritical with one bad direction: A(0, z) = 1 - z
    VectorField g = VF("x^2 - x*y", "x*y - y^2 + x^3");
    CHECK_THROWS_AS(sample_dicritical_leaf(g, FieldElem(1), 16), NonGenericDirection);
    auto ok = sample_dicritical_leaf(g, FieldElem(0), 16);
    PuiseuxSeries c2 = eval_mpoly(g.components()[0], ok.x, ok.y) * ok.y.derivative() -
                       eval_mpoly(g.components()[1], ok.x, ok.y) * ok.x.derivative();
    CHECK(c2.is_zero_term_free());
}
