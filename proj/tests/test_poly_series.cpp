#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "folkit/errors.hpp"
#include "folkit/mpoly.hpp"
#include "folkit/parser.hpp"
#include "folkit/series.hpp"

using namespace folkit;

static const std::vector<std::string> XY = {"x", "y"};

static MPoly P(const std::string& s) { return parse_expression(s, XY); }

TEST_CASE("expression parsing") {
    CHECK(P("2*y").str() == "2*y");
    CHECK(P("(x+y)^2 - x^2").str() == "2*x*y + y^2");
    CHECK(P("3/2*x - 1/2*x").str() == "x");
    CHECK(P("x*y*x").str() == "x^2*y");
    CHECK(P("-x + - y").str() == "-x - y");
    CHECK(P("0").is_zero());
    CHECK_THROWS_AS(P("x^(-1)"), SyntaxError);
    CHECK_THROWS_AS(P("x^-1"), SyntaxError);
    CHECK_THROWS_AS(P("x + "), SyntaxError);
    CHECK_THROWS_AS(P("z + x"), UnknownVariable);
}

TEST_CASE("parse after print round-trip") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 50; ++trial) {
        MPoly p(XY);
        int nt = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < nt; ++i) {
            Exponents e = {static_cast<unsigned>(rng() % 5), static_cast<unsigned>(rng() % 5)};
            long num = static_cast<long>(rng() % 19) - 9;
            long den = 1 + static_cast<long>(rng() % 4);
            p.set_coeff(e, FieldElem(Rat(num, den)));
        }
        std::string s = p.str();
        CHECK(parse_expression(s, XY) == p);
        CHECK(parse_expression(s, XY).str() == s);
    }
}

TEST_CASE("mpoly ring axioms and order additivity") {
    std::mt19937 rng(4242);
    auto rnd = [&] {
        MPoly p(XY);
        int nt = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < nt; ++i)
            p.set_coeff({static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 4)},
                        FieldElem(Rat(static_cast<long>(rng() % 11) - 5)));
        return p;
    };
    for (int trial = 0; trial < 40; ++trial) {
        MPoly a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).ord() == a.ord() + b.ord());
    }
    CHECK(MPoly(XY).ord() == kOrdInf);
}

TEST_CASE("mpoly division and gcd") {
    MPoly p = P("x^2 - y^2");
    CHECK(p.divide_exact(P("x - y")).value() == P("x + y"));
    CHECK(!p.divide_exact(P("x + 1")).has_value());
    CHECK(MPoly::gcd(P("x^2*y + x*y^2"), P("x*y")) == P("x*y"));
    CHECK(MPoly::gcd(P("(x+y)^2*(x-y)"), P("(x+y)*(x+2*y)")) == P("x + y"));
    CHECK(MPoly::gcd(P("x^2"), MPoly(XY)) == P("x^2"));
    CHECK(MPoly::gcd(P("2*x + 2*y"), P("3*x + 3*y")) == P("x + y"));
    // gcd touching both variables nontrivially
    MPoly f = P("y^2 - x^3") * P("y - x");
    MPoly g = P("y^2 - x^3") * P("y + x");
    CHECK(MPoly::gcd(f, g) == P("x^3 - y^2")); // monic in grlex order
}

TEST_CASE("mpoly substitution and evaluation") {
    MPoly p = P("y^2 - x^3");
    CHECK(p.subst({P("x"), P("y + x^2")}) == P("y^2 + 2*x^2*y + x^4 - x^3"));
    CHECK(p.eval({FieldElem(4), FieldElem(8)}) == FieldElem(0));
    CHECK(p.shift({FieldElem(1), FieldElem(0)}).coeff({0, 0}) == FieldElem(-1));
    CHECK(p.derivative(0) == P("-3*x^2"));
    CHECK(p.derivative(1) == P("2*y"));
    CHECK(P("x^2 + x*y + y^3").homogeneous_part(2) == P("x^2 + x*y"));
}

TEST_CASE("series basics and ord") {
    PuiseuxSeries t2 = PuiseuxSeries::monomial(FieldElem(1), 2);
    PuiseuxSeries t3 = PuiseuxSeries::monomial(FieldElem(1), 3);
    CHECK((t2 * t3).ord().value() == Rat(5));
    CHECK(!PuiseuxSeries().ord().has_value()); // exact zero -> +inf
    PuiseuxSeries trunc = PuiseuxSeries::zero(8);
    CHECK_THROWS_AS(trunc.ord(), PrecisionExhausted);
    CHECK((t2 - t2).ord() == std::nullopt);
    // ramification: t^(1/2) squared is t
    PuiseuxSeries half = PuiseuxSeries::monomial(FieldElem(1), 1, 2);
    CHECK((half * half).ord().value() == Rat(1));
    CHECK(half.ord().value() == Rat(1, 2));
}

TEST_CASE("series product truncation follows the Cauchy bound") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        long n1 = 3 + static_cast<long>(rng() % 6), n2 = 3 + static_cast<long>(rng() % 6);
        PuiseuxSeries a = PuiseuxSeries::zero(n1), b = PuiseuxSeries::zero(n2);
        long o1 = static_cast<long>(rng() % 3), o2 = static_cast<long>(rng() % 3);
        for (long k = o1; k < n1; ++k)
            a = a + PuiseuxSeries::monomial(FieldElem(Rat(static_cast<long>(rng() % 5))), k, 1, n1);
        a = a + PuiseuxSeries::monomial(FieldElem(1), o1, 1, n1);
        for (long k = o2; k < n2; ++k)
            b = b + PuiseuxSeries::monomial(FieldElem(Rat(static_cast<long>(rng() % 5))), k, 1, n2);
        b = b + PuiseuxSeries::monomial(FieldElem(1), o2, 1, n2);
        long expect = std::min(n1 + b.ord_u_lower_bound(), n2 + a.ord_u_lower_bound());
        CHECK((a * b).guaranteed_order() >= std::min(expect, n1 + o2));
        CHECK((a * b).guaranteed_order() == expect);
    }
}

TEST_CASE("series inverse, composition, reversion, root") {
    // 1/(1 - t) = 1 + t + t^2 + ...
    PuiseuxSeries one = PuiseuxSeries::monomial(FieldElem(1), 0);
    PuiseuxSeries t = PuiseuxSeries::monomial(FieldElem(1), 1);
    PuiseuxSeries inv = (one - t).inverse(6);
    for (long k = 0; k < 6; ++k) CHECK(inv.coeff_u(k) == FieldElem(1));
    CHECK(((one - t) * inv).coeff_u(0) == FieldElem(1));
    CHECK(((one - t) * inv).coeff_u(3) == FieldElem(0));

    // compose: (t + t^2) o (t^2) = t^2 + t^4
    PuiseuxSeries f = t + t * t;
    PuiseuxSeries g = f.compose(t * t);
    CHECK(g.coeff_u(2) == FieldElem(1));
    CHECK(g.coeff_u(4) == FieldElem(1));

    // reversion: h(f(t)) = t
    PuiseuxSeries h = f.reverse_series(8);
    PuiseuxSeries id = f.truncated(8).compose(h);
    CHECK(id.coeff_u(1) == FieldElem(1));
    for (long k = 2; k < 7; ++k) CHECK(id.coeff_u(k) == FieldElem(0));

    // sqrt(1 + t): square it back
    PuiseuxSeries r = (one + t).root(2, FieldElem(1), 8);
    PuiseuxSeries sq = r * r;
    CHECK(sq.coeff_u(0) == FieldElem(1));
    CHECK(sq.coeff_u(1) == FieldElem(1));
    for (long k = 2; k < 7; ++k) CHECK(sq.coeff_u(k) == FieldElem(0));
    CHECK(r.coeff_u(1) == FieldElem(Rat(1, 2)));
}

TEST_CASE("polynomial evaluation on series") {
    // f = y^2 - x^3 on the cusp branch (t^2, t^3) vanishes exactly
    MPoly f = P("y^2 - x^3");
    PuiseuxSeries x = PuiseuxSeries::monomial(FieldElem(1), 2);
    PuiseuxSeries y = PuiseuxSeries::monomial(FieldElem(1), 3);
    PuiseuxSeries v = eval_mpoly(f, x, y);
    CHECK(v.is_exact());
    CHECK(!v.ord().has_value());
    // and on (t^2, t^3 + t^4) it has order 7
    PuiseuxSeries y2 = y + PuiseuxSeries::monomial(FieldElem(1), 4);
    CHECK(eval_mpoly(f, x, y2).ord().value() == Rat(7));
}

TEST_CASE("case file parsing") {
    std::string text =
        "name = cusp-hamiltonian\n"
        "vars = x, y\n"
        "field = 2*y, 3*x^2\n"
        "curve = y^2 - x^3\n"
        "expect nu = 1\n"
        "expect mu = 2\n";
    SourceCase sc = parse_case_text(text, "<mem>");
    CHECK(sc.name == "cusp-hamiltonian");
    CHECK(sc.variables == XY);
    CHECK(sc.parsed_components()[0] == P("2*y"));
    CHECK(sc.parsed_curves()[0] == P("y^2 - x^3"));
    CHECK(sc.expected.at("mu") == "2");

    CHECK_THROWS_AS(parse_case_text("name = a\nvars = x, y\nfield = x, y, x\n", "<mem>"),
                    ValidationError);
    CHECK_THROWS_AS(parse_case_text("name = a\nvars = x, y\nfield = x, y\n"
                                    "auto = x, y + x^2\nauto_inv = x, y + x^2\n",
                                    "<mem>"),
                    ValidationError);
    // a valid automorphism pair is accepted
    SourceCase ok = parse_case_text("name = a\nvars = x, y\nfield = x, y\n"
                                    "auto = x, y + x^2\nauto_inv = x, y - x^2\n",
                                    "<mem>");
    CHECK(ok.parsed_automorphism().size() == 2);
}
