#include "folkit/vectorfield.hpp"

#include <algorithm>
#include <sstream>

#include "folkit/errors.hpp"

namespace folkit {

VectorField::VectorField(std::vector<std::string> vars, std::vector<MPoly> components)
    : vars_(std::move(vars)), f_(std::move(components)) {
    if (f_.size() != vars_.size() || vars_.size() < 2)
        throw DimensionUnsupported("vector field needs one component per variable, n >= 2");
    if (std::all_of(f_.begin(), f_.end(), [](const MPoly& p) { return p.is_zero(); }))
        throw AllZero();
    removed_gcd_ = MPoly::constant(vars_, FieldElem(1));
    if (vars_.size() == 2) {
        MPoly g = f_[0];
        for (size_t i = 1; i < f_.size(); ++i) g = MPoly::gcd(g, f_[i]);
        if (!g.is_constant()) {
            removed_gcd_ = g;
            for (auto& c : f_) c = *c.divide_exact(g);
        }
    }
}

int VectorField::algebraic_multiplicity() const {
    int nu = kOrdInf;
    for (const auto& c : f_) nu = std::min(nu, c.ord());
    return nu;
}

std::vector<MPoly> VectorField::initial_part() const {
    int nu = algebraic_multiplicity();
    std::vector<MPoly> in;
    for (const auto& c : f_) in.push_back(c.homogeneous_part(nu));
    return in;
}

std::vector<std::vector<FieldElem>> VectorField::linear_part() const {
    std::vector<std::vector<FieldElem>> m(f_.size(), std::vector<FieldElem>(vars_.size()));
    for (size_t i = 0; i < f_.size(); ++i)
        for (size_t j = 0; j < vars_.size(); ++j) {
            Exponents e(vars_.size(), 0);
            e[j] = 1;
            m[i][j] = f_[i].coeff(e);
        }
    return m;
}

UPoly VectorField::char_poly() const {
    if (dim() != 2) throw DimensionUnsupported();
    auto m = linear_part();
    FieldElem tr = m[0][0] + m[1][1];
    FieldElem det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return UPoly({det, -tr, FieldElem(1)});
}

bool VectorField::spectrum_nonzero() const {
    // both eigenvalues vanish iff trace and determinant vanish
    UPoly chi = char_poly();
    return !(chi.coeff(0).is_zero() && chi.coeff(1).is_zero());
}

bool VectorField::is_saddle_node_linear() const {
    UPoly chi = char_poly();
    return chi.coeff(0).is_zero() && !chi.coeff(1).is_zero();
}

MPoly VectorField::tangent_cone_form() const {
    if (dim() != 2) throw DimensionUnsupported();
    auto in = initial_part();
    return MPoly::variable(vars_, 1) * in[0] - MPoly::variable(vars_, 0) * in[1];
}

std::optional<int> VectorField::milnor_number() const {
    if (dim() != 2) throw DimensionUnsupported();
    return local_intersection_number(f_[0], f_[1]);
}

std::string VectorField::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < f_.size(); ++i) os << (i ? ", " : "") << f_[i].str();
    os << ")";
    return os.str();
}

std::optional<int> local_intersection_number(const MPoly& f0, const MPoly& g0) {
    if (f0.nvars() != 2) throw DimensionUnsupported();
    if (f0.is_zero() || g0.is_zero()) return std::nullopt;
    {
        MPoly h = MPoly::gcd(f0, g0);
        if (!h.is_constant() &&
            h.eval({FieldElem(0), FieldElem(0)}).is_zero())
            return std::nullopt; // positive-dimensional intersection through 0
    }
    const std::vector<std::string>& vars = f0.vars();
    MPoly y = MPoly::variable(vars, 1);
    // iterative version of the standard reduction by the axioms of the
    // local intersection number
    long total = 0;
    MPoly f = f0, g = g0;
    while (true) {
        if (f.is_zero() || g.is_zero()) return std::nullopt;
        if (!f.eval({FieldElem(0), FieldElem(0)}).is_zero() ||
            !g.eval({FieldElem(0), FieldElem(0)}).is_zero())
            break; // contributes 0
        UPoly fx = f.coeffs_in(1)[0].to_upoly(0); // f(x, 0)
        UPoly gx = g.coeffs_in(1)[0].to_upoly(0);
        if (fx.is_zero() && gx.is_zero()) return std::nullopt;
        if (gx.is_zero()) {
            std::swap(f, g);
            std::swap(fx, gx);
        }
        if (fx.is_zero()) {
            // y divides f: I(f, g) = I(y, g) + I(f/y, g), and I(y, g) is the
            // vanishing order of g on the x-axis
            total += gx.ord();
            MPoly h = *f.divide_exact(y);
            if (h.is_constant()) break;
            f = std::move(h);
            continue;
        }
        if (fx.degree() > gx.degree()) {
            std::swap(f, g);
            std::swap(fx, gx);
        }
        // kill the leading x-term of g(x, 0) using f
        FieldElem c = fx.lc(), d = gx.lc();
        MPoly xk = MPoly::variable(vars, 0).pow(gx.degree() - fx.degree());
        g = g - xk * f * (d / c);
    }
    return static_cast<int>(total);
}

} // namespace folkit
