#include "folkit/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "folkit/errors.hpp"

namespace folkit {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // same total degree: a < b when the first differing variable has a
    // smaller exponent in a
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(std::vector<std::string> vars, FieldElem v) {
    MPoly p(std::move(vars));
    if (!v.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(v));
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, size_t idx) {
    MPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(idx) = 1;
    p.terms_.emplace(std::move(e), FieldElem(1));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
}

FieldElem MPoly::constant_value() const {
    Exponents zero(vars_.size(), 0);
    return coeff(zero);
}

FieldElem MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem(0) : it->second;
}

void MPoly::set_coeff(const Exponents& e, FieldElem v) {
    if (v.is_zero())
        terms_.erase(e);
    else
        terms_[e] = std::move(v);
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MPoly::ord() const {
    if (terms_.empty()) return kOrdInf;
    const Exponents& e = terms_.begin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MPoly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& [e, _] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

FieldElem MPoly::lc() const {
    return terms_.empty() ? FieldElem(0) : terms_.rbegin()->second;
}

void MPoly::add_term(const Exponents& e, const FieldElem& v) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!v.is_zero()) terms_.emplace(e, v);
        return;
    }
    it->second = it->second + v;
    if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, v] : o.terms_) r.add_term(e, v);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, v] : o.terms_) r.add_term(e, -v);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(vars_);
    for (const auto& [e1, v1] : terms_)
        for (const auto& [e2, v2] : o.terms_) {
            Exponents e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, v1 * v2);
        }
    return r;
}

MPoly MPoly::operator*(const FieldElem& c) const {
    MPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MPoly MPoly::pow(int e) const {
    MPoly r = constant(vars_, FieldElem(1));
    MPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

MPoly MPoly::derivative(size_t var) const {
    MPoly r(vars_);
    for (const auto& [e, v] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, v * FieldElem(static_cast<long>(e[var])));
    }
    return r;
}

MPoly MPoly::homogeneous_part(int d) const {
    MPoly r(vars_);
    for (const auto& [e, v] : terms_)
        if (static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)) == d)
            r.terms_.emplace(e, v);
    return r;
}

MPoly MPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * lc().inverse();
}

MPoly MPoly::subst(const std::vector<MPoly>& values) const {
    if (values.size() != vars_.size()) throw Error("subst: value count mismatch");
    std::vector<std::string> tvars = values.empty() ? vars_ : values[0].vars();
    MPoly r(tvars);
    for (const auto& [e, v] : terms_) {
        MPoly term = MPoly::constant(tvars, v);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * values[i].pow(static_cast<int>(e[i]));
        r = r + term;
    }
    return r;
}

FieldElem MPoly::eval(const std::vector<FieldElem>& values) const {
    if (values.size() != vars_.size()) throw Error("eval: value count mismatch");
    FieldElem r(0);
    for (const auto& [e, v] : terms_) {
        FieldElem term = v;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * values[i].pow(static_cast<long>(e[i]));
        r = r + term;
    }
    return r;
}

MPoly MPoly::subst_var(size_t var, const MPoly& value) const {
    std::vector<MPoly> values;
    for (size_t i = 0; i < vars_.size(); ++i)
        values.push_back(i == var ? value : MPoly::variable(vars_, i));
    return subst(values);
}

MPoly MPoly::shift(const std::vector<FieldElem>& center) const {
    std::vector<MPoly> values;
    for (size_t i = 0; i < vars_.size(); ++i)
        values.push_back(MPoly::variable(vars_, i) + MPoly::constant(vars_, center.at(i)));
    return subst(values);
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    MPoly q(vars_);
    MPoly r = *this;
    const Exponents& de = d.terms_.rbegin()->first;
    FieldElem dlc_inv = d.lc().inverse();
    while (!r.is_zero()) {
        const Exponents& re = r.terms_.rbegin()->first;
        Exponents qe(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            if (re[i] < de[i]) return std::nullopt;
            qe[i] = re[i] - de[i];
        }
        FieldElem c = r.terms_.rbegin()->second * dlc_inv;
        MPoly t(vars_);
        t.terms_.emplace(qe, c);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

UPoly MPoly::to_upoly(size_t var) const {
    std::vector<FieldElem> cs(static_cast<size_t>(std::max(degree_in(var), -1) + 1));
    for (const auto& [e, v] : terms_) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) throw Error("to_upoly: polynomial is not univariate");
        cs[e[var]] = v;
    }
    return UPoly(std::move(cs));
}

MPoly MPoly::from_upoly(const UPoly& p, std::vector<std::string> vars, size_t var) {
    MPoly r(std::move(vars));
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        Exponents e(r.vars_.size(), 0);
        e[var] = static_cast<unsigned>(i);
        r.terms_.emplace(std::move(e), p.coeff(i));
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(size_t var) const {
    std::vector<MPoly> cs(static_cast<size_t>(std::max(degree_in(var), -1) + 1), MPoly(vars_));
    for (const auto& [e, v] : terms_) {
        Exponents r = e;
        r[var] = 0;
        cs[e[var]].add_term(r, v);
    }
    return cs;
}

namespace {

// gcd in K[x][y] by a primitive PRS on pseudo-remainders; inputs are the
// coefficient lists in y (entries univariate in x).
UPoly upoly_content(const std::vector<UPoly>& f) {
    UPoly g;
    for (const auto& c : f) g = UPoly::gcd(g, c);
    return g;
}

std::vector<UPoly> bpoly_trim(std::vector<UPoly> f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

std::vector<UPoly> bpoly_scale(std::vector<UPoly> f, const UPoly& c) {
    for (auto& v : f) v = v * c;
    return f;
}

std::vector<UPoly> bpoly_div_content(std::vector<UPoly> f) {
    UPoly c = upoly_content(f);
    if (c.degree() <= 0) {
        if (!f.empty()) {
            FieldElem s = c.is_zero() ? FieldElem(1) : c.lc().inverse();
            for (auto& v : f) v = v * s;
        }
        return f;
    }
    for (auto& v : f) v = v.divide_exact(c);
    return f;
}

// pseudo-remainder of a by b in y
std::vector<UPoly> bpoly_prem(std::vector<UPoly> a, const std::vector<UPoly>& b) {
    int db = static_cast<int>(b.size()) - 1;
    const UPoly& blc = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        UPoly alc = a.back();
        size_t off = a.size() - b.size();
        a = bpoly_scale(std::move(a), blc);
        for (size_t j = 0; j < b.size(); ++j) a[off + j] = a[off + j] - b[j] * alc;
        a.pop_back();
        a = bpoly_trim(std::move(a));
    }
    return a;
}

} // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.nvars() > 2) throw DimensionUnsupported("gcd supports at most two variables");
    if (a.nvars() <= 1) {
        size_t v = 0;
        return from_upoly(UPoly::gcd(a.to_upoly(v), b.to_upoly(v)), a.vars(), v);
    }
    // univariate shortcuts
    if (a.degree_in(1) == 0 && b.degree_in(1) == 0) {
        UPoly g = UPoly::gcd(a.coeffs_in(1)[0].to_upoly(0), b.coeffs_in(1)[0].to_upoly(0));
        return from_upoly(g, a.vars(), 0).monic();
    }
    auto to_b = [](const MPoly& p) {
        std::vector<UPoly> out;
        for (const MPoly& c : p.coeffs_in(1)) out.push_back(c.to_upoly(0));
        return bpoly_trim(std::move(out));
    };
    std::vector<UPoly> fa = to_b(a), fb = to_b(b);
    UPoly cont = UPoly::gcd(upoly_content(fa), upoly_content(fb));
    fa = bpoly_div_content(std::move(fa));
    fb = bpoly_div_content(std::move(fb));
    if (fa.size() < fb.size()) std::swap(fa, fb);
    while (!fb.empty()) {
        std::vector<UPoly> r = bpoly_prem(fa, fb);
        fa = std::move(fb);
        fb = bpoly_div_content(std::move(r));
    }
    // gcd = cont * primitive(fa)
    MPoly g(a.vars());
    for (size_t i = 0; i < fa.size(); ++i) {
        MPoly ci = from_upoly(fa[i] * cont, a.vars(), 0);
        Exponents e(2, 0);
        e[1] = static_cast<unsigned>(i);
        MPoly ymono(a.vars());
        ymono.terms_.emplace(std::move(e), FieldElem(1));
        g = g + ci * ymono;
    }
    return g.monic();
}

UPoly MPoly::resultant_in(const MPoly& f, const MPoly& g, size_t var) {
    if (f.nvars() != 2) throw DimensionUnsupported("resultant_in requires two variables");
    size_t other = 1 - var;
    if (f.is_zero() || g.is_zero()) return UPoly();
    int df = f.degree_in(var), dg = g.degree_in(var);
    if (df == 0 && dg == 0) return UPoly({FieldElem(1)});
    auto cf = f.coeffs_in(var), cg = g.coeffs_in(var);
    UPoly lf = cf.back().to_upoly(other), lg = cg.back().to_upoly(other);
    int bound = df * std::max(g.degree_in(other), 0) + dg * std::max(f.degree_in(other), 0);
    std::vector<FieldElem> xs, vals;
    long pt = 0;
    while (static_cast<int>(xs.size()) <= bound) {
        FieldElem x(pt++);
        if (lf.eval(x).is_zero() || lg.eval(x).is_zero()) continue;
        std::vector<FieldElem> fc(cf.size()), gc(cg.size());
        for (size_t i = 0; i < cf.size(); ++i) fc[i] = cf[i].to_upoly(other).eval(x);
        for (size_t i = 0; i < cg.size(); ++i) gc[i] = cg[i].to_upoly(other).eval(x);
        xs.push_back(x);
        vals.push_back(UPoly::resultant(UPoly(std::move(fc)), UPoly(std::move(gc))));
    }
    // Newton interpolation through the sampled values
    size_t n = xs.size();
    std::vector<FieldElem> dd = vals;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    UPoly r = UPoly::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;)
        r = r * UPoly({-xs[i], FieldElem(1)}) + UPoly::constant(dd[i]);
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        FieldElem c = it->second;
        bool neg = c.is_rational() && c.rational() < 0;
        if (first) {
            if (neg) {
                os << "-";
                c = -c;
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = -c;
        }
        first = false;
        bool has_mono = std::any_of(it->first.begin(), it->first.end(),
                                    [](unsigned e) { return e != 0; });
        std::string cs = c.str();
        bool unit = c.is_rational() && c.rational() == 1;
        if (!has_mono) {
            os << (c.is_rational() ? cs : "(" + cs + ")");
        } else {
            bool need_star = false;
            if (!unit) {
                os << (c.is_rational() ? cs : "(" + cs + ")");
                need_star = true;
            }
            for (size_t i = 0; i < it->first.size(); ++i) {
                unsigned e = it->first[i];
                if (!e) continue;
                if (need_star) os << "*";
                os << vars_[i];
                if (e > 1) os << "^" << e;
                need_star = true;
            }
        }
    }
    return os.str();
}

} // namespace folkit
