#include "folkit/upoly.hpp"

#include <cassert>

#include "folkit/errors.hpp"

namespace folkit {

UPoly UPoly::constant(FieldElem v) {
    UPoly p;
    if (!v.is_zero()) p.c_ = {std::move(v)};
    return p;
}

UPoly UPoly::x() {
    UPoly p;
    p.c_ = {FieldElem(0), FieldElem(1)};
    return p;
}

FieldElem UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElem(0);
    return c_[static_cast<size_t>(i)];
}

long UPoly::ord() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<long>(i);
    return -1;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<FieldElem> c = a.c_;
    c.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<FieldElem> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const FieldElem& s) const {
    if (s.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error("univariate division by zero");
    UPoly r = a, q;
    if (r.degree() >= b.degree())
        q.c_.assign(static_cast<size_t>(r.degree() - b.degree() + 1), FieldElem(0));
    FieldElem lcinv = b.lc().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        FieldElem t = r.lc() * lcinv;
        size_t off = static_cast<size_t>(r.degree() - b.degree());
        q.c_[off] = t;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[off + j] -= t * b.c_[j];
        r.c_.pop_back();
        r.trim();
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

UPoly UPoly::divide_exact(const UPoly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw Error("inexact univariate division");
    return q;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<FieldElem> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * FieldElem(static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::pow(long e) const {
    assert(e >= 0);
    UPoly acc = constant(FieldElem(1));
    UPoly b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

FieldElem UPoly::eval(const FieldElem& v) const {
    FieldElem r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
}

UPoly UPoly::shift(const FieldElem& c) const {
    return compose(UPoly({c, FieldElem(1)}));
}

UPoly UPoly::compose(const UPoly& g) const {
    UPoly r;
    for (size_t i = c_.size(); i-- > 0;)
        r = r * g + constant(c_[i]);
    return r;
}

UPoly UPoly::mul_xk(long k) const {
    if (is_zero()) return *this;
    std::vector<FieldElem> c(static_cast<size_t>(k), FieldElem(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return UPoly(std::move(c));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FieldElem UPoly::resultant(UPoly a, UPoly b) {
    if (a.is_zero() || b.is_zero()) return FieldElem(0);
    FieldElem res(1);
    bool neg = false;
    while (true) {
        if (b.degree() == 0) {
            res *= b.lc().pow(a.degree());
            break;
        }
        UPoly r = a.mod(b);
        if (r.is_zero()) return FieldElem(0);
        if ((a.degree() & 1) && (b.degree() & 1)) neg = !neg;
        res *= b.lc().pow(a.degree() - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
    return neg ? -res : res;
}

std::vector<std::pair<UPoly, int>> UPoly::squarefree_decomposition(const UPoly& p) {
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() <= 0) return out;
    UPoly f = p.monic();
    UPoly g = gcd(f, f.derivative());
    UPoly w = f.divide_exact(g);
    int i = 1;
    while (w.degree() > 0) {
        UPoly y = gcd(w, g);
        UPoly fac = w.divide_exact(y);
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        g = g.divide_exact(y);
        w = std::move(y);
        ++i;
    }
    return out;
}

UPoly UPoly::squarefree_part() const {
    if (degree() <= 0) return monic();
    return divide_exact(gcd(*this, derivative())).monic();
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c_[i].str();
        if (cs.find_first_of("+-", 1) != std::string::npos || !c_[i].is_rational())
            cs = "(" + cs + ")";
        if (i == 0) { s += cs; continue; }
        if (cs != "1") s += cs + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

} // namespace folkit
