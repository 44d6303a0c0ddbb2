#include "folkit/numberfield.hpp"

#include <algorithm>
#include <cassert>

#include "folkit/errors.hpp"

namespace folkit {

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a.get() == b.get(); }

bool NumberField::contains(const FieldPtr& sub) const {
    const NumberField* k = this;
    while (k) {
        if (k == sub.get()) return true;
        k = k->base_.get();
    }
    return sub == nullptr;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a->contains(b)) return a;
    if (b->contains(a)) return b;
    throw Error("field elements live in incomparable extension towers");
}

FieldPtr NumberField::extend(const FieldPtr& base, std::vector<FieldElem> minpoly,
                             int max_total_degree, std::string gen_name) {
    assert(minpoly.size() >= 3);
    assert(minpoly.back().is_one());
    int deg = static_cast<int>(minpoly.size()) - 1;
    int total = field_total_degree(base) * deg;
    if (total > max_total_degree)
        throw ExtensionDegreeExceeded("tower degree " + std::to_string(total) +
                                      " exceeds bound " + std::to_string(max_total_degree));
    auto nf = std::shared_ptr<NumberField>(new NumberField());
    nf->base_ = base;
    nf->minpoly_ = std::move(minpoly);
    nf->total_degree_ = total;
    nf->depth_ = field_depth(base) + 1;
    nf->gen_name_ = gen_name.empty() ? "a" + std::to_string(nf->depth_) : std::move(gen_name);
    return nf;
}

const Rat& FieldElem::rational() const {
    if (field_) throw Error("element is not rational: " + str());
    return rat_;
}

FieldElem FieldElem::canonical(const FieldPtr& K, std::vector<FieldElem> coords) {
    if (!K) {
        assert(coords.size() == 1);
        return coords[0];
    }
    coords.resize(static_cast<size_t>(K->degree()));
    bool higher_zero = true;
    for (size_t i = 1; i < coords.size(); ++i)
        if (!coords[i].is_zero()) { higher_zero = false; break; }
    if (higher_zero) return coords[0]; // already canonical in the base
    FieldElem e;
    e.field_ = K;
    e.rat_ = 0;
    e.coords_ = std::move(coords);
    return e;
}

FieldElem FieldElem::generator(const FieldPtr& K) {
    std::vector<FieldElem> c(static_cast<size_t>(K->degree()));
    c[1] = FieldElem(1);
    return canonical(K, std::move(c));
}

FieldElem FieldElem::make(const FieldPtr& K, std::vector<FieldElem> coords) {
    for (auto& c : coords)
        if (c.field_ && (!K->base() || !K->base()->contains(c.field_)))
            throw Error("coordinate does not live in the base field");
    return canonical(K, std::move(coords));
}

std::vector<FieldElem> FieldElem::coords_in(const FieldPtr& K) const {
    if (!K) {
        if (field_) throw Error("cannot project extension element to Q");
        return {*this};
    }
    std::vector<FieldElem> c(static_cast<size_t>(K->degree()));
    if (same_field(field_, K)) {
        c = coords_;
        c.resize(static_cast<size_t>(K->degree()));
    } else {
        // element lives strictly below K
        if (field_ && !K->contains(field_))
            throw Error("element does not live inside the requested field");
        c[0] = *this;
    }
    return c;
}

FieldElem FieldElem::lift_to(const FieldPtr&) const { return *this; } // canonical form is level-free

FieldElem FieldElem::operator-() const {
    if (!field_) return FieldElem(Rat(-rat_));
    std::vector<FieldElem> c = coords_;
    for (auto& x : c) x = -x;
    return canonical(field_, std::move(c));
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    if (!field_ && !o.field_) { rat_ += o.rat_; return *this; }
    FieldPtr K = common_field(field_, o.field_);
    auto a = coords_in(K), b = o.coords_in(K);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    *this = canonical(K, std::move(a));
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    *this += -o;
    return *this;
}

namespace {

// Dense polynomial helpers over FieldElem coefficient vectors (low degree first);
// used for reduction mod the minimal polynomial and for inversion.
void trim(std::vector<FieldElem>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// r = r mod m, with m monic.
void reduce_mod(std::vector<FieldElem>& r, const std::vector<FieldElem>& m) {
    size_t d = m.size() - 1;
    while (r.size() > d) {
        FieldElem t = r.back();
        r.pop_back();
        if (t.is_zero()) continue;
        size_t off = r.size() - d;
        for (size_t j = 0; j < d; ++j) r[off + j] -= t * m[j];
    }
}

// (q, r) with a = q*b + r, b nonzero, field coefficients.
std::pair<std::vector<FieldElem>, std::vector<FieldElem>>
poly_divmod(std::vector<FieldElem> a, const std::vector<FieldElem>& b) {
    std::vector<FieldElem> q;
    FieldElem lcinv = b.back().inverse();
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, FieldElem());
    while (a.size() >= b.size()) {
        FieldElem t = a.back() * lcinv;
        q[a.size() - b.size()] = t;
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= t * b[j];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return {std::move(q), std::move(a)};
}

} // namespace

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    if (!field_ && !o.field_) { rat_ *= o.rat_; return *this; }
    if (is_zero() || o.is_zero()) { *this = FieldElem(); return *this; }
    FieldPtr K = common_field(field_, o.field_);
    auto a = coords_in(K), b = o.coords_in(K);
    std::vector<FieldElem> prod(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    reduce_mod(prod, K->minpoly());
    *this = canonical(K, std::move(prod));
    return *this;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error("division by zero field element");
    if (!field_) return FieldElem(Rat(1) / rat_);
    // extended Euclid of coords against the minimal polynomial, over the base
    std::vector<FieldElem> r0 = field_->minpoly();
    std::vector<FieldElem> r1 = coords_;
    trim(r1);
    std::vector<FieldElem> s0 = {}, s1 = {FieldElem(1)}; // coefficients of *this
    while (true) {
        auto [q, r] = poly_divmod(r0, r1);
        if (r.empty()) break;
        // s2 = s0 - q*s1
        std::vector<FieldElem> qs(q.size() + s1.size() - 1 + (s1.empty() ? 1 : 0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        std::vector<FieldElem> s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is the gcd, a nonzero constant (minpoly irreducible)
    if (r1.size() != 1)
        throw Error("minimal polynomial is not irreducible: nontrivial gcd in inversion");
    FieldElem c = r1[0].inverse();
    for (auto& x : s1) x *= c;
    reduce_mod(s1, field_->minpoly());
    return canonical(field_, std::move(s1));
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
    *this *= o.inverse();
    return *this;
}

FieldElem FieldElem::pow(long e) const {
    if (e == 0) return FieldElem(1);
    FieldElem b = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? e : -e;
    FieldElem acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (!field_ && !o.field_) return rat_ == o.rat_;
    if (!same_field(field_, o.field_)) {
        // canonical form: equal elements share a level unless one tower extends
        // the other trivially, which canonicalization rules out
        if (!field_ || !o.field_) return false;
        if (field_->depth() != o.field_->depth()) return false;
        return false;
    }
    return coords_ == o.coords_;
}

FieldElem FieldElem::norm_down() const {
    if (!field_) return *this;
    int d = field_->degree();
    // columns: coordinates of (*this) * gen^j
    std::vector<std::vector<FieldElem>> col(static_cast<size_t>(d));
    FieldElem g = FieldElem::generator(field_);
    FieldElem acc = *this;
    for (int j = 0; j < d; ++j) {
        col[static_cast<size_t>(j)] = acc.coords_in(field_);
        if (j + 1 < d) acc *= g;
    }
    // determinant by Gaussian elimination over the base field
    FieldElem det(1);
    for (int i = 0; i < d; ++i) {
        int piv = -1;
        for (int r = i; r < d; ++r)
            if (!col[static_cast<size_t>(r)][static_cast<size_t>(i)].is_zero()) { piv = r; break; }
        if (piv < 0) return FieldElem(0);
        if (piv != i) {
            std::swap(col[static_cast<size_t>(piv)], col[static_cast<size_t>(i)]);
            det = -det;
        }
        FieldElem p = col[static_cast<size_t>(i)][static_cast<size_t>(i)];
        det *= p;
        FieldElem pinv = p.inverse();
        for (int r = i + 1; r < d; ++r) {
            FieldElem f = col[static_cast<size_t>(r)][static_cast<size_t>(i)];
            if (f.is_zero()) continue;
            f *= pinv;
            for (int c = i; c < d; ++c)
                col[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * col[static_cast<size_t>(i)][static_cast<size_t>(c)];
        }
    }
    return det;
}

std::string FieldElem::str() const {
    if (!field_) return rat_str(rat_);
    std::string s;
    const std::string& g = field_->generator_name();
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        std::string cs = coords_[i].str();
        bool needs_paren = cs.find_first_of("+-") != std::string::npos &&
                           cs.find_first_of("+-") != 0;
        if (cs.front() == '-' && cs.find_first_of("+-", 1) != std::string::npos) needs_paren = true;
        if (!first) s += " + ";
        first = false;
        if (needs_paren) cs = "(" + cs + ")";
        if (i == 0) {
            s += cs;
        } else {
            if (cs == "1") { }
            else s += cs + "*";
            s += g;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace folkit
