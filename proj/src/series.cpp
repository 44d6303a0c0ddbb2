#include "folkit/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "folkit/errors.hpp"

namespace folkit {
namespace {

long sat(long v) { return std::min(v, kOrdInfL); }
long sat_add(long a, long b) {
    if (a >= kOrdInfL || b >= kOrdInfL) return kOrdInfL;
    return sat(a + b);
}
long sat_mul(long a, long b) {
    if (a >= kOrdInfL || b >= kOrdInfL) return kOrdInfL;
    if (a != 0 && b > kOrdInfL / a) return kOrdInfL;
    return a * b;
}

} // namespace

void PuiseuxSeries::trim() {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->second.is_zero() || it->first >= n_) ? c_.erase(it) : std::next(it);
}

PuiseuxSeries PuiseuxSeries::zero(long guaranteed, int ram) {
    PuiseuxSeries s;
    s.e_ = ram;
    s.n_ = sat(guaranteed);
    return s;
}

PuiseuxSeries PuiseuxSeries::monomial(FieldElem c, long uexp, int ram, long guaranteed) {
    PuiseuxSeries s = zero(guaranteed, ram);
    if (!c.is_zero() && uexp < s.n_) s.c_.emplace(uexp, std::move(c));
    return s;
}

PuiseuxSeries PuiseuxSeries::from_upoly(const UPoly& p, int ram) {
    PuiseuxSeries s = zero(kOrdInfL, ram);
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) s.c_.emplace(static_cast<long>(i), p.coeff(i));
    return s;
}

FieldElem PuiseuxSeries::coeff_u(long uexp) const {
    if (uexp >= n_) throw PrecisionExhausted("coefficient beyond guaranteed order");
    auto it = c_.find(uexp);
    return it == c_.end() ? FieldElem(0) : it->second;
}

FieldElem PuiseuxSeries::coeff(const Rat& texp) const {
    Rat u = texp * Rat(e_);
    if (u.get_den() != 1) {
        if (u >= Rat(n_)) throw PrecisionExhausted("coefficient beyond guaranteed order");
        return FieldElem(0);
    }
    return coeff_u(static_cast<long>(u.get_num().get_si()));
}

PuiseuxSeries PuiseuxSeries::with_ramification(int e2) const {
    if (e2 == e_) return *this;
    if (e2 % e_ != 0) throw Error("with_ramification: not a multiple");
    long f = e2 / e_;
    PuiseuxSeries s = zero(sat_mul(n_, f), e2);
    for (const auto& [k, v] : c_) s.c_.emplace(k * f, v);
    return s;
}

PuiseuxSeries PuiseuxSeries::truncated(long uorder) const {
    PuiseuxSeries s = *this;
    s.n_ = std::min(n_, sat(uorder));
    s.trim();
    return s;
}

PuiseuxSeries PuiseuxSeries::normalized() const {
    long g = e_;
    for (const auto& [k, v] : c_) g = std::gcd(g, std::abs(k));
    if (g <= 1) return *this;
    if (n_ != kOrdInfL && n_ % g != 0) return *this;
    PuiseuxSeries s = zero(n_ == kOrdInfL ? kOrdInfL : n_ / g, static_cast<int>(e_ / g));
    for (const auto& [k, v] : c_) s.c_.emplace(k / g, v);
    return s;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries s = *this;
    for (auto& [k, v] : s.c_) v = -v;
    return s;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
    int e = std::lcm(e_, o.e_);
    PuiseuxSeries a = with_ramification(e), b = o.with_ramification(e);
    a.n_ = std::min(a.n_, b.n_);
    for (const auto& [k, v] : b.c_) {
        auto it = a.c_.find(k);
        if (it == a.c_.end())
            a.c_.emplace(k, v);
        else
            it->second = it->second + v;
    }
    a.trim();
    return a;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const { return *this + (-o); }

long PuiseuxSeries::ord_u_lower_bound() const { return c_.empty() ? n_ : c_.begin()->first; }

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
    int e = std::lcm(e_, o.e_);
    PuiseuxSeries a = with_ramification(e), b = o.with_ramification(e);
    if ((a.is_exact() && a.c_.empty()) || (b.is_exact() && b.c_.empty()))
        return zero(kOrdInfL, e);
    long n = std::min(sat_add(a.n_, b.ord_u_lower_bound()), sat_add(b.n_, a.ord_u_lower_bound()));
    PuiseuxSeries r = zero(n, e);
    for (const auto& [k1, v1] : a.c_)
        for (const auto& [k2, v2] : b.c_) {
            if (k1 + k2 >= n) continue;
            auto it = r.c_.find(k1 + k2);
            if (it == r.c_.end())
                r.c_.emplace(k1 + k2, v1 * v2);
            else
                it->second = it->second + v1 * v2;
        }
    r.trim();
    return r;
}

PuiseuxSeries PuiseuxSeries::operator*(const FieldElem& c) const {
    if (c.is_zero()) return zero(kOrdInfL, e_);
    PuiseuxSeries s = *this;
    for (auto& [k, v] : s.c_) v = v * c;
    s.trim();
    return s;
}

bool PuiseuxSeries::operator==(const PuiseuxSeries& o) const {
    int e = std::lcm(e_, o.e_);
    PuiseuxSeries a = with_ramification(e), b = o.with_ramification(e);
    return a.n_ == b.n_ && a.c_ == b.c_;
}

PuiseuxSeries PuiseuxSeries::pow(int k) const {
    PuiseuxSeries r = monomial(FieldElem(1), 0, e_);
    PuiseuxSeries b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::derivative() const {
    PuiseuxSeries s = zero(n_ == kOrdInfL ? kOrdInfL : sat(n_ - e_), e_);
    for (const auto& [k, v] : c_) {
        if (k == 0) continue;
        FieldElem c = v * FieldElem(Rat(k, e_));
        if (k - e_ < s.n_) s.c_.emplace(k - e_, std::move(c));
    }
    s.trim();
    return s;
}

std::optional<Rat> PuiseuxSeries::ord() const {
    if (!c_.empty()) {
        Rat r(c_.begin()->first, e_);
        r.canonicalize();
        return r;
    }
    if (is_exact()) return std::nullopt;
    throw PrecisionExhausted("series order unknown: no term stored below guaranteed order");
}

PuiseuxSeries PuiseuxSeries::inverse(long uprec) const {
    if (c_.empty()) {
        if (is_exact()) throw Error("inverse of the zero series");
        throw PrecisionExhausted("inverse: lowest term unknown");
    }
    long m = c_.begin()->first;
    FieldElem lc = c_.begin()->second;
    long unit_prec = n_ == kOrdInfL ? kOrdInfL : n_ - m;
    if (uprec >= 0) unit_prec = std::min(unit_prec, sat(uprec));
    bool nontrivial_tail = c_.size() > 1;
    if (unit_prec == kOrdInfL && nontrivial_tail)
        throw Error("inverse of an exact non-monomial series requires a precision");
    // w = 1 / (self * lc^-1 * u^-m), solved coefficient by coefficient
    PuiseuxSeries w = zero(unit_prec, e_);
    if (!nontrivial_tail) {
        w.c_.emplace(0, FieldElem(1));
    } else {
        std::map<long, FieldElem> v; // unit part of self, exponent shifted
        FieldElem lcinv = lc.inverse();
        for (const auto& [k, c] : c_) v.emplace(k - m, c * lcinv);
        std::map<long, FieldElem> wk;
        wk.emplace(0, FieldElem(1));
        for (long j = 1; j < unit_prec; ++j) {
            FieldElem s(0);
            for (const auto& [i, vi] : v) {
                if (i <= 0 || i > j) continue;
                auto it = wk.find(j - i);
                if (it != wk.end()) s = s + vi * it->second;
            }
            if (!s.is_zero()) wk.emplace(j, -s);
        }
        w.c_ = std::move(wk);
        w.trim();
    }
    PuiseuxSeries r = zero(w.n_ == kOrdInfL ? kOrdInfL : sat(w.n_ - m), e_);
    FieldElem lcinv = lc.inverse();
    for (const auto& [k, v] : w.c_)
        if (k - m < r.n_) r.c_.emplace(k - m, v * lcinv);
    r.trim();
    return r;
}

PuiseuxSeries PuiseuxSeries::divide(const PuiseuxSeries& d, long uprec) const {
    return *this * d.inverse(uprec);
}

PuiseuxSeries PuiseuxSeries::compose(const PuiseuxSeries& inner) const {
    if (!c_.empty() && c_.begin()->first < 0) throw Error("compose: Laurent outer series");
    long o = inner.ord_u_lower_bound();
    if (o < 1) throw Error("compose: inner series must have positive order");
    long n = std::min(sat_mul(n_, o), inner.n_);
    PuiseuxSeries r = zero(n, inner.e_);
    PuiseuxSeries pw = monomial(FieldElem(1), 0, inner.e_, n);
    long prev = 0;
    for (const auto& [k, v] : c_) {
        if (sat_mul(k, o) >= n) break;
        for (long i = prev; i < k; ++i) pw = (pw * inner).truncated(n);
        prev = k;
        r = r + pw * v;
    }
    r.n_ = n;
    r.trim();
    return r;
}

PuiseuxSeries PuiseuxSeries::reverse_series(long uprec) const {
    if (c_.empty() || c_.begin()->first != 1)
        throw Error("reverse_series: series must have u-order 1");
    long prec = n_;
    if (uprec >= 0) prec = std::min(prec, sat(uprec));
    if (prec == kOrdInfL) {
        if (c_.size() == 1)
            return monomial(c_.begin()->second.inverse(), 1, e_);
        throw Error("reverse_series of an exact nonlinear series requires a precision");
    }
    FieldElem a1 = c_.begin()->second;
    FieldElem a1inv = a1.inverse();
    PuiseuxSeries g = monomial(a1inv, 1, e_, prec);
    PuiseuxSeries self = truncated(prec);
    for (long j = 2; j < prec; ++j) {
        PuiseuxSeries h = self.compose(g).truncated(j + 1);
        FieldElem d = h.coeff_u(j);
        if (d.is_zero()) continue;
        g.c_[j] = g.coeff_u(j) - d * a1inv;
        if (g.c_[j].is_zero()) g.c_.erase(j);
    }
    return g;
}

PuiseuxSeries PuiseuxSeries::root(int k, const FieldElem& root_of_lc, long uprec) const {
    if (c_.empty()) throw Error("root: lowest term unknown or zero");
    long m = c_.begin()->first;
    if (m % k != 0) throw Error("root: order not divisible by k");
    FieldElem lc = c_.begin()->second;
    if (root_of_lc.pow(k) != lc) throw Error("root: invalid leading root");
    long unit_prec = n_ == kOrdInfL ? kOrdInfL : n_ - m;
    if (uprec >= 0) unit_prec = std::min(unit_prec, sat(uprec));
    if (unit_prec == kOrdInfL) {
        if (c_.size() == 1) return monomial(root_of_lc, m / k, e_);
        throw Error("root of an exact non-monomial series requires a precision");
    }
    // unit part v = self * lc^-1 * u^-m; solve s^k = v term by term
    PuiseuxSeries v = zero(unit_prec, e_);
    FieldElem lcinv = lc.inverse();
    for (const auto& [i, c] : c_)
        if (i - m < unit_prec) v.c_.emplace(i - m, c * lcinv);
    PuiseuxSeries s = monomial(FieldElem(1), 0, e_, unit_prec);
    FieldElem kinv = FieldElem(static_cast<long>(k)).inverse();
    for (long j = 1; j < unit_prec; ++j) {
        PuiseuxSeries d = (s.pow(k) - v).truncated(j + 1);
        FieldElem dj = d.coeff_u(j);
        if (dj.is_zero()) continue;
        s.c_[j] = s.coeff_u(j) - dj * kinv;
        if (s.c_[j].is_zero()) s.c_.erase(j);
    }
    PuiseuxSeries r = zero(sat_add(unit_prec, m / k), e_);
    for (const auto& [i, c] : s.c_)
        if (i + m / k < r.n_) r.c_.emplace(i + m / k, c * root_of_lc);
    r.trim();
    return r;
}

std::string PuiseuxSeries::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        FieldElem c = v;
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
        std::string cs = c.is_rational() ? c.str() : "(" + c.str() + ")";
        bool unit = c.is_rational() && c.rational() == 1;
        if (k == 0) {
            os << cs;
        } else {
            if (!unit) os << cs << "*";
            os << var;
            if (k != e_ || e_ != 1) {
                if (e_ == 1)
                    os << "^" << k;
                else if (k % e_ == 0) {
                    if (k / e_ != 1) os << "^" << k / e_;
                } else
                    os << "^(" << k << "/" << e_ << ")";
            }
        }
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(" << var << "^(" << n_ << "/" << e_ << "))";
    return os.str();
}

PuiseuxSeries eval_mpoly(const MPoly& p, const PuiseuxSeries& sx, const PuiseuxSeries& sy) {
    if (p.nvars() != 2) throw DimensionUnsupported("eval_mpoly requires two variables");
    int e = std::lcm(sx.ramification(), sy.ramification());
    PuiseuxSeries x = sx.with_ramification(e), y = sy.with_ramification(e);
    PuiseuxSeries r = PuiseuxSeries::zero(kOrdInfL, e);
    for (const auto& [ex, v] : p.terms())
        r = r + x.pow(static_cast<int>(ex[0])) * y.pow(static_cast<int>(ex[1])) *
                v;
    return r;
}

} // namespace folkit
