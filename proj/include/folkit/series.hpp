#ifndef FOLKIT_SERIES_HPP
#define FOLKIT_SERIES_HPP

#include <map>
#include <optional>
#include <string>

#include "folkit/mpoly.hpp"
#include "folkit/numberfield.hpp"
#include "folkit/upoly.hpp"

namespace folkit {

// Truncated Puiseux series: a power series in the uniformizer u = t^(1/e),
// exponents stored in u units. guaranteed_order N (also in u units) promises
// that every exponent < N is exactly represented; N = kOrdInfL marks an
// exactly known (polynomial) series.
inline constexpr long kOrdInfL = 1L << 60;

class PuiseuxSeries {
public:
    PuiseuxSeries() : e_(1), n_(kOrdInfL) {} // exact zero
    static PuiseuxSeries zero(long guaranteed = kOrdInfL, int ram = 1);
    static PuiseuxSeries monomial(FieldElem c, long uexp, int ram = 1,
                                  long guaranteed = kOrdInfL);
    static PuiseuxSeries from_upoly(const UPoly& p, int ram = 1); // exact

    int ramification() const { return e_; }
    long guaranteed_order() const { return n_; } // in u units
    bool is_exact() const { return n_ == kOrdInfL; }
    bool is_zero_term_free() const { return c_.empty(); }
    const std::map<long, FieldElem>& coeffs() const { return c_; }
    FieldElem coeff_u(long uexp) const; // throws PrecisionExhausted past n_
    FieldElem coeff(const Rat& texp) const;

    // Rescale to ramification e2 (a multiple of the current one).
    PuiseuxSeries with_ramification(int e2) const;
    PuiseuxSeries truncated(long uorder) const; // drop exponents >= uorder
    PuiseuxSeries normalized() const;           // shrink ramification if possible

    PuiseuxSeries operator-() const;
    PuiseuxSeries operator+(const PuiseuxSeries& o) const;
    PuiseuxSeries operator-(const PuiseuxSeries& o) const;
    PuiseuxSeries operator*(const PuiseuxSeries& o) const;
    PuiseuxSeries operator*(const FieldElem& c) const;
    bool operator==(const PuiseuxSeries& o) const;
    bool operator!=(const PuiseuxSeries& o) const { return !(*this == o); }

    PuiseuxSeries pow(int k) const;
    PuiseuxSeries derivative() const; // d/dt; exponents shift by -e in u units

    // Least exponent with nonzero coefficient, in t units. nullopt = +inf
    // (exactly zero). Throws PrecisionExhausted when no term is stored but
    // exactness is not certified.
    std::optional<Rat> ord() const;
    long ord_u_lower_bound() const; // min stored exponent, else n_

    // Multiplicative inverse (Laurent exponents allowed in the result). For
    // an exact non-monomial input the unit-part precision uprec is required.
    PuiseuxSeries inverse(long uprec = -1) const;
    PuiseuxSeries divide(const PuiseuxSeries& d, long uprec = -1) const;

    // Substitute t -> inner(t) where ord(inner) >= 1; the uniformizer of
    // *this must be t itself (ramification 1 for the substitution grid), so
    // callers operate on u-exponent series directly.
    PuiseuxSeries compose(const PuiseuxSeries& inner) const;
    // Compositional inverse of a series with u-order exactly 1.
    PuiseuxSeries reverse_series(long uprec = -1) const;
    // Series g with g^k = *this, requiring u-order divisible by k;
    // root_of_lc must satisfy root_of_lc^k = lowest coefficient.
    PuiseuxSeries root(int k, const FieldElem& root_of_lc, long uprec = -1) const;

    std::string str(const std::string& var = "t") const;

private:
    int e_;
    std::map<long, FieldElem> c_;
    long n_;
    void trim();
};

// Evaluate a bivariate polynomial at a pair of series with common
// ramification; standard truncation bookkeeping applies.
PuiseuxSeries eval_mpoly(const MPoly& p, const PuiseuxSeries& sx, const PuiseuxSeries& sy);

} // namespace folkit

#endif
