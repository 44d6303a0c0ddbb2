#pragma once

#include <utility>
#include <vector>

#include "folkit/numberfield.hpp"

namespace folkit {

// Dense univariate polynomial over a field tower, lowest coefficient first.
// The zero polynomial is the empty vector.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<FieldElem> c) : c_(std::move(c)) { trim(); }
    static UPoly constant(FieldElem v);
    static UPoly x(); // the monomial x

    const std::vector<FieldElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const FieldElem& lc() const { return c_.back(); }
    FieldElem coeff(int i) const;
    long ord() const; // smallest i with nonzero coeff; -1 for zero

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator*(const FieldElem& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    // Euclidean division; b must be nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    UPoly mod(const UPoly& b) const { return divmod(*this, b).second; }
    // Exact quotient; throws if the remainder is nonzero.
    UPoly divide_exact(const UPoly& b) const;

    UPoly monic() const;
    UPoly derivative() const;
    UPoly pow(long e) const;
    FieldElem eval(const FieldElem& v) const;
    UPoly shift(const FieldElem& c) const;         // p(x + c)
    UPoly compose(const UPoly& g) const;           // p(g(x))
    UPoly mul_xk(long k) const;                    // p * x^k

    static UPoly gcd(UPoly a, UPoly b);            // monic gcd; gcd(p, 0) = monic(p)
    static FieldElem resultant(UPoly a, UPoly b);

    // Yun's squarefree decomposition: p = lc * prod f_i^i, f_i monic squarefree.
    static std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);
    UPoly squarefree_part() const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<FieldElem> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

} // namespace folkit
