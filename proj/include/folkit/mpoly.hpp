#ifndef FOLKIT_MPOLY_HPP
#define FOLKIT_MPOLY_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folkit/numberfield.hpp"
#include "folkit/upoly.hpp"

namespace folkit {

// Order of the zero polynomial / exactly-zero series.
inline constexpr int kOrdInf = std::numeric_limits<int>::max();

using Exponents = std::vector<unsigned>;

// Graded lexicographic: compare total degree first, then exponents of the
// earlier variables.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial in an ordered list of named variables; terms are kept in
// ascending grlex order and never map to zero.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    static MPoly constant(std::vector<std::string> vars, FieldElem v);
    static MPoly variable(std::vector<std::string> vars, size_t idx);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const std::map<Exponents, FieldElem, GrlexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldElem constant_value() const; // 0 for the zero polynomial
    FieldElem coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, FieldElem v);

    int total_degree() const; // -1 for zero
    int ord() const;          // min total degree of a term; kOrdInf for zero
    int degree_in(size_t var) const;
    FieldElem lc() const; // coefficient of the grlex-leading term

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const FieldElem& c) const;
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(int e) const;
    MPoly derivative(size_t var) const;
    MPoly homogeneous_part(int d) const;
    MPoly monic() const; // divide by grlex leading coefficient

    // Substitute values[i] for variable i; the results share the target's
    // variable list.
    MPoly subst(const std::vector<MPoly>& values) const;
    FieldElem eval(const std::vector<FieldElem>& values) const;
    // Substitute a single variable, keeping the others.
    MPoly subst_var(size_t var, const MPoly& value) const;
    MPoly shift(const std::vector<FieldElem>& center) const; // p(x + c)

    std::optional<MPoly> divide_exact(const MPoly& d) const;
    bool divisible_by(const MPoly& d) const { return divide_exact(d).has_value(); }

    // gcd via a primitive PRS; supports at most two variables.
    static MPoly gcd(const MPoly& a, const MPoly& b);

    // View as univariate in `var`; all other variables must be absent.
    UPoly to_upoly(size_t var) const;
    static MPoly from_upoly(const UPoly& p, std::vector<std::string> vars, size_t var);
    // Coefficients of powers of `var`, each an MPoly in the same variables.
    std::vector<MPoly> coeffs_in(size_t var) const;

    std::string str() const; // canonical: descending grlex, explicit * and ^

    // Resultant of two bivariate polynomials with respect to variable `var`,
    // returned as a univariate polynomial in the other variable (computed by
    // evaluation and interpolation at points preserving both leading terms).
    static UPoly resultant_in(const MPoly& f, const MPoly& g, size_t var);

private:
    std::vector<std::string> vars_;
    std::map<Exponents, FieldElem, GrlexLess> terms_;
    void add_term(const Exponents& e, const FieldElem& v);
};

} // namespace folkit

#endif
