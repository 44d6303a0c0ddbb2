#ifndef FOLKIT_VECTORFIELD_HPP
#define FOLKIT_VECTORFIELD_HPP

#include <optional>
#include <string>
#include <vector>

#include "folkit/mpoly.hpp"
#include "folkit/upoly.hpp"

namespace folkit {

// Generator of a foliation germ at 0: X = sum f_i d/dx_i with polynomial
// components. Normalization divides out a common factor of the components
// (recorded, never discarded silently).
class VectorField {
public:
    VectorField(std::vector<std::string> vars, std::vector<MPoly> components);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t dim() const { return vars_.size(); }
    const std::vector<MPoly>& components() const { return f_; }
    const MPoly& removed_gcd() const { return removed_gcd_; }

    // nu(X, 0) = min over components of the vanishing order at 0.
    int algebraic_multiplicity() const;
    bool is_singular_at_origin() const { return algebraic_multiplicity() >= 1; }

    // Homogeneous part of degree nu of each component (zero when that
    // component's order exceeds nu).
    std::vector<MPoly> initial_part() const;

    // Jacobian matrix of the components at 0 (row i = gradient of f_i).
    std::vector<std::vector<FieldElem>> linear_part() const;
    // Characteristic polynomial of the linear part (n = 2).
    UPoly char_poly() const;
    // Spect(DX(0)) != {0}: the linear part has a nonzero eigenvalue.
    bool spectrum_nonzero() const;
    // One eigenvalue zero, the other nonzero.
    bool is_saddle_node_linear() const;

    // Tangent cone form T(x, y) = y * in_nu(P) - x * in_nu(Q); n = 2 only.
    MPoly tangent_cone_form() const;
    // T identically zero <=> the blow-up does not leave the divisor invariant.
    bool is_dicritical() const { return tangent_cone_form().is_zero(); }

    // Milnor number: dim_C C{x,y}/(P, Q), finite iff P, Q coprime; n = 2.
    // Returns nullopt when the intersection is not isolated.
    std::optional<int> milnor_number() const;

    VectorField with_components(std::vector<MPoly> f) const {
        return VectorField(vars_, std::move(f));
    }

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::vector<MPoly> f_;
    MPoly removed_gcd_;
};

// Local intersection number i_0(f, g) at the origin; nullopt if not isolated.
std::optional<int> local_intersection_number(const MPoly& f, const MPoly& g);

} // namespace folkit

#endif
