#ifndef FOLKIT_BRANCH_HPP
#define FOLKIT_BRANCH_HPP

#include <optional>
#include <string>
#include <utility>

#include "folkit/mpoly.hpp"
#include "folkit/series.hpp"

namespace folkit {

// Parameterized irreducible curve branch t -> (x(t), y(t)). After
// normalization x(t) = t^k exactly (k = multiplicity), unless the branch is
// tangent to the y-axis, in which case y(t) = t^k and `swapped` is set.
struct PuiseuxBranch {
    PuiseuxSeries x, y;
    bool swapped = false;
    bool formal = false;      // weak separatrix of a saddle-node
    bool family_rep = false;  // representative of an infinite family, free
                              // coefficients set to zero
    int mult = 1;             // k = m(V, 0)
    std::pair<FieldElem, FieldElem> tangent{FieldElem(1), FieldElem(0)}; // (a : b)
    std::optional<MPoly> equation; // exact local equation, when known
    long determinacy = 0;          // certified order in t units

    std::string str() const;
};

int branch_multiplicity(const PuiseuxBranch& v);

// A k-th root of c, adjoining a root of T^k - c to c's field when needed.
FieldElem kth_root_elem(const FieldElem& c, int k, int ext_bound);

// The tangent line C(V, 0): for direction (a : b) the line b*x - a*y = 0.
MPoly branch_tangent_cone(const PuiseuxBranch& v, const std::vector<std::string>& vars);

// Reparameterize so the lower-order component becomes exactly t^k; may
// extend the coefficient field by a k-th root of the leading coefficient.
PuiseuxBranch normalize_branch(PuiseuxBranch v, int ext_bound);

} // namespace folkit

#endif
