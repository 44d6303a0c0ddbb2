#ifndef FOLKIT_PUISEUX_HPP
#define FOLKIT_PUISEUX_HPP

#include <vector>

#include "folkit/branch.hpp"
#include "folkit/factor.hpp"
#include "folkit/vectorfield.hpp"

namespace folkit {

// Branches at the origin of the squarefree curve f(x, y) = 0, one per
// irreducible local factor, each normalized (x(t) = t^k, or swapped when
// tangent to the y-axis). `order` is the certified precision in t units.
// Throws NotSquarefree when f has a repeated factor.
std::vector<PuiseuxBranch> newton_puiseux(const MPoly& f, long order,
                                          int ext_bound = kDefaultExtensionBound);

// Invariance certificate: exact cofactor division X(f) = h*f when the branch
// carries a local equation, otherwise exact vanishing of the cross product
// X(alpha) x alpha' through the certified order.
bool is_invariant_branch(const VectorField& x, const PuiseuxBranch& v);

// The separatrices of a germ with finitely many tangent directions, each
// normalized. Weak separatrices of saddle-nodes are flagged formal;
// representatives of one-parameter families at integer resonances are flagged
// family_rep (free coefficients chosen as 0). Throws DicriticalInfinitelyMany
// when a dicritical point appears, DepthExceeded past max_depth.
std::vector<PuiseuxBranch> solve_separatrices(const VectorField& x, long order,
                                              int max_depth = 12,
                                              int ext_bound = kDefaultExtensionBound);

// The leaf through the first-chart divisor point z = c after one blow-up of a
// germ dicritical at the origin. Throws NonGenericDirection if that point is
// singular or the transform is tangent to the divisor there.
PuiseuxBranch sample_dicritical_leaf(const VectorField& x, const FieldElem& c, long order,
                                     int ext_bound = kDefaultExtensionBound);

} // namespace folkit

#endif
