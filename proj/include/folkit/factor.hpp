#pragma once

#include <utility>
#include <vector>

#include "folkit/upoly.hpp"

namespace folkit {

inline constexpr int kDefaultExtensionBound = 24;

// Complete factorization into monic irreducible factors with multiplicities
// over the given ambient field (nullptr = Q; defaults to the deepest field
// appearing among the coefficients). The product of the factors with
// multiplicities equals monic(p).
// Rational base: squarefree decomposition + Zassenhaus. Extension towers:
// Trager's norm method, recursing into the base field.
std::vector<std::pair<UPoly, int>> factor_univariate(const UPoly& p, FieldPtr ambient = nullptr,
                                                     int max_total_degree = kDefaultExtensionBound);

bool is_irreducible(const UPoly& p, FieldPtr ambient = nullptr,
                    int max_total_degree = kDefaultExtensionBound);

// A root of the monic irreducible q: in the ambient field if deg 1, otherwise
// in a fresh extension of the ambient field by q itself.
FieldElem some_root_of_irreducible(const UPoly& q, FieldPtr ambient = nullptr,
                                   int max_total_degree = kDefaultExtensionBound);

// All roots of p with multiplicities, splitting p completely by stacking
// extensions as needed. Deterministic order.
std::vector<std::pair<FieldElem, int>> all_roots(const UPoly& p, FieldPtr ambient = nullptr,
                                                 int max_total_degree = kDefaultExtensionBound);

} // namespace folkit
