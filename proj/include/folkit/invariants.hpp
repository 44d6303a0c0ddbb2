#pragma once

// Derived local invariants of a foliation germ along an invariant branch:
// the index on the branch, the ratios r_V and r, the blow-up tower sums R
// and Gamma with their stopping depth delta, the second-type multiplicity
// relation, pushforward by polynomial automorphisms, and the blown-up index
// comparison report for pairs of fields with a branch correspondence.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "folkit/blowup.hpp"
#include "folkit/branch.hpp"
#include "folkit/factor.hpp"
#include "folkit/vectorfield.hpp"

namespace folkit {

// A checked statement: what was compared, the two sides, and the verdict.
struct Evidence {
    bool holds = false;
    std::string statement;
    std::string detail;
};

struct IndexReport {
    long ind = 0;           // ind_0(X|_V) = ord of the cofactor g
    long cofactor_ord = 0;  // same value, kept explicit for the identity below
    long composition_ord = 0; // ord_0(X o alpha), minimum over components
    long m = 0;             // branch multiplicity
    PuiseuxSeries cofactor; // leading terms of g where X o alpha = g * alpha'
};

// Index of X along an invariant branch via the cofactor of the composition.
IndexReport index_along(const VectorField& x, const PuiseuxBranch& v);

// Inequality nu(X) * m(V) <= ind_0(X|_V) + m(V) - 1.
Evidence check_ineq1(const VectorField& x, const PuiseuxBranch& v);

// r_V = (ind_0(X|_V) - 1) / m(V, 0).
Rat ratio_rV(const VectorField& x, const PuiseuxBranch& v);

// min of r_V over the supplied branches. `provably_none` marks an empty list
// coming from a verified absence of separatrices (value +infinity, returned
// as nullopt); an empty list without that proof throws EmptyBranchList.
std::optional<Rat> ratio_r(const VectorField& x,
                           const std::vector<PuiseuxBranch>& branches,
                           bool provably_none = false);

// Biconditional: in(X) restricted to the tangent cone line of V does not
// vanish identically  <=>  nu(X) = 1 + r_V.
Evidence check_formula_mult(const VectorField& x, const PuiseuxBranch& v);

struct TowerLevelData {
    long m = 0;
    long nu = 0;
    long nu_tilde = 0;
    long ind = 0;
    bool dicritical = false;
};

enum class EndpointKind { nondicritical_endpoint, dicritical_endpoint };

struct TowerInvariants {
    std::vector<TowerLevelData> levels; // levels 0..depth
    std::vector<Rat> R;     // R[k-1] = R_k = sum_{j<k} (m_j/m_0) nu~_j, k = 1..depth
    std::vector<Rat> Gamma; // Gamma[k-1] = Gamma_k (0 for k = 1)
    long delta = 0;         // minimal k with m at level k-1 = 1 and endpoint index
    EndpointKind endpoint_kind = EndpointKind::nondicritical_endpoint;
    bool drop_ok = false;      // ind_{j+1} = ind_j - m_j * nu~_j at every level
    bool telescope_ok = false; // ind_k = ind_0 - sum_{j<k} m_j * nu~_j for all k
    bool r_index_ok = false;   // R_k = (ind_0 - ind_k) / m_0 for all k
};

// Builds the branch tower and every tower-level identity, locating delta.
TowerInvariants tower_invariants(const VectorField& x, const PuiseuxBranch& v,
                                 int max_depth = 12,
                                 int ext_bound = kDefaultExtensionBound);

// Biconditional nu(X) = 1 + R_delta  <=>  Gamma_delta = 0.
Evidence check_corollary1(const VectorField& x, const PuiseuxBranch& v,
                          int max_depth = 12,
                          int ext_bound = kDefaultExtensionBound);

// For a strictly nondicritical second-type germ: nu = m(S) - 1 where S is
// the union of the (possibly formal) separatrices.
Evidence second_type_multiplicity_check(const VectorField& x, int order,
                                        int max_depth = 12,
                                        int ext_bound = kDefaultExtensionBound);

// Pushforward Y = (Dphi . X) o phi^{-1} for a polynomial automorphism phi
// fixing the origin; the supplied inverse is verified exactly.
VectorField transform_by_automorphism(const VectorField& x,
                                      const std::vector<MPoly>& phi,
                                      const std::vector<MPoly>& phi_inv);

struct TheoremDPair {
    long ind_x = 0; // index after one blow-up, X side
    long ind_y = 0; // same, Y side
    long m_x = 0;
    long m_y = 0;
};

struct TheoremDReport {
    bool precondition_ok = true; // multiplicities match pairwise
    std::string detail;
    long nu_x = 0, nu_y = 0;
    std::vector<TheoremDPair> pairs;
    bool item_i = false;   // nu_x = nu_y
    bool item_ii = false;  // some pair has equal blown-up indices
    bool item_iii = false; // all pairs do
    bool item_iv = false;  // full sum and every singleton sum agree
    bool items_equivalent = false; // the four flags coincide on this data
};

// One-blow-up index comparison over a supplied branch correspondence.
TheoremDReport theorem_d_report(const VectorField& x, const VectorField& y,
                                const std::vector<std::pair<PuiseuxBranch, PuiseuxBranch>>& pairs,
                                int ext_bound = kDefaultExtensionBound);

} // namespace folkit
