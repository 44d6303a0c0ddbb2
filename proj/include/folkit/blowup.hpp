#ifndef FOLKIT_BLOWUP_HPP
#define FOLKIT_BLOWUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "folkit/branch.hpp"
#include "folkit/vectorfield.hpp"

namespace folkit {

// chart ids
inline constexpr int kFirstChart = 0;  // (x, z) -> (x, z*x)
inline constexpr int kSecondChart = 1; // (w, y) -> (w*y, y)

struct ChartStep {
    int chart;        // chart used for the blow-up below this level
    FieldElem center; // coordinate of the center along the divisor
};

// A foliation germ at a point of an iterated blow-up, in local coordinates
// centered at that point.
struct ChartGerm {
    std::vector<ChartStep> path;
    VectorField field;
    std::vector<MPoly> divisor; // local equations (coordinate functions)

    int nu() const { return field.algebraic_multiplicity(); }
    bool dicritical() const { return field.is_dicritical(); }
    int nu_tilde() const { return nu() - 1 + (dicritical() ? 1 : 0); }
};

ChartGerm origin_germ(const VectorField& x);

// Recenter at the point with the given local coordinates (the point must lie
// on the divisor when one is present); divisor components not passing
// through the new center are dropped.
ChartGerm translate(const ChartGerm& g, const FieldElem& c0, const FieldElem& c1);

// Strict transform in one chart of the quadratic blow-up at the origin of g:
// pull back, divide by l^nu_tilde (l the exceptional equation), re-normalize.
ChartGerm blow_up(const ChartGerm& g, int chart);

// A singular point of the strict transform on the new exceptional divisor.
// Owned by the first chart unless it is the second chart's origin.
struct DivisorPoint {
    int chart;
    FieldElem coord; // z-coordinate (first chart) or 0 (second chart origin)
};

std::vector<DivisorPoint> singular_points_on_divisor(const ChartGerm& g, int ext_bound);

// Strict transform at a divisor point: blow up in the owning chart and
// recenter there; appends the corresponding path step.
ChartGerm child_at(const ChartGerm& g, const DivisorPoint& p);

// Map a parameterized curve in the local coordinates at the end of `path`
// back down to the original coordinates.
std::pair<PuiseuxSeries, PuiseuxSeries> push_down(const std::vector<ChartStep>& path,
                                                  PuiseuxSeries u, PuiseuxSeries v);

enum class ReducedTag {
    regular,
    nondegenerate_hyperbolic, // eigenvalue ratio not in Q+
    saddle_node,
    resonant_nonreduced, // nonzero eigenvalues with ratio in Q+
    degenerate           // nilpotent or vanishing linear part
};

struct ReducedClass {
    ReducedTag tag;
    std::optional<Rat> ratio; // eigenvalue ratio when defined and rational
    bool reduced() const {
        return tag == ReducedTag::regular || tag == ReducedTag::nondegenerate_hyperbolic ||
               tag == ReducedTag::saddle_node;
    }
};

ReducedClass classify_germ(const VectorField& f);

const char* reduced_tag_name(ReducedTag t);

// Kernel direction of the linear part at a saddle-node, as a vector (a, b).
std::pair<FieldElem, FieldElem> weak_direction(const VectorField& f);

struct ResolutionNode {
    ChartGerm germ;
    int nu, nu_tilde;
    bool dicritical;
    ReducedClass cls;
    int parent; // -1 at the root
    std::vector<int> children;
    int depth;
};

struct ResolutionTree {
    std::vector<ResolutionNode> nodes;
    bool second_type = true;
    bool strictly_nondicritical = true;
    bool complete = true; // false when max_depth was hit

    std::string to_dot() const;
};

ResolutionTree resolve(const VectorField& x, int max_depth, int ext_bound);

struct TowerLevel {
    ChartGerm germ;
    PuiseuxBranch branch; // in local coordinates of the germ
    DivisorPoint point;   // p^(j) as seen from level j-1 (undefined at j = 0)
    int m;                // m(V^(j), p^(j))
    int nu, nu_tilde;
    bool dicritical;
    int ind; // ind_{p^(j)}(F^(j)|_{V^(j)})
};

struct BranchTower {
    std::vector<TowerLevel> levels;
};

// Levels 0..k of the branch tower of an invariant branch.
BranchTower branch_tower(const VectorField& x, const PuiseuxBranch& v, int k, int ext_bound);

// Cofactor order: X(alpha(t)) = g(t) * alpha'(t); returns ord g, checking the
// two component quotients against each other. Throws NotInvariant.
int index_along_series(const VectorField& x, const PuiseuxSeries& a, const PuiseuxSeries& b);

} // namespace folkit

#endif
