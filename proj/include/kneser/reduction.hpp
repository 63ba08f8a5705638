#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneser/coloring.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/params.hpp"

namespace kneser {

/// (r1-1)t + r1(k-s-1) + 1, equal to (r1-1)(t-1) + r1(k-s).
int reduction_subset_size(int r1, int t, int k, int s);

/// The composite-arity plan: color count t under test and the derived
/// intermediate subset size m for the split r = r1 * r2.
struct ReductionPlan {
    int r1 = 2;
    int r2 = 2;
    int t = 1;
    int m = 0;

    static ReductionPlan make(int r1, int r2, int t, int k, int s);
};

struct SizeChainCheck {
    bool identity_ok = false;   // the two printed forms of m agree
    bool inner_bound_ok = false; // m >= r1(k-1)+1
    bool outer_bound_ok = false; // n >= (r2-1)(t-1) + r2*m
    [[nodiscard]] bool all() const { return identity_ok && inner_bound_ok && outer_bound_ok; }
};

/// The numeric facts the reduction relies on, checked before any search.
SizeChainCheck check_size_chains(const ReductionPlan& plan, int n, int k, int s);

struct InducedColor {
    int color = 0;                 // the common color c*
    std::vector<KSubset> members;  // r1 k-subsets of A, canonically least edge
};

/// Searches the k-subsets of A for a monochromatic arity-r1 edge (pairwise
/// intersections <= s, one common base color) and returns the canonically
/// least one. Throws StructuralError when none exists, which signals that the
/// caller's color-count hypothesis was violated.
InducedColor induced_color(const KSubset& A, int n, int k, int s, int r1,
                           const Coloring& base_coloring);

struct WitnessReport {
    KneserParams params;
    int r1 = 0;
    int r2 = 0;
    int t = 0;
    int m = 0; // 0 for the k = 1 shortcut
    Edge edge;
    int color = 0;
    std::vector<KSubset> parents; // parent A_i of each edge member
    bool verified = false;

    [[nodiscard]] std::string to_json() const;
};

/// From a coloring of KG^{r1*r2}(n,k,s) that uses at most t colors with t
/// strictly below the chromatic lower bound, extracts a verified
/// monochromatic edge of arity r1*r2. k = 1 short-circuits to a direct search
/// in the complete hypergraph; k >= 2 colors the m-subsets by induced_color
/// and assembles the edge from a monochromatic arity-r2 edge of m-subsets.
WitnessReport extract_witness(const KneserParams& params, int r1, int r2,
                              const Coloring& coloring, int t);

/// True iff edge has arity r, pairwise intersections <= s, all members one color.
bool verify_witness(const KneserParams& params, const Coloring& coloring, const Edge& edge);

} // namespace kneser
