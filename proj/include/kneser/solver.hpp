#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kneser/coloring.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/params.hpp"

namespace kneser {

struct SolveBudget {
    std::uint64_t max_nodes = 10'000'000;
    std::uint64_t max_vertices = 56; // C(8,3)
};

enum class SolveStatus { chi_found, budget_exceeded };

std::string to_string(SolveStatus status);

struct SolveResult {
    SolveStatus status = SolveStatus::budget_exceeded;
    std::optional<int> chi;
    std::optional<Coloring> witness; // proper, uses exactly chi colors
    std::uint64_t nodes_explored = 0;
};

struct ProperCheck {
    bool proper = false;
    std::optional<Edge> witness; // canonically least monochromatic edge
};

/// True iff no color class contains r vertices pairwise intersecting in <= s
/// elements; otherwise reports the canonically least monochromatic edge.
ProperCheck is_proper(const KneserParams& params, const Coloring& coloring,
                      const SolveBudget& budget = {});

/// The complement view of is_proper: the witness, if any.
std::optional<Edge> find_monochromatic_edge(const KneserParams& params, const Coloring& coloring,
                                            const SolveBudget& budget = {});

/// The s = 0 construction with t = ceil((n-r(k-1))/(r-1)) colors: color i < t
/// covers vertices whose minimum element falls in the i-th window of width
/// r-1, color t covers the rest. Proper by construction; requires n >= rk.
Coloring windowed_coloring(const KneserParams& params);

enum class Colorability { yes, no, budget_exceeded };

struct MColorResult {
    Colorability outcome = Colorability::budget_exceeded;
    std::optional<Coloring> coloring; // present iff outcome == yes
    std::uint64_t nodes = 0;
};

/// Decides whether KG^r(n,k,s) admits a proper m-coloring by backtracking over
/// the compatibility graph; a vertex is barred from a color class exactly when
/// it would complete an r-clique inside it.
MColorResult m_colorable(const KneserParams& params, int m, const SolveBudget& budget = {});

/// Minimum m with m_colorable = yes, searched upward from the strongest known
/// lower bound. Requires C(n,k) <= budget.max_vertices.
SolveResult exact_chromatic(const KneserParams& params, const SolveBudget& budget = {});

} // namespace kneser
