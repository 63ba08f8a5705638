#pragma once

#include <optional>
#include <string>

#include "kneser/params.hpp"
#include "kneser/solver.hpp"

namespace kneser {

/// ceil((n - r(k-s-1)) / (r-1)). Requires bound_applicable, k > s >= 0, r >= 2.
int lower_bound_general(const KneserParams& params);

/// ceil((n - r(k-1)) / (r-1)), the classical s = 0 bound. Requires s = 0 and
/// n >= rk. Equals lower_bound_general at s = 0.
int lower_bound_afl(const KneserParams& params);

/// The s = 0 bound of the padded source hypergraph KG^r(n-s, k-s, 0):
/// ceil((n-s - r(k-s-1)) / (r-1)). Requires n - s >= r(k-s).
int lower_bound_padded(const KneserParams& params);

/// All bound values for one parameter set, plus the exact chromatic number
/// when a solver budget was provided and sufficed.
struct BoundReport {
    KneserParams params;
    int theorem1 = 0;                  // lower_bound_general
    std::optional<int> afl_eq1;        // lower_bound_afl, s = 0 only
    std::optional<int> hom_eq3;        // lower_bound_padded, when applicable
    std::optional<int> exact_chi;
    std::optional<bool> tight;         // exact_chi == theorem1
    std::string solver_status;         // "", "chi_found", "budget_exceeded"
    std::uint64_t solver_nodes = 0;

    [[nodiscard]] std::string to_json() const;
    [[nodiscard]] std::string csv_row() const;
    static std::string csv_header();
};

/// Fills every formula field; runs the exact solver when `budget` is present.
/// Budget exhaustion leaves exact_chi absent, it is not an error.
BoundReport compare_bounds(const KneserParams& params, const std::optional<SolveBudget>& budget);

} // namespace kneser
