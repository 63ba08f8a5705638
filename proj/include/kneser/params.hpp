#pragma once

#include <cstdint>
#include <string>

#include "kneser/errors.hpp"
#include "kneser/subset.hpp"

namespace kneser {

/// Exact ceiling division for any integer numerator and positive denominator.
inline long long ceil_div(long long num, long long den) {
    long long q = num / den;
    if (q * den < num) ++q;
    return q;
}

/// The quadruple (n,k,r,s) defining KG^r(n,k,s).
/// Vertices: k-subsets of [n]. Edges: r distinct vertices, pairwise
/// intersections of size at most s.
struct KneserParams {
    int n = 0;
    int k = 0;
    int r = 2;
    int s = 0;

    /// k > s >= 0, r >= 2, n >= k, n <= 64. Throws ParameterError otherwise.
    void validate() const;

    /// Lower-bound formulas apply only when n >= r(k-1)+1.
    [[nodiscard]] bool bound_applicable() const { return n >= r * (k - 1) + 1; }

    [[nodiscard]] std::uint64_t vertex_count() const { return binomial(n, k); }

    [[nodiscard]] std::string to_string() const; // "KG^2(5,2,0)"

    friend bool operator==(const KneserParams&, const KneserParams&) = default;
};

} // namespace kneser
