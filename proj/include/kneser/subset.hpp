#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kneser/errors.hpp"

namespace kneser {

using Mask = std::uint64_t;

// Ground sets are [n] with n <= 64; element i lives at bit i-1.
inline constexpr int kMaxGroundSet = 64;

/// Exact binomial coefficient; 0 when k < 0 or k > n. Fits uint64 for n <= 64.
std::uint64_t binomial(int n, int k);

/// A k-subset of [n] as a fixed-width bit set. Value type, totally ordered by
/// the lexicographic order of its sorted element list.
struct KSubset {
    Mask mask = 0;

    [[nodiscard]] int cardinality() const { return std::popcount(mask); }
    [[nodiscard]] bool contains(int element) const { return (mask >> (element - 1)) & 1u; }

    /// Elements in increasing numeric order (1-based).
    [[nodiscard]] std::vector<int> elements() const;

    [[nodiscard]] std::string to_string() const; // "{1,2,6}"

    static KSubset from_elements(std::span<const int> elems, int n);

    friend bool operator==(const KSubset&, const KSubset&) = default;
};

/// Lexicographic order on sorted element lists (the canonical vertex order).
/// For equal-size subsets this is decided by the smallest differing element.
inline bool lex_less(const KSubset& a, const KSubset& b) {
    const Mask d = a.mask ^ b.mask;
    if (d == 0) return false;
    return (d & (~d + 1)) & a.mask;
}

inline int intersection_size(const KSubset& a, const KSubset& b) {
    return std::popcount(a.mask & b.mask);
}

/// All k-subsets of [n] in canonical order. Rejects k > n, n > 64, k < 1.
std::vector<KSubset> enumerate_ksubsets(int n, int k);

/// Rank of `s` within the canonical order of k-subsets of [n].
std::uint64_t lex_rank(const KSubset& s, int n, int k);

/// Inverse of lex_rank.
KSubset lex_unrank(std::uint64_t rank, int n, int k);

/// The l smallest elements of `set`; rejects l > |set| or l < 0.
Mask first_elements(Mask set, int l);

} // namespace kneser
