#include "kneser/subset.hpp"

#include <algorithm>
#include <sstream>

namespace kneser {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    // exact at each step: result * (n-k+i) is divisible by i; the widened
    // intermediate keeps C(64,32) in range
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(result);
}

std::vector<int> KSubset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    Mask rest = mask;
    while (rest) {
        out.push_back(std::countr_zero(rest) + 1);
        rest &= rest - 1;
    }
    return out;
}

std::string KSubset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

KSubset KSubset::from_elements(std::span<const int> elems, int n) {
    if (n < 0 || n > kMaxGroundSet) throw ParameterError("ground set size out of range");
    KSubset s;
    for (int e : elems) {
        if (e < 1 || e > n) throw ParameterError("element outside ground set");
        if (s.contains(e)) throw ParameterError("duplicate element");
        s.mask |= Mask{1} << (e - 1);
    }
    return s;
}

std::vector<KSubset> enumerate_ksubsets(int n, int k) {
    if (n < 1 || n > kMaxGroundSet) throw ParameterError("ground set size must be in [1,64]");
    if (k < 1 || k > n) throw ParameterError("subset size must be in [1,n]");
    std::vector<KSubset> out;
    out.reserve(binomial(n, k));
    std::vector<int> elems(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) elems[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(KSubset::from_elements(elems, n));
        // lexicographic successor
        int i = k - 1;
        while (i >= 0 && elems[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++elems[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            elems[static_cast<std::size_t>(j)] = elems[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::uint64_t lex_rank(const KSubset& s, int n, int k) {
    if (s.cardinality() != k) throw ParameterError("subset has wrong cardinality");
    std::uint64_t rank = 0;
    int prev = 0;
    int i = 0;
    for (int e : s.elements()) {
        ++i;
        for (int j = prev + 1; j < e; ++j) rank += binomial(n - j, k - i);
        prev = e;
    }
    return rank;
}

KSubset lex_unrank(std::uint64_t rank, int n, int k) {
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(k));
    int e = 1;
    for (int i = 1; i <= k; ++i) {
        while (true) {
            const std::uint64_t block = binomial(n - e, k - i);
            if (rank < block) break;
            rank -= block;
            ++e;
        }
        elems.push_back(e);
        ++e;
    }
    if (rank != 0) throw ParameterError("rank out of range");
    return KSubset::from_elements(elems, n);
}

Mask first_elements(Mask set, int l) {
    if (l < 0 || l > std::popcount(set)) throw ParameterError("prefix length out of range");
    Mask out = 0;
    for (int i = 0; i < l; ++i) {
        const Mask low = set & (~set + 1);
        out |= low;
        set ^= low;
    }
    return out;
}

} // namespace kneser
