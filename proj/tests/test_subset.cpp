#include <doctest.h>

#include <algorithm>
#include <set>

#include "kneser/hypergraph.hpp"
#include "kneser/params.hpp"
#include "kneser/subset.hpp"

using namespace kneser;

namespace {

std::vector<int> elems(std::initializer_list<int> list) { return {list}; }

KSubset make(std::initializer_list<int> list, int n) {
    const std::vector<int> v{list};
    return KSubset::from_elements(v, n);
}

// Reference enumeration via sorted element vectors, independent of the bitset
// successor loop.
std::vector<std::vector<int>> brute_force_ksubsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    auto go = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        for (int e = next; e <= n; ++e) {
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
        }
    };
    go(go, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(4, 4) == 1);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("ceil_div is exact on integers") {
    CHECK(ceil_div(5, 3) == 2);
    CHECK(ceil_div(6, 3) == 2);
    CHECK(ceil_div(0, 4) == 0);
    CHECK(ceil_div(1, 1) == 1);
    CHECK(ceil_div(-3, 2) == -1);
    CHECK(ceil_div(9, 4) == 3);
}

TEST_CASE("vertex enumeration matches the definition") {
    const auto v32 = enumerate_ksubsets(3, 2);
    REQUIRE(v32.size() == 3);
    CHECK(v32[0] == make({1, 2}, 3));
    CHECK(v32[1] == make({1, 3}, 3));
    CHECK(v32[2] == make({2, 3}, 3));

    const auto v44 = enumerate_ksubsets(4, 4);
    REQUIRE(v44.size() == 1);
    CHECK(v44[0] == make({1, 2, 3, 4}, 4));

    const auto v52 = enumerate_ksubsets(5, 2);
    REQUIRE(v52.size() == 10);
    CHECK(v52.front() == make({1, 2}, 5));
    CHECK(v52.back() == make({4, 5}, 5));

    CHECK_THROWS_AS(enumerate_ksubsets(3, 4), ParameterError);
    CHECK_THROWS_AS(enumerate_ksubsets(65, 2), ParameterError);
}

TEST_CASE("enumeration agrees with brute force and C(n,k)") {
    for (int n = 1; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto got = enumerate_ksubsets(n, k);
            const auto expected = brute_force_ksubsets(n, k);
            REQUIRE(got.size() == binomial(n, k));
            REQUIRE(got.size() == expected.size());
            for (std::size_t i = 0; i < got.size(); ++i)
                CHECK(got[i].elements() == expected[i]);
        }
    }
}

TEST_CASE("rank and unrank invert each other") {
    for (int n : {5, 8, 11}) {
        for (int k : {1, 2, 3}) {
            if (k > n) continue;
            const auto all = enumerate_ksubsets(n, k);
            for (std::size_t i = 0; i < all.size(); ++i) {
                CHECK(lex_rank(all[i], n, k) == i);
                CHECK(lex_unrank(i, n, k) == all[i]);
            }
        }
    }
}

TEST_CASE("lex order on subsets") {
    CHECK(lex_less(make({1, 4}, 5), make({2, 3}, 5)));
    CHECK(!lex_less(make({2, 3}, 5), make({1, 4}, 5)));
    CHECK(lex_less(make({1, 2}, 5), make({1, 3}, 5)));
    CHECK(!lex_less(make({2, 3}, 5), make({2, 3}, 5)));
}

TEST_CASE("enumeration order agrees with lex_less") {
    for (int n : {6, 9})
        for (int k = 1; k <= 3; ++k) {
            const auto all = enumerate_ksubsets(n, k);
            for (std::size_t i = 0; i + 1 < all.size(); ++i) {
                CHECK(lex_less(all[i], all[i + 1]));
                CHECK(!lex_less(all[i + 1], all[i]));
            }
        }
}

TEST_CASE("first_elements takes the numeric prefix") {
    const KSubset x = make({3, 5, 9}, 10);
    CHECK(first_elements(x.mask, 2) == make({3, 5}, 10).mask);
    CHECK(first_elements(x.mask, 0) == 0);
    CHECK(first_elements(x.mask, 3) == x.mask);
    CHECK_THROWS_AS(first_elements(x.mask, 4), ParameterError);
}

TEST_CASE("edge predicate") {
    CHECK(is_edge({make({1, 2}, 5), make({3, 4}, 5)}, 2, 0));
    CHECK(!is_edge({make({1, 2}, 5), make({2, 3}, 5)}, 2, 0));
    CHECK(is_edge({make({1, 2, 3}, 6), make({3, 4, 5}, 6), make({1, 4, 6}, 6)}, 3, 1));
    // wrong arity and duplicates are false, not errors
    CHECK(!is_edge({make({1, 2}, 5)}, 2, 0));
    CHECK(!is_edge({make({1, 2}, 5), make({1, 2}, 5)}, 2, 0));
}

TEST_CASE("edge predicate is permutation invariant") {
    std::vector<KSubset> members{make({1, 2, 3}, 6), make({3, 4, 5}, 6), make({1, 4, 6}, 6)};
    std::sort(members.begin(), members.end(),
              [](const KSubset& a, const KSubset& b) { return a.mask < b.mask; });
    do {
        CHECK(is_edge(members, 3, 1));
        CHECK(!is_edge(members, 3, 0));
    } while (std::next_permutation(members.begin(), members.end(),
                                   [](const KSubset& a, const KSubset& b) { return a.mask < b.mask; }));
}

TEST_CASE("params validation") {
    KneserParams ok{5, 2, 2, 0};
    ok.validate();
    CHECK(ok.bound_applicable());
    CHECK(ok.vertex_count() == 10);
    CHECK(ok.to_string() == "KG^2(5,2,0)");

    CHECK_THROWS_AS((KneserParams{5, 2, 1, 0}.validate()), ParameterError);
    CHECK_THROWS_AS((KneserParams{5, 2, 2, 2}.validate()), ParameterError);
    CHECK_THROWS_AS((KneserParams{2, 3, 2, 0}.validate()), ParameterError);
    CHECK_THROWS_AS((KneserParams{65, 2, 2, 0}.validate()), ParameterError);

    CHECK_FALSE(KneserParams{4, 3, 2, 1}.bound_applicable()); // needs n >= 5
}

TEST_CASE("subset element helpers") {
    const KSubset x = make({2, 4, 7}, 10);
    CHECK(x.cardinality() == 3);
    CHECK(x.contains(4));
    CHECK(!x.contains(3));
    CHECK(x.elements() == elems({2, 4, 7}));
    CHECK(x.to_string() == "{2,4,7}");
    CHECK_THROWS_AS(KSubset::from_elements(elems({0}), 5), ParameterError);
    CHECK_THROWS_AS(KSubset::from_elements(elems({6}), 5), ParameterError);
    CHECK_THROWS_AS(KSubset::from_elements(elems({1, 1}), 5), ParameterError);
}
