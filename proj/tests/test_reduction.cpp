#include <doctest.h>

#include "kneser/bounds.hpp"
#include "kneser/reduction.hpp"
#include "kneser/solver.hpp"

using namespace kneser;

namespace {

KSubset make(std::initializer_list<int> list, int n) {
    const std::vector<int> v{list};
    return KSubset::from_elements(v, n);
}

Coloring mod_coloring(const KneserParams& params, int modulus) {
    Coloring c;
    c.color_count = modulus;
    for (const auto& v : enumerate_ksubsets(params.n, params.k))
        c.colors.push_back((v.elements().front() - 1) % modulus + 1);
    return c;
}

Coloring constant_coloring(const KneserParams& params, int color, int palette) {
    Coloring c;
    c.colors.assign(params.vertex_count(), color);
    c.color_count = palette;
    return c;
}

} // namespace

TEST_CASE("derived intermediate size") {
    CHECK(reduction_subset_size(2, 2, 1, 0) == 3);
    CHECK(reduction_subset_size(2, 3, 2, 0) == 6);
    for (int r1 = 2; r1 <= 4; ++r1)
        for (int t = 1; t <= 8; ++t)
            for (int k = 1; k <= 4; ++k)
                for (int s = 0; s < k; ++s)
                    CHECK(reduction_subset_size(r1, t, k, s) ==
                          (r1 - 1) * (t - 1) + r1 * (k - s));
    CHECK_THROWS_AS(reduction_subset_size(1, 2, 1, 0), ParameterError);
    CHECK_THROWS_AS(reduction_subset_size(2, 0, 1, 0), ParameterError);
}

TEST_CASE("size chains on a consistent plan") {
    // KG^4(9,1,0): bound 3, t = 2, r1 = r2 = 2 gives m = 3
    const auto plan = ReductionPlan::make(2, 2, 2, 1, 0);
    CHECK(plan.m == 3);
    const auto chains = check_size_chains(plan, 9, 1, 0);
    CHECK(chains.identity_ok);
    CHECK(chains.inner_bound_ok);
    CHECK(chains.outer_bound_ok);
    CHECK(chains.all());
}

TEST_CASE("induced color finds the least monochromatic tuple") {
    // base: singletons of [9], c({1}) = c({3}) = 1, c({2}) = 2
    const KneserParams base{9, 1, 2, 0};
    Coloring coloring = constant_coloring(base, 1, 2);
    coloring.colors[1] = 2; // vertex {2}
    const auto got = induced_color(make({1, 2, 3}, 9), 9, 1, 0, 2, coloring);
    CHECK(got.color == 1);
    REQUIRE(got.members.size() == 2);
    CHECK(got.members[0] == make({1}, 9));
    CHECK(got.members[1] == make({3}, 9));
}

TEST_CASE("induced color with one color packs disjoint subsets greedily") {
    const KneserParams base{8, 2, 2, 0};
    const auto got = induced_color(make({1, 2, 3, 4}, 8), 8, 2, 0, 2,
                                   constant_coloring(base, 1, 1));
    CHECK(got.color == 1);
    REQUIRE(got.members.size() == 2);
    CHECK(got.members[0] == make({1, 2}, 8));
    CHECK(got.members[1] == make({3, 4}, 8));
}

TEST_CASE("induced color on a 3-colored 6-set") {
    // chi(KG^2(6,2,0)) = 4 > 3, so any 3-coloring of the 2-subsets of a 6-set
    // leaves a monochromatic disjoint pair
    const KneserParams base{6, 2, 2, 0};
    const auto solved = exact_chromatic(base);
    REQUIRE(solved.chi == 4);
    Coloring squeezed = *solved.witness;
    for (auto& c : squeezed.colors) c = std::min(c, 3);
    squeezed.color_count = 3;
    const auto got = induced_color(make({1, 2, 3, 4, 5, 6}, 6), 6, 2, 0, 2, squeezed);
    CHECK(got.members.size() == 2);
    CHECK(intersection_size(got.members[0], got.members[1]) == 0);
}

TEST_CASE("structural error when the hypothesis is violated") {
    // two disjoint singletons of distinct colors inside a 2-set: no edge
    const KneserParams base{9, 1, 2, 0};
    CHECK_THROWS_AS(induced_color(make({1, 2}, 9), 9, 1, 0, 2, mod_coloring(base, 2)),
                    StructuralError);
}

TEST_CASE("extraction on KG^4(9,1,0) with the parity coloring") {
    const KneserParams params{9, 1, 4, 0};
    const auto report = extract_witness(params, 2, 2, mod_coloring(params, 2), 2);
    CHECK(report.verified);
    CHECK(report.edge.members.size() == 4);
    CHECK(verify_witness(params, mod_coloring(params, 2), report.edge));
    CHECK(report.parents.size() == report.edge.members.size());
}

TEST_CASE("extraction rejects t at or above the bound") {
    const KneserParams params{9, 1, 4, 0};
    // mod-3 coloring uses t = 3 = bound, which is not strictly below it
    CHECK_THROWS_AS(extract_witness(params, 2, 2, mod_coloring(params, 3), 3), ParameterError);
}

TEST_CASE("extraction on KG^4(13,1,0) with three colors") {
    const KneserParams params{13, 1, 4, 0};
    const auto coloring = mod_coloring(params, 3);
    const auto report = extract_witness(params, 2, 2, coloring, 3);
    CHECK(report.verified);
    CHECK(report.edge.members.size() == 4);
    CHECK(verify_witness(params, coloring, report.edge));
}

TEST_CASE("extraction through the general k >= 2 machinery") {
    // KG^4(8,2,0): bound = ceil(4/3) = 2, t = 1, m = 4
    const KneserParams params{8, 2, 4, 0};
    const auto coloring = constant_coloring(params, 1, 1);
    const auto report = extract_witness(params, 2, 2, coloring, 1);
    CHECK(report.m == 4);
    CHECK(report.verified);
    REQUIRE(report.edge.members.size() == 4);
    CHECK(verify_witness(params, coloring, report.edge));
    // members of one parent stay inside it; parents pairwise intersect in <= s
    for (std::size_t i = 0; i < report.edge.members.size(); ++i)
        CHECK((report.edge.members[i].mask & ~report.parents[i].mask) == 0);
    for (std::size_t i = 0; i < report.parents.size(); ++i)
        for (std::size_t j = i + 1; j < report.parents.size(); ++j)
            if (report.parents[i].mask != report.parents[j].mask)
                CHECK(intersection_size(report.parents[i], report.parents[j]) <= params.s);
}

TEST_CASE("extraction at arity six bottoms out at the prime factor") {
    // KG^6(13,1,0): bound = ceil(13/5) = 3, t = 2
    const KneserParams params{13, 1, 6, 0};
    const auto coloring = mod_coloring(params, 2);
    const auto report = extract_witness(params, 2, 3, coloring, 2);
    CHECK(report.verified);
    CHECK(report.edge.members.size() == 6);
}

TEST_CASE("witness verification rejects broken edges") {
    const KneserParams params{9, 1, 4, 0};
    const auto coloring = mod_coloring(params, 2);
    const auto report = extract_witness(params, 2, 2, coloring, 2);
    CHECK(verify_witness(params, coloring, report.edge));

    Edge two_colors = report.edge;
    two_colors.members[0] = make({2}, 9); // parity flips, two colors now
    CHECK(!verify_witness(params, coloring, two_colors));

    Edge wrong_arity = report.edge;
    wrong_arity.members.pop_back();
    CHECK(!verify_witness(params, coloring, wrong_arity));

    // an r-tuple with an intersection of size s+1
    const KneserParams tight{8, 2, 4, 0};
    Coloring flat = constant_coloring(tight, 1, 1);
    Edge overlapping;
    overlapping.members = {make({1, 2}, 8), make({1, 3}, 8), make({4, 5}, 8), make({6, 7}, 8)};
    CHECK(!verify_witness(tight, flat, overlapping)); // {1,2} meets {1,3} in s+1 elements
}

TEST_CASE("no structural errors below the bound across the desk envelope") {
    // Every extraction with t strictly below the lower bound either succeeds
    // with a verified witness or is rejected up front as outside the size
    // regime (ParameterError); a StructuralError would mean the reduction
    // lost an edge it guarantees.
    std::size_t runs = 0, rejected = 0;
    for (int r : {4, 6})
        for (int k = 1; k <= 2; ++k)
            for (int s = 0; s <= 1 && s < k; ++s)
                for (int n = std::max(k, r * (k - 1) + 1); n <= 15; ++n) {
                    const KneserParams params{n, k, r, s};
                    if (!params.bound_applicable()) continue;
                    const int bound = lower_bound_general(params);
                    const int r1 = 2, r2 = r / 2;
                    for (int t = 1; t < bound; ++t) {
                        ++runs;
                        try {
                            const auto report =
                                extract_witness(params, r1, r2, mod_coloring(params, t), t);
                            CHECK(report.verified);
                            CHECK(verify_witness(params, mod_coloring(params, t), report.edge));
                        } catch (const ParameterError&) {
                            ++rejected;
                            // only the broken-size-chain corner may be rejected
                            const auto plan = ReductionPlan::make(r1, r2, t, k, s);
                            CHECK(!check_size_chains(plan, n, k, s).all());
                            CHECK(t * (r1 - 1) < r1 * s);
                        }
                    }
                }
    CHECK(runs > 20);
    CHECK(rejected < runs);
}

TEST_CASE("the envelope bounds the reduction") {
    const KneserParams params{16, 1, 4, 0};
    CHECK_THROWS_AS(extract_witness(params, 2, 2, mod_coloring(params, 2), 2), BudgetError);
    const KneserParams wrong_r{9, 1, 3, 0};
    CHECK_THROWS_AS(extract_witness(wrong_r, 3, 1, mod_coloring(wrong_r, 2), 2), BudgetError);
}

TEST_CASE("witness report serializes") {
    const KneserParams params{9, 1, 4, 0};
    const auto report = extract_witness(params, 2, 2, mod_coloring(params, 2), 2);
    const std::string json = report.to_json();
    CHECK(json.find("\"checks\": true") != std::string::npos);
    CHECK(json.find("\"r1\": 2") != std::string::npos);
}
