#include <doctest.h>

#include "kneser/bounds.hpp"

using namespace kneser;

TEST_CASE("general lower bound values") {
    CHECK(lower_bound_general({6, 3, 2, 1}) == 4);
    CHECK(lower_bound_general({5, 2, 2, 0}) == 3);
    CHECK(lower_bound_general({9, 1, 4, 0}) == 3);
    // (2N, N, 2, s) evaluates to 2s+2
    for (int N = 2; N <= 6; ++N)
        for (int s = 0; s < N; ++s)
            CHECK(lower_bound_general({2 * N, N, 2, s}) == 2 * s + 2);
    CHECK_THROWS_AS(lower_bound_general({4, 3, 2, 1}), ParameterError); // n < r(k-1)+1
}

TEST_CASE("classical s=0 bound") {
    CHECK(lower_bound_afl({6, 2, 2, 0}) == 4);
    CHECK(lower_bound_afl({7, 2, 3, 0}) == 2);
    for (int r = 2; r <= 5; ++r)
        for (int k = 2; k <= 4; ++k)
            CHECK(lower_bound_afl({r * k, k, r, 0}) == 2);
    CHECK_THROWS_AS(lower_bound_afl({6, 3, 2, 1}), ParameterError);
    CHECK_THROWS_AS(lower_bound_afl({5, 3, 2, 0}), ParameterError); // n < rk
}

TEST_CASE("classical bound agrees with the general one at s=0") {
    for (int r = 2; r <= 4; ++r)
        for (int k = 1; k <= 4; ++k)
            for (int n = r * k; n <= r * k + 9 && n <= 40; ++n)
                CHECK(lower_bound_afl({n, k, r, 0}) == lower_bound_general({n, k, r, 0}));
}

TEST_CASE("padded-route bound values") {
    CHECK(lower_bound_padded({6, 3, 2, 1}) == 3);
    CHECK(lower_bound_padded({8, 3, 2, 1}) == 5);
    for (int N = 2; N <= 6; ++N)
        for (int s = 0; s < N; ++s)
            CHECK(lower_bound_padded({2 * N, N, 2, s}) == s + 2);
    // s = 0 pads by nothing
    for (int n = 6; n <= 10; ++n) CHECK(lower_bound_padded({n, 2, 2, 0}) == lower_bound_afl({n, 2, 2, 0}));
    CHECK_THROWS_AS(lower_bound_padded({3, 2, 2, 0}), ParameterError); // n-s < r(k-s)
}

TEST_CASE("general bound dominates the padded route on a grid") {
    for (int r = 2; r <= 4; ++r)
        for (int k = 1; k <= 4; ++k)
            for (int s = 0; s < k; ++s)
                for (int n = r * (k - 1) + 1; n <= 24; ++n) {
                    const KneserParams params{n, k, r, s};
                    if (n - s < r * (k - s)) continue;
                    CHECK(lower_bound_general(params) >= lower_bound_padded(params));
                }
}

TEST_CASE("general bound is monotone in each parameter") {
    for (int r = 2; r <= 4; ++r)
        for (int k = 1; k <= 4; ++k)
            for (int s = 0; s < k; ++s)
                for (int n = r * (k - 1) + 1; n <= 20; ++n) {
                    const int base = lower_bound_general({n, k, r, s});
                    if (n + 1 <= 64) CHECK(lower_bound_general({n + 1, k, r, s}) >= base);
                    if (s + 1 < k) CHECK(lower_bound_general({n, k, r, s + 1}) >= base);
                    if (k + 1 <= n && n >= r * k + 1 && s < k)
                        CHECK(lower_bound_general({n, k + 1, r, s}) <= base);
                }
}

TEST_CASE("compare_bounds fills formulas") {
    const BoundReport report = compare_bounds({6, 3, 2, 1}, std::nullopt);
    CHECK(report.theorem1 == 4);
    CHECK(!report.afl_eq1.has_value());
    REQUIRE(report.hom_eq3.has_value());
    CHECK(*report.hom_eq3 == 3);
    CHECK(!report.exact_chi.has_value());
    CHECK(report.solver_status.empty());
}

TEST_CASE("compare_bounds with solver: tight and non-tight cases") {
    const BoundReport petersen = compare_bounds({5, 2, 2, 0}, SolveBudget{});
    CHECK(petersen.theorem1 == 3);
    REQUIRE(petersen.afl_eq1.has_value());
    CHECK(*petersen.afl_eq1 == 3);
    REQUIRE(petersen.exact_chi.has_value());
    CHECK(*petersen.exact_chi == 3);
    CHECK(petersen.tight == true);

    const BoundReport complete = compare_bounds({4, 2, 2, 1}, SolveBudget{});
    CHECK(complete.theorem1 == 4);
    REQUIRE(complete.exact_chi.has_value());
    CHECK(*complete.exact_chi == 6);
    CHECK(complete.tight == false);
}

TEST_CASE("budget exhaustion leaves exact_chi absent") {
    SolveBudget tiny;
    tiny.max_nodes = 1;
    const BoundReport report = compare_bounds({6, 2, 2, 0}, tiny);
    CHECK(!report.exact_chi.has_value());
    CHECK(report.solver_status == "budget_exceeded");
}

TEST_CASE("report serialization") {
    const BoundReport report = compare_bounds({6, 3, 2, 1}, std::nullopt);
    const std::string json = report.to_json();
    CHECK(json.find("\"theorem1\":4") != std::string::npos);
    CHECK(json.find("\"hom_eq3\":3") != std::string::npos);
    CHECK(json.find("\"exact_chi\":null") != std::string::npos);
    CHECK(BoundReport::csv_header() == "n,k,r,s,theorem1,afl_eq1,hom_eq3,exact_chi,tight,solver_status");
    CHECK(report.csv_row() == "6,3,2,1,4,,3,,,");
}
