#include <doctest.h>

#include <algorithm>

#include "cedf/constructions.hpp"

using namespace cedf;

TEST_CASE("construct_l2 reproduces the worked examples") {
    auto c7 = construct_l2(7);
    CHECK(c7.params.v == 29);
    CHECK(c7.blocks == std::vector<std::vector<i64>>{
                           {0, 1}, {24, 26}, {4, 5}, {16, 18}, {8, 9}, {7, 10}, {13, 25}});

    auto c9 = construct_l2(9);
    CHECK(c9.params.v == 37);
    CHECK(c9.blocks == std::vector<std::vector<i64>>{{0, 1},
                                                     {32, 34},
                                                     {4, 5},
                                                     {28, 30},
                                                     {8, 9},
                                                     {20, 22},
                                                     {12, 13},
                                                     {11, 14},
                                                     {17, 33}});
}

TEST_CASE("construct_l2 small cases") {
    auto c5 = construct_l2(5);
    CHECK(c5.blocks ==
          std::vector<std::vector<i64>>{{0, 1}, {16, 18}, {4, 5}, {3, 6}, {9, 17}});

    auto c3 = construct_l2(3);
    CHECK(c3.params.v == 13);
    CHECK(c3.blocks == std::vector<std::vector<i64>>{{0, 1}, {2, 12}, {5, 9}});
}

TEST_CASE("construct_l2 rejects bad m") {
    CHECK_THROWS_AS(construct_l2(4), std::invalid_argument);
    CHECK_THROWS_AS(construct_l2(1), std::invalid_argument);
    CHECK_THROWS_AS(construct_l2(-3), std::invalid_argument);
}

TEST_CASE("construct_l2 verifies across a sweep") {
    for (int m = 3; m <= 199; m += 2) CHECK(verify(construct_l2(m)).is_valid);
}

TEST_CASE("l2 schedule gap sequence") {
    auto s = l2_schedule(9);
    CHECK(s.t == std::vector<i64>{1, 2, 1, 2, 1, 2, 1, 3, 16});
}

TEST_CASE("construct_m3 reproduces the worked examples") {
    auto c4 = construct_m3(4);
    CHECK(c4.params.v == 49);
    CHECK(c4.blocks ==
          std::vector<std::vector<i64>>{{0, 1, 2, 3}, {8, 21, 26, 39}, {7, 18, 37, 48}});

    auto c6 = construct_m3(6);
    CHECK(c6.params.v == 109);
    CHECK(c6.blocks == std::vector<std::vector<i64>>{{0, 1, 2, 3, 4, 5},
                                                     {12, 31, 50, 57, 76, 95},
                                                     {11, 28, 45, 74, 91, 108}});

    auto c8 = construct_m3(8);
    CHECK(c8.params.v == 193);
    CHECK(c8.blocks == std::vector<std::vector<i64>>{{0, 1, 2, 3, 4, 5, 6, 7},
                                                     {16, 41, 66, 91, 100, 125, 150, 175},
                                                     {15, 38, 61, 84, 123, 146, 169, 192}});
}

TEST_CASE("construct_m3 delegates l=2 and rejects odd l") {
    CHECK(construct_m3(2) == construct_l2(3));
    CHECK_THROWS_AS(construct_m3(3), std::invalid_argument);
    CHECK_THROWS_AS(construct_m3(0), std::invalid_argument);
}

TEST_CASE("construct_m3 verifies across a sweep") {
    for (int l = 2; l <= 60; l += 2) CHECK(verify(construct_m3(l)).is_valid);
}

TEST_CASE("m3 derived parameters") {
    M3Parameters p(2);
    CHECK(p.l == 4);
    CHECK(p.d == 18);
    CHECK(p.v == 49);
    CHECK(p.v == 2 * p.d + 6 * p.k + 1);
    CHECK(mod_reduce(p.d * (p.d + 1) + 1, p.v) == 0);
}

TEST_CASE("check_coset_condition on F_13") {
    CHECK(check_coset_condition(13, 2, 3, 2));
    CHECK(subgroup(mod_pow(2, 2, 13), 13).size() == 6);  // |H| = l*m
    CHECK_THROWS_AS(check_coset_condition(13, 4, 3, 2), std::invalid_argument);  // 4 not primitive
    CHECK_THROWS_AS(check_coset_condition(15, 2, 3, 2), std::invalid_argument);
}

TEST_CASE("construct_prime_field") {
    auto c13 = construct_prime_field(13, 3, 2);
    REQUIRE(c13.has_value());
    CHECK(c13->blocks == std::vector<std::vector<i64>>{{1, 12}, {4, 9}, {3, 10}});
    CHECK(verify(*c13).is_valid);

    auto c29 = construct_prime_field(29, 7, 2);
    REQUIRE(c29.has_value());
    CHECK(verify(*c29).is_valid);

    CHECK_THROWS_WITH_AS(construct_prime_field(9, 2, 2), "unsupported field",
                         std::invalid_argument);
    CHECK_THROWS_AS(construct_prime_field(13, 3, 3), std::invalid_argument);  // 13 != 3*9+1
}

TEST_CASE("decompose_alpha") {
    for (int k : {1, 2, 3, 5, 10}) {
        CHECK(decompose_alpha(0, k) == AlphaDecomposition{0, 0, 0});
        CHECK(decompose_alpha(2 * k - 1, k) == AlphaDecomposition{1, 0, 0});
        CHECK(decompose_alpha(4 * k - 2, k) == AlphaDecomposition{2, 0, 0});
    }
}

TEST_CASE("decompose_alpha reconstructs and respects constraints") {
    for (int k = 1; k <= 20; ++k) {
        for (i64 alpha = -200; alpha <= 200; ++alpha) {
            auto d = decompose_alpha(alpha, k);
            CHECK((2 * static_cast<i64>(k) - 1) * d.a + 2 * d.b + d.eps == alpha);
            CHECK(d.b >= 0);
            CHECK(d.b <= k - 1);
            CHECK((d.eps == 0 || d.eps == 1));
            CHECK_FALSE((d.b == k - 1 && d.eps == 1));
        }
    }
}

TEST_CASE("psi closed values") {
    for (int k : {1, 2, 3, 7, 25}) {
        CHECK(psi(0, k) == 0);
        CHECK(psi(2 * k - 1, k) == -(2 * static_cast<i64>(k) + 1));
        CHECK(psi(4 * k - 2, k) == -(4 * static_cast<i64>(k) + 2));
    }
}

TEST_CASE("psi congruence with -d*alpha") {
    for (int k = 1; k <= 50; ++k) {
        i64 d = 6 * static_cast<i64>(k) * k - 3 * k;
        i64 v = 12 * static_cast<i64>(k) * k + 1;
        for (i64 alpha = -10 * k; alpha <= 10 * k; ++alpha)
            CHECK(mod_reduce(psi(alpha, k), v) == mod_reduce(-d * alpha, v));
    }
}

namespace {

// Closed form clipped to a box. The published solution list contains
// +-(4k, 2k-1), whose first coordinate 4k lies outside [2-4k, 4k-2];
// the brute-force oracle therefore finds the clipped set.
CongruenceSolutionSet clip(CongruenceSolutionSet set, const CongruenceBox& box) {
    std::erase_if(set, [&](const std::pair<i64, i64>& p) {
        return p.first < box.x_lo || p.first > box.x_hi || p.second < box.y_lo ||
               p.second > box.y_hi;
    });
    return set;
}

}  // namespace

TEST_CASE("congruence box oracle k=2") {
    auto sols = solve_congruence_box(2, CongruenceBox::standard(2));
    // brute-forced over the 13x25 grid mod 49: +-{(0,0),(-6,10),(-3,5),(5,8)}
    CongruenceSolutionSet expect = {{-6, 10}, {-5, -8}, {-3, 5}, {0, 0},
                                    {3, -5},  {5, 8},   {6, -10}};
    std::sort(expect.begin(), expect.end());
    CHECK(sols == expect);
    CHECK(sols == clip(expected_standard_solutions(2), CongruenceBox::standard(2)));

    auto shifted = solve_congruence_box(2, CongruenceBox::shifted(2));
    // the shifted box's solutions are the standard ones moved by (-1, d)
    CongruenceSolutionSet moved = sols;
    for (auto& [x, y] : moved) {
        x -= 1;
        y += 18;
    }
    std::sort(moved.begin(), moved.end());
    CHECK(shifted == moved);
}

TEST_CASE("congruence box oracle vs clipped closed form, both boxes") {
    for (int k = 2; k <= 25; ++k) {
        i64 d = 6 * static_cast<i64>(k) * k - 3 * k;
        auto std_box = CongruenceBox::standard(k);
        auto sols = solve_congruence_box(k, std_box);
        CHECK(std::find(sols.begin(), sols.end(), std::pair<i64, i64>{0, 0}) != sols.end());
        CHECK(sols == clip(expected_standard_solutions(k), std_box));
        CHECK(sols.size() == 7);

        auto shifted = solve_congruence_box(k, CongruenceBox::shifted(k));
        CongruenceSolutionSet moved = sols;
        for (auto& [x, y] : moved) {
            x -= 1;
            y += d;
        }
        std::sort(moved.begin(), moved.end());
        CHECK(shifted == moved);
    }
    CHECK_THROWS_AS(solve_congruence_box(1, CongruenceBox::standard(1)), std::invalid_argument);
}

TEST_CASE("existence_query") {
    CHECK(existence_query(21, 5, 2, 1).status == Existence::exists);
    CHECK(existence_query(28, 3, 3, 1).status == Existence::not_exists);
    CHECK(existence_query(49, 3, 4, 1).status == Existence::exists);
    CHECK(existence_query(100, 4, 5, 1).status == Existence::not_exists);  // 4*25 != 99
    CHECK(existence_query(401, 4, 10, 1).status == Existence::unknown);
    CHECK(existence_query(10, 2, 2, 1).status == Existence::not_exists);
    // m, l both odd with the necessary condition satisfied
    CHECK(existence_query(76, 3, 5, 1).status == Existence::not_exists);
}
