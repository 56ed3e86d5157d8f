#include <catch2/catch_amalgamated.hpp>

#include "cliquecycles/bounds.hpp"

using namespace cliquecycles;

TEST_CASE("binomials: table values and zero convention") {
    REQUIRE(binom(5, 2) == 10);
    REQUIRE(binom(0, 0) == 1);
    REQUIRE(binom(7, 7) == 1);
    REQUIRE(binom(3, 5) == 0);
    REQUIRE(binom(4, -1) == 0);
    REQUIRE(binom(-2, -3) == 0);
    REQUIRE(binom(62, 31) == count_t(465428353255261088ULL));
    REQUIRE_THROWS_AS(binom(121, 1), std::invalid_argument);
}

TEST_CASE("remainder decompositions") {
    const Decomposition dg = decompose(9, 6, DecomposeMode::g);
    REQUIRE(dg.r == 2);
    REQUIRE(dg.t == 1);
    REQUIRE(dg.modulus == 3);

    const Decomposition dp = decompose(7, 5, DecomposeMode::psi);
    REQUIRE(dp.r == 2);
    REQUIRE(dp.t == 0);
    REQUIRE(dp.modulus == 3);

    const Decomposition tight = decompose(5, 4, DecomposeMode::g);
    REQUIRE(tight.r == 3);
    REQUIRE(tight.t == 0);
    REQUIRE(tight.modulus == 1);

    REQUIRE_THROWS_AS(decompose(9, 3, DecomposeMode::g), std::invalid_argument);
    REQUIRE_THROWS_AS(decompose(1, 5, DecomposeMode::g), std::invalid_argument);
    REQUIRE_NOTHROW(decompose(1, 5, DecomposeMode::psi));
}

TEST_CASE("three part bound values") {
    REQUIRE(f_s(10, 8, 2, 2) == 23);
    REQUIRE(f_s(9, 6, 2, 3) == 9);
    REQUIRE(f_s(7, 5, 2, 2) == 11);
    REQUIRE(f_s(7, 5, 1, 2) == 9);
    REQUIRE_THROWS_AS(f_s(7, 8, 2, 2), std::invalid_argument);  // n < k
    REQUIRE_THROWS_AS(f_s(9, 6, 3, 2), std::invalid_argument);  // 2a >= k
    REQUIRE_THROWS_AS(f_s(9, 6, 0, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(f_s(9, 6, 2, 1), std::invalid_argument);
}

TEST_CASE("edge join bound values") {
    REQUIRE(g_s(5, 4, 3) == 3);
    REQUIRE(g_s(6, 5, 2) == 11);
    REQUIRE(g_s(9, 6, 3) == 21);
    REQUIRE(g_s(9, 6, 4) == 10);
    REQUIRE(g_s(9, 6, 5) == 2);
    REQUIRE(g_s(9, 6, 6) == 0);
    REQUIRE_THROWS_AS(g_s(2, 4, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(g_s(9, 3, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(g_s(9, 6, 1), std::invalid_argument);
}

TEST_CASE("hub bound values") {
    REQUIRE(psi_s(7, 5, 3) == 8);
    REQUIRE(psi_s(7, 5, 2) == 12);
    REQUIRE(psi_s(4, 9, 2) == 6);
    REQUIRE_THROWS_AS(psi_s(0, 5, 2), std::invalid_argument);
}

TEST_CASE("bounds degenerate to full clique counts when k exceeds n") {
    // With k > n neither family can spend a whole block, so the bound is the
    // profile of K_n.
    for (int n = 3; n <= 10; ++n) {
        for (int k = n + 1; k <= n + 5; ++k) {
            for (int s = 2; s <= n + 1; ++s) {
                REQUIRE(g_s(n, k, s) == binom(n, s));
                REQUIRE(psi_s(n, k, s) == binom(n, s));
            }
        }
    }
}

TEST_CASE("conjectured bound dominates the proven s = 2 bound") {
    REQUIRE(conjecture_bound(6, 5, 2) == 13);
    REQUIRE(conjecture_bound(5, 4, 2) == 10);
    for (int k = 4; k <= 12; ++k) {
        for (int n = 3; n <= 30; ++n) {
            const count_t weak = conjecture_bound(n, k, 2);
            const count_t strong = g_s(n, k, 2);
            REQUIRE(strong <= weak);
            if (n >= k) REQUIRE(strong < weak);
            if (n <= k - 2) REQUIRE(strong == weak);
            if (n == k - 1) REQUIRE(weak - strong == 1);
        }
        for (int n = 3; n <= 30; ++n)
            for (int s = 3; s <= 8; ++s) REQUIRE(conjecture_bound(n, k, s) == g_s(n, k, s));
    }
}

TEST_CASE("remainder merge inequalities hold on a dense grid") {
    for (int k = 5; k <= 14; ++k) {
        for (int s = 2; s <= 8; ++s)
            for (int t1 = 0; t1 <= k - 3; ++t1)
                for (int t2 = 0; t2 <= k - 3; ++t2) REQUIRE(check_inequality_1(k, s, t1, t2));
        for (int s = 3; s <= 8; ++s)
            for (int t1 = 0; t1 <= k - 4; ++t1)
                for (int t2 = 0; t2 <= k - 4; ++t2) REQUIRE(check_inequality_3(k, s, t1, t2));
    }
    REQUIRE_THROWS_AS(check_inequality_1(4, 2, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(check_inequality_1(6, 1, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(check_inequality_1(6, 2, 4, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(check_inequality_3(6, 2, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(check_inequality_3(6, 3, 3, 0), std::invalid_argument);
}

TEST_CASE("three part maxima stay below the hub bound") {
    for (int k = 5; k <= 20; ++k)
        for (int n = k; n <= 40; ++n)
            for (int s = 2; s <= 10; ++s) REQUIRE(check_proposition(n, k, s));
    REQUIRE_THROWS_AS(check_proposition(4, 5, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(check_proposition(6, 4, 2), std::invalid_argument);
}
