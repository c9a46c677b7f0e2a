#include <doctest.h>

#include <numeric>

#include "sni/suicp.hpp"

using namespace sni;

TEST_SUITE_BEGIN("suicp");

TEST_CASE("problem validation") {
    CHECK_NOTHROW(SniProblem(5, 1, 1));
    CHECK_NOTHROW(SniProblem(4, 1, 0));
    CHECK_NOTHROW(SniProblem(1, 0, 0));
    CHECK_THROWS_AS(SniProblem(3, 1, 2), InvalidProblem);  // U > D
    CHECK_THROWS_AS(SniProblem(3, 2, 1), InvalidProblem);  // U+D = K
    CHECK_THROWS_AS(SniProblem(0, 0, 0), InvalidProblem);
}

TEST_CASE("interference sets") {
    CHECK(interference_set(SniProblem(5, 1, 1), 0) == std::vector<std::uint32_t>{1, 4});
    CHECK(interference_set(SniProblem(13, 4, 1), 1) ==
          std::vector<std::uint32_t>{0, 2, 3, 4, 5});
    std::vector<std::uint32_t> want{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 67, 68, 69};
    CHECK(interference_set(SniProblem(71, 10, 3), 70) == want);
    CHECK(interference_set(SniProblem(4, 0, 0), 2).empty());
}

TEST_CASE("side information is the complement") {
    CHECK(side_info_set(SniProblem(5, 1, 1), 0) == std::vector<std::uint32_t>{2, 3});
    CHECK(side_info_set(SniProblem(13, 4, 1), 3) ==
          std::vector<std::uint32_t>{0, 1, 8, 9, 10, 11, 12});
    CHECK(side_info_set(SniProblem(4, 1, 1), 0) == std::vector<std::uint32_t>{2});
    for (std::uint32_t k = 0; k < 13; ++k) {
        const SniProblem p(13, 4, 1);
        CHECK(side_info_set(p, k).size() == p.K - p.U - p.D - 1);
    }
}

TEST_CASE("feasible set membership") {
    CHECK(in_feasible_set(SniProblem(13, 4, 1), 1, 5));
    CHECK(in_feasible_set(SniProblem(71, 1, 1), 1, 35));  // gcd(2485, 71) = 71 >= 70
    CHECK_FALSE(in_feasible_set(SniProblem(13, 4, 1), 0, 1));
    CHECK_FALSE(in_feasible_set(SniProblem(13, 4, 1), 1, 0));
}

TEST_CASE("minimum rate search reference points") {
    const auto r71 = min_rate_fraction(SniProblem(71, 1, 1));
    CHECK(r71.a == 1);
    CHECK(r71.b == 35);
    CHECK(r71.rate == Rational(71, 35));

    const auto r_deep = min_rate_fraction(SniProblem(71, 10, 3));
    CHECK(r_deep.a == 5);
    CHECK(r_deep.b == 6);
    CHECK(r_deep.rate.decimal4() == "11.8333");

    const auto r_full = min_rate_fraction(SniProblem(71, 44, 23));
    CHECK(r_full.rate == Rational(71));

    const auto r13 = min_rate_fraction(SniProblem(13, 4, 1));
    CHECK(r13.a == 1);
    CHECK(r13.b == 5);
    CHECK(r13.rate == Rational(26, 5));
}

TEST_CASE("search box invariants") {
    for (std::uint32_t K : {7u, 12u, 19u}) {
        for (std::uint32_t D = 0; D < K; ++D)
            for (std::uint32_t U = 0; U <= D && U + D < K; ++U) {
                const SniProblem p(K, D, U);
                const auto rf = min_rate_fraction(p);
                CHECK(in_feasible_set(p, rf.a, rf.b));
                CHECK(rf.b <= K / (U + 1));
                CHECK(rf.rate <= Rational(K));
                CHECK(Rational(D + 1) <= rf.rate);
            }
    }
}

TEST_CASE("independent second scan with swapped loop order agrees for K <= 25") {
    for (std::uint32_t K = 1; K <= 25; ++K)
        for (std::uint32_t D = 0; D < K; ++D)
            for (std::uint32_t U = 0; U <= D && U + D < K; ++U) {
                const SniProblem p(K, D, U);
                const std::uint64_t b_max = K / (U + 1);
                // plain a-major full enumeration, minimum by (ratio, b, a)
                std::uint64_t best_a = 0, best_b = 0;
                bool have = false;
                for (std::uint64_t a = 0; a <= b_max * (K - D - 1); ++a)
                    for (std::uint64_t b = 1; b <= b_max; ++b) {
                        if (a > b * (K - D - 1)) continue;
                        if (!in_feasible_set(p, a, b)) continue;
                        const bool better =
                            !have || a * best_b < best_a * b ||
                            (a * best_b == best_a * b &&
                             (b < best_b || (b == best_b && a < best_a)));
                        if (better) {
                            best_a = a;
                            best_b = b;
                            have = true;
                        }
                    }
                const auto rf = min_rate_fraction(p);
                CHECK(rf.a == best_a);
                CHECK(rf.b == best_b);
            }
}

TEST_CASE("partition parameters") {
    const SniProblem ex(13, 4, 1);
    const auto sc = partition_params(ex, 1, 5);
    CHECK(sc.tau == 13);
    CHECK(sc.t == 5);
    CHECK(sc.gamma == 2);
    CHECK(sc.N == 26);
    CHECK(sc.c == 3);  // 13 - 5*2

    const auto sc71 = partition_params(SniProblem(71, 2, 1), 2, 23);
    CHECK(sc71.t == 23);
    CHECK(sc71.gamma == 1);

    const auto sc5 = partition_params(SniProblem(5, 1, 1), 1, 2);
    CHECK(sc5.tau == 5);
    CHECK(sc5.t == 2);
    CHECK(sc5.gamma == 1);
    CHECK(sc5.L.bits == FieldMatrix::from_rows(PrimeField(2), {{1}, {1}}));

    CHECK_THROWS_AS(partition_params(ex, 0, 1), NotInS);
}

TEST_CASE("partition arithmetic identities") {
    for (std::uint32_t K : {5u, 13u, 20u})
        for (std::uint32_t D = 1; D < K / 2; ++D)
            for (std::uint32_t U = 0; U <= D; ++U) {
                if (U + D >= K) continue;
                const SniProblem p(K, D, U);
                const auto rf = min_rate_fraction(p);
                const auto sc = partition_params(p, rf.a, rf.b);
                CHECK(sc.tau * sc.t == static_cast<std::uint64_t>(K) * sc.b);
                CHECK(sc.tau * sc.gamma == sc.N);
                CHECK(sc.gamma <= sc.t);
                CHECK(Rational(static_cast<std::int64_t>(sc.N), static_cast<std::int64_t>(sc.b)) ==
                      rf.rate);
            }
}

TEST_CASE("partition classes") {
    const SniProblem ex(13, 4, 1);
    const auto sc = partition_params(ex, 1, 5);
    const auto sets = partition_sets(ex, sc);
    REQUIRE(sets.size() == 13);
    CHECK(sets[6] == std::vector<std::uint64_t>{6, 19, 32, 45, 58});
    std::vector<std::uint32_t> msgs;
    for (const auto w : sets[6]) msgs.push_back(static_cast<std::uint32_t>(w / sc.b));
    CHECK(msgs == std::vector<std::uint32_t>{1, 3, 6, 9, 11});

    // the classes partition [0 : Kb-1]
    std::vector<bool> seen(65, false);
    for (const auto& s : sets)
        for (const auto w : s) {
            CHECK_FALSE(seen[w]);
            seen[w] = true;
        }
    for (const bool b : seen) CHECK(b);

    // full-rate boundary: tau = Kb makes every class a singleton
    const SniProblem tiny(4, 2, 1);
    const auto rf = min_rate_fraction(tiny);
    CHECK(rf.rate == Rational(4));
    const auto full = partition_params(tiny, rf.a, rf.b);
    CHECK(full.tau == 4 * full.b);
    for (const auto& s : partition_sets(tiny, full)) CHECK(s.size() == 1);
}

TEST_CASE("scalar padding search") {
    const auto p1 = find_scalar_padding(SniProblem(19, 13, 3));
    REQUIRE(p1.has_value());
    CHECK(p1->a == 1);
    CHECK(p1->b == 0);
    CHECK(p1->length == 15);

    const auto p2 = find_scalar_padding(SniProblem(71, 52, 16));
    REQUIRE(p2.has_value());
    CHECK(p2->a == 1);
    CHECK(p2->b == 0);
    CHECK(p2->length == 54);

    // gcd(K, D+1) >= U+1 short-circuits to (0,0)
    const auto p3 = find_scalar_padding(SniProblem(6, 2, 0));
    REQUIRE(p3.has_value());
    CHECK(p3->a == 0);
    CHECK(p3->b == 0);
    CHECK(p3->length == 3);

    // nothing within a+b <= U+D
    CHECK_FALSE(find_scalar_padding(SniProblem(25, 1, 1)).has_value());

    const auto p4 = find_scalar_padding(SniProblem(71, 44, 23));
    REQUIRE(p4.has_value());
    CHECK(p4->a == 0);
    CHECK(p4->b == 26);
    CHECK(p4->length == 71);
}

TEST_CASE("full rate classes") {
    CHECK(full_rate_class(SniProblem(71, 44, 23)) == 1);
    CHECK(full_rate_class(SniProblem(71, 59, 10)) == 5);
    CHECK_FALSE(full_rate_class(SniProblem(71, 3, 1)).has_value());
    // the interval list has an empty gap at l = 8 with a live class at l = 9
    CHECK(d_interval(71, 8).first > d_interval(71, 8).second);
    CHECK(full_rate_class(SniProblem(71, 63, 6)) == 9);
}

TEST_CASE("full rate class implies rate K") {
    for (std::uint32_t K : {9u, 15u, 22u})
        for (std::uint32_t D = 0; D < K; ++D)
            for (std::uint32_t U = 0; U <= D && U + D < K; ++U) {
                const SniProblem p(K, D, U);
                if (full_rate_class(p)) CHECK(min_rate_fraction(p).rate == Rational(K));
            }
}

TEST_CASE("rate bounds") {
    const auto full = broadcast_rate_bounds(SniProblem(71, 44, 23));
    CHECK(full.lower == 45);
    CHECK(full.l1.rate == Rational(71));
    CHECK(full.l2() == 71);
    CHECK(full.du1 == 68);
    CHECK(full.upper == Rational(68));
    CHECK(full.full_rate == 1);

    const auto pair71 = broadcast_rate_bounds(SniProblem(71, 1, 1));
    CHECK(pair71.upper == Rational(71, 35));

    const auto small = broadcast_rate_bounds(SniProblem(4, 1, 1));
    CHECK(small.upper == Rational(2));
    CHECK(small.du1 == 3);

    // the deep-interference sample: the vector search finds (1,4), rate 213/4,
    // below the scalar candidate 54
    const auto deep = broadcast_rate_bounds(SniProblem(71, 52, 16));
    CHECK(in_feasible_set(SniProblem(71, 52, 16), 1, 4));
    CHECK(deep.l1.rate == Rational(213, 4));
    CHECK(deep.l2() == 54);
    CHECK(deep.du1 == 69);
    CHECK(deep.upper == Rational(213, 4));
}

TEST_CASE("bounds stay within their brackets") {
    for (std::uint32_t K : {6u, 11u, 18u})
        for (std::uint32_t D = 0; D < K; ++D)
            for (std::uint32_t U = 0; U <= D && U + D < K; ++U) {
                const auto rep = broadcast_rate_bounds(SniProblem(K, D, U));
                CHECK(Rational(rep.lower) <= rep.upper);
                CHECK(rep.upper <= Rational(K));
                CHECK(rep.upper <= Rational(rep.du1));
            }
}

TEST_CASE("pair-interference capacity line: l1 = K / floor(K/2) for odd K") {
    for (std::uint32_t K = 5; K <= 71; K += 2) {
        const auto rf = min_rate_fraction(SniProblem(K, 1, 1));
        CHECK(rf.rate == Rational(K, K / 2));
    }
}

TEST_SUITE_END();
