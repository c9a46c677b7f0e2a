#include <doctest.h>

#include "sni/harness.hpp"

using namespace sni;

TEST_SUITE_BEGIN("harness");

TEST_CASE("worked 13-receiver scheme verifies with buffer bound 2") {
    const SniProblem p(13, 4, 1);
    const auto rep = verify_partitioned_scheme(p, partition_params(p, 1, 5));
    CHECK(rep.verified());
    CHECK(rep.basis_checked == 65);
    CHECK(rep.decodes == 65 * 13 * 5);
    CHECK(rep.max_code_symbols_touched == 2);
    CHECK_FALSE(rep.instantly_decodable());
}

TEST_CASE("an instantly decodable scheme reports buffer bound 1") {
    const SniProblem p(5, 1, 1);
    const auto rep = verify_partitioned_scheme(p, partition_params(p, 1, 2));
    CHECK(rep.verified());
    CHECK(rep.max_code_symbols_touched == 1);
    CHECK(rep.instantly_decodable());
}

TEST_CASE("scalar schemes verify") {
    const auto padded = verify_scalar_padded_scheme(SniProblem(19, 13, 3), {1, 0, 15});
    CHECK(padded.verified());

    const auto du = verify_scalar_du_scheme(SniProblem(4, 1, 1));
    CHECK(du.verified());
    CHECK(du.max_code_symbols_touched == 3);
}

TEST_CASE("a sabotaged class matrix is caught") {
    const SniProblem p(13, 4, 1);
    auto scheme = partition_params(p, 1, 5);
    scheme.L.bits.set(4, 0, 0);  // break one entry of the 5x2 block
    const auto rep = verify_partitioned_scheme(p, scheme);
    CHECK_FALSE(rep.verified());
    CHECK(rep.failures.size() > 0);
}

TEST_CASE("rate table reference rows") {
    const auto rows = rate_table(71, 10);
    REQUIRE(rows.size() == 20);

    const auto find_row = [&](std::uint32_t D, std::uint32_t u) -> const RateTableRow& {
        for (const auto& r : rows)
            if (r.D == D && r.u_lo <= u && u <= r.u_hi) return r;
        throw std::out_of_range("row");
    };

    const auto& r51 = find_row(5, 3);
    CHECK(r51.u_lo == 3);
    CHECK(r51.u_hi == 5);
    CHECK(r51.a == 5);
    CHECK(r51.b == 11);
    CHECK(r51.rate == "6.4545");
    CHECK(r51.t == 11);
    CHECK(r51.gamma == 1);
    CHECK(r51.instant);

    const auto& r83 = find_row(8, 3);
    CHECK(r83.a == 7);
    CHECK(r83.b == 15);
    CHECK(r83.rate == "9.4666");
    CHECK(r83.t == 15);
    CHECK(r83.gamma == 2);
    CHECK_FALSE(r83.instant);

    const auto& r71 = find_row(7, 1);
    CHECK(r71.a == 4);
    CHECK(r71.b == 35);
    CHECK(r71.t == 35);
    CHECK(r71.gamma == 4);

    // instant flag matches gamma == 1 structurally
    for (const auto& r : rows) CHECK(r.instant == (r.gamma == 1));
}

TEST_CASE("rate table matches the committed golden copy") {
    const auto csv = rate_table_csv(rate_table(71, 10));
    const auto want = read_text_file(std::string(SNI_DATA_DIR) + "/golden/rate_table_k71.csv");
    const auto diff = first_diff(csv, want);
    CHECK_FALSE(diff.has_value());
    if (diff) MESSAGE(*diff);
}

TEST_CASE("interval table") {
    const auto rows = class_intervals(71, 5);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].d_lo == 35); CHECK(rows[0].d_hi == 46);
    CHECK(rows[0].u_lo == 23); CHECK(rows[0].u_hi == 34);
    CHECK(rows[1].d_lo == 47); CHECK(rows[1].d_hi == 52);
    CHECK(rows[1].u_lo == 17); CHECK(rows[1].u_hi == 22);
    CHECK(rows[4].d_lo == 59); CHECK(rows[4].d_hi == 59);
    CHECK(rows[4].u_lo == 10); CHECK(rows[4].u_hi == 10);

    const auto want =
        read_text_file(std::string(SNI_DATA_DIR) + "/golden/class_intervals_k71.csv");
    CHECK_FALSE(first_diff(class_intervals_csv(rows), want).has_value());
}

TEST_CASE("bounds sample table") {
    const auto rows = bounds_table(71);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].a == 2);
    CHECK(rows[0].b == 11);
    CHECK(rows[0].rate == "45.1818");
    CHECK(rows[0].remark == "D in D_l; U not in U_l");
    CHECK(rows[2].rate == "71.0000");
    CHECK(rows[2].remark == "D in D_l; U in U_l");
    CHECK(rows[6].rate == "35.5000");
    CHECK(rows[6].remark == "D not in D_l; U in U_l");
    CHECK(rows[9].rate == "4.0571");
    CHECK(rows[9].remark == "D not in D_l; U not in U_l");

    const auto want = read_text_file(std::string(SNI_DATA_DIR) + "/golden/bounds_table_k71.csv");
    CHECK_FALSE(first_diff(bounds_table_csv(rows), want).has_value());

    CHECK_THROWS_AS(bounds_table(70), InvalidProblem);
}

TEST_CASE("property sweep stays clean at small sizes") {
    const auto rep = sweep_air_properties(12);
    CHECK(rep.checked == 12 * 13 / 2);
    CHECK(rep.clean());
}

TEST_CASE("diff helper pinpoints the first mismatch") {
    CHECK_FALSE(first_diff("a\nb\n", "a\nb\n").has_value());
    const auto d1 = first_diff("a\nx\n", "a\nb\n");
    REQUIRE(d1.has_value());
    CHECK(d1->find("line 2") != std::string::npos);
    CHECK(first_diff("a\n", "a\nb\n").has_value());
    CHECK(first_diff("a\nb\n", "a\n").has_value());
}

TEST_SUITE_END();
