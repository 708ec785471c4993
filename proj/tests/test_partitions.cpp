#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "partident/partitions.hpp"

using namespace partident;

namespace {

// p(0..49), OEIS A000041.
const std::vector<unsigned> kPartitionNumbers = {
    1,     1,     2,     3,     5,     7,     11,    15,    22,    30,
    42,    56,    77,    101,   135,   176,   231,   297,   385,   490,
    627,   792,   1002,  1255,  1575,  1958,  2436,  3010,  3718,  4565,
    5604,  6842,  8349,  10143, 12310, 14883, 17977, 21637, 26015, 31185,
    37338, 44583, 53174, 63261, 75175, 89134, 105558, 124754, 147273, 173525};

std::vector<std::vector<std::uint32_t>> part_lists(std::uint32_t n,
                                                   std::uint32_t min_part) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& p : list_partitions(n, min_part))
        out.push_back(p.parts);
    return out;
}

}  // namespace

TEST_CASE("enumerator golden lists") {
    const std::vector<std::vector<std::uint32_t>> five = {
        {5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
    CHECK(part_lists(5, 1) == five);

    const std::vector<std::vector<std::uint32_t>> six_no_ones = {
        {6}, {4, 2}, {3, 3}, {2, 2, 2}};
    CHECK(part_lists(6, 2) == six_no_ones);

    for (const auto& p : list_partitions(9, 2))
        CHECK(p.valid());

    // n = 0: exactly one empty partition
    const auto empty = list_partitions(0, 1);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].parts.empty());
    CHECK(empty[0].n == 0);
}

TEST_CASE("enumerator output is well-formed") {
    for (std::uint32_t r = 1; r <= 3; ++r)
        for (std::uint32_t n = 0; n <= 15; ++n) {
            std::set<std::vector<std::uint32_t>> seen;
            enumerate_partitions(n, r, [&](const std::vector<std::uint32_t>& parts) {
                std::uint64_t sum = 0;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    CHECK(parts[i] >= r);
                    if (i + 1 < parts.size())
                        CHECK(parts[i] >= parts[i + 1]);
                    sum += parts[i];
                }
                CHECK(sum == n);
                CHECK(seen.insert(parts).second);  // no duplicates
            });
        }
}

TEST_CASE("partition table values") {
    const auto t1 = build_partition_table(1, 10);
    CHECK(t1.count(5) == 7);
    CHECK(t1.count(0) == 1);

    const auto t2 = build_partition_table(2, 10);
    CHECK(t2.count(6) == 4);  // 6, 4+2, 3+3, 2+2+2
    CHECK(t2.count(0) == 1);
    CHECK(t2.count(1) == 0);

    const auto t3 = build_partition_table(3, 10);
    CHECK(t3.count(8) == 3);  // 8, 5+3, 4+4
    CHECK(t3.count(1) == 0);
    CHECK(t3.count(2) == 0);

    CHECK_THROWS_AS(build_partition_table(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(t1.count(11), std::out_of_range);
}

TEST_CASE("partition table counts match the enumerator") {
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const auto table = build_partition_table(r, 25);
        for (std::uint32_t n = 0; n <= 25; ++n) {
            std::uint64_t found = 0;
            enumerate_partitions(n, r, [&](const auto&) { ++found; });
            CHECK(table.count(n) == found);
        }
    }
}

TEST_CASE("restricted counts drop by one partition-number step") {
    // p_2(n) = p(n) - p(n-1)
    const auto t1 = build_partition_table(1, 100);
    const auto t2 = build_partition_table(2, 100);
    for (std::uint32_t n = 1; n <= 100; ++n)
        CHECK(t2.count(n) == t1.count(n) - t1.count(n - 1));
}

TEST_CASE("pentagonal recurrence values") {
    const auto p = partition_count(49);
    REQUIRE(p.size() == 50);
    for (std::size_t n = 0; n < p.size(); ++n)
        CHECK(p[n] == kPartitionNumbers[n]);

    CHECK(p[0] == 1);
    CHECK(p[5] == 7);
    CHECK(p[20] == 627);

    // n = 20 by direct enumeration as well
    std::uint64_t count20 = 0;
    enumerate_partitions(20, 1, [&](const auto&) { ++count20; });
    CHECK(count20 == 627);
}

TEST_CASE("pentagonal recurrence agrees with the DP route") {
    const auto p = partition_count(500);
    const auto t1 = build_partition_table(1, 500);
    for (std::uint32_t n = 0; n <= 500; ++n)
        CHECK(p[n] == t1.count(n));
}

TEST_CASE("total part count closed formula") {
    const auto t1 = build_partition_table(1, 12);
    CHECK(total_part_count(t1, 5, 1) == 12);
    CHECK(total_part_count(t1, 3, 7) == 0);   // no part can exceed n
    CHECK(total_part_count(t1, 0, 4) == 0);

    const auto t2 = build_partition_table(2, 12);
    CHECK(total_part_count(t2, 6, 2) == 4);
    CHECK(total_part_count(t2, 6, 3) == 2);
    CHECK(total_part_count(t2, 6, 4) == 1);
    CHECK(total_part_count(t2, 6, 5) == 0);
    CHECK(total_part_count(t2, 6, 6) == 1);

    const auto t3 = build_partition_table(3, 12);
    CHECK(total_part_count(t3, 8, 4) == 2);  // two 4's in 4+4

    CHECK_THROWS_AS(total_part_count(t2, 6, 1), std::invalid_argument);
    CHECK_THROWS_AS(total_part_count(t2, 13, 2), std::out_of_range);
}

TEST_CASE("oracle part counts") {
    CHECK(total_part_count_oracle(5, 1, 1) == 12);
    CHECK(total_part_count_oracle(6, 5, 2) == 0);
    CHECK(total_part_count_oracle(8, 3, 3) == 1);  // only 5+3 contains a 3

    CHECK_THROWS_AS(total_part_count_oracle(6, 1, 2), std::invalid_argument);
}

TEST_CASE("closed formula equals the enumerator oracle") {
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const auto table = build_partition_table(r, 20);
        for (std::uint32_t n = 0; n <= 20; ++n)
            for (std::uint32_t k = r; k <= n; ++k)
                CHECK(total_part_count(table, n, k) ==
                      total_part_count_oracle(n, k, r));
    }
}

TEST_CASE("distinct parts sum oracle") {
    CHECK(distinct_parts_sum_oracle(5) == 12);  // 1+2+2+2+2+2+1
    CHECK(distinct_parts_sum_oracle(0) == 0);
    CHECK(distinct_parts_sum_oracle(4) == 7);   // 1+2+1+2+1
}

TEST_CASE("ones count equals distinct parts sum") {
    const auto t1 = build_partition_table(1, 20);
    for (std::uint32_t n = 1; n <= 20; ++n)
        CHECK(total_part_count(t1, n, 1) == distinct_parts_sum_oracle(n));
}
