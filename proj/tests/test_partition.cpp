#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oracle.hpp"
#include "subsumlab/partition.hpp"

using namespace subsumlab;

namespace {

std::vector<Partition> drain(int n, const PartitionClass& cls) {
    PartitionStream stream(n, cls);
    std::vector<Partition> out;
    Partition p;
    while (stream.next(p)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("partition class parsing") {
    CHECK(PartitionClass::parse("unrestricted").cap == 0);
    CHECK(PartitionClass::parse("distinct").cap == 1);
    CHECK(PartitionClass::parse("kreduced:1").cap == 1);
    CHECK(PartitionClass::parse("kreduced:2").cap == 2);
    CHECK(PartitionClass::parse("kreduced:17").cap == 17);
    CHECK(PartitionClass::parse("unrestricted").name() == "unrestricted");
    CHECK(PartitionClass::parse("kreduced:1").name() == "distinct");
    CHECK(PartitionClass::parse("distinct").name() == "distinct");
    CHECK(PartitionClass::parse("kreduced:3").name() == "kreduced:3");
    CHECK(PartitionClass::parse("distinct") == PartitionClass::parse("kreduced:1"));
    CHECK_THROWS_AS(PartitionClass::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(PartitionClass::parse("kreduced:0"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionClass::parse("kreduced:"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionClass::parse("kreduced:x"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionClass::parse("kreduced:-1"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionClass::parse("Distinct"), std::invalid_argument);
    CHECK_THROWS_AS(PartitionClass::parse("odd"), std::invalid_argument);
}

TEST_CASE("enumeration order for small cases") {
    // Canonical order: non-decreasing parts, lexicographic on the part vector.
    CHECK(drain(4, PartitionClass{0}) ==
          std::vector<Partition>{{1, 1, 1, 1}, {1, 1, 2}, {1, 3}, {2, 2}, {4}});
    CHECK(drain(5, PartitionClass{1}) ==
          std::vector<Partition>{{1, 4}, {2, 3}, {5}});
    CHECK(drain(4, PartitionClass{2}) ==
          std::vector<Partition>{{1, 1, 2}, {1, 3}, {2, 2}, {4}});
    CHECK(drain(0, PartitionClass{0}) == std::vector<Partition>{{}});
    CHECK(drain(1, PartitionClass{0}) == std::vector<Partition>{{1}});
}

TEST_CASE("stream agrees with the recursive oracle") {
    for (int cap : {0, 1, 2, 3}) {
        for (int n = 0; n <= 18; ++n) {
            CAPTURE(cap);
            CAPTURE(n);
            CHECK(drain(n, PartitionClass{cap}) == oracle::partitions(n, cap));
        }
    }
}

TEST_CASE("stream rejects negative n") {
    CHECK_THROWS_AS(PartitionStream(-1, PartitionClass{0}), std::invalid_argument);
    CHECK_THROWS_AS(count_partitions(-1, PartitionClass{0}), std::invalid_argument);
}

TEST_CASE("exact counts match known values") {
    // p(0..30), p(40), p(50), p(60), p(64), p(100): standard values
    // of the partition function, cross-checked against the enumeration below.
    const long long p[] = {1,   1,   2,    3,    5,    7,    11,   15,  22,  30, 42,
                           56,  77,  101,  135,  176,  231,  297,  385, 490, 627,
                           792, 1002, 1255, 1575, 1958, 2436, 3010, 3718, 4565, 5604};
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(count_partitions(n, PartitionClass{0}) == p[n]);
    }
    CHECK(count_partitions(40, PartitionClass{0}) == 37338);
    CHECK(count_partitions(50, PartitionClass{0}) == 204226);
    CHECK(count_partitions(60, PartitionClass{0}) == 966467);
    CHECK(count_partitions(64, PartitionClass{0}) == 1741630);
    CHECK(count_partitions(100, PartitionClass{0}) == 190569292);

    // q(0..20): partitions into distinct parts.
    const long long q[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10,
                           12, 15, 18, 22, 27, 32, 38, 46, 54, 64};
    for (int n = 0; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(count_partitions(n, PartitionClass{1}) == q[n]);
    }

    CHECK(count_partitions(5, PartitionClass{0}) == 7);
    CHECK(count_partitions(5, PartitionClass{2}) == 5);
    CHECK(count_partitions(16, PartitionClass{0}) == 231);
    CHECK(count_partitions(16, PartitionClass{1}) == 32);

    // a 2-reduced spot value, cross-checked by enumeration below.
    CHECK(count_partitions(10, PartitionClass{2}) ==
          BigInt(oracle::partitions(10, 2).size()));
}

TEST_CASE("counts agree with enumeration across classes") {
    for (int cap : {0, 1, 2, 5}) {
        for (int n = 0; n <= 25; ++n) {
            CAPTURE(cap);
            CAPTURE(n);
            PartitionStream stream(n, PartitionClass{cap});
            Partition p;
            long long seen = 0;
            while (stream.next(p)) ++seen;
            CHECK(count_partitions(n, PartitionClass{cap}) == seen);
        }
    }
}

TEST_CASE("multiplicity cap of n is the same as unrestricted") {
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(count_partitions(n, PartitionClass{n}) ==
              count_partitions(n, PartitionClass{0}));
    }
}

TEST_CASE("count table matches point queries") {
    const CountTable table(PartitionClass{0}, 40);
    CHECK(table.n_max() == 40);
    CHECK(table.cls() == PartitionClass{0});
    for (int n = 0; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(table.at(n) == count_partitions(n, PartitionClass{0}));
    }
    CHECK_THROWS_AS(table.at(41), std::out_of_range);
    CHECK_THROWS_AS(table.at(-1), std::out_of_range);

    const CountTable distinct(PartitionClass{1}, 16);
    CHECK(distinct.at(16) == 32);
}

TEST_CASE("asymptotic log counts") {
    using std::numbers::pi;
    // [PAPER-FORMULA] leading order ln p(n) = pi*sqrt(2n/3), ln q(n) = pi*sqrt(n/3).
    CHECK(asymptotic_log_count(100, PartitionClass{0}) ==
          doctest::Approx(pi * std::sqrt(200.0 / 3.0)).epsilon(1e-14));
    CHECK(asymptotic_log_count(100, PartitionClass{1}) ==
          doctest::Approx(pi * std::sqrt(100.0 / 3.0)).epsilon(1e-14));
    CHECK(asymptotic_log_count(1, PartitionClass{0}) ==
          doctest::Approx(pi * std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(asymptotic_log_count(0, PartitionClass{0}), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_log_count(-3, PartitionClass{0}), std::invalid_argument);
    // No leading constant is established for caps >= 2.
    CHECK_THROWS_AS(asymptotic_log_count(100, PartitionClass{2}), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_log_count(100, PartitionClass{7}), std::invalid_argument);
}

TEST_CASE("asymptotic formula tracks the exact count") {
    // ln p(n) / (pi*sqrt(2n/3)) should approach 1 from below; at n = 100 the
    // ratio is already above 0.74 and monotone increasing over this range.
    double previous = 0.0;
    for (int n = 20; n <= 100; n += 20) {
        const double ratio = log_big(count_partitions(n, PartitionClass{0})) /
                             asymptotic_log_count(n, PartitionClass{0});
        CHECK(ratio > previous);
        CHECK(ratio < 1.0);
        previous = ratio;
    }
    CHECK(previous > 0.74);
}
