#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "wbr/combinat.hpp"

using namespace wbr;

namespace {
// Independent partition-count oracle: p(n) by the classic recurrence
// p(n,k) = p(n-k,k) + p(n,k+1).
long long partition_count_oracle(int n, int min_part = 1) {
    if (n == 0) return 1;
    if (min_part > n) return 0;
    return partition_count_oracle(n - min_part, min_part) + partition_count_oracle(n, min_part + 1);
}

// Hook length formula as a cross-check for standard tableau counts.
long long hook_count(const Partition& p) {
    int n = p.size();
    Partition c = p.conjugate();
    long long num = factorial(n);
    long long den = 1;
    for (size_t i = 0; i < p.parts.size(); ++i)
        for (int j = 0; j < p.parts[i]; ++j) {
            int hook = (p.parts[i] - j - 1) + (c.parts[j] - static_cast<int>(i) - 1) + 1;
            den *= hook;
        }
    return num / den;
}
}  // namespace

TEST_CASE("partitions_of ordering and counts") {
    auto p0 = partitions_of(0);
    CHECK(p0.size() == 1);
    CHECK(p0[0].parts.empty());
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts == std::vector<int>{3});
    CHECK(p3[1].parts == std::vector<int>{2, 1});
    CHECK(p3[2].parts == std::vector<int>{1, 1, 1});
    CHECK(partitions_of(8).size() == static_cast<size_t>(partition_count_oracle(8)));
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition({1, 1, 1}), Partition({3})));
    CHECK(!dominates(Partition({2, 2}), Partition({3, 1})));
    // incomparable pair
    Partition a({4, 1, 1}), b({3, 3});
    CHECK(!dominates(a, b));
    CHECK(!dominates(b, a));
    CHECK_THROWS_AS((void)dominates(Partition({2}), Partition({3})), SizeMismatch);
}

TEST_CASE("dominance is a partial order and conjugation reverses it") {
    for (int n = 1; n <= 8; ++n) {
        auto parts = partitions_of(n);
        for (const auto& x : parts) CHECK(dominates(x, x));
        for (const auto& x : parts)
            for (const auto& y : parts) {
                if (dominates(x, y) && dominates(y, x)) CHECK(x == y);
                CHECK(dominates(x, y) == dominates(y.conjugate(), x.conjugate()));
                for (const auto& z : parts)
                    if (dominates(x, y) && dominates(y, z)) CHECK(dominates(x, z));
            }
    }
}

TEST_CASE("conjugate") {
    CHECK(Partition({5}).conjugate().parts == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(Partition({2, 1}).conjugate().parts == std::vector<int>{2, 1});
    CHECK(Partition({4, 2, 1}).conjugate().parts == std::vector<int>{3, 2, 1, 1});
    for (const auto& p : partitions_of(7)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("p-regularity") {
    CHECK(!is_p_regular(Partition({1, 1}), 2));
    CHECK(is_p_regular(Partition({2, 1}), 2));
    CHECK(!is_p_regular(Partition({3, 3, 3, 1}), 3));
    CHECK(is_p_regular(Partition{}, 5));
}

TEST_CASE("tabloids") {
    CHECK(tabloids({4}).size() == 1);
    CHECK(tabloids({1, 1}).size() == 2);
    CHECK(tabloids({2, 1}).size() == 3);
    // multinomial oracle
    auto count = [](const std::vector<int>& shape) {
        int n = std::accumulate(shape.begin(), shape.end(), 0);
        long long c = factorial(n);
        for (int p : shape) c /= factorial(p);
        return c;
    };
    for (std::vector<int> shape : {std::vector<int>{2, 2}, {3, 1}, {2, 1, 1}, {0, 2, 1}})
        CHECK(tabloids(shape).size() == static_cast<size_t>(count(shape)));
    // deterministic order, canonical rows
    auto t = tabloids({2, 1});
    CHECK(t[0].rows == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(t[1].rows == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(t[2].rows == std::vector<std::vector<int>>{{2, 3}, {1}});
}

TEST_CASE("standard tableaux counts") {
    CHECK(standard_tableaux_count(Partition({4})) == 1);
    CHECK(standard_tableaux_count(Partition({2, 1})) == 2);
    CHECK(standard_tableaux_count(Partition({2, 2})) == 2);
    for (int n = 1; n <= 7; ++n) {
        long long sum = 0;
        for (const auto& p : partitions_of(n)) {
            long long c = standard_tableaux_count(p);
            CHECK(c == hook_count(p));
            sum += c * c;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("partition and bipartition text") {
    CHECK(Partition({3, 1}).to_string() == "(3,1)");
    CHECK(Partition{}.to_string() == "()");
    CHECK(Partition::parse("(3,1)") == Partition({3, 1}));
    CHECK(Partition::parse("()") == Partition{});
    CHECK_THROWS_AS(Partition::parse("(1,3)"), ParseError);
    Bipartition b{Partition({2, 1}), Partition({1})};
    CHECK(Bipartition::parse(b.to_string()) == b);
}
