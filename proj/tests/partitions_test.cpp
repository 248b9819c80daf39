#include <doctest.h>

#include <map>
#include <set>

#include "mdt/dtgen.hpp"
#include "mdt/partitions.hpp"

using namespace mdt;

namespace {

Box box(int x, int y, int z) {
    Box b{};
    b[0] = static_cast<std::int16_t>(x);
    b[1] = static_cast<std::int16_t>(y);
    b[2] = static_cast<std::int16_t>(z);
    return b;
}

}  // namespace

TEST_CASE("small counts") {
    CHECK(count_dpartitions(1, 0) == 1);
    CHECK(count_dpartitions(4, 0) == 1);
    CHECK(count_dpartitions(3, 2) == 3);
    CHECK(count_dpartitions(2, 4) == 5);  // p(4)
    for (int n = 0; n <= 10; ++n) CHECK(count_dpartitions(1, n) == 1);
}

TEST_CASE("plane partitions match MacMahon's closed form") {
    const auto counts = count_dpartitions_upto(3, 12);
    const auto m = macmahon_series(12);
    for (long n = 0; n <= 12; ++n) CHECK(counts[static_cast<std::size_t>(n)] == m[n]);
}

TEST_CASE("ordinary partitions match the Euler product") {
    const auto counts = count_dpartitions_upto(2, 12);
    FactorStream<Int> fs;
    for (long m = 1; m <= 12; ++m) fs.push_back({m, Int(1), Int(-1)});
    const auto euler = factor_product(fs, 12);
    for (long n = 0; n <= 12; ++n) CHECK(counts[static_cast<std::size_t>(n)] == euler[n]);
}

TEST_CASE("thread splitting does not change totals") {
    const auto seq = count_dpartitions_upto(3, 9, 1);
    const auto par = count_dpartitions_upto(3, 9, 4);
    CHECK(seq == par);
    CHECK(count_dpartitions_upto(4, 8, 3) == count_dpartitions_upto(4, 8, 1));
}

TEST_CASE("diagonal statistics") {
    CHECK_THROWS_AS((void)stats(OrderIdeal{2, {box(0, 0, 0)}}), std::invalid_argument);

    const RefinedStats single = stats(OrderIdeal{3, {box(0, 0, 0)}});
    CHECK(single.w_minus == 0);
    CHECK(single.w_zero == 1);
    CHECK(single.w_plus == 0);

    const RefinedStats xrow = stats(OrderIdeal{3, {box(0, 0, 0), box(1, 0, 0)}});
    CHECK(xrow.w_minus == 0);
    CHECK(xrow.w_zero == 1);
    CHECK(xrow.w_plus == 1);

    const RefinedStats yrow = stats(OrderIdeal{3, {box(0, 0, 0), box(0, 1, 0)}});
    CHECK(yrow.w_minus == 1);
    CHECK(yrow.w_zero == 1);
    CHECK(yrow.w_plus == 0);
}

TEST_CASE("statistics multiset is symmetric under swapping the axes") {
    std::map<long, std::multiset<std::array<long, 3>>> by_size;
    for_each_ideal(3, 7, [&](const OrderIdeal& ideal) {
        const RefinedStats s = stats(ideal);
        by_size[static_cast<long>(ideal.size())].insert({s.w_minus, s.w_zero, s.w_plus});
    });
    for (const auto& [n, multiset] : by_size) {
        std::multiset<std::array<long, 3>> mirrored;
        for (const auto& s : multiset) mirrored.insert({s[2], s[1], s[0]});
        CHECK(mirrored == multiset);
    }
}

TEST_CASE("total box count sums to n times the number of ideals") {
    for (int n = 0; n <= 8; ++n) {
        Int boxes = 0;
        Int ideals = 0;
        for_each_ideal(3, n, [&](const OrderIdeal& ideal) {
            if (static_cast<int>(ideal.size()) != n) return;
            const RefinedStats s = stats(ideal);
            boxes += s.w_minus + s.w_zero + s.w_plus;
            ideals += 1;
        });
        CHECK(ideals == count_dpartitions(3, n));
        CHECK(boxes == ideals * n);
    }
}

TEST_CASE("canonical generation is duplicate-free and downward closed") {
    std::set<std::vector<Box>> seen;
    long visited = 0;
    for_each_ideal(3, 6, [&](const OrderIdeal& ideal) {
        ++visited;
        std::vector<Box> key = ideal.boxes;
        CHECK(std::is_sorted(key.begin(), key.end()));
        CHECK(seen.insert(key).second);
        // downward closure
        const std::set<Box> members(ideal.boxes.begin(), ideal.boxes.end());
        for (const Box& b : ideal.boxes)
            for (int i = 0; i < 3; ++i) {
                if (b[i] == 0) continue;
                Box below = b;
                --below[i];
                CHECK(members.count(below) == 1);
            }
    });
    Int expected = 0;
    for (const auto& c : count_dpartitions_upto(3, 6)) expected += c;
    CHECK(Int(visited) == expected);
}

TEST_CASE("refined statistics sums") {
    const auto s0 = refined_sum(2, 0);
    CHECK(s0[0] == WeightPoly::one());
    CHECK(s0[1] == WeightPoly::one());  // q^0 for delta = 0
    CHECK(s0[2] == WeightPoly::one() + q_half_power(1) + q_half_power(-1));

    // single box carries q^delta
    for (long td : {-3L, -1L, 0L, 1L, 3L}) {
        const auto s = refined_sum(1, td);
        CHECK(s[1] == q_half_power(td));
    }
}

TEST_CASE("enumeration ceilings are enforced") {
    CHECK_THROWS_AS((void)count_dpartitions(3, 15), resource_limit_error);
    CHECK_THROWS_AS((void)count_dpartitions(4, 11), resource_limit_error);
    CHECK_THROWS_AS((void)count_dpartitions(9, 1), resource_limit_error);
    CHECK_THROWS_AS((void)count_dpartitions(0, 1), std::invalid_argument);
}
