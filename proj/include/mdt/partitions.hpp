#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mdt/ints.hpp"
#include "mdt/laurent.hpp"
#include "mdt/series.hpp"

namespace mdt {

class resource_limit_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxPartitionDim = 8;

// One lattice point of N^d; coordinates beyond dim are zero.
using Box = std::array<std::int16_t, kMaxPartitionDim>;

// Finite downward-closed subset of N^d: a d-dimensional partition, i.e. a
// monomial ideal of finite colength.  Boxes are 0-based and kept in
// lexicographic order, which makes every prefix downward closed.
struct OrderIdeal {
    int dim = 1;
    std::vector<Box> boxes;

    std::size_t size() const { return boxes.size(); }
};

// Diagonal statistics of a plane partition: box counts with x - y negative,
// zero, positive.
struct RefinedStats {
    long w_minus = 0;
    long w_zero = 0;
    long w_plus = 0;
};

RefinedStats stats(const OrderIdeal& ideal);

// Enumeration ceiling per dimension; requests above it are refused.
long partition_ceiling(int d);

// Number of order ideals of each size 0..n_max in N^d, by canonical
// backtracking (boxes added in increasing lexicographic position, so each
// ideal is generated exactly once).  Worker threads split the search tree at
// a fixed shallow depth; totals do not depend on the thread count.
std::vector<Int> count_dpartitions_upto(int d, int n_max, int threads = 1);
Int count_dpartitions(int d, int n, int threads = 1);

// Visits every order ideal of size <= n_max (including the empty one) in
// canonical generation order.
void for_each_ideal(int d, int n_max, const std::function<void(const OrderIdeal&)>& fn);

// sum over plane partitions of size <= n_max of t^|a| q^((w_- - w_+ + 2 delta w_0)/2),
// the sum form of the refined MacMahon function.  delta = two_delta/2.
TruncSeries<WeightPoly> refined_sum(long n_max, long two_delta);

}  // namespace mdt
