#include "mdt/partitions.hpp"

#include <algorithm>
#include <thread>

namespace mdt {

namespace {

// Lexicographic comparison on the first dim coordinates (trailing entries are
// zero anyway, so whole-array comparison is equivalent).
bool lex_less(const Box& a, const Box& b) { return a < b; }

struct Enumerator {
    int dim;
    int n_max;
    std::vector<Box> boxes;  // kept in increasing lex order

    bool contains(const Box& b) const {
        return std::binary_search(boxes.begin(), boxes.end(), b, lex_less);
    }

    bool is_addable(const Box& b) const {
        if (contains(b)) return false;
        Box below = b;
        for (int i = 0; i < dim; ++i) {
            if (b[i] == 0) continue;
            --below[i];
            if (!contains(below)) return false;
            ++below[i];
        }
        return true;
    }

    // Addable positions strictly lex-greater than `last`, in increasing
    // order.  Candidates are upper neighbors of current boxes plus the
    // origin.
    std::vector<Box> candidates_after(const Box& last) const {
        std::vector<Box> out;
        if (boxes.empty()) {
            out.push_back(Box{});
            return out;
        }
        for (const Box& b : boxes) {
            Box up = b;
            for (int i = 0; i < dim; ++i) {
                ++up[i];
                if (lex_less(last, up) && is_addable(up)) out.push_back(up);
                --up[i];
            }
        }
        std::sort(out.begin(), out.end(), lex_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

constexpr int kSplitDepth = 4;

struct SearchSeed {
    std::vector<Box> boxes;
    Box last;
};

void count_below(Enumerator& e, const Box& last, std::vector<Int>& counts) {
    if (static_cast<int>(e.boxes.size()) >= e.n_max) return;
    for (const Box& p : e.candidates_after(last)) {
        e.boxes.push_back(p);
        ++counts[e.boxes.size()];
        count_below(e, p, counts);
        e.boxes.pop_back();
    }
}

// Counts nodes of size <= depth directly and collects the size == depth
// nodes as independent subtree roots.
void collect_seeds(Enumerator& e, const Box& last, int depth, std::vector<Int>& counts,
                   std::vector<SearchSeed>& seeds) {
    if (static_cast<int>(e.boxes.size()) == depth) {
        seeds.push_back({e.boxes, last});
        return;
    }
    if (static_cast<int>(e.boxes.size()) >= e.n_max) return;
    for (const Box& p : e.candidates_after(last)) {
        e.boxes.push_back(p);
        ++counts[e.boxes.size()];
        collect_seeds(e, p, depth, counts, seeds);
        e.boxes.pop_back();
    }
}

void check_request(int d, int n_max) {
    if (d < 1) throw std::invalid_argument("partition dimension must be >= 1");
    if (d > kMaxPartitionDim)
        throw resource_limit_error("partition dimension above supported maximum " +
                                   std::to_string(kMaxPartitionDim));
    if (n_max < 0) throw std::invalid_argument("partition size must be >= 0");
    if (n_max > partition_ceiling(d))
        throw resource_limit_error("enumeration of dimension-" + std::to_string(d) +
                                   " partitions is limited to n <= " +
                                   std::to_string(partition_ceiling(d)));
}

Box sentinel_before_origin() {
    Box b{};
    b.fill(-1);
    return b;
}

void for_each_below(Enumerator& e, const Box& last,
                    const std::function<void(const OrderIdeal&)>& fn) {
    if (static_cast<int>(e.boxes.size()) >= e.n_max) return;
    for (const Box& p : e.candidates_after(last)) {
        e.boxes.push_back(p);
        fn(OrderIdeal{e.dim, e.boxes});
        for_each_below(e, p, fn);
        e.boxes.pop_back();
    }
}

}  // namespace

RefinedStats stats(const OrderIdeal& ideal) {
    if (ideal.dim != 3) throw std::invalid_argument("diagonal statistics require dimension 3");
    RefinedStats s;
    for (const Box& b : ideal.boxes) {
        const int diff = b[0] - b[1];
        if (diff < 0)
            ++s.w_minus;
        else if (diff == 0)
            ++s.w_zero;
        else
            ++s.w_plus;
    }
    return s;
}

long partition_ceiling(int d) {
    switch (d) {
        case 1: return 512;
        case 2: return 40;
        case 3: return 14;
        case 4: return 10;
        case 5: return 9;
        default: return 8;
    }
}

std::vector<Int> count_dpartitions_upto(int d, int n_max, int threads) {
    check_request(d, n_max);
    std::vector<Int> counts(static_cast<std::size_t>(n_max) + 1, Int(0));
    counts[0] = 1;
    Enumerator e{d, n_max, {}};
    const Box start = sentinel_before_origin();
    if (threads <= 1 || n_max <= kSplitDepth) {
        count_below(e, start, counts);
        return counts;
    }
    std::vector<SearchSeed> seeds;
    collect_seeds(e, start, kSplitDepth, counts, seeds);
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                      std::max<std::size_t>(seeds.size(), 1));
    std::vector<std::vector<Int>> partial(workers,
                                          std::vector<Int>(counts.size(), Int(0)));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            Enumerator local{d, n_max, {}};
            for (std::size_t i = w; i < seeds.size(); i += workers) {
                local.boxes = seeds[i].boxes;
                count_below(local, seeds[i].last, partial[w]);
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial)
        for (std::size_t n = 0; n < counts.size(); ++n) counts[n] += p[n];
    return counts;
}

Int count_dpartitions(int d, int n, int threads) {
    return count_dpartitions_upto(d, n, threads)[static_cast<std::size_t>(n)];
}

void for_each_ideal(int d, int n_max, const std::function<void(const OrderIdeal&)>& fn) {
    check_request(d, n_max);
    Enumerator e{d, n_max, {}};
    fn(OrderIdeal{d, {}});
    for_each_below(e, sentinel_before_origin(), fn);
}

TruncSeries<WeightPoly> refined_sum(long n_max, long two_delta) {
    TruncSeries<WeightPoly> s(n_max);
    for_each_ideal(3, static_cast<int>(n_max), [&](const OrderIdeal& ideal) {
        const RefinedStats st = stats(ideal);
        const long e = st.w_minus - st.w_plus + two_delta * st.w_zero;
        s[static_cast<long>(ideal.size())] += q_half_power(e);
    });
    return s;
}

}  // namespace mdt
