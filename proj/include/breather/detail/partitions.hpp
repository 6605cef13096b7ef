#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "breather/rational.hpp"

namespace breather::detail {

// Multiset partition of m into parts >= 1 with at least two parts; the number
// of ordered compositions it stands for is count! / prod(mult!).
struct Partition {
    std::vector<std::pair<int, int>> parts;  // (value, multiplicity), values descending
    int count = 0;
};

inline void enumerate_partitions(int remaining, int max_part, Partition& cur,
                                 std::vector<Partition>& out) {
    if (remaining == 0) {
        if (cur.count >= 2) out.push_back(cur);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        const int mult_max = remaining / p;
        for (int a = 1; a <= mult_max; ++a) {
            cur.parts.push_back({p, a});
            cur.count += a;
            enumerate_partitions(remaining - p * a, p - 1, cur, out);
            cur.count -= a;
            cur.parts.pop_back();
        }
    }
}

inline std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    Partition cur;
    enumerate_partitions(m, m - 1, cur, out);
    return out;
}

inline Rational composition_count(const Partition& p) {
    Rational r = factorial(p.count);
    for (const auto& [part, mult] : p.parts) r /= factorial(mult);
    return r;
}

}  // namespace breather::detail
