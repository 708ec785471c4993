#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace partident {

// A partition of n: positive parts in nonincreasing order, summing to n.
struct Partition {
    std::vector<std::uint32_t> parts;
    std::uint32_t n = 0;

    bool valid() const;
};

// counts[m] is the number of partitions of m with smallest part >= min_part,
// for 0 <= m <= max_n.  counts[0] == 1 (the empty partition) for every
// min_part; counts[m] == 0 for 1 <= m < min_part.
struct PartitionTable {
    std::uint32_t min_part = 1;
    std::uint32_t max_n = 0;
    std::vector<mpz_class> counts;

    const mpz_class& count(std::uint32_t n) const;
};

// DP over allowed part sizes min_part..max_n.  Exact at every index.
PartitionTable build_partition_table(std::uint32_t min_part, std::uint32_t max_n);

// p(0..max_n) by the pentagonal-number recurrence
//   p(n) = sum_{j>=1} (-1)^(j-1) [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ].
// Independent of the DP route above; the two must agree entrywise.
std::vector<mpz_class> partition_count(std::uint32_t max_n);

// Total number of parts equal to k over all partitions of n with smallest
// part >= table.min_part, via
//   sum_{t=1}^{floor(n/k)} p_r(n - t k).
// Requires k >= table.min_part and n <= table.max_n.
mpz_class total_part_count(const PartitionTable& table, std::uint32_t n,
                           std::uint32_t k);

namespace detail {

template <typename Visitor>
void enumerate_rec(std::uint32_t remaining, std::uint32_t max_part,
                   std::uint32_t min_part, std::vector<std::uint32_t>& parts,
                   Visitor& visit) {
    if (remaining == 0) {
        visit(std::as_const(parts));
        return;
    }
    for (std::uint32_t first = std::min(remaining, max_part);
         first >= min_part; --first) {
        const std::uint32_t rest = remaining - first;
        if (rest != 0 && rest < min_part)
            continue;  // cannot be completed
        parts.push_back(first);
        enumerate_rec(rest, first, min_part, parts, visit);
        parts.pop_back();
    }
}

}  // namespace detail

// Visits every partition of n with smallest part >= min_part exactly once,
// in reverse-lexicographic order of part sequences (largest leading part
// first).  n == 0 visits the empty partition once.  The vector passed to
// the visitor is a working buffer, valid only during the call.
template <typename Visitor>
void enumerate_partitions(std::uint32_t n, std::uint32_t min_part,
                          Visitor&& visit) {
    std::vector<std::uint32_t> parts;
    detail::enumerate_rec(n, n, std::max<std::uint32_t>(min_part, 1), parts,
                          visit);
}

// Materialized enumeration, for golden tests and small oracles.
std::vector<Partition> list_partitions(std::uint32_t n, std::uint32_t min_part);

// The definition of total_part_count taken literally over the enumerator:
// sum of the multiplicity of k across all partitions of n with smallest
// part >= r.  Exponential; oracle use only.
mpz_class total_part_count_oracle(std::uint32_t n, std::uint32_t k,
                                  std::uint32_t r);

// Number of distinct part values per partition of n, summed over all
// partitions of n.  Enumerator-backed.
mpz_class distinct_parts_sum_oracle(std::uint32_t n);

}  // namespace partident
