#include "partident/partitions.hpp"

#include <stdexcept>

namespace partident {

bool Partition::valid() const {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            return false;
        sum += parts[i];
    }
    return sum == n;
}

const mpz_class& PartitionTable::count(std::uint32_t n) const {
    if (n > max_n)
        throw std::out_of_range("PartitionTable::count: n exceeds max_n");
    return counts[n];
}

PartitionTable build_partition_table(std::uint32_t min_part, std::uint32_t max_n) {
    if (min_part == 0)
        throw std::invalid_argument("build_partition_table: min_part must be >= 1");

    PartitionTable table;
    table.min_part = min_part;
    table.max_n = max_n;
    table.counts.assign(max_n + std::size_t{1}, mpz_class(0));
    table.counts[0] = 1;

    // unbounded-knapsack pass per allowed part size; after processing part m,
    // counts[n] holds the partitions of n into parts from min_part..m
    for (std::uint32_t m = min_part; m <= max_n; ++m)
        for (std::uint32_t n = m; n <= max_n; ++n)
            table.counts[n] += table.counts[n - m];

    return table;
}

std::vector<mpz_class> partition_count(std::uint32_t max_n) {
    std::vector<mpz_class> p(max_n + std::size_t{1});
    p[0] = 1;
    for (std::uint32_t n = 1; n <= max_n; ++n) {
        mpz_class acc = 0;
        for (std::uint32_t j = 1;; ++j) {
            const std::uint64_t g1 = std::uint64_t{j} * (3 * std::uint64_t{j} - 1) / 2;
            if (g1 > n)
                break;
            const bool add = j % 2 == 1;
            if (add)
                acc += p[n - g1];
            else
                acc -= p[n - g1];
            const std::uint64_t g2 = g1 + j;  // j(3j+1)/2
            if (g2 <= n) {
                if (add)
                    acc += p[n - g2];
                else
                    acc -= p[n - g2];
            }
        }
        p[n] = acc;
    }
    return p;
}

mpz_class total_part_count(const PartitionTable& table, std::uint32_t n,
                           std::uint32_t k) {
    if (k < table.min_part)
        throw std::invalid_argument("total_part_count: k below table.min_part");
    if (n > table.max_n)
        throw std::out_of_range("total_part_count: n exceeds table.max_n");

    mpz_class sum = 0;
    for (std::uint32_t t = 1; t <= n / k; ++t)
        sum += table.counts[n - t * k];
    return sum;
}

std::vector<Partition> list_partitions(std::uint32_t n, std::uint32_t min_part) {
    std::vector<Partition> out;
    enumerate_partitions(n, min_part, [&](const std::vector<std::uint32_t>& parts) {
        out.push_back(Partition{parts, n});
    });
    return out;
}

mpz_class total_part_count_oracle(std::uint32_t n, std::uint32_t k,
                                  std::uint32_t r) {
    if (r == 0 || k < r)
        throw std::invalid_argument("total_part_count_oracle: requires k >= r >= 1");
    mpz_class total = 0;
    enumerate_partitions(n, r, [&](const std::vector<std::uint32_t>& parts) {
        for (std::uint32_t part : parts)
            if (part == k)
                total += 1;
    });
    return total;
}

mpz_class distinct_parts_sum_oracle(std::uint32_t n) {
    mpz_class total = 0;
    enumerate_partitions(n, 1, [&](const std::vector<std::uint32_t>& parts) {
        // parts are nonincreasing, so distinct values sit at run boundaries
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (i == 0 || parts[i] != parts[i - 1])
                total += 1;
    });
    return total;
}

}  // namespace partident
