#pragma once

#include <cstdint>
#include <vector>

namespace partident {

// Euler's totient phi(1..limit), sieved once and then read-only.
//
// Invariants on a built table:
//   values[0] == 1
//   values[p-1] == p-1 for every prime p <= limit
//   phi(ab) == phi(a) phi(b) for coprime a, b
//   phi(k) is even for k >= 3
struct TotientTable {
    std::uint32_t limit = 0;
    std::vector<std::uint32_t> values;  // values[i] = phi(i + 1)

    // phi(n) for 1 <= n <= limit; throws std::out_of_range otherwise
    std::uint32_t phi(std::uint32_t n) const;
};

// Linear sieve over 1..limit.  Rejects limit == 0.
TotientTable build_totient_table(std::uint32_t limit);

// phi(k)/2, exact since phi(k) is even for k >= 3.  Counts the partitions
// of k into two relatively prime parts.  Defined only for k >= 3.
std::uint32_t half_totient(const TotientTable& table, std::uint32_t k);

// |{(a,b) : a >= b >= 1, a + b = n, gcd(a,b) = 1}| by direct enumeration.
// Independent oracle for half_totient.  Requires n >= 3.
std::uint32_t coprime_pair_count_oracle(std::uint32_t n);

// Sum of phi(d) over the divisors d of n.  Always equals n.
std::uint64_t divisor_totient_sum(const TotientTable& table, std::uint32_t n);

}  // namespace partident
