#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include <gmpxx.h>

#include "partident/report.hpp"

namespace partident {

// Shared sweep engine: compares lhs(n) against rhs(n) for every n in
// [lo, hi], recording the first mismatch.  Never throws on mismatch; the
// whole range is always scanned.
IdentityReport sweep_identity(IdentityName identity, std::uint64_t lo,
                              std::uint64_t hi,
                              const std::function<mpz_class(std::uint64_t)>& lhs,
                              const std::function<mpz_class(std::uint64_t)>& rhs);

// Total count of 1's over the partitions of n equals the number of distinct
// part values summed over the partitions of n, for 1 <= n <= n_max.  Both
// sides by enumeration, each computing its own statistic.
IdentityReport verify_stanley(std::uint32_t n_max);

// Count of 1's in the partitions of n equals
//   sum_{k=2}^{n+1} phi(k) * [number of k's in the 1-free partitions of n+1]
// for 1 <= n <= n_max via the closed-formula route, and additionally via
// the enumerator for 1 <= n <= oracle_n_max.
IdentityReport verify_theorem2(std::uint32_t n_max, std::uint32_t oracle_n_max = 0);

// p(n) == sum_{k=3}^{n+3} (phi(k)/2) * [number of k's in the partitions of
// n+3 with smallest part >= 3] for 0 <= n <= n_max via the closed-formula
// route, and via the enumerator for 0 <= n <= oracle_n_max.
IdentityReport verify_theorem3(std::uint32_t n_max, std::uint32_t oracle_n_max = 0);

// Both sides of the divisor-sum interchange
//   sum_{k=1}^n (sum_{d|k} a_d) b_{n-k}
//     == sum_{k=1}^n (sum_{i=1}^{floor(n/k)} b_{n-ik}) a_k
// for sequences a_1..a_n (a[0] holds a_1) and b_0..b_{n-1}.
mpz_class interchange_lhs(std::span<const mpz_class> a, std::span<const mpz_class> b);
mpz_class interchange_rhs(std::span<const mpz_class> a, std::span<const mpz_class> b);

// Checks the interchange identity on a single instance.  Both spans must
// have equal, nonzero length.
IdentityReport verify_interchange_instance(std::span<const mpz_class> a,
                                           std::span<const mpz_class> b);

// Seeded randomized sweep: `instances` random integer sequences with values
// in [-9, 9] and length up to max_n, plus the fixed (phi, p_2) instance at
// n = 6.  The seed is echoed in the report.
IdentityReport verify_interchange(std::uint32_t instances, std::uint32_t max_n,
                                  std::uint64_t seed);

// The multiplicity-vector identity
//   sum_{1 + t1 + 2 t2 + ... = n} t1
//     == sum_{2 t2 + 3 t3 + ... = n} phi(2) t2 + phi(3) t3 + ...
// checked by enumeration on both sides for 2 <= n <= n_max.  The left
// constraint is read with the leading 1 adjoined: its solutions are the
// multiplicity vectors of the partitions of n-1.  The report's note names
// that reading.
IdentityReport verify_weighted_form(std::uint32_t n_max);

// sum_{d|n} phi(d) == n for 1 <= n <= n_max, phi from the sieve table.
IdentityReport verify_euler_divisor_sum(std::uint32_t n_max);

// Lambert series coefficient check: c_n == n for 1 <= n <= order.
IdentityReport verify_lambert(std::uint32_t order);

}  // namespace partident
