#include "partident/totient.hpp"

#include <numeric>
#include <stdexcept>

namespace partident {

std::uint32_t TotientTable::phi(std::uint32_t n) const {
    if (n < 1 || n > limit)
        throw std::out_of_range("TotientTable::phi: n outside 1..limit");
    return values[n - 1];
}

TotientTable build_totient_table(std::uint32_t limit) {
    if (limit == 0)
        throw std::invalid_argument("build_totient_table: limit must be >= 1");

    // Euler (linear) sieve: every composite is struck exactly once, via its
    // smallest prime factor.
    std::vector<std::uint32_t> phi(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    phi[1] = 1;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (phi[i] == 0) {
            phi[i] = i - 1;
            primes.push_back(i);
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t ip = std::uint64_t{i} * p;
            if (ip > limit)
                break;
            if (i % p == 0) {
                phi[ip] = phi[i] * p;
                break;
            }
            phi[ip] = phi[i] * (p - 1);
        }
    }

    TotientTable table;
    table.limit = limit;
    table.values.assign(phi.begin() + 1, phi.end());
    return table;
}

std::uint32_t half_totient(const TotientTable& table, std::uint32_t k) {
    if (k < 3)
        throw std::invalid_argument("half_totient: defined only for k >= 3");
    return table.phi(k) / 2;
}

std::uint32_t coprime_pair_count_oracle(std::uint32_t n) {
    if (n < 3)
        throw std::invalid_argument("coprime_pair_count_oracle: n must be >= 3");
    std::uint32_t count = 0;
    for (std::uint32_t b = 1; 2 * b <= n; ++b)
        if (std::gcd(n - b, b) == 1)
            ++count;
    return count;
}

std::uint64_t divisor_totient_sum(const TotientTable& table, std::uint32_t n) {
    if (n < 1 || n > table.limit)
        throw std::out_of_range("divisor_totient_sum: n outside table range");
    std::uint64_t sum = 0;
    for (std::uint32_t d = 1; std::uint64_t{d} * d <= n; ++d) {
        if (n % d != 0)
            continue;
        sum += table.phi(d);
        if (d != n / d)
            sum += table.phi(n / d);
    }
    return sum;
}

}  // namespace partident
