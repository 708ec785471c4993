#include "partident/identities.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "partident/partitions.hpp"
#include "partident/qseries.hpp"
#include "partident/totient.hpp"

namespace partident {

namespace {

void record_mismatch(IdentityReport& report, std::uint64_t n,
                     const mpz_class& lhs, const mpz_class& rhs,
                     const std::string& step) {
    if (lhs == rhs || report.first_failure)
        return;
    report.first_failure = Counterexample{n, lhs, rhs};
    if (!step.empty())
        report.note = step;
}

// phi-weighted multiplicity sum over the partitions of n with smallest
// part >= r: one enumeration pass covering every k at once.
mpz_class weighted_part_sum_oracle(std::uint32_t n, std::uint32_t r,
                                   const TotientTable& tot) {
    mpz_class total = 0;
    enumerate_partitions(n, r, [&](const std::vector<std::uint32_t>& parts) {
        for (std::uint32_t part : parts)
            total += tot.phi(part);
    });
    return total;
}

}  // namespace

IdentityReport sweep_identity(IdentityName identity, std::uint64_t lo,
                              std::uint64_t hi,
                              const std::function<mpz_class(std::uint64_t)>& lhs,
                              const std::function<mpz_class(std::uint64_t)>& rhs) {
    IdentityReport report;
    report.identity = identity;
    report.range_lo = lo;
    report.range_hi = hi;
    for (std::uint64_t n = lo; n <= hi; ++n)
        record_mismatch(report, n, lhs(n), rhs(n), "");
    return report;
}

IdentityReport verify_stanley(std::uint32_t n_max) {
    if (n_max < 1)
        throw std::invalid_argument("verify_stanley: n_max must be >= 1");
    return sweep_identity(
        IdentityName::stanley, 1, n_max,
        [](std::uint64_t n) {
            return total_part_count_oracle(static_cast<std::uint32_t>(n), 1, 1);
        },
        [](std::uint64_t n) {
            return distinct_parts_sum_oracle(static_cast<std::uint32_t>(n));
        });
}

IdentityReport verify_theorem2(std::uint32_t n_max, std::uint32_t oracle_n_max) {
    if (n_max < 1)
        throw std::invalid_argument("verify_theorem2: n_max must be >= 1");

    const auto tot = build_totient_table(n_max + 1);
    const auto ones = build_partition_table(1, n_max);
    const auto no_ones = build_partition_table(2, n_max + 1);

    IdentityReport report;
    report.identity = IdentityName::theorem2;
    report.range_lo = 1;
    report.range_hi = n_max;

    for (std::uint32_t n = 1; n <= n_max; ++n) {
        const mpz_class lhs = total_part_count(ones, n, 1);
        mpz_class rhs = 0;
        for (std::uint32_t k = 2; k <= n + 1; ++k)
            rhs += tot.phi(k) * total_part_count(no_ones, n + 1, k);
        record_mismatch(report, n, lhs, rhs, "closed-formula route");
    }

    for (std::uint32_t n = 1; n <= std::min(oracle_n_max, n_max); ++n) {
        const mpz_class lhs = total_part_count_oracle(n, 1, 1);
        const mpz_class rhs = weighted_part_sum_oracle(n + 1, 2, tot);
        record_mismatch(report, n, lhs, rhs, "enumerator route");
    }
    return report;
}

IdentityReport verify_theorem3(std::uint32_t n_max, std::uint32_t oracle_n_max) {
    const auto tot = build_totient_table(n_max + 3);
    const auto min3 = build_partition_table(3, n_max + 3);
    const auto p = partition_count(n_max);

    IdentityReport report;
    report.identity = IdentityName::theorem3;
    report.range_lo = 0;
    report.range_hi = n_max;

    for (std::uint32_t n = 0; n <= n_max; ++n) {
        mpz_class rhs = 0;
        for (std::uint32_t k = 3; k <= n + 3; ++k)
            rhs += half_totient(tot, k) * total_part_count(min3, n + 3, k);
        record_mismatch(report, n, p[n], rhs, "closed-formula route");
    }

    for (std::uint32_t n = 0; n <= std::min(oracle_n_max, n_max); ++n) {
        mpz_class lhs = 0;
        enumerate_partitions(n, 1, [&](const auto&) { lhs += 1; });
        mpz_class rhs = 0;
        enumerate_partitions(n + 3, 3, [&](const std::vector<std::uint32_t>& parts) {
            for (std::uint32_t part : parts)
                rhs += coprime_pair_count_oracle(part);
        });
        record_mismatch(report, n, lhs, rhs, "enumerator route");
    }
    return report;
}

mpz_class interchange_lhs(std::span<const mpz_class> a,
                          std::span<const mpz_class> b) {
    const std::size_t n = a.size();
    mpz_class total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class divisor_sum = 0;
        for (std::size_t d = 1; d <= k; ++d)
            if (k % d == 0)
                divisor_sum += a[d - 1];
        total += divisor_sum * b[n - k];
    }
    return total;
}

mpz_class interchange_rhs(std::span<const mpz_class> a,
                          std::span<const mpz_class> b) {
    const std::size_t n = a.size();
    mpz_class total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class inner = 0;
        for (std::size_t i = 1; i <= n / k; ++i)
            inner += b[n - i * k];
        total += inner * a[k - 1];
    }
    return total;
}

IdentityReport verify_interchange_instance(std::span<const mpz_class> a,
                                           std::span<const mpz_class> b) {
    if (a.empty() || a.size() != b.size())
        throw std::invalid_argument(
            "verify_interchange_instance: sequences must have equal nonzero length");

    IdentityReport report;
    report.identity = IdentityName::interchange;
    report.range_lo = a.size();
    report.range_hi = a.size();
    record_mismatch(report, a.size(), interchange_lhs(a, b), interchange_rhs(a, b),
                    "single instance");
    return report;
}

IdentityReport verify_interchange(std::uint32_t instances, std::uint32_t max_n,
                                  std::uint64_t seed) {
    if (max_n < 1)
        throw std::invalid_argument("verify_interchange: max_n must be >= 1");

    IdentityReport report;
    report.identity = IdentityName::interchange;
    report.range_lo = 1;
    report.range_hi = max_n;
    report.seed = seed;

    // fixed instance: a_k = phi(k), b_k = p_2(k), n = 6
    {
        const auto tot = build_totient_table(6);
        const auto p2 = build_partition_table(2, 5);
        std::vector<mpz_class> a(6), b(6);
        for (std::uint32_t k = 1; k <= 6; ++k)
            a[k - 1] = tot.phi(k);
        for (std::uint32_t m = 0; m <= 5; ++m)
            b[m] = p2.count(m);
        record_mismatch(report, 6, interchange_lhs(a, b), interchange_rhs(a, b),
                        "fixed (phi, p_2) instance at n = 6");
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> value(-9, 9);
    std::uniform_int_distribution<std::uint32_t> length(1, max_n);
    for (std::uint32_t i = 0; i < instances; ++i) {
        const std::uint32_t n = length(rng);
        std::vector<mpz_class> a(n), b(n);
        for (auto& x : a)
            x = value(rng);
        for (auto& x : b)
            x = value(rng);
        record_mismatch(report, n, interchange_lhs(a, b), interchange_rhs(a, b),
                        "random instance " + std::to_string(i + 1));
    }
    return report;
}

IdentityReport verify_weighted_form(std::uint32_t n_max) {
    if (n_max < 2)
        throw std::invalid_argument("verify_weighted_form: n_max must be >= 2");

    const auto tot = build_totient_table(n_max);
    auto report = sweep_identity(
        IdentityName::weighted_form, 2, n_max,
        [](std::uint64_t n) {
            // multiplicity of 1 summed over the solutions of
            // 1 + t1 + 2 t2 + ... = n, i.e. over the partitions of n-1
            mpz_class ones = 0;
            enumerate_partitions(static_cast<std::uint32_t>(n) - 1, 1,
                                 [&](const std::vector<std::uint32_t>& parts) {
                                     for (std::uint32_t part : parts)
                                         if (part == 1)
                                             ones += 1;
                                 });
            return ones;
        },
        [&tot](std::uint64_t n) {
            return weighted_part_sum_oracle(static_cast<std::uint32_t>(n), 2, tot);
        });
    report.note =
        "left constraint read with the leading 1 adjoined: its solutions are "
        "the multiplicity vectors of the partitions of n-1";
    return report;
}

IdentityReport verify_euler_divisor_sum(std::uint32_t n_max) {
    if (n_max < 1)
        throw std::invalid_argument("verify_euler_divisor_sum: n_max must be >= 1");
    const auto tot = build_totient_table(n_max);
    return sweep_identity(
        IdentityName::euler_divisor_sum, 1, n_max,
        [&tot](std::uint64_t n) {
            return mpz_class(divisor_totient_sum(tot, static_cast<std::uint32_t>(n)));
        },
        [](std::uint64_t n) { return mpz_class(n); });
}

IdentityReport verify_lambert(std::uint32_t order) {
    if (order < 1)
        throw std::invalid_argument("verify_lambert: order must be >= 1");
    const auto tot = build_totient_table(order);
    const auto series = lambert_phi(tot, order);
    return sweep_identity(
        IdentityName::lambert, 1, order,
        [&series](std::uint64_t n) {
            return series.coeff(static_cast<std::uint32_t>(n));
        },
        [](std::uint64_t n) { return mpz_class(n); });
}

}  // namespace partident
