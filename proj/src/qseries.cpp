#include "partident/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "partident/partitions.hpp"

namespace partident {

namespace {

// acc += c * s through acc.order
void add_scaled(TruncatedSeries& acc, unsigned long c, const TruncatedSeries& s) {
    for (std::uint32_t i = 0; i <= acc.order; ++i)
        acc.coeffs[i] += c * s.coeffs[i];
}

// Records the lowest-order mismatch between a and b, if the report does not
// already hold one.
void compare_step(const TruncatedSeries& a, const TruncatedSeries& b,
                  const char* step, IdentityReport& report) {
    const std::uint32_t order = std::min(a.order, b.order);
    for (std::uint32_t n = 0; n <= order; ++n) {
        if (a.coeffs[n] == b.coeffs[n])
            continue;
        if (!report.first_failure) {
            report.first_failure = Counterexample{n, a.coeffs[n], b.coeffs[n]};
            report.note = step;
        }
        return;
    }
}

}  // namespace

const mpz_class& TruncatedSeries::coeff(std::uint32_t i) const {
    if (i > order)
        throw std::out_of_range("TruncatedSeries::coeff: beyond truncation order");
    return coeffs[i];
}

TruncatedSeries make_poly(std::vector<mpz_class> coeffs, std::uint32_t order) {
    coeffs.resize(order + std::size_t{1});
    TruncatedSeries s(order);
    s.coeffs = std::move(coeffs);
    return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order, b.order));
    for (std::uint32_t i = 0; i <= out.order; ++i)
        out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order, b.order));
    for (std::uint32_t i = 0; i <= out.order; ++i)
        out.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order, b.order));
    for (std::uint32_t i = 0; i <= out.order; ++i) {
        if (a.coeffs[i] == 0)
            continue;
        for (std::uint32_t j = 0; i + j <= out.order; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

TruncatedSeries geometric(std::uint32_t k, std::uint32_t order) {
    if (k == 0)
        throw std::invalid_argument("geometric: k must be >= 1");
    TruncatedSeries s(order);
    for (std::uint64_t i = k; i <= order; i += k)
        s.coeffs[i] = 1;
    return s;
}

TruncatedSeries inv_pochhammer(std::uint32_t r, std::uint32_t order) {
    if (r == 0)
        throw std::invalid_argument("inv_pochhammer: r must be >= 1");
    // same DP as the partition table: factors (1-q^m)^-1 for m = r..order;
    // factors beyond the truncation order only touch higher terms
    TruncatedSeries s(order);
    s.coeffs[0] = 1;
    for (std::uint32_t m = r; m <= order; ++m)
        for (std::uint32_t n = m; n <= order; ++n)
            s.coeffs[n] += s.coeffs[n - m];
    return s;
}

TruncatedSeries lambert_phi(const TotientTable& table, std::uint32_t order) {
    if (table.limit < order)
        throw std::invalid_argument("lambert_phi: totient table shorter than order");
    TruncatedSeries s(order);
    for (std::uint32_t k = 1; k <= order; ++k) {
        const std::uint32_t phi_k = table.phi(k);
        for (std::uint64_t j = k; j <= order; j += k)
            s.coeffs[j] += phi_k;
    }
    return s;
}

TruncatedSeries part_count_series(std::uint32_t r, std::uint32_t k,
                                  std::uint32_t order) {
    if (r == 0 || k < r)
        throw std::invalid_argument("part_count_series: requires k >= r >= 1");
    return series_mul(geometric(k, order), inv_pochhammer(r, order));
}

IdentityReport replay_theorem2_chain(std::uint32_t order) {
    if (order < 2)
        throw std::invalid_argument("replay_theorem2_chain: order must be >= 2");

    IdentityReport report;
    report.identity = IdentityName::theorem2_chain;
    report.range_lo = 0;
    report.range_hi = order;

    const auto tot = build_totient_table(order);
    const auto p1 = inv_pochhammer(1, order);
    const auto lambert = lambert_phi(tot, order);

    const auto lhs =
        series_mul(series_mul(make_poly({1, -1}, order), p1), lambert);
    const auto q_p1 = series_mul(make_poly({0, 1}, order), p1);

    // sum_k phi(k) * part_count_series(2, k, order), with the common
    // pochhammer factor hoisted out of the loop
    const auto p2 = inv_pochhammer(2, order);
    TruncatedSeries weighted(order);
    for (std::uint32_t k = 2; k <= order; ++k)
        add_scaled(weighted, tot.phi(k), series_mul(geometric(k, order), p2));

    compare_step(lhs, series_add(q_p1, weighted),
                 "lhs vs q/(q;q) + sum phi(k) S(2,k) series", report);
    compare_step(lhs, series_add(q_p1, series_mul(geometric(1, order), q_p1)),
                 "lhs vs q/(q;q) + q/(1-q) * q/(q;q)", report);
    return report;
}

IdentityReport replay_theorem3_chain(std::uint32_t order) {
    if (order < 3)
        throw std::invalid_argument("replay_theorem3_chain: order must be >= 3");

    IdentityReport report;
    report.identity = IdentityName::theorem3_chain;
    report.range_lo = 0;
    report.range_hi = order;

    const auto tot = build_totient_table(order);
    const auto p1 = inv_pochhammer(1, order);
    const auto lambert = lambert_phi(tot, order);

    const auto lhs = series_mul(
        series_mul(make_poly({1, -1, -1, 1}, order), p1), lambert);

    const auto p3 = inv_pochhammer(3, order);
    TruncatedSeries weighted(order);
    for (std::uint32_t k = 3; k <= order; ++k)
        add_scaled(weighted, tot.phi(k), series_mul(geometric(k, order), p3));

    compare_step(lhs,
                 series_add(series_mul(make_poly({0, 1, 1, -2}, order), p1),
                            weighted),
                 "lhs vs (q+q^2-2q^3)/(q;q) + sum phi(k) S(3,k) series", report);
    compare_step(lhs, series_mul(make_poly({0, 1, 1}, order), p1),
                 "lhs vs (q+q^2)/(q;q)", report);
    compare_step(weighted, series_mul(make_poly({0, 0, 0, 2}, order), p1),
                 "weighted series vs 2q^3/(q;q)", report);

    // coefficient of q^n of the weighted series must be 2 p(n-3), with p
    // from the pentagonal route
    const auto p = partition_count(order - 3);
    TruncatedSeries doubled(order);
    for (std::uint32_t n = 3; n <= order; ++n)
        doubled.coeffs[n] = 2 * p[n - 3];
    compare_step(weighted, doubled, "weighted series vs 2 p(n-3) coefficients",
                 report);

    return report;
}

}  // namespace partident
