#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "partident/report.hpp"
#include "partident/totient.hpp"

namespace partident {

// Formal power series in q with exact integer coefficients, known through
// q^order and unknown beyond it.  Arithmetic never claims accuracy past the
// smaller operand order.
struct TruncatedSeries {
    std::uint32_t order = 0;
    std::vector<mpz_class> coeffs;  // coeffs.size() == order + 1

    TruncatedSeries() : coeffs(1) {}
    explicit TruncatedSeries(std::uint32_t order_)
        : order(order_), coeffs(order_ + std::size_t{1}) {}

    const mpz_class& coeff(std::uint32_t i) const;

    bool operator==(const TruncatedSeries&) const = default;
};

// Polynomial c0 + c1 q + c2 q^2 + ... truncated or zero-padded to `order`.
TruncatedSeries make_poly(std::vector<mpz_class> coeffs, std::uint32_t order);

// Exact coefficient arithmetic through min(a.order, b.order).
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// q^k / (1 - q^k) = q^k + q^2k + ... : coefficient of q^i is 1 iff k | i
// and i >= k.
TruncatedSeries geometric(std::uint32_t k, std::uint32_t order);

// 1 / (q^r; q)_inf: coefficient of q^n is the number of partitions of n
// with smallest part >= r.  Built constructively, no series division.
TruncatedSeries inv_pochhammer(std::uint32_t r, std::uint32_t order);

// Lambert series sum_k phi(k) q^k / (1 - q^k).  Coefficient of q^n is
// sum_{d|n} phi(d) = n, i.e. the series equals q/(1-q)^2.  Requires
// table.limit >= order.
TruncatedSeries lambert_phi(const TotientTable& table, std::uint32_t order);

// q^k/(1-q^k) * 1/(q^r; q)_inf: coefficient of q^n is the total number of
// parts equal to k over partitions of n with smallest part >= r.  Requires
// k >= r >= 1.
TruncatedSeries part_count_series(std::uint32_t r, std::uint32_t k,
                                  std::uint32_t order);

// Replays the first proof chain coefficient-by-coefficient through q^order:
//   (1-q)/(q;q)_inf * L  ==  q/(q;q)_inf + sum_{k>=2} phi(k) * [S series](2,k)
//   (1-q)/(q;q)_inf * L  ==  q/(q;q)_inf + q/(1-q) * q/(q;q)_inf
// where L is the phi Lambert series.  A mismatch is reported, not thrown.
// Requires order >= 2.
IdentityReport replay_theorem2_chain(std::uint32_t order);

// Replays the second proof chain through q^order:
//   (1-q)(1-q^2)/(q;q)_inf * L
//       ==  (q+q^2-2q^3)/(q;q)_inf + sum_{k>=3} phi(k) * [S series](3,k)
//       ==  (q+q^2)/(q;q)_inf
// and the weighted sum series sum_{k>=3} phi(k) * [S series](3,k) equals
// 2q^3/(q;q)_inf, with coefficient of q^n equal to 2 p(n-3) for n >= 3
// (p by the pentagonal route).  Requires order >= 3.
IdentityReport replay_theorem3_chain(std::uint32_t order);

}  // namespace partident
