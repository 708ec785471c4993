#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace partident {

// Labels for the identities this library can verify.  The *_chain labels
// name the two generating-function replays; the rest are the direct
// integer-level checks.
enum class IdentityName {
    stanley,
    theorem2,
    theorem3,
    interchange,
    weighted_form,
    euler_divisor_sum,
    lambert,
    theorem2_chain,
    theorem3_chain,
};

std::string_view to_string(IdentityName name);

// Exact witness for a failed check: the index where the two sides first
// disagree, and both values in full precision.
struct Counterexample {
    std::uint64_t n = 0;
    mpz_class lhs;
    mpz_class rhs;
};

// Outcome of one verification run over an inclusive index range.
// A report passes iff no counterexample was found.
struct IdentityReport {
    IdentityName identity = IdentityName::stanley;
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;
    std::optional<Counterexample> first_failure;
    std::optional<std::uint64_t> seed;  // set by randomized verifiers
    std::string note;                   // interpretation or failing step, if any

    bool passed() const { return !first_failure.has_value(); }
};

}  // namespace partident
