#include "partident/report.hpp"

namespace partident {

std::string_view to_string(IdentityName name) {
    switch (name) {
    case IdentityName::stanley:
        return "stanley";
    case IdentityName::theorem2:
        return "theorem2";
    case IdentityName::theorem3:
        return "theorem3";
    case IdentityName::interchange:
        return "interchange";
    case IdentityName::weighted_form:
        return "weighted-form";
    case IdentityName::euler_divisor_sum:
        return "euler-divisor-sum";
    case IdentityName::lambert:
        return "lambert";
    case IdentityName::theorem2_chain:
        return "theorem2-chain";
    case IdentityName::theorem3_chain:
        return "theorem3-chain";
    }
    return "unknown";
}

}  // namespace partident
