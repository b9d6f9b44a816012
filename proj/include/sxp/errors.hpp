#pragma once

#include <stdexcept>
#include <string>

namespace sxp {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SXP_ERROR_TYPE(name)                                        \
    struct name : error {                                           \
        explicit name(const std::string& msg) : error(msg) {}       \
    }

SXP_ERROR_TYPE(not_nested);
SXP_ERROR_TYPE(size_mismatch);
SXP_ERROR_TYPE(length_mismatch);
SXP_ERROR_TYPE(bad_bead_count);
SXP_ERROR_TYPE(quotient_mismatch);
SXP_ERROR_TYPE(illegal_move);
SXP_ERROR_TYPE(not_componentwise_skew);
SXP_ERROR_TYPE(not_a_strip);
SXP_ERROR_TYPE(operator_undefined);
SXP_ERROR_TYPE(not_in_domain);
SXP_ERROR_TYPE(shape_mismatch);
SXP_ERROR_TYPE(degree_mismatch);
SXP_ERROR_TYPE(not_unitriangular_consistent);
SXP_ERROR_TYPE(overflow);
SXP_ERROR_TYPE(parse_error);

#undef SXP_ERROR_TYPE

} // namespace sxp
