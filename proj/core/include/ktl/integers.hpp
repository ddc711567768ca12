#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "ktl/errors.hpp"

namespace ktl {

// Arbitrary-precision integer.  Expression templates are disabled so that
// `auto` always deduces a plain value.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Quotient of exact division; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw ExactDivisionFailed("exact_div: division by zero");
    Int q = a / b;
    if (q * b != a) throw ExactDivisionFailed("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

// Floor division and the matching nonnegative remainder.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r = a - floor_div(a, b) * b;
    return r;
}

// Division rounded to the nearest integer; used by pivoting reductions to
// keep coefficient growth down.
inline Int round_div(const Int& a, const Int& b) {
    Int q = floor_div(a, b);
    Int r = a - q * b;
    if (2 * r >= abs_int(b)) ++q;
    return q;
}

inline Int pow_int(const Int& base, std::uint64_t e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace ktl
