#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace deltasieve {

using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

inline bool is_even(const BigInt &x) { return x % 2 == 0; }
inline bool is_odd(const BigInt &x) { return x % 2 != 0; }

/// Nonnegative residue of x mod m (m > 0), regardless of the sign of x.
inline BigInt mod_floor(const BigInt &x, const BigInt &m) {
    BigInt r = x % m;
    if (r < 0)
        r += m;
    return r;
}

/// Floor of the square root: the unique r with r*r <= n < (r+1)*(r+1).
/// Throws std::domain_error for negative input.
BigInt isqrt_floor(const BigInt &n);

/// Returns the exact root when n is a perfect square, nothing otherwise.
std::optional<BigInt> exact_sqrt(const BigInt &n);

inline std::string to_string(const BigInt &x) { return x.str(); }

BigInt parse_bigint(const std::string &s);

} // namespace deltasieve
