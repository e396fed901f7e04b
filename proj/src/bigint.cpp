#include "deltasieve/bigint.hpp"

#include <stdexcept>

namespace deltasieve {

BigInt isqrt_floor(const BigInt &n) {
    if (n < 0)
        throw std::domain_error("isqrt_floor: negative input");
    if (n < 2)
        return n;
    // Newton iteration seeded from the bit length; converges from above.
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    BigInt x = BigInt(1) << ((bits + 1) / 2);
    while (true) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x)
            break;
        x = y;
    }
    return x;
}

std::optional<BigInt> exact_sqrt(const BigInt &n) {
    if (n < 0)
        return std::nullopt;
    // Squares end in 0,1,4,5,6,9 mod 16 -> quick reject for most inputs.
    static const bool residue_ok[16] = {true,  true,  false, false, true,  false, false, false,
                                        false, true,  false, false, false, false, false, false};
    if (!residue_ok[static_cast<unsigned>(n & 15)])
        return std::nullopt;
    BigInt r = isqrt_floor(n);
    if (r * r == n)
        return r;
    return std::nullopt;
}

BigInt parse_bigint(const std::string &s) {
    if (s.empty())
        throw std::invalid_argument("parse_bigint: empty string");
    try {
        return BigInt(s);
    } catch (const std::exception &) {
        throw std::invalid_argument("parse_bigint: not an integer: " + s);
    }
}

} // namespace deltasieve
