#pragma once

// Arbitrary-precision rationals. GMP's mpq_class keeps values canonical
// (coprime parts, positive denominator, zero as 0/1) after every operation.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qeuler {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const BigRat& r) { return sgn(r) == 0; }

/// Exact decimal-free string "a" or "a/b".
inline std::string to_string(const BigRat& r) { return r.get_str(); }

inline BigRat parse_rat(std::string_view text) {
    BigRat r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

inline BigRat pow(const BigRat& base, unsigned exp) {
    BigRat result = 1;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}


} // namespace qeuler
