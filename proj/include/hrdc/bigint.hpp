#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hrdc {

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when an enumeration / matrix-count / node / time cap would be exceeded.
// The CLI maps this to exit code 3.
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// mpz_class lacks a long long constructor; all our 64-bit values fit in long on this platform.
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// (-q)^e as an exact integer, e >= 0.
inline BigInt neg_q_pow(long q, unsigned long e) { return big_pow(BigInt(-q), e); }

/// Binomial C(a,2) = a(a-1)/2, zero for a < 2 (and for negative a by convention a(a-1)/2 >= 0
/// never occurs here; callers pass a >= 0).
inline unsigned long choose2(long a) {
    if (a < 2) return 0;
    return static_cast<unsigned long>(a) * static_cast<unsigned long>(a - 1) / 2;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Rationals print as "num" when integral, "num/den" otherwise.
inline std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace hrdc
