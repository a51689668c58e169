#pragma once

#include <vector>

#include "hrdc/bigint.hpp"

namespace hrdc {

/// Exact element of Z[ζ_p]: a length-p count vector c with value Σ_t c[t]·ζ_p^t.
/// Two vectors represent the same element iff they differ by a multiple of (1,...,1),
/// the relation 1 + ζ + ... + ζ^{p-1} = 0.
class CyclotomicInteger {
  public:
    explicit CyclotomicInteger(int p) : c_(static_cast<size_t>(p), 0) {}

    int p() const { return static_cast<int>(c_.size()); }
    const BigInt& coeff(int t) const { return c_.at(static_cast<size_t>(t)); }

    static CyclotomicInteger root_power(int p, int t) {
        CyclotomicInteger z(p);
        z.c_.at(static_cast<size_t>(t)) = 1;
        return z;
    }

    void add_root_power(int t, const BigInt& count = 1) { c_.at(static_cast<size_t>(t)) += count; }

    CyclotomicInteger& operator+=(const CyclotomicInteger& o);
    CyclotomicInteger& operator-=(const CyclotomicInteger& o);
    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) {
        return a += b;
    }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) {
        return a -= b;
    }

    /// Adds k to every coordinate; the represented value is unchanged.
    void shift_all(const BigInt& k);

    /// Subtracts the minimum coordinate, leaving at least one zero coordinate. Idempotent.
    CyclotomicInteger normalized() const;

    bool is_zero() const;
    bool operator==(const CyclotomicInteger& o) const;

    /// True iff c[1] = ... = c[p-1], i.e. the value lies in Z.
    bool is_rational_integer() const;
    /// The integer value c[0] - c[1]; throws std::domain_error if not rational.
    BigInt to_integer() const;

  private:
    std::vector<BigInt> c_;
};

}  // namespace hrdc
