#include "hrdc/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrdc {

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("cyclotomic order mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("cyclotomic order mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

void CyclotomicInteger::shift_all(const BigInt& k) {
    for (BigInt& v : c_) v += k;
}

CyclotomicInteger CyclotomicInteger::normalized() const {
    CyclotomicInteger r = *this;
    BigInt mn = *std::min_element(r.c_.begin(), r.c_.end());
    for (BigInt& v : r.c_) v -= mn;
    return r;
}

bool CyclotomicInteger::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [&](const BigInt& v) { return v == c_[0]; });
}

bool CyclotomicInteger::operator==(const CyclotomicInteger& o) const {
    if (o.c_.size() != c_.size()) return false;
    BigInt d = c_[0] - o.c_[0];
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] - o.c_[i] != d) return false;
    return true;
}

bool CyclotomicInteger::is_rational_integer() const {
    for (size_t i = 2; i < c_.size(); ++i)
        if (c_[i] != c_[1]) return false;
    return true;
}

BigInt CyclotomicInteger::to_integer() const {
    if (c_.size() == 1) return c_[0];  // p = 1 never occurs, but keep the degenerate case total
    if (!is_rational_integer()) throw std::domain_error("cyclotomic sum is not a rational integer");
    return c_[0] - c_[1];
}

}  // namespace hrdc
