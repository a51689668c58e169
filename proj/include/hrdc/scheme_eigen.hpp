#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrdc/bigint.hpp"
#include "hrdc/field_tower.hpp"
#include "hrdc/hermitian.hpp"

namespace hrdc {

/// Negative q-binomial coefficient: Π_{i=1..l} ((-q)^{m-i+1} - 1)/((-q)^i - 1).
/// Exact integer; zero for m < l; memoized per (m, l, q).
BigInt neg_q_binomial(long m, long l, long q);

/// Number of rank-k matrices in X(n,q): (-1)^k [n over k] Π_{j<k} ((-q)^n + (-q)^j).
BigInt count_rank(int n, long q, int k);

/// q as a prime power: returns (p, m) with q = p^m; throws if q is not a prime power.
std::pair<int, int> factor_prime_power(long q);

/// (n+1)×(n+1) table of scheme eigenvalues Q_k(i); rows indexed by k, columns by i.
struct QTable {
    int n = 0;
    long q = 0;
    std::string method;  // explicit | recurrence | direct
    std::vector<BigInt> t;

    const BigInt& at(int k, int i) const { return t[static_cast<size_t>(k) * (n + 1) + i]; }
    BigInt& at(int k, int i) { return t[static_cast<size_t>(k) * (n + 1) + i]; }
};

QTable q_explicit(int n, long q);
QTable q_recurrence(int n, long q);

inline constexpr long long kDefaultEnumCap = 1LL << 20;

/// Brute-force character sums over each rank class against the diagonal rank-i representative.
QTable q_direct(int n, long q, long long enum_cap = kDefaultEnumCap);

/// Character sum of the rank-k class against a caller-supplied representative; used to check
/// independence of the representative choice.
BigInt q_direct_column_entry(const FieldTower& tower, int k, const HermitianMatrix& b);

struct IdentityReport {
    bool pass = true;
    std::string failure;  // first failing identity with indices, empty when pass
};

/// Exact checks of the inversion system, the Kronecker-δ inversion, the q-binomial theorem at
/// integer points, and the Pascal identity.
IdentityReport verify_identities(int n, long q);

// Individual checkers (exposed so tests can fault-inject a tampered table).
std::optional<std::string> check_inversion_system(const QTable& table);
std::optional<std::string> check_kronecker_inversion(int n, long q);
std::optional<std::string> check_qbinomial_theorem(int n, long q);
std::optional<std::string> check_pascal_identity(int n, long q);

}  // namespace hrdc
