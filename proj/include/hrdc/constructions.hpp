#pragma once

#include <string>

#include "hrdc/distributions.hpp"

namespace hrdc {

inline constexpr long long kDefaultMatrixCap = 1LL << 22;

enum class Family { Thm41, Thm42, ZeroDiag, SymmetricDn, Thm43 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct ConstructionSpec {
    Family family;
    int n = 0;
    int d = 0;  // thm41/thm42 only; implied 2 / n / n for the other families
    long q = 0;
};

/// The minimum distance the construction guarantees.
int family_distance(const ConstructionSpec& spec);
/// Exact number of matrices the construction emits.
BigInt construction_size(const ConstructionSpec& spec);
/// Whether the resulting set is additive.
bool family_additive(Family f);

CodeSet construct(const ConstructionSpec& spec, long long matrix_cap = kDefaultMatrixCap);

/// Rank census of the construction without materializing the set (valid as the inner
/// distribution for the additive families).
std::vector<BigInt> construction_rank_census(const ConstructionSpec& spec,
                                             long long enum_cap = kDefaultMatrixCap);

// d-code of size q^{n(n-d+1)} for n-d odd, 1 <= d <= n-1
CodeSet construct_thm41(int n, int d, long q, long long matrix_cap = kDefaultMatrixCap);
// d-code of size q^{n(n-d+1)} for n, d both odd, 1 <= d <= n
CodeSet construct_thm42(int n, int d, long q, long long matrix_cap = kDefaultMatrixCap);
// all zero-diagonal matrices: a maximal additive 2-code
CodeSet construct_zero_diag(int n, long q, long long matrix_cap = kDefaultMatrixCap);
// F_q-space of q^n symmetric matrices with every nonzero member nonsingular: an n-code
CodeSet construct_symmetric_dn(int n, long q, long long matrix_cap = kDefaultMatrixCap);
// non-additive n-code of size q^n + 1 for even n
CodeSet construct_thm43(int n, long q, long long matrix_cap = kDefaultMatrixCap);

/// The q^{2·half_n} multiplication matrices of F_{(q²)^{half_n}} over F_{q²} in the polynomial
/// basis: pairwise differences nonsingular; contains the zero and identity matrices.
std::vector<MatrixFq2> construct_spread_set(int half_n, long q,
                                            long long matrix_cap = kDefaultMatrixCap);

}  // namespace hrdc
