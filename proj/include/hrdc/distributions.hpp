#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hrdc/hermitian.hpp"
#include "hrdc/scheme_eigen.hpp"

namespace hrdc {

/// A finite set of Hermitian matrices over a shared tower, deduplicated and canonically
/// sorted (row-major lexicographic on entry indices).
struct CodeSet {
    std::shared_ptr<const FieldTower> tower;
    int n = 0;
    std::vector<HermitianMatrix> mats;

    const FieldTower& t() const { return *tower; }
    size_t size() const { return mats.size(); }
};

CodeSet make_code_set(std::shared_ptr<const FieldTower> tower, int n,
                      std::vector<HermitianMatrix> mats);

/// Exact additivity check: a 64-random-pair subtraction probe, then full verification by
/// rebuilding the F_p-span of the set (additive iff the span has the same cardinality).
bool is_additive(const CodeSet& y);

/// Minimal F_p-generating set of an additive code.
std::vector<HermitianMatrix> additive_generators(const CodeSet& y);

struct InnerDistribution {
    int n = 0;
    std::vector<Rational> a;  // A_0 .. A_n
};

struct DualDistribution {
    int n = 0;
    std::vector<Rational> a;  // A'_0 .. A'_n
};

/// A_i = |(Y×Y) ∩ R_i| / |Y|; rank census of the members when Y is additive, all ordered
/// pairs otherwise.
InnerDistribution inner_distribution(const CodeSet& y);

/// Pairwise path regardless of additivity (test oracle for the additive fast path).
InnerDistribution inner_distribution_pairwise(const CodeSet& y);

/// A'_k = Σ_i Q_k(i) A_i. Nonnegativity is a theorem; a violation throws.
DualDistribution dual_distribution(const InnerDistribution& d, const QTable& table);

/// Largest d with A_1 = ... = A_{d-1} = 0; n+1 for a singleton (all of A_1..A_n zero).
int min_distance(const InnerDistribution& d);

/// Largest t with A'_1 = ... = A'_t = 0.
int design_strength(const DualDistribution& d);

/// Y^⊥ = {B : ⟨A,B⟩ = 1 for all A in Y}; requires additive Y and q^{n²} within the cap.
CodeSet dual_code(const CodeSet& y, long long enum_cap = kDefaultEnumCap);

/// Closed-form inner distribution of a d-code that is also an (n-d)-design, from its size.
/// Throws std::domain_error if the formula produces a negative entry or the entries do not
/// sum to the given size.
InnerDistribution thm33_distribution(int n, int d, long q, const BigInt& size);

}  // namespace hrdc
