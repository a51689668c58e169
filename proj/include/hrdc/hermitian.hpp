#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hrdc/cyclotomic.hpp"
#include "hrdc/field_tower.hpp"

namespace hrdc {

/// Dense rows×cols matrix over F_{q²}, entries as dense indices.
struct MatrixFq2 {
    int rows = 0, cols = 0;
    std::vector<int> e;  // row-major

    MatrixFq2() = default;
    MatrixFq2(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, 0) {}

    int& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    int at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
    bool operator==(const MatrixFq2& o) const = default;
};

MatrixFq2 conj_transpose(const FieldTower& t, const MatrixFq2& a);
MatrixFq2 matrix_add(const FieldTower& t, const MatrixFq2& a, const MatrixFq2& b);
MatrixFq2 matrix_sub(const FieldTower& t, const MatrixFq2& a, const MatrixFq2& b);
MatrixFq2 matrix_mul(const FieldTower& t, const MatrixFq2& a, const MatrixFq2& b);

/// Rank over F_{q²} by exact Gaussian elimination, column pivot = first nonzero row.
int rank(const FieldTower& t, MatrixFq2 a);
/// Dimension of the right kernel {x : a·x = 0}; its own elimination, not n - rank().
int nullity(const FieldTower& t, MatrixFq2 a);

/// n×n matrix with A* = A. Entries are F_{q²} indices; the constructor validates the
/// conjugate-symmetry invariant (diagonal entries then lie in F_q automatically).
struct HermitianMatrix {
    int n = 0;
    std::vector<int> e;  // row-major

    HermitianMatrix() = default;
    HermitianMatrix(const FieldTower& t, MatrixFq2 a);
    HermitianMatrix(const FieldTower& t, int n_, std::vector<int> entries);

    int at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
    MatrixFq2 as_matrix() const;
    bool operator==(const HermitianMatrix& o) const = default;
    /// Canonical total order: row-major lexicographic on entry indices.
    bool operator<(const HermitianMatrix& o) const { return e < o.e; }
};

HermitianMatrix hermitian_zero(int n);
HermitianMatrix hermitian_sub(const FieldTower& t, const HermitianMatrix& a,
                              const HermitianMatrix& b);
int rank(const FieldTower& t, const HermitianMatrix& a);

/// Visits all q^{n²} Hermitian matrices: free coordinates are the diagonal (F_q values) and
/// the strict upper triangle (F_{q²} values), iterated in ascending lexicographic order of the
/// row-major free-coordinate sequence.
void enumerate_hermitian(const FieldTower& t, int n,
                         const std::function<void(const HermitianMatrix&)>& visit);
BigInt hermitian_space_size(const FieldTower& t, int n);

/// Character pairing exponent: ⟨A,B⟩ = ζ_p^t with t = Tr_{F_q/F_p}(tr(A*B)).
int pairing(const FieldTower& t, const HermitianMatrix& a, const HermitianMatrix& b);

/// Exact Σ_{A∈S} ζ_p^{pairing(A,B)} as a count vector over root powers.
CyclotomicInteger char_sum(const FieldTower& t, const std::vector<HermitianMatrix>& s,
                           const HermitianMatrix& b);

/// Hermitian form on F_{q^{2n}} as a formal sum of terms c · x^{q^{e1}} · y^{q^{e2}} inside a
/// relative trace: H(x,y) = Tr(Σ terms).
struct FormTerm {
    TopElem c;
    int e1 = 0, e2 = 0;
};

struct HermitianForm {
    std::vector<FormTerm> terms;
};

/// H(x,y) as an F_{q²} index.
int evaluate_form(const FieldTower& t, const HermitianForm& h, const TopElem& x, const TopElem& y);

/// Gram matrix w.r.t. the polynomial basis ξ_i = β^{i-1} (β = adjoined top generator).
/// Throws std::domain_error if the evaluation is not conjugate-symmetric.
HermitianMatrix form_to_matrix(const FieldTower& t, const HermitianForm& h);

/// dim over F_{q²} of {x : H(x, ξ_j) = 0 for all j}; solves the linear system directly.
int radical_dim(const FieldTower& t, const HermitianForm& h);

}  // namespace hrdc
