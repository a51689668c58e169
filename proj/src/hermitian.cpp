#include "hrdc/hermitian.hpp"

#include <stdexcept>
#include <string>

namespace hrdc {

MatrixFq2 conj_transpose(const FieldTower& t, const MatrixFq2& a) {
    MatrixFq2 r(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = t.fq2_conj(a.at(i, j));
    return r;
}

MatrixFq2 matrix_add(const FieldTower& t, const MatrixFq2& a, const MatrixFq2& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
    MatrixFq2 r = a;
    for (size_t k = 0; k < r.e.size(); ++k) r.e[k] = t.fq2_add(r.e[k], b.e[k]);
    return r;
}

MatrixFq2 matrix_sub(const FieldTower& t, const MatrixFq2& a, const MatrixFq2& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
    MatrixFq2 r = a;
    for (size_t k = 0; k < r.e.size(); ++k) r.e[k] = t.fq2_sub(r.e[k], b.e[k]);
    return r;
}

MatrixFq2 matrix_mul(const FieldTower& t, const MatrixFq2& a, const MatrixFq2& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
    MatrixFq2 r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                int bkj = b.at(k, j);
                if (bkj == 0) continue;
                r.at(i, j) = t.fq2_add(r.at(i, j), t.fq2_mul(aik, bkj));
            }
        }
    return r;
}

int rank(const FieldTower& t, MatrixFq2 a) {
    int r = 0;
    for (int col = 0; col < a.cols && r < a.rows; ++col) {
        int pivot = -1;
        for (int i = r; i < a.rows; ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
        int inv = t.fq2_inv(a.at(r, col));
        for (int i = r + 1; i < a.rows; ++i) {
            int f = t.fq2_mul(a.at(i, col), inv);
            if (f == 0) continue;
            for (int j = col; j < a.cols; ++j)
                a.at(i, j) = t.fq2_sub(a.at(i, j), t.fq2_mul(f, a.at(r, j)));
        }
        ++r;
    }
    return r;
}

int nullity(const FieldTower& t, MatrixFq2 a) {
    // forward elimination tracking pivot columns; kernel dim = cols - #pivots
    int pivots = 0;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < a.rows; ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(row, j));
        int inv = t.fq2_inv(a.at(row, col));
        for (int i = 0; i < a.rows; ++i) {
            if (i == row) continue;
            int f = t.fq2_mul(a.at(i, col), inv);
            if (f == 0) continue;
            for (int j = 0; j < a.cols; ++j)
                a.at(i, j) = t.fq2_sub(a.at(i, j), t.fq2_mul(f, a.at(row, j)));
        }
        ++pivots;
        ++row;
    }
    return a.cols - pivots;
}

HermitianMatrix::HermitianMatrix(const FieldTower& t, MatrixFq2 a)
    : HermitianMatrix(t, a.rows, std::move(a.e)) {}

HermitianMatrix::HermitianMatrix(const FieldTower& t, int n_, std::vector<int> entries)
    : n(n_), e(std::move(entries)) {
    if (e.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("Hermitian matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (at(j, i) != t.fq2_conj(at(i, j)))
                throw std::invalid_argument("matrix is not Hermitian at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
}

MatrixFq2 HermitianMatrix::as_matrix() const {
    MatrixFq2 m(n, n);
    m.e = e;
    return m;
}

HermitianMatrix hermitian_zero(int n) {
    HermitianMatrix z;
    z.n = n;
    z.e.assign(static_cast<size_t>(n) * n, 0);
    return z;
}

HermitianMatrix hermitian_sub(const FieldTower& t, const HermitianMatrix& a,
                              const HermitianMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("matrix dimension mismatch");
    HermitianMatrix r;
    r.n = a.n;
    r.e.resize(a.e.size());
    for (size_t k = 0; k < a.e.size(); ++k) r.e[k] = t.fq2_sub(a.e[k], b.e[k]);
    return r;
}

int rank(const FieldTower& t, const HermitianMatrix& a) { return rank(t, a.as_matrix()); }

BigInt hermitian_space_size(const FieldTower& t, int n) {
    return big_pow(to_big(t.q()), static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
}

void enumerate_hermitian(const FieldTower& t, int n,
                         const std::function<void(const HermitianMatrix&)>& visit) {
    // free coordinates in row-major order: (0,0),(0,1),...,(1,1),... for i <= j
    struct Slot {
        int i, j;
        long long radix;  // q for diagonal, q² above it
    };
    std::vector<Slot> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) slots.push_back({i, j, i == j ? t.q() : t.q2()});
    std::vector<int> v(slots.size(), 0);
    HermitianMatrix a = hermitian_zero(n);
    while (true) {
        for (size_t s = 0; s < slots.size(); ++s) {
            const Slot& sl = slots[s];
            a.e[static_cast<size_t>(sl.i) * n + sl.j] = v[s];
            a.e[static_cast<size_t>(sl.j) * n + sl.i] = t.fq2_conj(v[s]);
        }
        visit(a);
        int s = static_cast<int>(slots.size()) - 1;
        while (s >= 0) {
            if (++v[static_cast<size_t>(s)] < slots[static_cast<size_t>(s)].radix) break;
            v[static_cast<size_t>(s)] = 0;
            --s;
        }
        if (s < 0) break;
    }
}

int pairing(const FieldTower& t, const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("pairing: matrix dimension mismatch");
    // tr(A*B) = Σ_{i,k} conj(A[k][i])·B[k][i]
    int acc = 0;
    for (size_t k = 0; k < a.e.size(); ++k)
        acc = t.fq2_add(acc, t.fq2_mul(t.fq2_conj(a.e[k]), b.e[k]));
    if (!t.in_embedded_fq(acc)) throw std::logic_error("tr(A*B) left F_q for Hermitian A, B");
    return t.abs_trace_fp(acc);
}

CyclotomicInteger char_sum(const FieldTower& t, const std::vector<HermitianMatrix>& s,
                           const HermitianMatrix& b) {
    CyclotomicInteger acc(t.p());
    for (const HermitianMatrix& a : s) acc.add_root_power(pairing(t, a, b));
    return acc;
}

int evaluate_form(const FieldTower& t, const HermitianForm& h, const TopElem& x,
                  const TopElem& y) {
    TopElem acc = t.top_zero();
    for (const FormTerm& term : h.terms) {
        if (t.top_is_zero(term.c)) continue;
        TopElem prod = t.top_mul(term.c, t.top_frobenius(x, term.e1));
        prod = t.top_mul(prod, t.top_frobenius(y, term.e2));
        acc = t.top_add(acc, prod);
    }
    return t.top_trace(acc);
}

HermitianMatrix form_to_matrix(const FieldTower& t, const HermitianForm& h) {
    int n = t.n();
    // basis powers ξ_i = β^{i-1}
    std::vector<TopElem> xi(static_cast<size_t>(n));
    xi[0] = t.top_one();
    for (int i = 1; i < n; ++i) xi[static_cast<size_t>(i)] = t.top_mul(xi[static_cast<size_t>(i - 1)], t.top_basis(1));
    MatrixFq2 g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.at(i, j) = evaluate_form(t, h, xi[static_cast<size_t>(i)], xi[static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (g.at(j, i) != t.fq2_conj(g.at(i, j)))
                throw std::domain_error("form evaluation is not conjugate-symmetric");
    return HermitianMatrix(t, std::move(g));
}

int radical_dim(const FieldTower& t, const HermitianForm& h) {
    int n = t.n();
    std::vector<TopElem> xi(static_cast<size_t>(n));
    xi[0] = t.top_one();
    for (int i = 1; i < n; ++i) xi[static_cast<size_t>(i)] = t.top_mul(xi[static_cast<size_t>(i - 1)], t.top_basis(1));
    // x = Σ x_i ξ_i is in the radical iff Σ_i x_i H(ξ_i, ξ_j) = 0 for all j; kernel of the
    // transposed evaluation matrix
    MatrixFq2 sys(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            sys.at(j, i) = evaluate_form(t, h, xi[static_cast<size_t>(i)], xi[static_cast<size_t>(j)]);
    return nullity(t, std::move(sys));
}

}  // namespace hrdc
