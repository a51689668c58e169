#include "hrdc/constructions.hpp"

#include <algorithm>

#include "hrdc/parallel.hpp"

namespace hrdc {

std::string family_name(Family f) {
    switch (f) {
        case Family::Thm41: return "thm41";
        case Family::Thm42: return "thm42";
        case Family::ZeroDiag: return "zero-diag";
        case Family::SymmetricDn: return "sym-dn";
        case Family::Thm43: return "thm43";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "thm41") return Family::Thm41;
    if (name == "thm42") return Family::Thm42;
    if (name == "zero-diag") return Family::ZeroDiag;
    if (name == "sym-dn") return Family::SymmetricDn;
    if (name == "thm43") return Family::Thm43;
    throw UsageError("unknown construction family: " + name);
}

bool family_additive(Family f) { return f != Family::Thm43; }

int family_distance(const ConstructionSpec& spec) {
    switch (spec.family) {
        case Family::Thm41:
        case Family::Thm42: return spec.d;
        case Family::ZeroDiag: return 2;
        case Family::SymmetricDn:
        case Family::Thm43: return spec.n;
    }
    return 0;
}

BigInt construction_size(const ConstructionSpec& spec) {
    int n = spec.n;
    long q = spec.q;
    switch (spec.family) {
        case Family::Thm41:
        case Family::Thm42:
            return big_pow(BigInt(q), static_cast<unsigned long>(n) *
                                          static_cast<unsigned long>(n - spec.d + 1));
        case Family::ZeroDiag:
            return big_pow(BigInt(q), static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1));
        case Family::SymmetricDn: return big_pow(BigInt(q), static_cast<unsigned long>(n));
        case Family::Thm43: return big_pow(BigInt(q), static_cast<unsigned long>(n)) + 1;
    }
    return 0;
}

namespace {

// A construction realized as ordinal -> matrix over a fixed tower; ordinal order is the
// ascending lexicographic order of the parameter coefficient tuple.
struct Generator {
    std::shared_ptr<const FieldTower> tower;
    int n = 0;
    std::uint64_t total = 0;
    std::function<HermitianMatrix(std::uint64_t)> at;
};

void validate_parity(const ConstructionSpec& spec) {
    int n = spec.n, d = spec.d;
    switch (spec.family) {
        case Family::Thm41:
            if (d < 1 || d > n - 1 || (n - d) % 2 == 0)
                throw std::invalid_argument("thm41 needs 1 <= d <= n-1 with n-d odd");
            break;
        case Family::Thm42:
            if (n % 2 == 0 || d % 2 == 0 || d < 1 || d > n)
                throw std::invalid_argument("thm42 needs odd n and odd d with 1 <= d <= n");
            break;
        case Family::ZeroDiag:
            if (n < 2) throw std::invalid_argument("zero-diag needs n >= 2");
            break;
        case Family::SymmetricDn:
            if (n < 1) throw std::invalid_argument("sym-dn needs n >= 1");
            break;
        case Family::Thm43:
            if (n < 2 || n % 2 != 0) throw std::invalid_argument("thm43 needs even n >= 2");
            break;
    }
}

std::uint64_t checked_total(const ConstructionSpec& spec, long long cap) {
    BigInt size = construction_size(spec);
    if (size > to_big(cap))
        throw CapExceeded("construction would emit " + size.get_str() + " matrices, cap is " +
                          std::to_string(cap));
    return static_cast<std::uint64_t>(size.get_ui());
}

// Gram matrix of a single parameter component; sums of these give the full parameter space
// since every term is additive in its parameter.
using GramEntries = std::vector<int>;

GramEntries gram_of(const FieldTower& t, const HermitianForm& form) {
    return form_to_matrix(t, form).e;
}

HermitianMatrix sum_components(const FieldTower& t, int n,
                               const std::vector<const GramEntries*>& parts) {
    HermitianMatrix m = hermitian_zero(n);
    for (const GramEntries* part : parts)
        for (size_t k = 0; k < m.e.size(); ++k) m.e[k] = t.fq2_add(m.e[k], (*part)[k]);
    return m;
}

// thm41: H(x,y) = Tr(Σ_j a_j·x·y^{q^{2j-1}} + a_j^q·x^{q^{2j}}·y^q), a_j over the top field
Generator make_thm41(const ConstructionSpec& spec, long long cap) {
    validate_parity(spec);
    auto [p, m] = factor_prime_power(spec.q);
    auto tower = FieldTower::build(p, m, spec.n);
    int n = spec.n;
    int D = (n - spec.d + 1) / 2;
    long long q2 = tower->q2();

    // component (j, coefficient position, coefficient value) -> Gram contribution
    auto comps = std::make_shared<std::vector<std::vector<GramEntries>>>();
    for (int j = 1; j <= D; ++j)
        for (int pos = 0; pos < n; ++pos) {
            std::vector<GramEntries> per_value;
            per_value.reserve(static_cast<size_t>(q2));
            for (long long v = 0; v < q2; ++v) {
                TopElem a = tower->top_zero();
                a[static_cast<size_t>(pos)] = static_cast<int>(v);
                HermitianForm h;
                h.terms.push_back({a, 0, 2 * j - 1});
                h.terms.push_back({tower->top_frobenius(a, 1), 2 * j, 1});
                per_value.push_back(gram_of(*tower, h));
            }
            comps->push_back(std::move(per_value));
        }

    Generator g;
    g.tower = tower;
    g.n = n;
    g.total = checked_total(spec, cap);
    g.at = [tower, n, comps, q2](std::uint64_t ordinal) {
        std::vector<const GramEntries*> parts;
        for (size_t c = comps->size(); c-- > 0;) {
            parts.push_back(&(*comps)[c][static_cast<size_t>(ordinal % q2)]);
            ordinal /= static_cast<std::uint64_t>(q2);
        }
        return sum_components(*tower, n, parts);
    };
    return g;
}

// thm42: H(x,y) = Tr(a_0·x·y^{q^n} + Σ_j a_j·x·y^{q^{n-2j}} + a_j^q·x^{q^{n-2j+1}}·y^q),
// a_0 over F_{q^n}, a_j over the top field
Generator make_thm42(const ConstructionSpec& spec, long long cap) {
    validate_parity(spec);
    auto [p, m] = factor_prime_power(spec.q);
    auto tower = FieldTower::build(p, m, spec.n);
    int n = spec.n;
    int D = (n - spec.d) / 2;
    long long q2 = tower->q2();

    auto a0_grams = std::make_shared<std::vector<GramEntries>>();
    for (const TopElem& a0 : tower->subfield_fqn()) {
        HermitianForm h;
        h.terms.push_back({a0, 0, n});
        a0_grams->push_back(gram_of(*tower, h));
    }
    std::uint64_t a0_count = a0_grams->size();

    auto comps = std::make_shared<std::vector<std::vector<GramEntries>>>();
    for (int j = 1; j <= D; ++j)
        for (int pos = 0; pos < n; ++pos) {
            std::vector<GramEntries> per_value;
            per_value.reserve(static_cast<size_t>(q2));
            for (long long v = 0; v < q2; ++v) {
                TopElem a = tower->top_zero();
                a[static_cast<size_t>(pos)] = static_cast<int>(v);
                HermitianForm h;
                h.terms.push_back({a, 0, n - 2 * j});
                h.terms.push_back({tower->top_frobenius(a, 1), n - 2 * j + 1, 1});
                per_value.push_back(gram_of(*tower, h));
            }
            comps->push_back(std::move(per_value));
        }

    Generator g;
    g.tower = tower;
    g.n = n;
    g.total = checked_total(spec, cap);
    g.at = [tower, n, comps, a0_grams, a0_count, q2](std::uint64_t ordinal) {
        std::vector<const GramEntries*> parts;
        for (size_t c = comps->size(); c-- > 0;) {
            parts.push_back(&(*comps)[c][static_cast<size_t>(ordinal % q2)]);
            ordinal /= static_cast<std::uint64_t>(q2);
        }
        parts.push_back(&(*a0_grams)[static_cast<size_t>(ordinal % a0_count)]);
        return sum_components(*tower, n, parts);
    };
    return g;
}

Generator make_zero_diag(const ConstructionSpec& spec, long long cap) {
    validate_parity(spec);
    auto [p, m] = factor_prime_power(spec.q);
    auto tower = FieldTower::build(p, m, spec.n);
    int n = spec.n;
    long long q2 = tower->q2();
    std::vector<std::pair<int, int>> uppers;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) uppers.emplace_back(i, j);

    Generator g;
    g.tower = tower;
    g.n = n;
    g.total = checked_total(spec, cap);
    g.at = [tower, n, uppers, q2](std::uint64_t ordinal) {
        HermitianMatrix a = hermitian_zero(n);
        for (size_t s = uppers.size(); s-- > 0;) {
            int v = static_cast<int>(ordinal % q2);
            ordinal /= static_cast<std::uint64_t>(q2);
            auto [i, j] = uppers[s];
            a.e[static_cast<size_t>(i) * n + j] = v;
            a.e[static_cast<size_t>(j) * n + i] = tower->fq2_conj(v);
        }
        return a;
    };
    return g;
}

// Gram matrices of B_a(x,y) = Tr_{F_{q^n}/F_q}(a·x·y) over a basis {1, γ, ..., γ^{n-1}} of
// F_{q^n}; symmetric with entries in F_q, hence Hermitian, and nonsingular for a != 0.
Generator make_symmetric_dn(const ConstructionSpec& spec, long long cap) {
    validate_parity(spec);
    auto [p, m] = factor_prime_power(spec.q);
    auto tower = FieldTower::build(p, m, spec.n);
    int n = spec.n;
    const auto& sub = tower->subfield_fqn();

    // absolute trace of the subfield down to F_q, as an embedded F_{q²} index
    auto trace_fq = [&](const TopElem& u) {
        TopElem acc = u;
        TopElem cur = u;
        for (int k = 1; k < n; ++k) {
            cur = tower->top_frobenius(cur, 1);
            acc = tower->top_add(acc, cur);
        }
        for (int i = 1; i < n; ++i)
            if (acc[static_cast<size_t>(i)] != 0)
                throw std::logic_error("subfield trace left the ground field");
        if (!tower->in_embedded_fq(acc[0]))
            throw std::logic_error("subfield trace left the ground field");
        return acc[0];
    };

    // first subfield element whose powers 1, γ, ..., γ^{n-1} are F_q-independent
    auto fq_independent = [&](const std::vector<TopElem>& vecs) {
        const auto& fq = tower->fq();
        int rows = static_cast<int>(vecs.size());
        int cols = 2 * n;
        std::vector<std::vector<int>> mat(static_cast<size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            std::vector<int> coords;
            for (int c : vecs[static_cast<size_t>(r)])
                for (int digit : tower->fq2().digits(c)) coords.push_back(digit);
            mat[static_cast<size_t>(r)] = std::move(coords);
        }
        int rank_count = 0;
        int row = 0;
        for (int col = 0; col < cols && row < rows; ++col) {
            int pr = -1;
            for (int r = row; r < rows; ++r)
                if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(mat[static_cast<size_t>(pr)], mat[static_cast<size_t>(row)]);
            int inv = fq.inv(mat[static_cast<size_t>(row)][static_cast<size_t>(col)]);
            for (int r = row + 1; r < rows; ++r) {
                int f = fq.mul(mat[static_cast<size_t>(r)][static_cast<size_t>(col)], inv);
                if (f == 0) continue;
                for (int c2 = col; c2 < cols; ++c2)
                    mat[static_cast<size_t>(r)][static_cast<size_t>(c2)] =
                        fq.sub(mat[static_cast<size_t>(r)][static_cast<size_t>(c2)],
                               fq.mul(f, mat[static_cast<size_t>(row)][static_cast<size_t>(c2)]));
            }
            ++rank_count;
            ++row;
        }
        return rank_count == rows;
    };

    TopElem gamma;
    bool found = false;
    for (const TopElem& cand : sub) {
        std::vector<TopElem> powers;
        TopElem pw = tower->top_one();
        for (int i = 0; i < n; ++i) {
            powers.push_back(pw);
            pw = tower->top_mul(pw, cand);
        }
        if (fq_independent(powers)) {
            gamma = cand;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("no generator of F_{q^n} over F_q found");

    std::vector<TopElem> gamma_pow(static_cast<size_t>(2 * n - 1));
    gamma_pow[0] = tower->top_one();
    for (int s = 1; s <= 2 * n - 2; ++s)
        gamma_pow[static_cast<size_t>(s)] = tower->top_mul(gamma_pow[static_cast<size_t>(s - 1)], gamma);

    auto grams = std::make_shared<std::vector<GramEntries>>();
    grams->reserve(sub.size());
    for (const TopElem& a : sub) {
        std::vector<int> tr(static_cast<size_t>(2 * n - 1));
        for (int s = 0; s <= 2 * n - 2; ++s)
            tr[static_cast<size_t>(s)] = trace_fq(tower->top_mul(a, gamma_pow[static_cast<size_t>(s)]));
        GramEntries e(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) e[static_cast<size_t>(i) * n + j] = tr[static_cast<size_t>(i + j)];
        grams->push_back(std::move(e));
    }

    Generator g;
    g.tower = tower;
    g.n = n;
    g.total = checked_total(spec, cap);
    g.at = [tower, n, grams](std::uint64_t ordinal) {
        HermitianMatrix a;
        a.n = n;
        a.e = (*grams)[static_cast<size_t>(ordinal)];
        return a;
    };
    return g;
}

Generator make_thm43(const ConstructionSpec& spec, long long cap) {
    validate_parity(spec);
    auto [p, m] = factor_prime_power(spec.q);
    auto tower = FieldTower::build(p, m, spec.n);
    int n = spec.n;
    int h = n / 2;
    auto z = std::make_shared<std::vector<MatrixFq2>>(construct_spread_set(h, spec.q, cap));

    Generator g;
    g.tower = tower;
    g.n = n;
    g.total = checked_total(spec, cap);
    g.at = [tower, n, h, z](std::uint64_t ordinal) {
        HermitianMatrix out;
        out.n = n;
        out.e.assign(static_cast<size_t>(n) * n, 0);
        if (ordinal == z->size()) {
            // the extra member [[O,O],[O,I]]
            for (int i = h; i < n; ++i) out.e[static_cast<size_t>(i) * n + i] = 1;
            return out;
        }
        const MatrixFq2& a = (*z)[static_cast<size_t>(ordinal)];
        MatrixFq2 astar = conj_transpose(*tower, a);
        MatrixFq2 aastar = matrix_mul(*tower, a, astar);
        for (int i = 0; i < h; ++i) {
            out.e[static_cast<size_t>(i) * n + i] = 1;  // I block
            for (int j = 0; j < h; ++j) {
                out.e[static_cast<size_t>(i) * n + (h + j)] = astar.at(i, j);
                out.e[static_cast<size_t>(h + i) * n + j] = a.at(i, j);
                out.e[static_cast<size_t>(h + i) * n + (h + j)] = aastar.at(i, j);
            }
        }
        return out;
    };
    return g;
}

Generator make_generator(const ConstructionSpec& spec, long long cap) {
    switch (spec.family) {
        case Family::Thm41: return make_thm41(spec, cap);
        case Family::Thm42: return make_thm42(spec, cap);
        case Family::ZeroDiag: return make_zero_diag(spec, cap);
        case Family::SymmetricDn: return make_symmetric_dn(spec, cap);
        case Family::Thm43: return make_thm43(spec, cap);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

CodeSet construct(const ConstructionSpec& spec, long long matrix_cap) {
    Generator g = make_generator(spec, matrix_cap);
    std::vector<HermitianMatrix> mats;
    mats.reserve(g.total);
    for (std::uint64_t i = 0; i < g.total; ++i) mats.push_back(g.at(i));
    CodeSet y = make_code_set(g.tower, g.n, std::move(mats));
    if (y.size() != g.total)
        throw std::logic_error("construction parameter map is not injective: expected " +
                               std::to_string(g.total) + ", got " + std::to_string(y.size()));
    return y;
}

std::vector<BigInt> construction_rank_census(const ConstructionSpec& spec, long long enum_cap) {
    Generator g = make_generator(spec, enum_cap);
    std::vector<std::vector<long>> block_census(
        max_threads(), std::vector<long>(static_cast<size_t>(g.n) + 1, 0));
    parallel_blocks(g.total, [&](unsigned block, std::uint64_t begin, std::uint64_t end) {
        std::vector<long>& census = block_census[block];
        for (std::uint64_t i = begin; i < end; ++i)
            census[static_cast<size_t>(rank(*g.tower, g.at(i)))]++;
    });
    std::vector<BigInt> census(static_cast<size_t>(g.n) + 1, BigInt(0));
    for (const auto& block : block_census)
        for (size_t i = 0; i < census.size(); ++i) census[i] += block[i];
    return census;
}

CodeSet construct_thm41(int n, int d, long q, long long matrix_cap) {
    return construct({Family::Thm41, n, d, q}, matrix_cap);
}

CodeSet construct_thm42(int n, int d, long q, long long matrix_cap) {
    return construct({Family::Thm42, n, d, q}, matrix_cap);
}

CodeSet construct_zero_diag(int n, long q, long long matrix_cap) {
    return construct({Family::ZeroDiag, n, 2, q}, matrix_cap);
}

CodeSet construct_symmetric_dn(int n, long q, long long matrix_cap) {
    return construct({Family::SymmetricDn, n, n, q}, matrix_cap);
}

CodeSet construct_thm43(int n, long q, long long matrix_cap) {
    return construct({Family::Thm43, n, n, q}, matrix_cap);
}

std::vector<MatrixFq2> construct_spread_set(int half_n, long q, long long matrix_cap) {
    if (half_n < 1) throw std::invalid_argument("spread set needs half_n >= 1");
    auto [p, m] = factor_prime_power(q);
    auto ts = FieldTower::build(p, m, half_n);
    BigInt count = big_pow(to_big(ts->q2()), static_cast<unsigned long>(half_n));
    if (count > to_big(matrix_cap)) throw CapExceeded("spread set exceeds the matrix cap");
    std::uint64_t total = static_cast<std::uint64_t>(count.get_ui());

    std::vector<MatrixFq2> out;
    out.reserve(total);
    TopElem a = ts->top_zero();
    for (std::uint64_t ord = 0; ord < total; ++ord) {
        // columns are the coordinates of a·z^j in the polynomial basis
        MatrixFq2 mat(half_n, half_n);
        TopElem col = a;
        for (int j = 0; j < half_n; ++j) {
            for (int i = 0; i < half_n; ++i) mat.at(i, j) = col[static_cast<size_t>(i)];
            if (j + 1 < half_n) col = ts->top_mul(col, ts->top_basis(1));
        }
        out.push_back(std::move(mat));
        int i = half_n - 1;
        while (i >= 0) {
            if (++a[static_cast<size_t>(i)] < ts->q2()) break;
            a[static_cast<size_t>(i)] = 0;
            --i;
        }
    }
    return out;
}

}  // namespace hrdc
