#include "hrdc/distributions.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "hrdc/parallel.hpp"

namespace hrdc {

namespace {

struct EntryHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using EntrySet = std::unordered_set<std::vector<int>, EntryHash>;

std::vector<int> scaled_entries(const FieldTower& t, const std::vector<int>& e, int scalar) {
    std::vector<int> r = e;
    for (int& x : r) x = t.fq2_mul(x, scalar);
    return r;
}

std::vector<int> added_entries(const FieldTower& t, const std::vector<int>& a,
                               const std::vector<int>& b) {
    std::vector<int> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = t.fq2_add(r[i], b[i]);
    return r;
}

bool contains_sorted(const std::vector<HermitianMatrix>& mats, const HermitianMatrix& a) {
    return std::binary_search(
        mats.begin(), mats.end(), a,
        [](const HermitianMatrix& x, const HermitianMatrix& y) { return x.e < y.e; });
}

// Rebuilds the F_p-span of the set, collecting a minimal generating sequence. The set is
// additive iff the final span has the same cardinality.
std::vector<HermitianMatrix> span_generators(const CodeSet& y, size_t* span_size) {
    const FieldTower& t = y.t();
    int p = t.p();
    EntrySet span;
    span.insert(hermitian_zero(y.n).e);
    std::vector<HermitianMatrix> gens;
    for (const HermitianMatrix& a : y.mats) {
        if (span.count(a.e)) continue;
        gens.push_back(a);
        std::vector<std::vector<int>> snapshot(span.begin(), span.end());
        for (int scalar = 1; scalar < p; ++scalar) {
            std::vector<int> ta = scaled_entries(t, a.e, scalar);
            for (const auto& s : snapshot) span.insert(added_entries(t, s, ta));
        }
        if (span.size() > y.size()) break;  // already bigger than Y, cannot be a subgroup of it
    }
    if (span_size) *span_size = span.size();
    return gens;
}

}  // namespace

CodeSet make_code_set(std::shared_ptr<const FieldTower> tower, int n,
                      std::vector<HermitianMatrix> mats) {
    for (const HermitianMatrix& a : mats) {
        if (a.n != n) throw std::invalid_argument("code set members must share the dimension n");
        HermitianMatrix validate(*tower, a.n, a.e);  // enforces the Hermitian invariant
        (void)validate;
    }
    std::sort(mats.begin(), mats.end(),
              [](const HermitianMatrix& x, const HermitianMatrix& y) { return x.e < y.e; });
    mats.erase(std::unique(mats.begin(), mats.end()), mats.end());
    CodeSet y;
    y.tower = std::move(tower);
    y.n = n;
    y.mats = std::move(mats);
    return y;
}

bool is_additive(const CodeSet& y) {
    if (y.mats.empty()) return false;
    const FieldTower& t = y.t();
    // quick probe: 64 random ordered pairs must have their difference inside Y
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<size_t> pick(0, y.size() - 1);
    for (int it = 0; it < 64; ++it) {
        const HermitianMatrix& a = y.mats[pick(rng)];
        const HermitianMatrix& b = y.mats[pick(rng)];
        if (!contains_sorted(y.mats, hermitian_sub(t, a, b))) return false;
    }
    size_t span_size = 0;
    span_generators(y, &span_size);
    return span_size == y.size();
}

std::vector<HermitianMatrix> additive_generators(const CodeSet& y) {
    size_t span_size = 0;
    std::vector<HermitianMatrix> gens = span_generators(y, &span_size);
    if (span_size != y.size()) throw std::invalid_argument("code set is not additive");
    return gens;
}

InnerDistribution inner_distribution(const CodeSet& y) {
    if (y.mats.empty()) throw std::invalid_argument("inner distribution of an empty set");
    const FieldTower& t = y.t();
    if (is_additive(y)) {
        // for additive Y, A_i counts the members of rank i
        InnerDistribution d;
        d.n = y.n;
        d.a.assign(static_cast<size_t>(y.n) + 1, Rational(0));
        for (const HermitianMatrix& a : y.mats) d.a[static_cast<size_t>(rank(t, a))] += 1;
        return d;
    }
    return inner_distribution_pairwise(y);
}

InnerDistribution inner_distribution_pairwise(const CodeSet& y) {
    if (y.mats.empty()) throw std::invalid_argument("inner distribution of an empty set");
    const FieldTower& t = y.t();
    size_t m = y.size();
    std::vector<std::vector<long>> block_census(
        max_threads(), std::vector<long>(static_cast<size_t>(y.n) + 1, 0));
    parallel_blocks(m, [&](unsigned block, std::uint64_t begin, std::uint64_t end) {
        std::vector<long>& census = block_census[block];
        for (std::uint64_t i = begin; i < end; ++i)
            for (size_t j = 0; j < m; ++j) {
                HermitianMatrix diff = hermitian_sub(t, y.mats[static_cast<size_t>(i)], y.mats[j]);
                census[static_cast<size_t>(rank(t, diff))]++;
            }
    });
    InnerDistribution d;
    d.n = y.n;
    d.a.assign(static_cast<size_t>(y.n) + 1, Rational(0));
    for (int i = 0; i <= y.n; ++i) {
        BigInt total = 0;
        for (const auto& census : block_census) total += census[static_cast<size_t>(i)];
        Rational v(total, to_big(static_cast<long long>(m)));
        v.canonicalize();
        d.a[static_cast<size_t>(i)] = v;
    }
    return d;
}

DualDistribution dual_distribution(const InnerDistribution& d, const QTable& table) {
    if (d.n != table.n) throw std::invalid_argument("distribution/table dimension mismatch");
    DualDistribution out;
    out.n = d.n;
    out.a.assign(static_cast<size_t>(d.n) + 1, Rational(0));
    for (int k = 0; k <= d.n; ++k) {
        Rational acc(0);
        for (int i = 0; i <= d.n; ++i)
            acc += Rational(table.at(k, i)) * d.a[static_cast<size_t>(i)];
        if (acc < 0)
            throw std::logic_error("dual inner distribution entry A'_" + std::to_string(k) +
                                   " is negative; upstream bug");
        out.a[static_cast<size_t>(k)] = acc;
    }
    return out;
}

int min_distance(const InnerDistribution& d) {
    int dd = 1;
    while (dd <= d.n && d.a[static_cast<size_t>(dd)] == 0) ++dd;
    return dd;
}

int design_strength(const DualDistribution& d) {
    int t = 0;
    while (t < d.n && d.a[static_cast<size_t>(t) + 1] == 0) ++t;
    return t;
}

CodeSet dual_code(const CodeSet& y, long long enum_cap) {
    const FieldTower& t = y.t();
    std::vector<HermitianMatrix> gens = additive_generators(y);  // throws if not additive
    BigInt space = hermitian_space_size(t, y.n);
    if (space > to_big(enum_cap)) throw CapExceeded("dual code enumeration exceeds cap");
    std::vector<HermitianMatrix> dual;
    enumerate_hermitian(t, y.n, [&](const HermitianMatrix& b) {
        for (const HermitianMatrix& g : gens)
            if (pairing(t, g, b) != 0) return;
        dual.push_back(b);
    });
    return make_code_set(y.tower, y.n, std::move(dual));
}

InnerDistribution thm33_distribution(int n, int d, long q, const BigInt& size) {
    if (d < 1 || d > n) throw std::invalid_argument("thm33_distribution requires 1 <= d <= n");
    InnerDistribution out;
    out.n = n;
    out.a.assign(static_cast<size_t>(n) + 1, Rational(0));
    out.a[0] = 1;
    for (int i = 0; i <= n - 1; ++i) {
        Rational acc(0);
        for (int j = i; j <= n - d; ++j) {
            Rational scaled(size, big_pow(BigInt(q), static_cast<unsigned long>(n) * j));
            scaled.canonicalize();
            if (((n + 1) * j) % 2 == 1) scaled = -scaled;
            Rational term = Rational(neg_q_pow(q, choose2(j - i)) * neg_q_binomial(j, i, q) *
                                     neg_q_binomial(n, j, q)) *
                            (scaled - 1);
            if ((j - i) % 2 == 1) term = -term;
            acc += term;
        }
        if (acc < 0)
            throw std::domain_error(
                "closed-form inner distribution has a negative entry; parameters are "
                "inconsistent");
        out.a[static_cast<size_t>(n - i)] = acc;
    }
    Rational sum(0);
    for (const Rational& v : out.a) sum += v;
    if (sum != Rational(size))
        throw std::domain_error("closed-form inner distribution does not sum to the code size");
    return out;
}

}  // namespace hrdc
