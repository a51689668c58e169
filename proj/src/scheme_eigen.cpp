#include "hrdc/scheme_eigen.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "hrdc/cache.hpp"
#include "hrdc/hermitian.hpp"

namespace hrdc {

BigInt neg_q_binomial(long m, long l, long q) {
    if (m < 0 || l < 0) throw std::invalid_argument("neg_q_binomial requires m, l >= 0");
    if (l == 0) return 1;
    if (m < l) return 0;

    static std::mutex mu;
    static std::map<std::tuple<long, long, long>, BigInt> memo;
    auto key = std::make_tuple(m, l, q);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    std::string disk_key =
        std::to_string(m) + "," + std::to_string(l) + "," + std::to_string(q);
    if (auto cached = cache::get_negq(disk_key)) {
        BigInt v(*cached);
        std::lock_guard<std::mutex> lock(mu);
        memo[key] = v;
        return v;
    }

    // exponents m-i+1 stay >= 1 here since m >= l >= i
    Rational acc = 1;
    for (long i = 1; i <= l; ++i) {
        Rational factor(neg_q_pow(q, static_cast<unsigned long>(m - i + 1)) - 1,
                        neg_q_pow(q, static_cast<unsigned long>(i)) - 1);
        factor.canonicalize();
        acc *= factor;
    }
    if (acc.get_den() != 1) throw std::logic_error("negative q-binomial product is not integral");
    BigInt v = acc.get_num();
    cache::put_negq(disk_key, v.get_str());
    std::lock_guard<std::mutex> lock(mu);
    memo[key] = v;
    return v;
}

BigInt count_rank(int n, long q, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("count_rank: k out of range");
    BigInt prod = 1;
    for (int j = 0; j < k; ++j)
        prod *= neg_q_pow(q, static_cast<unsigned long>(n)) + neg_q_pow(q, static_cast<unsigned long>(j));
    BigInt v = neg_q_binomial(n, k, q) * prod;
    if (k % 2 == 1) v = -v;
    if (v <= 0) throw std::logic_error("rank class count must be positive");
    return v;
}

std::pair<int, int> factor_prime_power(long q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    long p = q;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int m = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {static_cast<int>(p), m};
}

QTable q_explicit(int n, long q) {
    QTable tab;
    tab.n = n;
    tab.q = q;
    tab.method = "explicit";
    tab.t.resize(static_cast<size_t>(n + 1) * (n + 1));
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= n; ++i) {
            BigInt sum = 0;
            for (int j = 0; j <= k; ++j) {
                BigInt term = neg_q_binomial(n - j, n - k, q) * neg_q_binomial(n - i, j, q);
                if (term == 0) continue;
                unsigned long e = choose2(k - j) + static_cast<unsigned long>(n) * j;
                sum += term * neg_q_pow(q, e);
            }
            if (k % 2 == 1) sum = -sum;
            tab.at(k, i) = sum;
        }
    return tab;
}

QTable q_recurrence(int n, long q) {
    // Q^{(n)}_k(i) = Q^{(n)}_k(i-1) + (-q)^{2n-i} Q^{(n-1)}_{k-1}(i-1), with Q_0(i) = 1 and
    // Q_k(0) = |X_k|; built bottom-up over all smaller table sizes.
    std::vector<QTable> tables;
    tables.reserve(static_cast<size_t>(n + 1));
    {
        QTable t0;
        t0.n = 0;
        t0.q = q;
        t0.method = "recurrence";
        t0.t = {BigInt(1)};
        tables.push_back(std::move(t0));
    }
    for (int nn = 1; nn <= n; ++nn) {
        QTable tab;
        tab.n = nn;
        tab.q = q;
        tab.method = "recurrence";
        tab.t.resize(static_cast<size_t>(nn + 1) * (nn + 1));
        for (int i = 0; i <= nn; ++i) tab.at(0, i) = 1;
        for (int k = 1; k <= nn; ++k) tab.at(k, 0) = count_rank(nn, q, k);
        const QTable& prev = tables.back();
        for (int k = 1; k <= nn; ++k)
            for (int i = 1; i <= nn; ++i)
                tab.at(k, i) = tab.at(k, i - 1) +
                               neg_q_pow(q, static_cast<unsigned long>(2 * nn - i)) * prev.at(k - 1, i - 1);
        tables.push_back(std::move(tab));
    }
    return std::move(tables.back());
}

QTable q_direct(int n, long q, long long enum_cap) {
    auto [p, m] = factor_prime_power(q);
    BigInt total = big_pow(BigInt(q), static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
    if (total > to_big(enum_cap)) throw CapExceeded("q^(n^2) exceeds the enumeration cap");
    auto tower = FieldTower::build(p, m, n);

    std::vector<CyclotomicInteger> sums(static_cast<size_t>(n + 1) * (n + 1), CyclotomicInteger(p));
    enumerate_hermitian(*tower, n, [&](const HermitianMatrix& a) {
        int k = rank(*tower, a);
        // pairing against the diagonal rank-i representative reduces to a diagonal prefix sum
        int prefix = 0;
        sums[static_cast<size_t>(k) * (n + 1)].add_root_power(0);
        for (int i = 1; i <= n; ++i) {
            prefix = tower->fq2_add(prefix, a.at(i - 1, i - 1));
            sums[static_cast<size_t>(k) * (n + 1) + i].add_root_power(
                tower->abs_trace_fp(prefix));
        }
    });

    QTable tab;
    tab.n = n;
    tab.q = q;
    tab.method = "direct";
    tab.t.resize(static_cast<size_t>(n + 1) * (n + 1));
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= n; ++i) {
            const CyclotomicInteger& s = sums[static_cast<size_t>(k) * (n + 1) + i];
            if (!s.is_rational_integer())
                throw std::logic_error("rank-class character sum is not a rational integer");
            tab.at(k, i) = s.to_integer();
        }
    return tab;
}

BigInt q_direct_column_entry(const FieldTower& tower, int k, const HermitianMatrix& b) {
    CyclotomicInteger acc(tower.p());
    enumerate_hermitian(tower, b.n, [&](const HermitianMatrix& a) {
        if (rank(tower, a) == k) acc.add_root_power(pairing(tower, a, b));
    });
    return acc.to_integer();
}

std::optional<std::string> check_inversion_system(const QTable& tab) {
    int n = tab.n;
    long q = tab.q;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            BigInt lhs = 0;
            for (int k = 0; k <= j; ++k) lhs += neg_q_binomial(n - k, n - j, q) * tab.at(k, i);
            BigInt rhs = big_pow(BigInt(q), static_cast<unsigned long>(n) * j) * neg_q_binomial(n - i, j, q);
            if (((n + 1) * j) % 2 == 1) rhs = -rhs;
            if (lhs != rhs)
                return "inversion system fails at i=" + std::to_string(i) +
                       ", j=" + std::to_string(j);
        }
    return std::nullopt;
}

std::optional<std::string> check_kronecker_inversion(int n, long q) {
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k <= n; ++k) {
            BigInt sum = 0;
            for (int j = i; j <= k; ++j) {
                BigInt term = neg_q_pow(q, choose2(j - i)) * neg_q_binomial(j, i, q) *
                              neg_q_binomial(k, j, q);
                if ((j - i) % 2 == 1) term = -term;
                sum += term;
            }
            if (sum != (i == k ? 1 : 0))
                return "Kronecker inversion fails at i=" + std::to_string(i) +
                       ", k=" + std::to_string(k);
        }
    return std::nullopt;
}

std::optional<std::string> check_qbinomial_theorem(int n, long q) {
    for (int h = 0; h <= n; ++h)
        for (long x = -3; x <= 3; ++x)
            for (long y = -3; y <= 3; ++y) {
                BigInt lhs = 0;
                for (int j = 0; j <= h; ++j)
                    lhs += neg_q_pow(q, choose2(h - j)) * neg_q_binomial(h, j, q) *
                           big_pow(BigInt(x), static_cast<unsigned long>(j)) *
                           big_pow(BigInt(y), static_cast<unsigned long>(h - j));
                BigInt rhs = 1;
                for (int j = 0; j < h; ++j) rhs *= BigInt(x) + neg_q_pow(q, static_cast<unsigned long>(j)) * y;
                if (lhs != rhs)
                    return "q-binomial theorem fails at h=" + std::to_string(h) +
                           ", x=" + std::to_string(x) + ", y=" + std::to_string(y);
            }
    return std::nullopt;
}

std::optional<std::string> check_pascal_identity(int n, long q) {
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            long M = n - i;
            BigInt mid = neg_q_binomial(M, j - 1, q);
            BigInt lhs = neg_q_binomial(M + 1, j, q);
            if (mid != 0) lhs -= neg_q_pow(q, static_cast<unsigned long>(M - j + 1)) * mid;
            if (lhs != neg_q_binomial(M, j, q))
                return "Pascal identity fails at i=" + std::to_string(i) +
                       ", j=" + std::to_string(j);
        }
    return std::nullopt;
}

IdentityReport verify_identities(int n, long q) {
    IdentityReport rep;
    QTable tab = q_explicit(n, q);
    for (auto& failure : {check_inversion_system(tab), check_kronecker_inversion(n, q),
                          check_qbinomial_theorem(n, q), check_pascal_identity(n, q)}) {
        if (failure) {
            rep.pass = false;
            rep.failure = *failure;
            return rep;
        }
    }
    return rep;
}

}  // namespace hrdc
