#include "hrdc/field_tower.hpp"

#include <algorithm>
#include <cassert>

#include "hrdc/cache.hpp"

namespace hrdc {

std::string level_name(Level level) {
    switch (level) {
        case Level::Fp: return "Fp";
        case Level::Fq: return "Fq";
        case Level::Fq2: return "Fq2";
        case Level::Top: return "Top";
    }
    return "?";
}

namespace detail {

namespace {
// Orders up to this size get dense add/mul/neg/inv tables.
constexpr long long kTableOrderCap = 1024;
// Dense indices must fit comfortably in int.
constexpr long long kIndexCap = 1LL << 30;
}  // namespace

SmallField SmallField::prime(int p) {
    SmallField f;
    f.base_ = nullptr;
    f.p_ = p;
    f.order_ = p;
    f.deg_ = 1;
    f.modulus_ = {0, 1};
    f.build_tables();
    return f;
}

SmallField SmallField::extension(const SmallField* base, std::vector<int> modulus) {
    SmallField f;
    f.base_ = base;
    f.p_ = base->characteristic();
    f.deg_ = static_cast<int>(modulus.size()) - 1;
    if (f.deg_ < 1 || modulus.back() != 1)
        throw std::invalid_argument("extension modulus must be monic of degree >= 1");
    long long ord = 1;
    for (int i = 0; i < f.deg_; ++i) {
        ord *= base->order();
        if (ord > kIndexCap) throw CapExceeded("field level too large for dense element indices");
    }
    f.order_ = ord;
    f.modulus_ = std::move(modulus);
    f.build_tables();
    return f;
}

std::vector<int> SmallField::digits(int a) const {
    if (!base_) return {a};
    std::vector<int> d(static_cast<size_t>(deg_));
    long long b = base_->order();
    for (int i = 0; i < deg_; ++i) {
        d[static_cast<size_t>(i)] = static_cast<int>(a % b);
        a = static_cast<int>(a / b);
    }
    return d;
}

int SmallField::from_digits(const std::vector<int>& d) const {
    if (!base_) return d.at(0);
    long long b = base_->order();
    long long a = 0;
    for (int i = deg_ - 1; i >= 0; --i) a = a * b + (i < static_cast<int>(d.size()) ? d[static_cast<size_t>(i)] : 0);
    return static_cast<int>(a);
}

int SmallField::add_slow(int a, int b) const {
    if (!base_) return static_cast<int>((static_cast<long long>(a) + b) % p_);
    std::vector<int> da = digits(a), db = digits(b);
    for (int i = 0; i < deg_; ++i) da[static_cast<size_t>(i)] = base_->add(da[static_cast<size_t>(i)], db[static_cast<size_t>(i)]);
    return from_digits(da);
}

int SmallField::neg_slow(int a) const {
    if (!base_) return a == 0 ? 0 : p_ - a;
    std::vector<int> d = digits(a);
    for (int& c : d) c = base_->neg(c);
    return from_digits(d);
}

int SmallField::mul_slow(int a, int b) const {
    if (!base_) return static_cast<int>(static_cast<long long>(a) * b % p_);
    std::vector<int> da = digits(a), db = digits(b);
    std::vector<int> prod(static_cast<size_t>(2 * deg_ - 1), 0);
    for (int i = 0; i < deg_; ++i) {
        if (da[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < deg_; ++j) {
            if (db[static_cast<size_t>(j)] == 0) continue;
            size_t k = static_cast<size_t>(i + j);
            prod[k] = base_->add(prod[k], base_->mul(da[static_cast<size_t>(i)], db[static_cast<size_t>(j)]));
        }
    }
    // reduce mod monic modulus
    for (int i = 2 * deg_ - 2; i >= deg_; --i) {
        int c = prod[static_cast<size_t>(i)];
        if (c == 0) continue;
        prod[static_cast<size_t>(i)] = 0;
        for (int j = 0; j < deg_; ++j) {
            int mj = modulus_[static_cast<size_t>(j)];
            if (mj == 0) continue;
            size_t k = static_cast<size_t>(i - deg_ + j);
            prod[k] = base_->sub(prod[k], base_->mul(c, mj));
        }
    }
    prod.resize(static_cast<size_t>(deg_));
    return from_digits(prod);
}

int SmallField::pow(int a, const BigInt& e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    BigInt ord_minus_1 = to_big(order_ - 1);
    BigInt r = e % ord_minus_1;
    if (r < 0) r += ord_minus_1;
    if (r == 0) return 1;
    int acc = 1, Base = a;
    size_t bits = mpz_sizeinbase(r.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(r.get_mpz_t(), i)) acc = mul(acc, Base);
        if (i + 1 < bits) Base = mul(Base, Base);
    }
    return acc;
}

int SmallField::inv(int a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (!tinv_.empty()) return tinv_[static_cast<size_t>(a)];
    return pow(a, to_big(order_) - 2);
}

void SmallField::build_tables() {
    if (order_ > kTableOrderCap) return;
    size_t ord = static_cast<size_t>(order_);
    tneg_.resize(ord);
    for (size_t a = 0; a < ord; ++a) tneg_[a] = neg_slow(static_cast<int>(a));
    tadd_.resize(ord * ord);
    tmul_.resize(ord * ord);
    for (size_t a = 0; a < ord; ++a)
        for (size_t b = a; b < ord; ++b) {
            int s = add_slow(static_cast<int>(a), static_cast<int>(b));
            int m = mul_slow(static_cast<int>(a), static_cast<int>(b));
            tadd_[a * ord + b] = tadd_[b * ord + a] = s;
            tmul_[a * ord + b] = tmul_[b * ord + a] = m;
        }
    tinv_.assign(ord, 0);
    for (size_t a = 1; a < ord; ++a) {
        for (size_t b = 1; b < ord; ++b)
            if (tmul_[a * ord + b] == 1) {
                tinv_[a] = static_cast<int>(b);
                break;
            }
        if (tinv_[a] == 0) throw std::logic_error("field table has no inverse; modulus not irreducible?");
    }
}

namespace poly {

int degree(const std::vector<int>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

static void trim(std::vector<int>& a) { a.resize(static_cast<size_t>(degree(a) + 1)); }

std::vector<int> add(const SmallField& f, std::vector<int> a, const std::vector<int>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
    trim(a);
    return a;
}

std::vector<int> sub(const SmallField& f, std::vector<int> a, const std::vector<int>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
}

std::vector<int> mul(const SmallField& f, const std::vector<int>& a, const std::vector<int>& b) {
    int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return {};
    std::vector<int> r(static_cast<size_t>(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j <= db; ++j) {
            if (b[static_cast<size_t>(j)] == 0) continue;
            size_t k = static_cast<size_t>(i + j);
            r[k] = f.add(r[k], f.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]));
        }
    }
    return r;
}

std::vector<int> rem(const SmallField& f, std::vector<int> a, const std::vector<int>& b) {
    int db = degree(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    int lead_inv = f.inv(b[static_cast<size_t>(db)]);
    for (int i = degree(a); i >= db; i = degree(a)) {
        int c = f.mul(a[static_cast<size_t>(i)], lead_inv);
        for (int j = 0; j <= db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            a[k] = f.sub(a[k], f.mul(c, b[static_cast<size_t>(j)]));
        }
        trim(a);
    }
    return a;
}

std::vector<int> gcd(const SmallField& f, std::vector<int> a, std::vector<int> b) {
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        std::vector<int> r = rem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = degree(a);
    if (d >= 0 && a[static_cast<size_t>(d)] != 1) {
        int li = f.inv(a[static_cast<size_t>(d)]);
        for (int& c : a) c = f.mul(c, li);
    }
    return a;
}

std::vector<int> mulmod(const SmallField& f, const std::vector<int>& a, const std::vector<int>& b,
                        const std::vector<int>& mod) {
    return rem(f, mul(f, a, b), mod);
}

std::vector<int> powmod(const SmallField& f, std::vector<int> a, BigInt e,
                        const std::vector<int>& mod) {
    std::vector<int> r = {1};
    a = rem(f, std::move(a), mod);
    size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(f, r, a, mod);
        if (i + 1 < bits) a = mulmod(f, a, a, mod);
    }
    return r;
}

}  // namespace poly

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool is_irreducible(const SmallField& f, const std::vector<int>& candidate) {
    int k = poly::degree(candidate);
    if (k < 1) return false;
    if (k == 1) return true;
    // cheap reject + complete answer for k <= 3 over small fields
    if (f.order() <= 4096) {
        for (long long a = 0; a < f.order(); ++a) {
            int acc = 0;
            for (int i = k; i >= 0; --i) acc = f.add(f.mul(acc, static_cast<int>(a)), candidate[static_cast<size_t>(i)]);
            if (acc == 0) return false;
        }
        if (k <= 3) return true;
    }
    // Rabin: x^{Q^k} = x mod f, and gcd(x^{Q^{k/r}} - x, f) = 1 for prime r | k
    BigInt Q = to_big(f.order());
    std::vector<int> x = {0, 1};
    std::vector<int> lhs = poly::powmod(f, x, big_pow(Q, static_cast<unsigned long>(k)), candidate);
    if (poly::sub(f, lhs, x) != std::vector<int>{}) return false;
    std::vector<int> prime_divisors;
    int rest = k;
    for (int r = 2; r * r <= rest; ++r)
        if (rest % r == 0) {
            prime_divisors.push_back(r);
            while (rest % r == 0) rest /= r;
        }
    if (rest > 1) prime_divisors.push_back(rest);
    for (int r : prime_divisors) {
        std::vector<int> h = poly::powmod(f, x, big_pow(Q, static_cast<unsigned long>(k / r)), candidate);
        std::vector<int> g = poly::gcd(f, poly::sub(f, h, x), candidate);
        if (poly::degree(g) != 0) return false;
    }
    return true;
}

std::vector<int> find_irreducible(const SmallField& f, int deg) {
    if (deg == 1) return {0, 1};
    std::string key = "p" + std::to_string(f.characteristic()) + ":b" + std::to_string(f.order()) +
                      ":d" + std::to_string(deg);
    if (auto cached = cache::get_modulus(key)) {
        if (static_cast<int>(cached->size()) == deg + 1 && cached->back() == 1 &&
            is_irreducible(f, *cached))
            return *cached;
    }
    std::vector<int> c(static_cast<size_t>(deg), 0);
    std::vector<int> candidate(static_cast<size_t>(deg + 1), 0);
    candidate.back() = 1;
    while (true) {
        for (int i = 0; i < deg; ++i) candidate[static_cast<size_t>(i)] = c[static_cast<size_t>(i)];
        if (is_irreducible(f, candidate)) {
            cache::put_modulus(key, candidate);
            return candidate;
        }
        int i = deg - 1;
        while (i >= 0) {
            if (++c[static_cast<size_t>(i)] < f.order()) break;
            c[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) throw std::logic_error("no monic irreducible polynomial found");
    }
}

}  // namespace detail

// --- FieldTower ---------------------------------------------------------------------------

std::shared_ptr<const FieldTower> FieldTower::build(int p, int m, int n, int degree_cap) {
    if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime");
    if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
    if (2LL * n * m > degree_cap)
        throw CapExceeded("total extension degree " + std::to_string(2LL * n * m) +
                          " exceeds cap " + std::to_string(degree_cap));
    auto t = std::shared_ptr<FieldTower>(new FieldTower());
    t->p_ = p;
    t->m_ = m;
    t->n_ = n;
    t->fp_ = detail::SmallField::prime(p);
    t->fq_ = detail::SmallField::extension(&t->fp_, detail::find_irreducible(t->fp_, m));
    t->q_ = t->fq_.order();
    t->fq2_ = detail::SmallField::extension(&t->fq_, detail::find_irreducible(t->fq_, 2));
    t->q2_ = t->fq2_.order();
    t->mod_top_ = detail::find_irreducible(t->fq2_, n);
    t->precompute();
    return t;
}

void FieldTower::precompute() {
    // conjugation x -> x^q on F_{q²}
    conj_.resize(static_cast<size_t>(q2_));
    for (long long a = 0; a < q2_; ++a) conj_[static_cast<size_t>(a)] = fq2_.pow(static_cast<int>(a), to_big(q_));
    for (long long a = 0; a < q2_; ++a) {
        int c = conj_[static_cast<size_t>(a)];
        if (conj_[static_cast<size_t>(c)] != a) throw std::logic_error("conjugation is not an involution");
        bool fixed = (c == a);
        if (fixed != (a < q_)) throw std::logic_error("conjugation does not fix exactly F_q");
    }
    // absolute trace F_q -> F_p
    abs_trace_.resize(static_cast<size_t>(q_));
    for (long long a = 0; a < q_; ++a) {
        int acc = 0;
        int x = static_cast<int>(a);
        for (int i = 0; i < m_; ++i) {
            acc = fq_.add(acc, x);
            x = fq_.pow(x, to_big(p_));
        }
        if (acc >= p_) throw std::logic_error("absolute trace left F_p");
        abs_trace_[static_cast<size_t>(a)] = acc;
    }
    // q-power Frobenius on the top field, tabulated on the polynomial basis
    frob_basis_.resize(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) frob_basis_[static_cast<size_t>(i)] = top_pow(top_basis(i), to_big(q_));
    for (int i = 0; i < n_; ++i) {
        TopElem x = top_basis(i);
        for (int k = 0; k < 2 * n_; ++k) x = frob1(x);
        if (x != top_basis(i)) throw std::logic_error("Frobenius does not have order dividing 2n");
    }
    // relative trace on the polynomial basis; Tr is F_{q²}-linear
    trace_basis_.resize(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        TopElem x = top_basis(i);
        TopElem acc = x;
        TopElem cur = x;
        for (int k = 1; k < n_; ++k) {
            cur = frob1(frob1(cur));
            acc = top_add(acc, cur);
        }
        for (int j = 1; j < n_; ++j)
            if (acc[static_cast<size_t>(j)] != 0) throw std::logic_error("relative trace left F_{q^2}");
        trace_basis_[static_cast<size_t>(i)] = acc[0];
    }
}

TopElem FieldTower::top_one() const {
    TopElem r = top_zero();
    r[0] = 1;
    return r;
}

TopElem FieldTower::top_basis(int k) const {
    if (k < 0 || k >= n_) throw std::invalid_argument("basis index out of range");
    TopElem r = top_zero();
    if (n_ == 1) {
        // z ≡ -c0 in a degree-1 top step; only z^0 = 1 is ever requested there
        r[0] = 1;
        return r;
    }
    r[static_cast<size_t>(k)] = 1;
    return r;
}

bool FieldTower::top_is_zero(const TopElem& a) const {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

TopElem FieldTower::top_add(const TopElem& a, const TopElem& b) const {
    TopElem r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = fq2_.add(r[i], b[i]);
    return r;
}

TopElem FieldTower::top_sub(const TopElem& a, const TopElem& b) const {
    TopElem r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = fq2_.sub(r[i], b[i]);
    return r;
}

TopElem FieldTower::top_neg(const TopElem& a) const {
    TopElem r(a);
    for (int& c : r) c = fq2_.neg(c);
    return r;
}

TopElem FieldTower::top_mul(const TopElem& a, const TopElem& b) const {
    size_t n = static_cast<size_t>(n_);
    std::vector<int> prod(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] = fq2_.add(prod[i + j], fq2_.mul(a[i], b[j]));
        }
    }
    for (size_t i = 2 * n - 2; i + 1 > n; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < n; ++j) {
            int mj = mod_top_[j];
            if (mj == 0) continue;
            prod[i - n + j] = fq2_.sub(prod[i - n + j], fq2_.mul(c, mj));
        }
    }
    prod.resize(n);
    return prod;
}

TopElem FieldTower::top_pow(const TopElem& a, const BigInt& e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    TopElem r = top_one();
    TopElem base = a;
    size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = top_mul(r, base);
        if (i + 1 < bits) base = top_mul(base, base);
    }
    return r;
}

TopElem FieldTower::top_inv(const TopElem& a) const {
    if (top_is_zero(a)) throw std::domain_error("division by zero");
    BigInt e = big_pow(to_big(q_), static_cast<unsigned long>(2 * n_)) - 2;
    return top_pow(a, e);
}

TopElem FieldTower::top_embed_fq2(int c) const {
    TopElem r = top_zero();
    r[0] = c;
    return r;
}

TopElem FieldTower::frob1(const TopElem& a) const {
    TopElem acc = top_zero();
    for (size_t i = 0; i < a.size(); ++i) {
        int c = conj_[static_cast<size_t>(a[i])];
        if (c == 0) continue;
        const TopElem& fb = frob_basis_[i];
        for (size_t j = 0; j < acc.size(); ++j)
            acc[j] = fq2_.add(acc[j], fq2_.mul(c, fb[j]));
    }
    return acc;
}

TopElem FieldTower::top_frobenius(const TopElem& a, int k) const {
    if (k < 0 || k >= 2 * n_) throw std::invalid_argument("Frobenius power out of range [0, 2n)");
    TopElem r = a;
    for (int i = 0; i < k; ++i) r = frob1(r);
    return r;
}

int FieldTower::top_trace(const TopElem& a) const {
    int acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc = fq2_.add(acc, fq2_.mul(a[i], trace_basis_[i]));
    return acc;
}

bool FieldTower::top_less(const TopElem& a, const TopElem& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<int> FieldTower::top_to_fp_digits(const TopElem& a) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(fp_dim()));
    for (int c : a) {
        for (int fq_digit : fq2_.digits(c)) {
            std::vector<int> base_digits = fq_.digits(fq_digit);
            out.insert(out.end(), base_digits.begin(), base_digits.end());
        }
    }
    return out;
}

TopElem FieldTower::top_from_fp_digits(const std::vector<int>& d) const {
    TopElem r = top_zero();
    size_t pos = 0;
    for (int i = 0; i < n_; ++i) {
        std::vector<int> fq_digits(2);
        for (int j = 0; j < 2; ++j) {
            std::vector<int> base(static_cast<size_t>(m_));
            for (int k = 0; k < m_; ++k) base[static_cast<size_t>(k)] = d.at(pos++);
            fq_digits[static_cast<size_t>(j)] = fq_.from_digits(base);
        }
        r[static_cast<size_t>(i)] = fq2_.from_digits(fq_digits);
    }
    return r;
}

const std::vector<TopElem>& FieldTower::subfield_fqn() const {
    std::lock_guard<std::mutex> lock(subfield_mu_);
    if (subfield_) return *subfield_;

    int dim = fp_dim();
    // columns of (Frobenius^n - id) over F_p
    std::vector<std::vector<int>> mat(static_cast<size_t>(dim), std::vector<int>(static_cast<size_t>(dim), 0));
    for (int j = 0; j < dim; ++j) {
        std::vector<int> e(static_cast<size_t>(dim), 0);
        e[static_cast<size_t>(j)] = 1;
        TopElem x = top_from_fp_digits(e);
        TopElem fx = x;
        for (int k = 0; k < n_; ++k) fx = frob1(fx);
        std::vector<int> col = top_to_fp_digits(fx);
        for (int i = 0; i < dim; ++i)
            mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                fp_.sub(col[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
    }
    // RREF over F_p; free columns span the kernel
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < dim && row < dim; ++col) {
        int pr = -1;
        for (int r = row; r < dim; ++r)
            if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(mat[static_cast<size_t>(pr)], mat[static_cast<size_t>(row)]);
        int piv_inv = fp_.inv(mat[static_cast<size_t>(row)][static_cast<size_t>(col)]);
        for (int c = 0; c < dim; ++c)
            mat[static_cast<size_t>(row)][static_cast<size_t>(c)] =
                fp_.mul(mat[static_cast<size_t>(row)][static_cast<size_t>(c)], piv_inv);
        for (int r = 0; r < dim; ++r) {
            if (r == row) continue;
            int f = mat[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < dim; ++c)
                mat[static_cast<size_t>(r)][static_cast<size_t>(c)] = fp_.sub(
                    mat[static_cast<size_t>(r)][static_cast<size_t>(c)],
                    fp_.mul(f, mat[static_cast<size_t>(row)][static_cast<size_t>(c)]));
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<std::vector<int>> kernel;
    std::vector<bool> is_pivot(static_cast<size_t>(dim), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int free_col = 0; free_col < dim; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<int> v(static_cast<size_t>(dim), 0);
        v[static_cast<size_t>(free_col)] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<size_t>(pivot_col[r])] =
                fp_.neg(mat[r][static_cast<size_t>(free_col)]);
        kernel.push_back(std::move(v));
    }
    if (static_cast<int>(kernel.size()) != n_ * m_)
        throw std::logic_error("fixed field of Frobenius^n has unexpected dimension");

    BigInt count = big_pow(to_big(p_), static_cast<unsigned long>(kernel.size()));
    if (count > (1 << 22)) throw CapExceeded("subfield enumeration exceeds cap");
    long long total = count.get_si();

    std::vector<TopElem> elems;
    elems.reserve(static_cast<size_t>(total));
    std::vector<int> coeff(kernel.size(), 0);
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> d(static_cast<size_t>(dim), 0);
        for (size_t g = 0; g < kernel.size(); ++g) {
            int t = coeff[g];
            if (t == 0) continue;
            for (int i = 0; i < dim; ++i)
                d[static_cast<size_t>(i)] =
                    fp_.add(d[static_cast<size_t>(i)], fp_.mul(t, kernel[g][static_cast<size_t>(i)]));
        }
        elems.push_back(top_from_fp_digits(d));
        int g = static_cast<int>(kernel.size()) - 1;
        while (g >= 0 && ++coeff[static_cast<size_t>(g)] == p_) {
            coeff[static_cast<size_t>(g)] = 0;
            --g;
        }
    }
    std::sort(elems.begin(), elems.end(), top_less);
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (static_cast<long long>(elems.size()) != total)
        throw std::logic_error("subfield enumeration produced duplicates");
    subfield_ = std::move(elems);
    return *subfield_;
}

// --- spec-level wrappers --------------------------------------------------------------------

namespace {

void require_level(const FieldElement& x, Level want, const char* op) {
    if (x.level != want)
        throw std::invalid_argument(std::string(op) + ": expected level " + level_name(want) +
                                    ", got " + level_name(x.level));
}

}  // namespace

FieldElement arith(const FieldTower& t, const FieldElement& a, const FieldElement& b, ArithOp op) {
    if (a.level != b.level)
        throw std::invalid_argument("arith: level mismatch (" + level_name(a.level) + " vs " +
                                    level_name(b.level) + ")");
    if (a.level == Level::Top) {
        switch (op) {
            case ArithOp::Add: return FieldElement::top(t.top_add(a.v, b.v));
            case ArithOp::Sub: return FieldElement::top(t.top_sub(a.v, b.v));
            case ArithOp::Mul: return FieldElement::top(t.top_mul(a.v, b.v));
            case ArithOp::Div: return FieldElement::top(t.top_mul(a.v, t.top_inv(b.v)));
        }
    }
    const detail::SmallField& f =
        a.level == Level::Fp ? t.fp() : (a.level == Level::Fq ? t.fq() : t.fq2());
    int x = a.scalar(), y = b.scalar();
    int r = 0;
    switch (op) {
        case ArithOp::Add: r = f.add(x, y); break;
        case ArithOp::Sub: r = f.sub(x, y); break;
        case ArithOp::Mul: r = f.mul(x, y); break;
        case ArithOp::Div: r = f.mul(x, f.inv(y)); break;
    }
    return {a.level, {r}};
}

FieldElement conjugate(const FieldTower& t, const FieldElement& x) {
    require_level(x, Level::Fq2, "conjugate");
    return FieldElement::fq2(t.fq2_conj(x.scalar()));
}

FieldElement frobenius_q(const FieldTower& t, const FieldElement& x, int k) {
    require_level(x, Level::Top, "frobenius_q");
    return FieldElement::top(t.top_frobenius(x.v, k));
}

FieldElement relative_trace(const FieldTower& t, const FieldElement& x) {
    require_level(x, Level::Top, "relative_trace");
    return FieldElement::fq2(t.top_trace(x.v));
}

FieldElement embed(const FieldTower& t, const FieldElement& x) {
    if (x.level == Level::Fq) return FieldElement::top(t.top_embed_fq2(x.scalar()));
    if (x.level == Level::Fq2) return FieldElement::top(t.top_embed_fq2(x.scalar()));
    throw std::invalid_argument("embed: expected level Fq or Fq2, got " + level_name(x.level));
}

std::vector<FieldElement> subfield_fqn_elements(const FieldTower& t) {
    std::vector<FieldElement> out;
    for (const TopElem& e : t.subfield_fqn()) out.push_back(FieldElement::top(e));
    return out;
}

}  // namespace hrdc
