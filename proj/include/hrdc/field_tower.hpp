#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hrdc/bigint.hpp"

namespace hrdc {

enum class Level { Fp, Fq, Fq2, Top };

std::string level_name(Level level);

namespace detail {

/// Dense-index arithmetic for a small field K = B[x]/(f) over a previously built base field B,
/// or for the prime field F_p. An element index encodes its coefficient vector over B in base
/// |B|, degree-0 digit least significant. Lookup tables are built for small orders; larger
/// fields fall back to digit-vector arithmetic.
class SmallField {
  public:
    SmallField() = default;
    static SmallField prime(int p);
    static SmallField extension(const SmallField* base, std::vector<int> modulus);

    long long order() const { return order_; }
    int characteristic() const { return p_; }
    int degree() const { return deg_; }
    const std::vector<int>& modulus() const { return modulus_; }
    const SmallField* base() const { return base_; }

    int add(int a, int b) const {
        if (!tadd_.empty()) return tadd_[static_cast<size_t>(a) * order_ + b];
        return add_slow(a, b);
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const {
        if (!tneg_.empty()) return tneg_[a];
        return neg_slow(a);
    }
    int mul(int a, int b) const {
        if (!tmul_.empty()) return tmul_[static_cast<size_t>(a) * order_ + b];
        return mul_slow(a, b);
    }
    int inv(int a) const;
    int pow(int a, const BigInt& e) const;

    std::vector<int> digits(int a) const;
    int from_digits(const std::vector<int>& d) const;

  private:
    int add_slow(int a, int b) const;
    int neg_slow(int a) const;
    int mul_slow(int a, int b) const;
    void build_tables();

    const SmallField* base_ = nullptr;  // nullptr => prime field
    int p_ = 0;
    long long order_ = 0;
    int deg_ = 1;
    std::vector<int> modulus_;  // deg+1 base indices, monic, ascending degree
    std::vector<int> tadd_, tmul_, tneg_, tinv_;
};

/// Polynomials over a SmallField: dense coefficient vectors of field indices, ascending degree.
namespace poly {
int degree(const std::vector<int>& a);
std::vector<int> add(const SmallField& f, std::vector<int> a, const std::vector<int>& b);
std::vector<int> sub(const SmallField& f, std::vector<int> a, const std::vector<int>& b);
std::vector<int> mul(const SmallField& f, const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> rem(const SmallField& f, std::vector<int> a, const std::vector<int>& b);
std::vector<int> gcd(const SmallField& f, std::vector<int> a, std::vector<int> b);
std::vector<int> mulmod(const SmallField& f, const std::vector<int>& a, const std::vector<int>& b,
                        const std::vector<int>& mod);
std::vector<int> powmod(const SmallField& f, std::vector<int> a, BigInt e,
                        const std::vector<int>& mod);
}  // namespace poly

bool is_prime(long long v);
bool is_irreducible(const SmallField& f, const std::vector<int>& candidate);

/// First monic irreducible of the given degree over f, scanning coefficient tuples
/// (c_0, ..., c_{deg-1}) in ascending lexicographic order (degree-0 coefficient compared first).
std::vector<int> find_irreducible(const SmallField& f, int deg);

}  // namespace detail

/// An element of F_{q^{2n}} as a length-n coefficient vector over F_{q²}, ascending degree.
using TopElem = std::vector<int>;

/// Arithmetic context for the chain F_p ⊂ F_q ⊂ F_{q²} ⊂ F_{q^{2n}}. Immutable after build;
/// all operations are const and safe for concurrent use.
class FieldTower {
  public:
    static constexpr int kDefaultDegreeCap = 64;

    /// Deterministic construction: each modulus is the lexicographically smallest monic
    /// irreducible of the required degree over its base field.
    static std::shared_ptr<const FieldTower> build(int p, int m, int n,
                                                   int degree_cap = kDefaultDegreeCap);

    int p() const { return p_; }
    int m() const { return m_; }
    int n() const { return n_; }
    long long q() const { return q_; }
    long long q2() const { return q2_; }

    const detail::SmallField& fp() const { return fp_; }
    const detail::SmallField& fq() const { return fq_; }
    const detail::SmallField& fq2() const { return fq2_; }
    const std::vector<int>& modulus_fq() const { return fq_.modulus(); }
    const std::vector<int>& modulus_fq2() const { return fq2_.modulus(); }
    const std::vector<int>& modulus_top() const { return mod_top_; }

    // --- F_{q²} scalar layer (dense indices) ---
    int fq2_add(int a, int b) const { return fq2_.add(a, b); }
    int fq2_sub(int a, int b) const { return fq2_.sub(a, b); }
    int fq2_neg(int a) const { return fq2_.neg(a); }
    int fq2_mul(int a, int b) const { return fq2_.mul(a, b); }
    int fq2_inv(int a) const { return fq2_.inv(a); }
    /// x ↦ x^q on F_{q²}; fixes exactly the embedded F_q (indices < q).
    int fq2_conj(int a) const { return conj_[a]; }
    bool in_embedded_fq(int a) const { return a < q_; }
    /// Absolute trace F_q → F_p of an embedded-F_q index.
    int abs_trace_fp(int fq_index) const { return abs_trace_[fq_index]; }

    // --- top level F_{q^{2n}} ---
    TopElem top_zero() const { return TopElem(static_cast<size_t>(n_), 0); }
    TopElem top_one() const;
    /// Basis monomial z^k for 0 <= k < n (z = adjoined generator of the top step).
    TopElem top_basis(int k) const;
    bool top_is_zero(const TopElem& a) const;
    TopElem top_add(const TopElem& a, const TopElem& b) const;
    TopElem top_sub(const TopElem& a, const TopElem& b) const;
    TopElem top_neg(const TopElem& a) const;
    TopElem top_mul(const TopElem& a, const TopElem& b) const;
    TopElem top_inv(const TopElem& a) const;
    TopElem top_pow(const TopElem& a, const BigInt& e) const;
    TopElem top_embed_fq2(int c) const;
    /// x ↦ x^{q^k}, 0 <= k < 2n, via the precomputed q-power map.
    TopElem top_frobenius(const TopElem& a, int k) const;
    /// Relative trace F_{q^{2n}} → F_{q²}: Σ_{k<n} x^{q^{2k}}, returned as an F_{q²} index.
    int top_trace(const TopElem& a) const;

    /// Total order used for canonical sorting: lexicographic on the coefficient vector,
    /// degree-0 coefficient compared first.
    static bool top_less(const TopElem& a, const TopElem& b);

    /// The q^n elements fixed by x ↦ x^{q^n}, canonically sorted. Computed as the kernel of
    /// (Frobenius^n − id) over F_p; cached after the first call.
    const std::vector<TopElem>& subfield_fqn() const;

    // F_p coordinate vector of a top element (length 2nm), used for kernel computations.
    std::vector<int> top_to_fp_digits(const TopElem& a) const;
    TopElem top_from_fp_digits(const std::vector<int>& d) const;
    int fp_dim() const { return 2 * n_ * m_; }

  private:
    FieldTower() = default;
    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;
    TopElem frob1(const TopElem& a) const;
    void precompute();

    int p_ = 0, m_ = 0, n_ = 0;
    long long q_ = 0, q2_ = 0;
    detail::SmallField fp_, fq_, fq2_;
    std::vector<int> mod_top_;
    std::vector<int> conj_;       // x^q on F_{q²}
    std::vector<int> abs_trace_;  // F_q → F_p
    std::vector<TopElem> frob_basis_;  // (z^i)^q
    std::vector<int> trace_basis_;     // Tr(z^i) as F_{q²} indices

    mutable std::mutex subfield_mu_;
    mutable std::optional<std::vector<TopElem>> subfield_;
};

// --- Spec-level element wrapper -----------------------------------------------------------

/// Tagged element for the public tower API; scalar levels hold one dense index, the top level
/// holds the full coefficient vector.
struct FieldElement {
    Level level = Level::Fp;
    std::vector<int> v;

    static FieldElement fp(int a) { return {Level::Fp, {a}}; }
    static FieldElement fq(int a) { return {Level::Fq, {a}}; }
    static FieldElement fq2(int a) { return {Level::Fq2, {a}}; }
    static FieldElement top(TopElem a) { return {Level::Top, std::move(a)}; }

    int scalar() const { return v.at(0); }
    bool operator==(const FieldElement& o) const = default;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement arith(const FieldTower& t, const FieldElement& a, const FieldElement& b, ArithOp op);
FieldElement conjugate(const FieldTower& t, const FieldElement& x);
FieldElement frobenius_q(const FieldTower& t, const FieldElement& x, int k);
FieldElement relative_trace(const FieldTower& t, const FieldElement& x);
FieldElement embed(const FieldTower& t, const FieldElement& x);
std::vector<FieldElement> subfield_fqn_elements(const FieldTower& t);

}  // namespace hrdc
