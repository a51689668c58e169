#include <doctest.h>

#include <random>

#include "hrdc/field_tower.hpp"

using namespace hrdc;

namespace {

TopElem random_top(const FieldTower& t, std::mt19937_64& rng) {
    TopElem e = t.top_zero();
    std::uniform_int_distribution<int> dist(0, static_cast<int>(t.q2()) - 1);
    for (int& c : e) c = dist(rng);
    return e;
}

void for_all_top(const FieldTower& t, const std::function<void(const TopElem&)>& fn) {
    TopElem e = t.top_zero();
    while (true) {
        fn(e);
        int i = t.n() - 1;
        while (i >= 0) {
            if (++e[static_cast<size_t>(i)] < t.q2()) break;
            e[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

}  // namespace

TEST_CASE("tower construction picks deterministic minimal moduli") {
    auto t = FieldTower::build(2, 1, 2);
    CHECK(t->q() == 2);
    CHECK(t->q2() == 4);
    // F_4 = F_2[y]/(y^2+y+1), the unique irreducible quadratic over F_2
    CHECK(t->modulus_fq2() == std::vector<int>{1, 1, 1});
    auto t2 = FieldTower::build(2, 1, 2);
    CHECK(t->modulus_fq() == t2->modulus_fq());
    CHECK(t->modulus_fq2() == t2->modulus_fq2());
    CHECK(t->modulus_top() == t2->modulus_top());
}

TEST_CASE("degenerate and prime-power towers") {
    auto t31 = FieldTower::build(3, 1, 1);  // F_3 in F_9 with a degree-1 top step
    CHECK(t31->q() == 3);
    CHECK(t31->q2() == 9);
    CHECK(t31->modulus_top() == std::vector<int>{0, 1});

    auto t22 = FieldTower::build(2, 2, 2);  // q = 4, total degree 8 over F_2
    CHECK(t22->q() == 4);
    CHECK(t22->q2() == 16);
    CHECK(t22->fp_dim() == 8);
}

TEST_CASE("tower construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldTower::build(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldTower::build(2, 1, 40), CapExceeded);
}

TEST_CASE("F_4 arithmetic forced by the modulus") {
    auto t = FieldTower::build(2, 1, 2);
    FieldElement omega = FieldElement::fq2(2);  // the class of y
    FieldElement omega_sq = arith(*t, omega, omega, ArithOp::Mul);
    CHECK(omega_sq == FieldElement::fq2(3));  // y^2 = y + 1
    // a * a^{-1} = 1 for all nonzero a
    for (int a = 1; a < 4; ++a) {
        FieldElement x = FieldElement::fq2(a);
        FieldElement inv = arith(*t, FieldElement::fq2(1), x, ArithOp::Div);
        CHECK(arith(*t, x, inv, ArithOp::Mul) == FieldElement::fq2(1));
    }
    CHECK_THROWS_AS(arith(*t, omega, FieldElement::fq2(0), ArithOp::Div), std::domain_error);
    CHECK_THROWS_AS(arith(*t, omega, FieldElement::fq(1), ArithOp::Add), std::invalid_argument);
}

TEST_CASE("characteristic-2 Frobenius additivity in F_16") {
    auto t = FieldTower::build(2, 1, 2);
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 50; ++it) {
        TopElem a = random_top(*t, rng), b = random_top(*t, rng);
        TopElem lhs = t->top_mul(t->top_add(a, b), t->top_add(a, b));
        TopElem rhs = t->top_add(t->top_mul(a, a), t->top_mul(b, b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("frobenius_q basics and repeated-squaring oracle") {
    auto t = FieldTower::build(2, 1, 2);
    std::mt19937_64 rng(99);
    for (int it = 0; it < 30; ++it) {
        TopElem x = random_top(*t, rng);
        CHECK(t->top_frobenius(x, 0) == x);
        CHECK(t->top_frobenius(t->top_frobenius(x, t->n()), t->n()) == x);
        // q = 2: the q-power map is squaring
        CHECK(t->top_frobenius(x, 1) == t->top_pow(x, 2));
    }
    TopElem gen = t->top_basis(1);
    CHECK(t->top_frobenius(gen, 1) == t->top_mul(gen, gen));
    CHECK_THROWS_AS(t->top_frobenius(gen, 4), std::invalid_argument);
}

TEST_CASE("conjugation fixes F_q and is an involution") {
    for (long pq : {2L, 3L}) {
        auto t = FieldTower::build(static_cast<int>(pq), 1, 2);
        CHECK(t->fq2_conj(1) == 1);
        for (int a = 0; a < t->q2(); ++a) {
            CHECK(t->fq2_conj(t->fq2_conj(a)) == a);
            CHECK((t->fq2_conj(a) == a) == (a < t->q()));
        }
    }
    auto t = FieldTower::build(2, 1, 2);
    CHECK(conjugate(*t, FieldElement::fq2(2)) == FieldElement::fq2(3));  // ω^2 = ω + 1
}

TEST_CASE("relative trace basics and surjectivity") {
    auto t = FieldTower::build(2, 1, 2);
    CHECK(t->top_trace(t->top_zero()) == 0);
    CHECK(t->top_trace(t->top_one()) == 0);  // n·1 = 2 ≡ 0 mod 2
    std::vector<int> hits(static_cast<size_t>(t->q2()), 0);
    for_all_top(*t, [&](const TopElem& x) { hits[static_cast<size_t>(t->top_trace(x))]++; });
    for (int v : hits) CHECK(v == 4);  // q^{2(n-1)} preimages each

    auto t3 = FieldTower::build(3, 1, 2);
    CHECK(t3->top_trace(t3->top_one()) == 2);  // n·1 = 2 mod 3
}

TEST_CASE("relative trace is F_{q2}-linear and commutes with conjugation") {
    auto t = FieldTower::build(3, 1, 2);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> cdist(0, static_cast<int>(t->q2()) - 1);
    for (int it = 0; it < 100; ++it) {
        TopElem x = random_top(*t, rng), y = random_top(*t, rng);
        int c = cdist(rng);
        int lhs = t->top_trace(t->top_add(x, y));
        CHECK(lhs == t->fq2_add(t->top_trace(x), t->top_trace(y)));
        TopElem cx = x;
        for (int& v : cx) v = t->fq2_mul(v, c);
        CHECK(t->top_trace(cx) == t->fq2_mul(c, t->top_trace(x)));
        // Tr(x)^q = Tr(x^q)
        CHECK(t->fq2_conj(t->top_trace(x)) == t->top_trace(t->top_frobenius(x, 1)));
    }
}

TEST_CASE("subfield_fqn is the fixed field of Frobenius^n") {
    auto t = FieldTower::build(2, 1, 2);
    const auto& sub = t->subfield_fqn();
    REQUIRE(sub.size() == 4);
    for (const TopElem& x : sub) {
        CHECK(t->top_frobenius(x, t->n()) == x);
        for (const TopElem& y : sub) {
            TopElem s = t->top_sub(x, y);
            TopElem m = t->top_mul(x, y);
            CHECK(std::binary_search(sub.begin(), sub.end(), s, FieldTower::top_less));
            CHECK(std::binary_search(sub.begin(), sub.end(), m, FieldTower::top_less));
        }
    }
    // n = 1: the fixed field is all of F_q inside F_{q^2}
    auto t1 = FieldTower::build(3, 1, 1);
    const auto& sub1 = t1->subfield_fqn();
    REQUIRE(sub1.size() == 3);
    for (const TopElem& x : sub1) CHECK(x[0] < t1->q());
}

TEST_CASE("subfield meets the embedded F_{q2} in q^gcd(n,2) elements") {
    for (long q : {2L, 3L})
        for (int n = 1; n <= 4; ++n) {
            auto t = FieldTower::build(static_cast<int>(q), 1, n);
            long long constant_members = 0;
            for (const TopElem& x : t->subfield_fqn()) {
                bool constant = true;
                for (int i = 1; i < n; ++i)
                    if (x[static_cast<size_t>(i)] != 0) constant = false;
                if (constant) ++constant_members;
            }
            long long expect = 1;
            for (int i = 0; i < (n % 2 == 0 ? 2 : 1); ++i) expect *= q;
            CHECK(constant_members == expect);
        }
}

TEST_CASE("embedding is a ring homomorphism compatible with conjugation") {
    for (long q : {2L, 3L})
        for (int n = 1; n <= 3; ++n) {
            auto t = FieldTower::build(static_cast<int>(q), 1, n);
            CHECK(embed(*t, FieldElement::fq2(0)) == FieldElement::top(t->top_zero()));
            CHECK(embed(*t, FieldElement::fq2(1)) == FieldElement::top(t->top_one()));
            for (int a = 0; a < t->q2(); ++a) {
                for (int b = 0; b < t->q2(); ++b) {
                    TopElem lhs = t->top_mul(t->top_embed_fq2(a), t->top_embed_fq2(b));
                    CHECK(lhs == t->top_embed_fq2(t->fq2_mul(a, b)));
                }
                // conjugate then embed = embed then Frobenius
                CHECK(t->top_embed_fq2(t->fq2_conj(a)) ==
                      t->top_frobenius(t->top_embed_fq2(a), 1));
            }
        }
}

TEST_CASE("multiplicative group order at the top level") {
    for (auto [p, m, n] : {std::tuple{2, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
        auto t = FieldTower::build(p, m, n);
        BigInt order = big_pow(to_big(t->q()), static_cast<unsigned long>(2 * n)) - 1;
        std::mt19937_64 rng(4242);
        for (int it = 0; it < 100; ++it) {
            TopElem a = random_top(*t, rng);
            if (t->top_is_zero(a)) continue;
            CHECK(t->top_pow(a, order) == t->top_one());
        }
    }
}

TEST_CASE("field element wrappers reject wrong levels") {
    auto t = FieldTower::build(2, 1, 2);
    CHECK_THROWS_AS(conjugate(*t, FieldElement::fq(1)), std::invalid_argument);
    CHECK_THROWS_AS(relative_trace(*t, FieldElement::fq2(1)), std::invalid_argument);
    CHECK_THROWS_AS(embed(*t, FieldElement::fp(1)), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_q(*t, FieldElement::fq2(1), 1), std::invalid_argument);
    // relative trace lands in the F_{q2} level
    FieldElement tr = relative_trace(*t, FieldElement::top(t->top_one()));
    CHECK(tr.level == Level::Fq2);
}
