#include <doctest.h>

#include "hrdc/constructions.hpp"
#include "hrdc/distributions.hpp"

using namespace hrdc;

namespace {

CodeSet whole_space(std::shared_ptr<const FieldTower> t, int n) {
    std::vector<HermitianMatrix> mats;
    enumerate_hermitian(*t, n, [&](const HermitianMatrix& a) { mats.push_back(a); });
    return make_code_set(std::move(t), n, std::move(mats));
}

std::vector<Rational> rats(std::initializer_list<long> vals) {
    std::vector<Rational> out;
    for (long v : vals) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("make_code_set sorts, deduplicates, and validates") {
    auto t = FieldTower::build(2, 1, 2);
    HermitianMatrix z = hermitian_zero(2);
    HermitianMatrix a(*t, 2, {1, 0, 0, 0});
    CodeSet y = make_code_set(t, 2, {a, z, a});
    CHECK(y.size() == 2);
    CHECK(y.mats[0] == z);  // canonical order puts the zero matrix first
    CHECK_THROWS_AS(make_code_set(t, 2, {hermitian_zero(3)}), std::invalid_argument);
}

TEST_CASE("inner distribution basics") {
    auto t = FieldTower::build(2, 1, 2);
    CodeSet trivial = make_code_set(t, 2, {hermitian_zero(2)});
    InnerDistribution d0 = inner_distribution(trivial);
    CHECK(d0.a == rats({1, 0, 0}));
    CHECK(min_distance(d0) == 3);  // singleton convention: n + 1

    CodeSet x = whole_space(t, 2);
    InnerDistribution dx = inner_distribution(x);
    CHECK(dx.a == rats({1, 5, 10}));
    CHECK(min_distance(dx) == 1);

    CHECK_THROWS_AS(inner_distribution(make_code_set(t, 2, {})), std::invalid_argument);
}

TEST_CASE("additive fast path equals the pairwise census") {
    for (auto spec : {ConstructionSpec{Family::Thm42, 3, 3, 2},
                      ConstructionSpec{Family::ZeroDiag, 3, 2, 2},
                      ConstructionSpec{Family::Thm41, 3, 2, 2},
                      ConstructionSpec{Family::Thm41, 4, 3, 2},
                      ConstructionSpec{Family::SymmetricDn, 4, 4, 2},
                      ConstructionSpec{Family::SymmetricDn, 2, 2, 3}}) {
        CodeSet y = construct(spec);
        REQUIRE(is_additive(y));
        CHECK(inner_distribution(y).a == inner_distribution_pairwise(y).a);
    }
}

TEST_CASE("additivity detection accepts subgroups and rejects the non-additive code") {
    CodeSet zd = construct_zero_diag(2, 2);
    CHECK(is_additive(zd));
    CodeSet y43 = construct_thm43(2, 2);
    CHECK_FALSE(is_additive(y43));
    // explicit closure counterexample
    const FieldTower& t = y43.t();
    bool found_escape = false;
    for (const auto& a : y43.mats)
        for (const auto& b : y43.mats) {
            HermitianMatrix diff = hermitian_sub(t, a, b);
            bool inside = false;
            for (const auto& c : y43.mats) inside = inside || c == diff;
            if (!inside) found_escape = true;
        }
    CHECK(found_escape);
    CHECK_THROWS_AS(additive_generators(y43), std::invalid_argument);
}

TEST_CASE("dual distribution examples and nonnegativity") {
    auto t = FieldTower::build(2, 1, 2);
    QTable table = q_explicit(2, 2);

    CodeSet trivial = make_code_set(t, 2, {hermitian_zero(2)});
    DualDistribution d0 = dual_distribution(inner_distribution(trivial), table);
    for (int k = 0; k <= 2; ++k)
        CHECK(d0.a[static_cast<size_t>(k)] == Rational(count_rank(2, 2, k)));
    CHECK(design_strength(d0) == 0);

    CodeSet x = whole_space(t, 2);
    DualDistribution dx = dual_distribution(inner_distribution(x), table);
    CHECK(dx.a == rats({16, 0, 0}));
    CHECK(design_strength(dx) == 2);
}

TEST_CASE("dual distribution entries of an additive code are divisible by the size") {
    for (auto spec : {ConstructionSpec{Family::ZeroDiag, 2, 2, 2},
                      ConstructionSpec{Family::Thm42, 3, 3, 2},
                      ConstructionSpec{Family::Thm41, 3, 2, 2}}) {
        CodeSet y = construct(spec);
        QTable table = q_explicit(spec.n, spec.q);
        DualDistribution dual = dual_distribution(inner_distribution(y), table);
        for (const Rational& v : dual.a) {
            Rational ratio = v / Rational(to_big(static_cast<long long>(y.size())));
            CHECK(ratio.get_den() == 1);
        }
    }
}

TEST_CASE("dual code: trivial cases and the zero-diagonal example") {
    auto t = FieldTower::build(2, 1, 2);
    CodeSet x = whole_space(t, 2);
    CodeSet trivial = make_code_set(t, 2, {hermitian_zero(2)});

    CHECK(dual_code(x).size() == 1);
    CHECK(dual_code(trivial).size() == 16);

    CodeSet y = construct_zero_diag(2, 2);
    CodeSet yd = dual_code(y);
    CHECK(y.size() * yd.size() == 16);
    CHECK(yd.size() == 4);
    // (Y^⊥)^⊥ = Y
    CodeSet ydd = dual_code(yd);
    CHECK(ydd.mats == y.mats);
    // inner distribution of the dual = dual distribution / |Y|
    QTable table = q_explicit(2, 2);
    DualDistribution dual = dual_distribution(inner_distribution(y), table);
    InnerDistribution inner_d = inner_distribution(yd);
    for (int k = 0; k <= 2; ++k)
        CHECK(inner_d.a[static_cast<size_t>(k)] ==
              dual.a[static_cast<size_t>(k)] / Rational(to_big(static_cast<long long>(y.size()))));
}

TEST_CASE("closed-form inner distribution") {
    InnerDistribution d = thm33_distribution(3, 3, 2, BigInt(8));
    CHECK(d.a == rats({1, 0, 0, 7}));

    // d = 1 with the whole space: the rank census itself
    for (int n = 1; n <= 3; ++n) {
        BigInt size = big_pow(BigInt(2), static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
        InnerDistribution full = thm33_distribution(n, 1, 2, size);
        for (int i = 0; i <= n; ++i)
            CHECK(full.a[static_cast<size_t>(i)] == Rational(count_rank(n, 2, i)));
    }

    // the even-d evaluation at (3,2,2,64) is well defined but describes only the 2-codes that
    // happen to be 1-designs; it is one of the four quadruples that occur
    InnerDistribution even = thm33_distribution(3, 2, 2, BigInt(64));
    CHECK(even.a == rats({1, 0, 21, 42}));

    CHECK_THROWS_AS(thm33_distribution(2, 1, 2, BigInt(2)), std::domain_error);
    CHECK_THROWS_AS(thm33_distribution(2, 0, 2, BigInt(4)), std::invalid_argument);
}

TEST_CASE("distribution vector invariants hold for every constructed code") {
    for (auto spec : {ConstructionSpec{Family::Thm41, 3, 2, 2},
                      ConstructionSpec{Family::Thm42, 3, 3, 2},
                      ConstructionSpec{Family::ZeroDiag, 3, 2, 2},
                      ConstructionSpec{Family::SymmetricDn, 4, 4, 2},
                      ConstructionSpec{Family::Thm43, 2, 2, 3}}) {
        CodeSet y = construct(spec);
        bool additive = is_additive(y);
        InnerDistribution inner = inner_distribution(y);
        CHECK(inner.a[0] == 1);
        Rational sum(0);
        for (const Rational& v : inner.a) {
            CHECK(v >= 0);
            if (additive) CHECK(v.get_den() == 1);
            sum += v;
        }
        CHECK(sum == Rational(to_big(static_cast<long long>(y.size()))));
        DualDistribution dual = dual_distribution(inner, q_explicit(spec.n, spec.q));
        CHECK(dual.a[0] == Rational(to_big(static_cast<long long>(y.size()))));
        for (const Rational& v : dual.a) CHECK(v >= 0);
    }
}

TEST_CASE("dual distribution rejects mismatched dimensions") {
    auto t = FieldTower::build(2, 1, 2);
    CodeSet y = make_code_set(t, 2, {hermitian_zero(2)});
    CHECK_THROWS_AS(dual_distribution(inner_distribution(y), q_explicit(3, 2)),
                    std::invalid_argument);
}

TEST_CASE("maximal odd-d codes match the closed form exactly") {
    for (auto spec : {ConstructionSpec{Family::Thm42, 3, 3, 2},
                      ConstructionSpec{Family::Thm42, 3, 1, 2},
                      ConstructionSpec{Family::Thm41, 2, 1, 2},
                      ConstructionSpec{Family::Thm41, 4, 3, 2}}) {
        CodeSet y = construct(spec);
        InnerDistribution inner = inner_distribution(y);
        InnerDistribution closed = thm33_distribution(
            spec.n, family_distance(spec), spec.q, to_big(static_cast<long long>(y.size())));
        CHECK(inner.a == closed.a);
    }
}
