#include "hrdc/verify.hpp"

#include <sstream>

#include "hrdc/bounds_search.hpp"
#include "hrdc/constructions.hpp"
#include "hrdc/distributions.hpp"
#include "hrdc/scheme_eigen.hpp"

namespace hrdc {

namespace {

SuiteResult run_identities() {
    SuiteResult res;
    res.suite = "identities";
    for (int n = 1; n <= 6; ++n)
        for (long q : {2L, 3L, 4L, 5L}) {
            ++res.checks;
            IdentityReport rep = verify_identities(n, q);
            if (!rep.pass)
                res.failures.push_back("n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                       ": " + rep.failure);
            ++res.checks;
            if (q_explicit(n, q).t != q_recurrence(n, q).t)
                res.failures.push_back("n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                       ": explicit and recurrence tables differ");
        }
    return res;
}

std::string spec_label(const ConstructionSpec& s) {
    std::ostringstream os;
    os << family_name(s.family) << "(n=" << s.n << ",d=" << family_distance(s) << ",q=" << s.q
       << ")";
    return os.str();
}

SuiteResult run_constructions() {
    SuiteResult res;
    res.suite = "constructions";
    std::vector<ConstructionSpec> matrix = {
        {Family::Thm41, 2, 1, 2},      {Family::Thm41, 3, 2, 2},  {Family::Thm41, 4, 3, 2},
        {Family::Thm42, 1, 1, 3},      {Family::Thm42, 3, 3, 2},  {Family::Thm42, 5, 3, 2},
        {Family::ZeroDiag, 2, 2, 2},   {Family::ZeroDiag, 3, 2, 2},
        {Family::SymmetricDn, 2, 2, 2}, {Family::SymmetricDn, 4, 4, 2},
        {Family::Thm43, 2, 2, 2},      {Family::Thm43, 2, 2, 3},  {Family::Thm43, 4, 4, 2},
    };
    for (const ConstructionSpec& spec : matrix) {
        std::string label = spec_label(spec);
        CodeSet y = construct(spec);
        ++res.checks;
        if (to_big(static_cast<long long>(y.size())) != construction_size(spec))
            res.failures.push_back(label + ": wrong size " + std::to_string(y.size()));
        ++res.checks;
        if (is_additive(y) != family_additive(spec.family))
            res.failures.push_back(label + ": unexpected additivity");
        CodeCheckReport rep = check_code(y, family_distance(spec));
        ++res.checks;
        if (!rep.all_pass()) {
            for (const CheckItem& item : rep.items)
                if (item.applicable && !item.pass)
                    res.failures.push_back(label + ": " + item.name + " (" + item.detail + ")");
        }
    }
    // the four possible inner distributions of a maximal additive 2-code in X(3,2)
    {
        ++res.checks;
        CodeSet y = construct_thm41(3, 2, 2);
        InnerDistribution inner = inner_distribution(y);
        const std::vector<std::vector<long>> listed = {
            {1, 0, 21, 42}, {1, 0, 29, 34}, {1, 0, 37, 26}, {1, 0, 45, 18}};
        bool member = false;
        for (const auto& cand : listed) {
            bool same = true;
            for (int i = 0; i <= 3; ++i)
                if (inner.a[static_cast<size_t>(i)] != Rational(cand[static_cast<size_t>(i)]))
                    same = false;
            if (same) member = true;
        }
        if (!member)
            res.failures.push_back("thm41(3,2,2): inner distribution is not one of the four "
                                   "listed quadruples");
    }
    return res;
}

SuiteResult run_distributions() {
    SuiteResult res;
    res.suite = "distributions";

    // duality at the zero-diagonal code in X(2,2)
    {
        CodeSet y = construct_zero_diag(2, 2);
        QTable table = q_explicit(2, 2);
        InnerDistribution inner = inner_distribution(y);
        DualDistribution dual = dual_distribution(inner, table);
        CodeSet yd = dual_code(y);
        ++res.checks;
        if (y.size() * yd.size() != 16) res.failures.push_back("duality: |Y|·|Y⊥| != |X|");
        InnerDistribution inner_dual = inner_distribution(yd);
        ++res.checks;
        for (int k = 0; k <= 2; ++k) {
            Rational expect = dual.a[static_cast<size_t>(k)] / Rational(to_big(static_cast<long long>(y.size())));
            if (inner_dual.a[static_cast<size_t>(k)] != expect) {
                res.failures.push_back("duality: inner(Y⊥) != dual(Y)/|Y| at k=" + std::to_string(k));
                break;
            }
        }
        // biduality: dual(inner(Y⊥)) = |Y⊥| · inner(Y)
        DualDistribution bidual = dual_distribution(inner_dual, table);
        ++res.checks;
        for (int k = 0; k <= 2; ++k) {
            Rational expect = inner.a[static_cast<size_t>(k)] * Rational(to_big(static_cast<long long>(yd.size())));
            if (bidual.a[static_cast<size_t>(k)] != expect) {
                res.failures.push_back("biduality failed at k=" + std::to_string(k));
                break;
            }
        }
        // divisibility of the dual distribution of an additive code
        ++res.checks;
        for (int k = 0; k <= 2; ++k) {
            Rational ratio = dual.a[static_cast<size_t>(k)] / Rational(to_big(static_cast<long long>(y.size())));
            if (ratio.get_den() != 1) {
                res.failures.push_back("divisibility of A'_k by |Y| failed at k=" + std::to_string(k));
                break;
            }
        }
        // dual of the trivial code is all of X
        CodeSet trivial = make_code_set(y.tower, 2, {hermitian_zero(2)});
        CodeSet full = dual_code(trivial);
        ++res.checks;
        if (full.size() != 16) res.failures.push_back("dual of {0} is not all of X");
        InnerDistribution inner_full = inner_distribution(full);
        DualDistribution dual_full = dual_distribution(inner_full, table);
        ++res.checks;
        if (dual_full.a[0] != Rational(16) || dual_full.a[1] != 0 || dual_full.a[2] != 0)
            res.failures.push_back("dual distribution of X is not (|X|, 0, ..., 0)");
    }

    // closed-form distribution cross-checks
    {
        ++res.checks;
        CodeSet y = construct_thm42(3, 3, 2);
        InnerDistribution inner = inner_distribution(y);
        InnerDistribution closed = thm33_distribution(3, 3, 2, BigInt(8));
        if (inner.a != closed.a)
            res.failures.push_back("thm42(3,3,2) inner distribution differs from the closed form");
        for (int n = 1; n <= 3; ++n) {
            ++res.checks;
            BigInt size = big_pow(BigInt(2), static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
            InnerDistribution closed1 = thm33_distribution(n, 1, 2, size);
            for (int i = 0; i <= n; ++i)
                if (closed1.a[static_cast<size_t>(i)] != Rational(count_rank(n, 2, i)))
                    res.failures.push_back("d=1 closed form disagrees with the rank census at n=" +
                                           std::to_string(n) + ", i=" + std::to_string(i));
        }
    }
    return res;
}

}  // namespace

std::vector<std::string> verify_suite_names() { return {"identities", "constructions", "distributions"}; }

SuiteResult run_verify_suite(const std::string& name) {
    if (name == "identities") return run_identities();
    if (name == "constructions") return run_constructions();
    if (name == "distributions") return run_distributions();
    throw UsageError("unknown verify suite: " + name);
}

}  // namespace hrdc
