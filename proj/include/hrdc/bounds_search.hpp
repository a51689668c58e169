#pragma once

#include <optional>
#include <string>

#include "hrdc/constructions.hpp"
#include "hrdc/distributions.hpp"

namespace hrdc {

/// q^{n(n-d+1)}: the additive-code bound; for odd d it bounds arbitrary codes too.
BigInt bound_additive(int n, int d, long q);

struct EvenBound {
    Rational exact;
    BigInt floor_value;
};

/// The even-d bound, reported both as the exact rational and its floor.
EvenBound bound_even_d(int n, int d, long q);

struct BoundEntry {
    std::string name;
    std::string source;
    Rational value;
    bool additive_only = false;
    std::string applicability;  // predicate the entry was emitted under
    std::string note;
};

struct BoundReport {
    int n = 0, d = 0;
    long q = 0;
    std::vector<BoundEntry> entries;
};

/// Cited external bounds applicable at (n, d, q), with source labels.
BoundReport bound_external(int n, int d, long q);

/// Everything applicable at (n, d, q): the additive bound, the even-d bound, and the cited
/// external bounds.
BoundReport full_bound_report(int n, int d, long q);

struct SearchLimits {
    long long node_cap = 50'000'000;
    double time_cap_seconds = 600.0;
    long long vertex_cap = 1 << 10;
};

struct SearchResult {
    int size = 0;
    CodeSet witness;
    bool optimal = false;
    long long nodes = 0;
};

/// Exhaustive maximum d-code search: branch-and-bound maximum clique on the rank->=d graph
/// over X(n,q), rooted at the zero matrix (every maximum d-code has a translate through 0).
SearchResult max_code_search(int n, long q, int d, const SearchLimits& limits = {});

struct CheckItem {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::string detail;
};

struct CodeCheckReport {
    BigInt size;
    int min_distance = 0;
    bool additive = false;
    int design_strength = 0;
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (it.applicable && !it.pass) return false;
        return true;
    }
};

/// Full validation of a code against a claimed distance d: distance, additivity, every
/// applicable bound, design strength, and (odd d meeting the additive bound) the closed-form
/// inner distribution.
CodeCheckReport check_code(const CodeSet& y, int d);

}  // namespace hrdc
