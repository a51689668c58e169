#include "hrdc/report_json.hpp"

namespace hrdc {

json bound_report_to_json(const BoundReport& rep) {
    json entries = json::array();
    for (const BoundEntry& e : rep.entries) {
        json je;
        je["name"] = e.name;
        je["source"] = e.source;
        je["value"] = to_string(e.value);
        je["additive_only"] = e.additive_only;
        je["applicability"] = e.applicability;
        je["note"] = e.note;
        entries.push_back(std::move(je));
    }
    json j;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["q"] = static_cast<long>(rep.q);
    j["entries"] = std::move(entries);
    return j;
}

json analysis_to_json(const CodeSet& y) {
    const FieldTower& t = y.t();
    InnerDistribution inner = inner_distribution(y);
    QTable table = q_explicit(y.n, t.q());
    DualDistribution dual = dual_distribution(inner, table);
    int d = min_distance(inner);
    json j;
    j["size"] = std::to_string(y.size());
    j["additive"] = is_additive(y);
    j["inner"] = rationals_to_json(inner.a);
    j["dual"] = rationals_to_json(dual.a);
    j["min_distance"] = d;
    j["design_strength"] = design_strength(dual);
    j["bounds"] = bound_report_to_json(full_bound_report(y.n, std::min(d, y.n), t.q()));
    return j;
}

json census_to_json(const ConstructionSpec& spec, const std::vector<BigInt>& census) {
    json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    j["d"] = family_distance(spec);
    j["q"] = static_cast<long>(spec.q);
    j["size"] = construction_size(spec).get_str();
    // for the additive families the member rank census IS the inner distribution
    j["additive"] = family_additive(spec.family);
    json arr = json::array();
    for (const BigInt& v : census) arr.push_back(v.get_str());
    j["rank_census"] = std::move(arr);
    return j;
}

json search_result_to_json(const SearchResult& res) {
    json j;
    j["size"] = res.size;
    j["optimal"] = res.optimal;
    j["nodes"] = res.nodes;
    j["tower"] = tower_descriptor(res.witness.t());
    json w = json::array();
    for (const HermitianMatrix& a : res.witness.mats)
        w.push_back(matrix_to_json(res.witness.t(), a));
    j["witness"] = std::move(w);
    return j;
}

json suite_result_to_json(const SuiteResult& res) {
    json j;
    j["suite"] = res.suite;
    j["checks"] = res.checks;
    j["failures"] = res.failures;
    j["pass"] = res.pass();
    return j;
}

}  // namespace hrdc
