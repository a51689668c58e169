#pragma once

#include "hrdc/bounds_search.hpp"
#include "hrdc/serialize.hpp"
#include "hrdc/verify.hpp"

namespace hrdc {

// JSON renderings of the CLI outputs; every exact value is a decimal string ("42" or "21/2").
json bound_report_to_json(const BoundReport& rep);
json analysis_to_json(const CodeSet& y);
json census_to_json(const ConstructionSpec& spec, const std::vector<BigInt>& census);
json search_result_to_json(const SearchResult& res);
json suite_result_to_json(const SuiteResult& res);

}  // namespace hrdc
