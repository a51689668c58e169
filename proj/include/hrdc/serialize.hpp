#pragma once

#include <iostream>

#include <json.hpp>

#include "hrdc/distributions.hpp"

namespace hrdc {

using json = nlohmann::json;

/// {p, m, n, moduli: [[int]]}; modulus coefficients ascending-degree as canonical indices
/// (F_q indices for the F_{q²} step, F_{q²} indices for the top step).
json tower_descriptor(const FieldTower& t);

/// Rebuilds the tower from a descriptor and verifies the listed moduli match the canonical
/// deterministic construction.
std::shared_ptr<const FieldTower> tower_from_descriptor(const json& j);

// Elements as nested coefficient arrays down to F_p integers in [0, p).
json fq_to_json(const FieldTower& t, int fq_index);
json fq2_to_json(const FieldTower& t, int fq2_index);
int fq2_from_json(const FieldTower& t, const json& j);

/// n×n array of F_{q²} coefficient pairs.
json matrix_to_json(const FieldTower& t, const HermitianMatrix& a);
HermitianMatrix matrix_from_json(const FieldTower& t, const json& j);

/// JSON lines: a tower-descriptor header line, then one matrix per line.
void write_code_jsonl(std::ostream& os, const CodeSet& y);
CodeSet read_code_jsonl(std::istream& is);

/// Exact values rendered as decimal strings ("42" or "21/2") so nothing is rounded.
json rationals_to_json(const std::vector<Rational>& v);
json qtable_to_json(const QTable& t);

}  // namespace hrdc
