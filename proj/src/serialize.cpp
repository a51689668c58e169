#include "hrdc/serialize.hpp"

#include <string>

namespace hrdc {

json tower_descriptor(const FieldTower& t) {
    json j;
    j["p"] = t.p();
    j["m"] = t.m();
    j["n"] = t.n();
    j["moduli"] = json::array({t.modulus_fq(), t.modulus_fq2(), t.modulus_top()});
    return j;
}

std::shared_ptr<const FieldTower> tower_from_descriptor(const json& j) {
    int p = j.at("p").get<int>();
    int m = j.at("m").get<int>();
    int n = j.at("n").get<int>();
    auto t = FieldTower::build(p, m, n);
    auto moduli = j.at("moduli").get<std::vector<std::vector<int>>>();
    if (moduli.size() != 3 || moduli[0] != t->modulus_fq() || moduli[1] != t->modulus_fq2() ||
        moduli[2] != t->modulus_top())
        throw std::invalid_argument("tower descriptor does not match the canonical construction");
    return t;
}

json fq_to_json(const FieldTower& t, int fq_index) {
    return json(t.fq().digits(fq_index));
}

json fq2_to_json(const FieldTower& t, int fq2_index) {
    json pair = json::array();
    for (int fq_digit : t.fq2().digits(fq2_index)) pair.push_back(fq_to_json(t, fq_digit));
    return pair;
}

int fq2_from_json(const FieldTower& t, const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("bad F_{q^2} element encoding");
    std::vector<int> fq_digits;
    for (const json& part : j) {
        std::vector<int> base = part.get<std::vector<int>>();
        if (static_cast<int>(base.size()) != t.m())
            throw std::invalid_argument("bad F_q element encoding");
        for (int digit : base)
            if (digit < 0 || digit >= t.p()) throw std::invalid_argument("coefficient out of [0, p)");
        fq_digits.push_back(t.fq().from_digits(base));
    }
    return t.fq2().from_digits(fq_digits);
}

json matrix_to_json(const FieldTower& t, const HermitianMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.n; ++i) {
        json row = json::array();
        for (int j = 0; j < a.n; ++j) row.push_back(fq2_to_json(t, a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

HermitianMatrix matrix_from_json(const FieldTower& t, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix encoding must be an array of rows");
    int n = static_cast<int>(j.size());
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const json& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix encoding must be square");
        for (const json& cell : row) entries.push_back(fq2_from_json(t, cell));
    }
    return HermitianMatrix(t, n, std::move(entries));
}

void write_code_jsonl(std::ostream& os, const CodeSet& y) {
    os << tower_descriptor(y.t()).dump() << "\n";
    for (const HermitianMatrix& a : y.mats) os << matrix_to_json(y.t(), a).dump() << "\n";
}

CodeSet read_code_jsonl(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty code file");
    auto tower = tower_from_descriptor(json::parse(line));
    std::vector<HermitianMatrix> mats;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        mats.push_back(matrix_from_json(*tower, json::parse(line)));
    }
    int n = tower->n();
    for (const HermitianMatrix& a : mats)
        if (a.n != n) throw std::invalid_argument("matrix dimension disagrees with the tower");
    return make_code_set(tower, n, std::move(mats));
}

json rationals_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const Rational& r : v) out.push_back(to_string(r));
    return out;
}

json qtable_to_json(const QTable& t) {
    json rows = json::array();
    for (int k = 0; k <= t.n; ++k) {
        json row = json::array();
        for (int i = 0; i <= t.n; ++i) row.push_back(t.at(k, i).get_str());
        rows.push_back(std::move(row));
    }
    json j;
    j["n"] = t.n;
    j["q"] = t.q;
    j["method"] = t.method;
    j["table"] = std::move(rows);
    return j;
}

}  // namespace hrdc
