#include "hrdc/cache.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

#include <json.hpp>

namespace hrdc::cache {

namespace {

struct State {
    std::mutex mu;
    std::string dir;
    bool loaded = false;
    bool dirty = false;
    std::map<std::string, std::vector<int>> moduli;
    std::map<std::string, std::string> negq;
};

State& state() {
    static State s;
    return s;
}

std::string cache_path(const State& s) { return s.dir + "/hrdc_cache.json"; }

void load_locked(State& s) {
    if (s.loaded) return;
    s.loaded = true;
    std::ifstream in(cache_path(s));
    if (!in) return;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return;  // corrupt cache files are ignored, not fatal
    }
    if (j.contains("moduli"))
        for (auto& [k, v] : j["moduli"].items()) s.moduli[k] = v.get<std::vector<int>>();
    if (j.contains("negq"))
        for (auto& [k, v] : j["negq"].items()) s.negq[k] = v.get<std::string>();
}

}  // namespace

void set_dir(const std::string& dir) {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    s.dir = dir;
    s.loaded = false;
}

bool enabled() {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    return !s.dir.empty();
}

std::optional<std::vector<int>> get_modulus(const std::string& key) {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    if (s.dir.empty()) return std::nullopt;
    load_locked(s);
    auto it = s.moduli.find(key);
    if (it == s.moduli.end()) return std::nullopt;
    return it->second;
}

void put_modulus(const std::string& key, const std::vector<int>& coeffs) {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    if (s.dir.empty()) return;
    load_locked(s);
    if (s.moduli.emplace(key, coeffs).second) s.dirty = true;
}

std::optional<std::string> get_negq(const std::string& key) {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    if (s.dir.empty()) return std::nullopt;
    load_locked(s);
    auto it = s.negq.find(key);
    if (it == s.negq.end()) return std::nullopt;
    return it->second;
}

void put_negq(const std::string& key, const std::string& value) {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    if (s.dir.empty()) return;
    load_locked(s);
    if (s.negq.emplace(key, value).second) s.dirty = true;
}

void flush() {
    State& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    if (s.dir.empty() || !s.dirty) return;
    std::error_code ec;
    std::filesystem::create_directories(s.dir, ec);
    nlohmann::json j;
    j["moduli"] = nlohmann::json::object();
    for (auto& [k, v] : s.moduli) j["moduli"][k] = v;
    j["negq"] = nlohmann::json::object();
    for (auto& [k, v] : s.negq) j["negq"][k] = v;
    std::ofstream out(cache_path(s));
    out << j.dump(2) << "\n";
    s.dirty = false;
}

}  // namespace hrdc::cache
