#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hrdc::cache {

/// Enables on-disk memoization of modulus polynomials and negative q-binomial values.
/// The CLI calls this with $HRDC_CACHE_DIR when set; library use is optional.
void set_dir(const std::string& dir);
bool enabled();

std::optional<std::vector<int>> get_modulus(const std::string& key);
void put_modulus(const std::string& key, const std::vector<int>& coeffs);

std::optional<std::string> get_negq(const std::string& key);
void put_negq(const std::string& key, const std::string& value);

/// Persists dirty entries to <dir>/hrdc_cache.json. No-op when disabled.
void flush();

}  // namespace hrdc::cache
