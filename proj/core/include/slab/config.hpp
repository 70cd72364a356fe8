#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slab {

/// Flat key/value configuration. Format: `key = value` lines, `#` comments,
/// and at most one level of grouping via `[section]` headers which prefix
/// the keys that follow as `section.key`. Values are free text; typed access
/// is performed on lookup. The canonical text (sorted keys) feeds the config
/// hash recorded in every run report.
class Config {
public:
    Config() = default;

    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text);

    bool has(const std::string& key) const;
    void set(const std::string& key, const std::string& value);

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::string require_string(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    double require_double(const std::string& key) const;
    long long get_int(const std::string& key, long long fallback) const;
    long long require_int(const std::string& key) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::uint64_t get_seed(const std::string& key) const;           // throws if absent
    std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;
    std::vector<long long> get_int_list(const std::string& key,
                                        const std::vector<long long>& fallback) const;
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;

    /// Sorted `key = value` lines; stable input for hashing.
    std::string canonical_text() const;
    /// FNV-1a 64-bit hash of the canonical text, as fixed-width hex.
    std::string hash() const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

/// FNV-1a 64-bit, exposed for report hashing of other payloads.
std::uint64_t fnv1a64(const std::string& data);

} // namespace slab
