#include "slab/config.hpp"
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

Config Config::parse_text(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::runtime_error("config: bad section header at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: missing '=' at line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config: empty key at line " + std::to_string(lineno));
        if (!section.empty()) key = section + "." + key;
        c.kv_[key] = value;
    }
    return c;
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

void Config::set(const std::string& key, const std::string& value) { kv_[key] = value; }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

std::string Config::require_string(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw std::runtime_error("config: missing required key '" + key + "'");
    return it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    return std::stod(it->second);
}

double Config::require_double(const std::string& key) const { return std::stod(require_string(key)); }

long long Config::get_int(const std::string& key, long long fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    return std::stoll(it->second);
}

long long Config::require_int(const std::string& key) const { return std::stoll(require_string(key)); }

bool Config::get_bool(const std::string& key, bool fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::runtime_error("config: key '" + key + "' is not a boolean: " + v);
}

std::uint64_t Config::get_seed(const std::string& key) const {
    return static_cast<std::uint64_t>(std::stoull(require_string(key)));
}

std::uint64_t Config::get_seed(const std::string& key, std::uint64_t fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    return static_cast<std::uint64_t>(std::stoull(it->second));
}

namespace {
template <class T, class F>
std::vector<T> split_list(const std::string& text, F convert) {
    std::vector<T> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(convert(item));
    }
    return out;
}
} // namespace

std::vector<long long> Config::get_int_list(const std::string& key,
                                            const std::vector<long long>& fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    return split_list<long long>(it->second, [](const std::string& s) { return std::stoll(s); });
}

std::vector<double> Config::get_double_list(const std::string& key,
                                            const std::vector<double>& fallback) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    return split_list<double>(it->second, [](const std::string& s) { return std::stod(s); });
}

std::string Config::canonical_text() const {
    std::string out;
    for (const auto& [k, v] : kv_) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string Config::hash() const {
    std::uint64_t h = fnv1a64(canonical_text());
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

} // namespace slab
