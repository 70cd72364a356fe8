#pragma once
#include <chrono>
#include <string>
#include <vector>
#include <json.hpp>

namespace slab {

/// Outcome of a named check or experiment. `anchor` names the mathematical
/// claim being exercised (or the literal "plumbing" for infrastructure-only
/// runs); `status` is pass/fail for asserted checks and "informative" for
/// measurements that carry no acceptance threshold.
struct RunReport {
    std::string experiment;
    std::string anchor;
    std::string status = "informative";   // pass | fail | informative
    nlohmann::json metrics = nlohmann::json::object();
    double wall_ms = 0.0;
    std::string config_hash;

    bool passed() const { return status != "fail"; }
    bool asserted() const { return status != "informative"; }
    nlohmann::json to_json() const;
    /// Deterministic serialization: wall time excluded so that two runs of
    /// the same config compare byte-identically.
    std::string deterministic_dump() const;
};

void write_text_file(const std::string& path, const std::string& content);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// Minimal CSV emitter; all experiments write their curves through this so
/// the formatting stays uniform.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> columns);
    void row(const std::vector<double>& values);
    const std::string& text() const { return text_; }
    void save(const std::string& path) const;

private:
    std::size_t ncols_;
    std::string text_;
};

class Timer {
public:
    Timer() : start_(clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

/// Ordinary least squares fit y = a + b x; returns {a, b, rms residual}.
struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double rms = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

} // namespace slab
