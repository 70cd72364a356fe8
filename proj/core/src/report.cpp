#include "slab/report.hpp"
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace slab {

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["experiment"] = experiment;
    j["anchor"] = anchor;
    j["status"] = status;
    j["metrics"] = metrics;
    j["wall_ms"] = wall_ms;
    j["config_hash"] = config_hash;
    return j;
}

std::string RunReport::deterministic_dump() const {
    nlohmann::json j = to_json();
    j.erase("wall_ms");
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : ncols_(columns.size()) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) text_ += ',';
        text_ += columns[i];
    }
    text_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != ncols_) throw std::runtime_error("csv row width mismatch");
    char buf[32];
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text_ += ',';
        std::snprintf(buf, sizeof buf, "%.12g", values[i]);
        text_ += buf;
    }
    text_ += '\n';
}

void CsvWriter::save(const std::string& path) const { write_text_file(path, text_); }

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::runtime_error("fit_line: need >= 2 points");
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) throw std::runtime_error("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double r = y[i] - (f.intercept + f.slope * x[i]);
        ss += r * r;
    }
    f.rms = std::sqrt(ss / n);
    return f;
}

} // namespace slab
