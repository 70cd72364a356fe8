#pragma once
#include <string>
#include <vector>
#include "slab/field.hpp"

namespace slab {

/// Self-describing binary snapshot: a magic line, a one-line JSON header
/// (grid, rank, state, domain, time extent), then row-major complex64
/// samples (float32 re, float32 im) in [time][component][space] order.
void write_snapshot(const std::string& path, const Field& f);
Field read_snapshot(const std::string& path);

/// 1-D slice along `axis` at fixed time/component/other indices, exported as
/// CSV columns (coordinate, re, im).
void export_csv_slice(const std::string& path, const Field& f, int t, int c,
                      int axis, const std::vector<int>& fixed);

} // namespace slab
