#pragma once
#include <cstdint>
#include <complex>

namespace slab {

/// Deterministic seeded generator (splitmix64 core). We avoid the standard
/// library distributions so that streams are reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [a, b).
    double uniform(double a, double b);
    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n);
    /// Log-uniform in [a, b], a > 0.
    double log_uniform(double a, double b);
    /// Standard normal (Box-Muller, cached spare).
    double normal();
    /// Complex standard normal (independent re/im, variance 1/2 each).
    std::complex<double> cnormal();
    /// Random sign, +1 or -1.
    double sign();

    /// Derive an independent stream for a labelled sub-task.
    Rng fork(std::uint64_t label) const;

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace slab
