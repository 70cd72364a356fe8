#include "slab/rng.hpp"
#include <cmath>

namespace slab {

std::uint64_t Rng::next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

std::uint64_t Rng::uniform_int(std::uint64_t n) {
    // Modulo bias is irrelevant at these ranges but rejection keeps it exact.
    if (n == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = next_u64(); } while (v >= limit);
    return v % n;
}

double Rng::log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
}

double Rng::normal() {
    if (has_spare_) { has_spare_ = false; return spare_; }
    double u1, u2;
    do { u1 = uniform(); } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(th);
    has_spare_ = true;
    return r * std::cos(th);
}

std::complex<double> Rng::cnormal() {
    double re = normal(), im = normal();
    return {re * 0.7071067811865475244, im * 0.7071067811865475244};
}

double Rng::sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

Rng Rng::fork(std::uint64_t label) const {
    Rng child(state_ ^ (0xa0761d6478bd642fULL * (label + 1)));
    child.next_u64();
    return child;
}

} // namespace slab
