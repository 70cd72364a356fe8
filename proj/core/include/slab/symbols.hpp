#pragma once
#include <array>
#include <complex>
#include <cstdint>
#include <json.hpp>
#include <vector>

namespace slab {

/// Frequency-side building blocks of the boundary solution operator on the
/// half space. B is the parabolic root sqrt(i tau + |xi'|^2) (principal
/// branch, Re B >= 0); D is the cubic B^3 + |xi'| B^2 + 3 |xi'|^2 B - |xi'|^3,
/// nonzero away from the space-time origin; m = (m', m_n) is the multiplier
/// pair the boundary pressure is built from.
std::complex<double> eval_B(double tau, double r);
std::complex<double> eval_D(std::complex<double> B, double r);

struct SymbolPoint {
    std::complex<double> B;
    std::complex<double> D;
    std::vector<std::complex<double>> m;   // n entries; tangential first, normal last
};

/// Evaluate at (tau, xi'); throws std::domain_error within parabolic
/// distance 1e-12 of the origin where the symbols are singular.
SymbolPoint eval_m(double tau, const std::vector<double>& xi_prime);

/// Rescaled roots on the unit annulus 1/2 < |sigma|, |zeta'| < 2:
///   b(sigma, z, a) = sqrt(i sigma + a^{-2} z^2)     (time-dominated regime)
///   d(sigma, z, a) = sqrt(a^{-2} i sigma + z^2)     (space-dominated regime)
std::complex<double> eval_b(double sigma, double z, double a);
std::complex<double> eval_d(double sigma, double z, double a);

struct BoundReport {
    std::string region;          // "time_dominated" (k >= 2j) or "space_dominated"
    long long samples = 0;
    double min_abs = 0.0, max_abs = 0.0;
    std::array<double, 4> argmin{}, argmax{};   // sigma, |zeta'|, j, k
    double lower_bound = 0.0, upper_bound = 0.0;
    long long violations = 0;
    bool bound_check = false;
    nlohmann::json to_json() const;
};

/// Monte Carlo over the unit annulus and the (j, k) index ranges, checking
/// |b| in [1/sqrt2, 20^{1/4}] for k >= 2j and |d| in [1/2, 20^{1/4}] for
/// k < 2j, plus a deterministic boundary-of-region grid pass that must
/// attain the upper bound 20^{1/4} to 1e-6.
std::vector<BoundReport> verify_region_bounds(long long samples, int jmin, int jmax,
                                              int kmin, int kmax, std::uint64_t seed);

struct MultiplierReport {
    std::string region;
    long long samples = 0;
    double sup_m_tangential = 0.0;
    double sup_m_normal = 0.0;
    double min_abs_D = 0.0;
    nlohmann::json to_json() const;
};

/// sup |m'|, |m_n| and min |D| over dyadic rectangles (tau, xi') ~
/// (2^k, 2^j) for the given index ranges.
std::vector<MultiplierReport> verify_multiplier_boundedness(long long samples, int jmin,
                                                            int jmax, int kmin, int kmax,
                                                            std::uint64_t seed, int n);

} // namespace slab
