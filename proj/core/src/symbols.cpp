#include "slab/symbols.hpp"
#include "slab/rng.hpp"
#include <cmath>
#include <stdexcept>

namespace slab {

using cd = std::complex<double>;

cd eval_B(double tau, double r) { return std::sqrt(cd(r * r, tau)); }

cd eval_D(cd B, double r) {
    return B * B * B + r * (B * B) + 3.0 * r * r * B - r * r * r;
}

SymbolPoint eval_m(double tau, const std::vector<double>& xi_prime) {
    double r2 = 0;
    for (double x : xi_prime) r2 += x * x;
    double r = std::sqrt(r2);
    // parabolic distance: |tau| + r^2
    if (std::abs(tau) + r2 < 1e-12)
        throw std::domain_error("symbols: singular at the space-time origin");
    SymbolPoint pt;
    pt.B = eval_B(tau, r);
    pt.D = eval_D(pt.B, r);
    cd tang = 2.0 * pt.B * (r + pt.B) / pt.D;
    pt.m.resize(xi_prime.size() + 1);
    for (std::size_t l = 0; l < xi_prime.size(); ++l)
        pt.m[l] = tang * cd(0.0, xi_prime[l]);
    pt.m.back() = -(r + pt.B) * (r * r + pt.B * pt.B) / pt.D;
    return pt;
}

cd eval_b(double sigma, double z, double a) {
    return std::sqrt(cd(z * z / (a * a), sigma));
}

cd eval_d(double sigma, double z, double a) {
    return std::sqrt(cd(z * z, sigma / (a * a)));
}

nlohmann::json BoundReport::to_json() const {
    return {{"region", region},
            {"samples", samples},
            {"min", min_abs},
            {"max", max_abs},
            {"argmin", {{"sigma", argmin[0]}, {"zeta", argmin[1]}, {"j", argmin[2]}, {"k", argmin[3]}}},
            {"argmax", {{"sigma", argmax[0]}, {"zeta", argmax[1]}, {"j", argmax[2]}, {"k", argmax[3]}}},
            {"lower_bound", lower_bound},
            {"upper_bound", upper_bound},
            {"violations", violations},
            {"bound_check", bound_check}};
}

std::vector<BoundReport> verify_region_bounds(long long samples, int jmin, int jmax, int kmin,
                                              int kmax, std::uint64_t seed) {
    const double upper = std::pow(20.0, 0.25);
    BoundReport time_rep, space_rep;
    time_rep.region = "time_dominated";
    time_rep.lower_bound = 1.0 / std::sqrt(2.0);
    time_rep.upper_bound = upper;
    time_rep.min_abs = 1e300;
    space_rep.region = "space_dominated";
    space_rep.lower_bound = 0.5;
    space_rep.upper_bound = upper;
    space_rep.min_abs = 1e300;

    Rng rng(seed);
    auto record = [](BoundReport& rep, double v, double sg, double z, int j, int k) {
        ++rep.samples;
        if (v < rep.min_abs) {
            rep.min_abs = v;
            rep.argmin = {sg, z, double(j), double(k)};
        }
        if (v > rep.max_abs) {
            rep.max_abs = v;
            rep.argmax = {sg, z, double(j), double(k)};
        }
        if (v < rep.lower_bound - 1e-12 || v > rep.upper_bound + 1e-12) ++rep.violations;
    };

    for (long long i = 0; i < samples; ++i) {
        double sigma = rng.sign() * rng.uniform(0.5, 2.0);
        double z = rng.uniform(0.5, 2.0);
        int j = jmin + static_cast<int>(rng.uniform_int(jmax - jmin + 1));
        int k = kmin + static_cast<int>(rng.uniform_int(kmax - kmin + 1));
        if (k >= 2 * j) {
            double a = std::pow(2.0, 0.5 * k - j);
            record(time_rep, std::abs(eval_b(sigma, z, a)), sigma, z, j, k);
        } else {
            double a = std::pow(2.0, j - 0.5 * k);
            record(space_rep, std::abs(eval_d(sigma, z, a)), sigma, z, j, k);
        }
    }

    // deterministic pass along the region boundary |sigma| = 2, z = 2, a = 1
    // (k = 2j) where the maximum 20^{1/4} is attained
    for (int s = -1; s <= 1; s += 2)
        for (int j = jmin; j <= jmax; ++j) {
            if (2 * j < kmin || 2 * j > kmax) continue;
            record(time_rep, std::abs(eval_b(2.0 * s, 2.0, 1.0)), 2.0 * s, 2.0, j, 2 * j);
        }

    time_rep.bound_check = time_rep.violations == 0 && std::abs(time_rep.max_abs - upper) < 1e-6;
    space_rep.bound_check = space_rep.violations == 0 && space_rep.max_abs <= upper + 1e-12;
    return {time_rep, space_rep};
}

std::vector<MultiplierReport> verify_multiplier_boundedness(long long samples, int jmin, int jmax,
                                                            int kmin, int kmax, std::uint64_t seed,
                                                            int n) {
    MultiplierReport time_rep, space_rep;
    time_rep.region = "time_dominated";
    space_rep.region = "space_dominated";
    time_rep.min_abs_D = 1e300;
    space_rep.min_abs_D = 1e300;
    Rng rng(seed);
    std::vector<double> xi(n - 1);
    for (long long i = 0; i < samples; ++i) {
        double sigma = rng.sign() * rng.uniform(0.5, 2.0);
        double z = rng.uniform(0.5, 2.0);
        int j = jmin + static_cast<int>(rng.uniform_int(jmax - jmin + 1));
        int k = kmin + static_cast<int>(rng.uniform_int(kmax - kmin + 1));
        // random direction on the tangential sphere
        double norm2 = 0;
        for (auto& x : xi) {
            x = rng.normal();
            norm2 += x * x;
        }
        if (norm2 == 0) {
            xi[0] = 1;
            norm2 = 1;
        }
        double scale = std::pow(2.0, j) * z / std::sqrt(norm2);
        for (auto& x : xi) x *= scale;
        double tau = std::pow(2.0, k) * sigma;
        SymbolPoint pt = eval_m(tau, xi);
        double mt = 0;
        for (int l = 0; l + 1 < n; ++l) mt = std::max(mt, std::abs(pt.m[l]));
        double mn = std::abs(pt.m.back());
        MultiplierReport& rep = (k >= 2 * j) ? time_rep : space_rep;
        ++rep.samples;
        rep.sup_m_tangential = std::max(rep.sup_m_tangential, mt);
        rep.sup_m_normal = std::max(rep.sup_m_normal, mn);
        rep.min_abs_D = std::min(rep.min_abs_D, std::abs(pt.D) / std::pow(std::abs(pt.B), 3));
    }
    return {time_rep, space_rep};
}

nlohmann::json MultiplierReport::to_json() const {
    return {{"region", region},
            {"samples", samples},
            {"sup_m_tangential", sup_m_tangential},
            {"sup_m_normal", sup_m_normal},
            {"min_abs_D_scaled", min_abs_D}};
}

} // namespace slab
