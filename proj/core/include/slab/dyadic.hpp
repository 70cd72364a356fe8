#pragma once
#include <string>
#include <vector>
#include "slab/field.hpp"

namespace slab {

/// Smooth bump with support (-1, 1), h(0) = 1, and sum_j h(x - j) = 1
/// identically: h(x) = beta(x) / (beta(x - j0) + beta(x - j0 - 1)) where
/// beta is the exp(-1/x) mollifier pair and j0 = floor(x). The translates'
/// denominators coincide, so the partition identity holds to rounding.
double bump_h(double x);
/// Low-pass profile: 1 for x <= 0, h(x) on (0, 1), 0 for x >= 1.
double lowpass_Z(double x);

/// Frequency-side dyadic profiles. The zero frequency belongs to the
/// low-pass family by convention (the torus zero mode carries the
/// low-frequency correction), so zeta_hat(m, 0) = 1 while phi_hat(j, 0) = 0.
double phi_hat(int j, double r);
double zeta_hat(int m, double r);
/// Separated profile: phi(|xi'|) zeta_{m-1}(|xi_n|) + zeta_m(|xi'|) phi(|xi_n|).
double separated_hat(int m, double rp, double rn);

enum class BankKind { annulus_phi, lowpass_zeta, separated_Phi, temporal_psi };

/// A resolvable family of dyadic blocks on a grid. Spatial banks address
/// either whole-domain fields (all axes) or boundary fields (tangential
/// axes); the temporal bank addresses the stored time window.
struct DyadicBank {
    BankKind kind = BankKind::annulus_phi;
    Domain domain = Domain::whole;   // ignored for temporal banks
    int jmin = 0;
    int jmax = 0;
    Grid grid;

    int count() const { return jmax - jmin + 1; }
    /// Profile of block j at a spatial frequency vector (nsp entries).
    double eval(int j, const double* xi, int nsp) const;
    /// Profile of temporal block k at angular frequency tau.
    double eval_temporal(int k, double tau) const;
    /// True if the mode lies where the finite block family resolves a full
    /// partition of unity.
    bool resolvable(const double* xi, int nsp) const;
};

/// Derive the widest index range supported by the grid: 2^{jmin-1} at or
/// above the fundamental and 2^{jmax+1} at or below the Nyquist of every
/// covered axis. Throws if the grid cannot host a single block.
DyadicBank build_bank(const Grid& g, BankKind kind, Domain domain = Domain::whole);
DyadicBank build_bank(const Grid& g, BankKind kind, Domain domain, int jmin, int jmax);

struct PartitionReport {
    double max_deviation = 0.0;
    long long resolvable_modes = 0;
    long long total_modes = 0;
    double wall_ms = 0.0;
    int jmin = 0, jmax = 0;
};

/// Evaluate |sum_j profile_j - 1| over every resolvable mode of the grid.
PartitionReport verify_partition(const DyadicBank& bank);

/// One Littlewood-Paley block of a field (spectral multiplier by profile j).
/// Half-domain fields are extended with the policy first and restricted
/// after, so the block of a half field is again a half field.
Field lp_block(const Field& f, const DyadicBank& bank, int j,
               const ExtensionPolicy& policy = ExtensionPolicy::uniform(Parity::zero));

/// Temporal block: multiplier psi_hat_k(tau) on the stored window.
Field temporal_block(const Field& f, const DyadicBank& tbank, int k);

std::string bank_kind_name(BankKind k);

} // namespace slab
