#pragma once
#include <json.hpp>
#include "slab/dyadic.hpp"
#include "slab/field.hpp"

namespace slab {

/// Parameters of a homogeneous dyadic-block norm. `sigma` may be infinity
/// (sup over blocks). Half-domain fields are measured through their policy
/// extension; the admissible range -1 + 1/p < s < 1/p for that realization
/// is enforced unless `allow_out_of_range` is set.
struct BesovParams {
    double s = 0.0;
    double p = 2.0;
    double sigma = 1.0;
    ExtensionPolicy policy = ExtensionPolicy::uniform(Parity::zero);
    bool allow_out_of_range = false;
};

struct NormReport {
    double value = 0.0;
    double tail_fraction = 0.0;          // spectral l2 mass outside bank coverage
    std::vector<std::pair<int, double>> blocks;  // (index, weighted contribution)
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json to_json() const;
};

/// Besov norm of a single time slice (nt == 1 or slice index given).
NormReport besov_norm_report(const Field& f, const BesovParams& bp,
                             const DyadicBank* bank = nullptr, int t = 0);
double besov_norm(const Field& f, const BesovParams& bp, int t = 0);

/// L^rho norm in time (over t >= 0, rectangle rule; rho = inf is a max) of
/// the spatial Besov norm of each slice.
NormReport time_lebesgue_besov_report(const Field& f, double rho, const BesovParams& bp,
                                      const DyadicBank* bank = nullptr);
double time_lebesgue_besov(const Field& f, double rho, const BesovParams& bp);

enum class TemporalKind { triebel_F, besov_B_tilde, lebesgue_L_tilde };

/// Space-time norms built from temporal blocks psi_k and spatial blocks
/// phi_j. With a_kj(t) = |(psi_k * phi_j * f)(t)|_{L^p_x}:
///   triebel_F:        | sum_k 2^{rk} sum_j 2^{sj} a_kj(t) |_{L^rho_t}
///   besov_B_tilde:    sum_k 2^{rk} sum_j 2^{sj} | a_kj |_{L^rho_t}
///   lebesgue_L_tilde: sum_j 2^{sj} | a_j |_{L^rho_t}   (no temporal blocks)
/// The temporal norm sits innermost for the tilde kinds and outermost for
/// the F kind, which is exactly what distinguishes the two families.
struct MixedNormParams {
    TemporalKind kind = TemporalKind::triebel_F;
    double r = 0.0;
    double rho = 1.0;
    BesovParams spatial;
};

NormReport mixed_norm_report(const Field& f, const MixedNormParams& mp);
double mixed_norm(const Field& f, const MixedNormParams& mp);

std::string temporal_kind_name(TemporalKind k);

} // namespace slab
