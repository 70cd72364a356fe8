#pragma once
#include "slab/field.hpp"
#include "slab/rng.hpp"

namespace slab {

/// Enforce conjugate symmetry f(-k) = conj f(k) so the physical samples are
/// real; self-paired modes are projected to their real parts.
void hermitize(Field& spectral);

/// Random real field whose spectrum is confined to the dyadic shells
/// [jlo, jhi] (coverage factor of the annulus profiles, so the band limit is
/// exact). Zero mean. domain: whole or boundary.
Field random_band_limited(const Grid& g, Rank rank, Domain domain, int jlo, int jhi,
                          Rng& rng, double amplitude = 1.0);

/// Smooth bump in time supported strictly inside (t_a, t_b), zero elsewhere
/// (exact zeros for t <= t_a, in particular on the t < 0 padding).
/// Fractions are relative to [0, t1].
std::vector<double> causal_bump(const TimeWindow& tw, double start_frac = 0.1,
                                double end_frac = 0.55);

/// Time-dependent random field: sum of `terms` separable products of a
/// causal bump (staggered supports) and a random band-limited snapshot.
Field random_spacetime(const Grid& g, Rank rank, Domain domain, int jlo, int jhi,
                       int terms, Rng& rng, double amplitude = 1.0);

/// Leray projection (divergence-free part) of a whole-domain vector field.
Field project_divergence_free(const Field& v);
/// Gradient part (curl-free complement).
Field project_curl_free(const Field& v);

} // namespace slab
