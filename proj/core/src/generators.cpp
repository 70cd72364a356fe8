#include "slab/generators.hpp"
#include "slab/dyadic.hpp"
#include <cmath>
#include <stdexcept>

namespace slab {

void hermitize(Field& f) {
    if (f.state() != State::spectral) throw std::runtime_error("hermitize expects spectral state");
    const auto& ext = f.extents();
    int nsp = f.nspatial();
    std::vector<int> mirror(nsp);
    for (int t = 0; t < f.nt(); ++t)
        for (int c = 0; c < f.ncomp(); ++c) {
            cplx* p = f.comp_ptr(t, c);
            for_each_index(ext, [&](std::size_t flat, const int* ix) {
                bool self = true;
                for (int a = 0; a < nsp; ++a) {
                    mirror[a] = (ext[a] - ix[a]) % ext[a];
                    if (mirror[a] != ix[a]) self = false;
                }
                if (self) {
                    p[flat] = cplx(p[flat].real(), 0.0);
                    return;
                }
                std::size_t mflat = f.flat_index(mirror.data());
                if (mflat < flat) return;   // handle each pair once
                cplx avg = 0.5 * (p[flat] + std::conj(p[mflat]));
                p[flat] = avg;
                p[mflat] = std::conj(avg);
            });
        }
}

Field random_band_limited(const Grid& g, Rank rank, Domain domain, int jlo, int jhi, Rng& rng,
                          double amplitude) {
    if (domain == Domain::half)
        throw std::runtime_error("random_band_limited fills whole or boundary domains");
    Field f(g, rank, domain, 1, State::spectral);
    auto tab = freq_tables(f);
    int nsp = f.nspatial();
    std::vector<double> xi(nsp);
    std::vector<double> shell(f.spatial_size());
    for_each_index(f.extents(), [&](std::size_t flat, const int* ix) {
        double r2 = 0;
        for (int a = 0; a < nsp; ++a) {
            xi[a] = tab[a][ix[a]];
            r2 += xi[a] * xi[a];
        }
        double r = std::sqrt(r2), cov = 0;
        for (int j = jlo; j <= jhi; ++j) cov += phi_hat(j, r);
        shell[flat] = cov;
    });
    for (int c = 0; c < f.ncomp(); ++c) {
        cplx* p = f.comp_ptr(0, c);
        for (std::size_t i = 0; i < f.spatial_size(); ++i)
            p[i] = shell[i] != 0.0 ? amplitude * shell[i] * rng.cnormal() : cplx(0.0, 0.0);
    }
    hermitize(f);
    Field phys = to_physical(f);
    // normalize sup amplitude for predictable test scales
    double m = max_abs(phys);
    if (m > 0) phys = (amplitude / m) * phys;
    return phys;
}

std::vector<double> causal_bump(const TimeWindow& tw, double start_frac, double end_frac) {
    std::vector<double> prof(tw.nt, 0.0);
    double ta = start_frac * tw.t1, tb = end_frac * tw.t1;
    for (int m = 0; m < tw.nt; ++m) {
        double t = tw.t(m);
        if (t <= ta || t >= tb) continue;
        double s = (t - ta) / (tb - ta);
        prof[m] = std::exp(-1.0 / (s * (1.0 - s))) * std::exp(4.0);   // peak value 1 at s = 1/2
    }
    return prof;
}

Field random_spacetime(const Grid& g, Rank rank, Domain domain, int jlo, int jhi, int terms,
                       Rng& rng, double amplitude) {
    if (g.time.nt < 2) throw std::runtime_error("random_spacetime needs a time window");
    Field out(g, rank, domain, g.time.nt);
    for (int q = 0; q < terms; ++q) {
        double a = 0.08 + 0.5 * q / std::max(1, terms);
        double b = std::min(0.9, a + 0.35);
        auto prof = causal_bump(g.time, a, b);
        Field snap = random_band_limited(g, rank, domain, jlo, jhi, rng, amplitude);
        for (int m = 0; m < g.time.nt; ++m) {
            if (prof[m] == 0.0) continue;
            for (int c = 0; c < out.ncomp(); ++c) {
                cplx* dst = out.comp_ptr(m, c);
                const cplx* src = snap.comp_ptr(0, c);
                for (std::size_t i = 0; i < out.spatial_size(); ++i) dst[i] += prof[m] * src[i];
            }
        }
    }
    return out;
}

namespace {

Field leray_split(const Field& v, bool keep_divfree) {
    if (v.rank() != Rank::vector || v.domain() != Domain::whole)
        throw std::runtime_error("projection expects a whole-domain vector field");
    Field s = to_spectral(v);
    auto tab = freq_tables(s);
    int n = v.grid().n;
    std::vector<double> xi(n);
    std::vector<cplx> mode(n);
    for (int t = 0; t < s.nt(); ++t) {
        for_each_index(s.extents(), [&](std::size_t flat, const int* ix) {
            double r2 = 0;
            for (int a = 0; a < n; ++a) {
                xi[a] = tab[a][ix[a]];
                r2 += xi[a] * xi[a];
            }
            for (int c = 0; c < n; ++c) mode[c] = s.at(t, c, flat);
            if (r2 == 0.0) {
                // mean flow has no gradient part
                if (keep_divfree) return;
                for (int c = 0; c < n; ++c) s.at(t, c, flat) = 0.0;
                return;
            }
            cplx dot = 0.0;
            for (int c = 0; c < n; ++c) dot += xi[c] * mode[c];
            for (int c = 0; c < n; ++c) {
                cplx grad_part = xi[c] * dot / r2;
                s.at(t, c, flat) = keep_divfree ? mode[c] - grad_part : grad_part;
            }
        });
    }
    return v.state() == State::physical ? to_physical(s) : s;
}

} // namespace

Field project_divergence_free(const Field& v) { return leray_split(v, true); }
Field project_curl_free(const Field& v) { return leray_split(v, false); }

} // namespace slab
