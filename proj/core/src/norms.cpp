#include "slab/norms.hpp"
#include <cmath>
#include <stdexcept>

namespace slab {

namespace {

double block_weight(double s, int j) { return std::pow(2.0, s * j); }

void check_half_range(const BesovParams& bp) {
    if (bp.allow_out_of_range) return;
    double lo = -1.0 + 1.0 / bp.p, hi = 1.0 / bp.p;
    if (!(bp.s > lo && bp.s < hi))
        throw std::runtime_error(
            "besov: index s out of the valid half-space range (-1+1/p, 1/p); "
            "set allow_out_of_range to override");
}

void check_p(const BesovParams& bp) {
    if (!(bp.p >= 1.0) || !std::isfinite(bp.p))
        throw std::runtime_error("besov: p must lie in [1, inf)");
    if (!(bp.sigma >= 1.0)) throw std::runtime_error("besov: sigma must lie in [1, inf]");
}

double accumulate_sigma(const std::vector<std::pair<int, double>>& blocks, double sigma) {
    if (!std::isfinite(sigma)) {
        double m = 0;
        for (auto& [j, v] : blocks) m = std::max(m, v);
        return m;
    }
    if (sigma == 1.0) {
        double s = 0;
        for (auto& [j, v] : blocks) s += v;
        return s;
    }
    double s = 0;
    for (auto& [j, v] : blocks) s += std::pow(v, sigma);
    return std::pow(s, 1.0 / sigma);
}

/// Spectral l2 mass fraction not reproduced by the bank's partition.
double coverage_tail(const Field& spectral, const DyadicBank& bank) {
    auto tab = freq_tables(spectral);
    int nsp = spectral.nspatial();
    std::vector<double> xi(nsp);
    std::vector<double> defect(spectral.spatial_size());
    for_each_index(spectral.extents(), [&](std::size_t flat, const int* ix) {
        for (int a = 0; a < nsp; ++a) xi[a] = tab[a][ix[a]];
        double cov = 0;
        for (int j = bank.jmin; j <= bank.jmax; ++j) cov += bank.eval(j, xi.data(), nsp);
        defect[flat] = 1.0 - cov;
    });
    double total = 0, missed = 0;
    for (int t = 0; t < spectral.nt(); ++t)
        for (int c = 0; c < spectral.ncomp(); ++c) {
            const cplx* p = spectral.comp_ptr(t, c);
            for (std::size_t i = 0; i < spectral.spatial_size(); ++i) {
                double m = std::norm(p[i]);
                total += m;
                missed += m * defect[i] * defect[i];
            }
        }
    return total == 0 ? 0.0 : missed / total;
}

Field measure_form(const Field& f, const BesovParams& bp, int t) {
    Field slice = (f.nt() > 1) ? f.time_slice(t) : f;
    if (slice.domain() == Domain::half) {
        check_half_range(bp);
        return extend(to_physical(slice), bp.policy);
    }
    return slice;
}

} // namespace

nlohmann::json NormReport::to_json() const {
    nlohmann::json j;
    j["value"] = value;
    j["tail_bound"] = tail_fraction;
    nlohmann::json blk = nlohmann::json::array();
    for (auto& [idx, v] : blocks) blk.push_back({{"j", idx}, {"contribution", v}});
    j["per_block_contributions"] = blk;
    j["params"] = params;
    return j;
}

NormReport besov_norm_report(const Field& f, const BesovParams& bp, const DyadicBank* bank,
                             int t) {
    check_p(bp);
    Field w = measure_form(f, bp, t);
    DyadicBank local;
    if (!bank) {
        local = build_bank(w.grid(), BankKind::annulus_phi, w.domain());
        bank = &local;
    }
    Field ws = to_spectral(w);
    NormReport rep;
    int nsp = ws.nspatial();
    for (int j = bank->jmin; j <= bank->jmax; ++j) {
        Field blk = ws;
        apply_multiplier_inplace(blk, [bank, j, nsp](const double* xi) {
            return cplx(bank->eval(j, xi, nsp), 0.0);
        });
        double lp = lp_norm(to_physical(blk), bp.p);
        rep.blocks.emplace_back(j, block_weight(bp.s, j) * lp);
    }
    rep.value = accumulate_sigma(rep.blocks, bp.sigma);
    rep.tail_fraction = coverage_tail(ws, *bank);
    rep.params = {{"s", bp.s}, {"p", bp.p},
                  {"sigma", std::isfinite(bp.sigma) ? nlohmann::json(bp.sigma) : nlohmann::json("inf")},
                  {"kind", bank_kind_name(bank->kind)},
                  {"jmin", bank->jmin}, {"jmax", bank->jmax}};
    return rep;
}

double besov_norm(const Field& f, const BesovParams& bp, int t) {
    return besov_norm_report(f, bp, nullptr, t).value;
}

namespace {

double time_accumulate(const std::vector<double>& a, double rho, double dt, int from) {
    if (!std::isfinite(rho)) {
        double m = 0;
        for (std::size_t i = from; i < a.size(); ++i) m = std::max(m, a[i]);
        return m;
    }
    double s = 0;
    for (std::size_t i = from; i < a.size(); ++i) s += std::pow(a[i], rho) * dt;
    return std::pow(s, 1.0 / rho);
}

} // namespace

NormReport time_lebesgue_besov_report(const Field& f, double rho, const BesovParams& bp,
                                      const DyadicBank* bank) {
    if (f.nt() < 2) throw std::runtime_error("time norm needs a time-dependent field");
    std::vector<double> per_t(f.nt(), 0.0);
    NormReport last;
    DyadicBank local;
    const DyadicBank* use = bank;
    for (int t = 0; t < f.nt(); ++t) {
        if (!use) {
            Field probe = measure_form(f, bp, t);
            local = build_bank(probe.grid(), BankKind::annulus_phi, probe.domain());
            use = &local;
        }
        last = besov_norm_report(f, bp, use, t);
        per_t[t] = last.value;
    }
    NormReport rep;
    rep.value = time_accumulate(per_t, rho, f.grid().time.dt(), f.grid().time.zero_index());
    rep.tail_fraction = last.tail_fraction;
    rep.params = last.params;
    rep.params["rho"] = std::isfinite(rho) ? nlohmann::json(rho) : nlohmann::json("inf");
    return rep;
}

double time_lebesgue_besov(const Field& f, double rho, const BesovParams& bp) {
    return time_lebesgue_besov_report(f, rho, bp, nullptr).value;
}

NormReport mixed_norm_report(const Field& f, const MixedNormParams& mp) {
    check_p(mp.spatial);
    if (f.nt() != f.grid().time.nt || f.nt() < 2)
        throw std::runtime_error("mixed norm needs the full time window");
    Field w = f;
    if (f.domain() == Domain::half) {
        check_half_range(mp.spatial);
        w = extend(f, mp.spatial.policy);
    }
    DyadicBank sbank = build_bank(w.grid(), BankKind::annulus_phi, w.domain());
    DyadicBank tbank = build_bank(w.grid(), BankKind::temporal_psi);

    // both transforms up front; blocks are pure multipliers from here
    Field full = time_forward(to_spectral(w));
    auto tab = freq_tables(full);
    int nsp = full.nspatial();
    const double dt = f.grid().time.dt();
    const int zidx = f.grid().time.zero_index();
    const double pexp = mp.spatial.p;

    // spatial profile per block, cached over the spatial index set
    auto spatial_profile = [&](int j) {
        std::vector<double> prof(full.spatial_size());
        std::vector<double> xi(nsp);
        for_each_index(full.extents(), [&](std::size_t flat, const int* ix) {
            for (int a = 0; a < nsp; ++a) xi[a] = tab[a][ix[a]];
            prof[flat] = sbank.eval(j, xi.data(), nsp);
        });
        return prof;
    };

    bool temporal = mp.kind != TemporalKind::lebesgue_L_tilde;
    std::vector<int> kset;
    if (temporal)
        for (int k = tbank.jmin; k <= tbank.jmax; ++k) kset.push_back(k);
    else
        kset.push_back(0);   // placeholder single pass

    NormReport rep;
    std::vector<double> f_sum_t(f.nt(), 0.0);   // for triebel_F
    double tilde_total = 0.0;

    for (int k : kset) {
        std::vector<double> tprof(f.nt(), 1.0);
        if (temporal)
            for (int m = 0; m < f.nt(); ++m) tprof[m] = tbank.eval_temporal(k, f.grid().tfreq(m));
        double k_contrib = 0.0;
        for (int j = sbank.jmin; j <= sbank.jmax; ++j) {
            auto sprof = spatial_profile(j);
            Field blk = full;
            for (int m = 0; m < blk.nt(); ++m)
                for (int c = 0; c < blk.ncomp(); ++c) {
                    cplx* p = blk.comp_ptr(m, c);
                    for (std::size_t i = 0; i < blk.spatial_size(); ++i)
                        p[i] *= tprof[m] * sprof[i];
                }
            Field phys = to_physical(time_inverse(blk));
            std::vector<double> a(f.nt());
            for (int m = 0; m < f.nt(); ++m) a[m] = lp_norm(phys, pexp, m);
            double wj = block_weight(mp.spatial.s, j);
            double wk = temporal ? block_weight(mp.r, k) : 1.0;
            switch (mp.kind) {
                case TemporalKind::triebel_F:
                    for (int m = 0; m < f.nt(); ++m) f_sum_t[m] += wk * wj * a[m];
                    break;
                case TemporalKind::besov_B_tilde:
                case TemporalKind::lebesgue_L_tilde: {
                    double tnorm = time_accumulate(a, mp.rho, dt, zidx);
                    k_contrib += wk * wj * tnorm;
                    break;
                }
            }
        }
        if (mp.kind != TemporalKind::triebel_F) {
            rep.blocks.emplace_back(temporal ? k : 0, k_contrib);
            tilde_total += k_contrib;
        }
    }
    if (mp.kind == TemporalKind::triebel_F) {
        rep.value = time_accumulate(f_sum_t, mp.rho, dt, zidx);
        for (int m = zidx; m < f.nt(); ++m) rep.blocks.emplace_back(m, f_sum_t[m]);
    } else {
        rep.value = tilde_total;
    }

    // coverage tail over both transforms
    {
        std::vector<double> sdef(full.spatial_size());
        std::vector<double> xi(nsp);
        for_each_index(full.extents(), [&](std::size_t flat, const int* ix) {
            for (int a = 0; a < nsp; ++a) xi[a] = tab[a][ix[a]];
            double cov = 0;
            for (int j = sbank.jmin; j <= sbank.jmax; ++j) cov += sbank.eval(j, xi.data(), nsp);
            sdef[flat] = 1.0 - cov;
        });
        double total = 0, missed = 0;
        for (int m = 0; m < full.nt(); ++m) {
            double tcov = 0;
            if (temporal)
                for (int k = tbank.jmin; k <= tbank.jmax; ++k)
                    tcov += tbank.eval_temporal(k, f.grid().tfreq(m));
            else
                tcov = 1.0;
            double tdef = 1.0 - tcov;
            for (int c = 0; c < full.ncomp(); ++c) {
                const cplx* p = full.comp_ptr(m, c);
                for (std::size_t i = 0; i < full.spatial_size(); ++i) {
                    double mass = std::norm(p[i]);
                    total += mass;
                    double def = 1.0 - (1.0 - tdef) * (1.0 - sdef[i]);
                    missed += mass * def * def;
                }
            }
        }
        rep.tail_fraction = total == 0 ? 0.0 : missed / total;
    }

    rep.params = {{"kind", temporal_kind_name(mp.kind)},
                  {"r", mp.r},
                  {"rho", std::isfinite(mp.rho) ? nlohmann::json(mp.rho) : nlohmann::json("inf")},
                  {"s", mp.spatial.s},
                  {"p", mp.spatial.p},
                  {"k_range", {tbank.jmin, tbank.jmax}},
                  {"j_range", {sbank.jmin, sbank.jmax}}};
    return rep;
}

double mixed_norm(const Field& f, const MixedNormParams& mp) {
    return mixed_norm_report(f, mp).value;
}

std::string temporal_kind_name(TemporalKind k) {
    switch (k) {
        case TemporalKind::triebel_F: return "triebel_F";
        case TemporalKind::besov_B_tilde: return "besov_B_tilde";
        case TemporalKind::lebesgue_L_tilde: return "lebesgue_L_tilde";
    }
    return "?";
}

} // namespace slab
