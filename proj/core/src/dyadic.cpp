#include "slab/dyadic.hpp"
#include "slab/report.hpp"
#include <cmath>
#include <stdexcept>

namespace slab {

namespace {

double beta(double x) {
    if (x <= -1.0 || x >= 1.0) return 0.0;
    return std::exp(-1.0 / (x + 1.0)) * std::exp(-1.0 / (1.0 - x));
}

} // namespace

double bump_h(double x) {
    if (x <= -1.0 || x >= 1.0) return 0.0;
    double j0 = std::floor(x);
    double denom = beta(x - j0) + beta(x - j0 - 1.0);
    return beta(x) / denom;
}

double lowpass_Z(double x) {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return bump_h(x);
}

double phi_hat(int j, double r) {
    if (r <= 0.0) return 0.0;
    return bump_h(std::log2(r) - j);
}

double zeta_hat(int m, double r) {
    if (r <= 0.0) return 1.0;
    return lowpass_Z(std::log2(r) - m);
}

double separated_hat(int m, double rp, double rn) {
    return phi_hat(m, rp) * zeta_hat(m - 1, rn) + zeta_hat(m, rp) * phi_hat(m, rn);
}

double DyadicBank::eval(int j, const double* xi, int nsp) const {
    switch (kind) {
        case BankKind::annulus_phi: {
            double r2 = 0;
            for (int a = 0; a < nsp; ++a) r2 += xi[a] * xi[a];
            return phi_hat(j, std::sqrt(r2));
        }
        case BankKind::lowpass_zeta: {
            double r2 = 0;
            for (int a = 0; a < nsp; ++a) r2 += xi[a] * xi[a];
            return zeta_hat(j, std::sqrt(r2));
        }
        case BankKind::separated_Phi: {
            double rp2 = 0;
            for (int a = 0; a + 1 < nsp; ++a) rp2 += xi[a] * xi[a];
            return separated_hat(j, std::sqrt(rp2), std::abs(xi[nsp - 1]));
        }
        case BankKind::temporal_psi:
            throw std::runtime_error("temporal bank evaluated with spatial frequencies");
    }
    return 0.0;
}

double DyadicBank::eval_temporal(int k, double tau) const {
    if (kind != BankKind::temporal_psi)
        throw std::runtime_error("eval_temporal on a spatial bank");
    return phi_hat(k, std::abs(tau));
}

bool DyadicBank::resolvable(const double* xi, int nsp) const {
    double lo = std::ldexp(1.0, jmin);   // 2^jmin
    double hi = std::ldexp(1.0, jmax);
    switch (kind) {
        case BankKind::annulus_phi:
        case BankKind::lowpass_zeta: {
            double r2 = 0;
            for (int a = 0; a < nsp; ++a) r2 += xi[a] * xi[a];
            double r = std::sqrt(r2);
            return r >= lo * (1 - 1e-12) && r <= hi * (1 + 1e-12);
        }
        case BankKind::separated_Phi: {
            double rp2 = 0;
            for (int a = 0; a + 1 < nsp; ++a) rp2 += xi[a] * xi[a];
            double rp = std::sqrt(rp2);
            double rn = std::abs(xi[nsp - 1]);
            double mx = std::max(rp, rn);
            return mx >= lo * (1 - 1e-12) && rp <= hi * (1 + 1e-12) && rn <= hi * (1 + 1e-12);
        }
        case BankKind::temporal_psi: {
            double t = std::abs(xi[0]);
            return t >= lo * (1 - 1e-12) && t <= hi * (1 + 1e-12);
        }
    }
    return false;
}

namespace {

DyadicBank make_bank(const Grid& g, BankKind kind, Domain domain, int jmin, int jmax) {
    DyadicBank b;
    b.kind = kind;
    b.domain = domain;
    b.grid = g;
    b.jmin = jmin;
    b.jmax = jmax;
    if (jmax < jmin)
        throw std::runtime_error("dyadic bank: grid cannot host a resolvable block range");
    return b;
}

} // namespace

DyadicBank build_bank(const Grid& g, BankKind kind, Domain domain) {
    validate_grid(g);
    double fund, nyq;
    if (kind == BankKind::temporal_psi) {
        if (g.time.nt < 2) throw std::runtime_error("dyadic bank: temporal bank needs nt > 1");
        fund = 2.0 * pi / g.time.length();
        nyq = pi * g.time.nt / g.time.length();
    } else {
        int naxes = (domain == Domain::boundary) ? g.n - 1 : g.n;
        fund = 0.0;
        nyq = 1e300;
        for (int a = 0; a < naxes; ++a) {
            fund = std::max(fund, g.fundamental(a));
            nyq = std::min(nyq, g.nyquist(a));
        }
    }
    int jmin = static_cast<int>(std::ceil(std::log2(fund) + 1.0 - 1e-9));
    int jmax = static_cast<int>(std::floor(std::log2(nyq) - 1.0 + 1e-9));
    return make_bank(g, kind, domain, jmin, jmax);
}

DyadicBank build_bank(const Grid& g, BankKind kind, Domain domain, int jmin, int jmax) {
    DyadicBank widest = build_bank(g, kind, domain);
    if (jmin < widest.jmin || jmax > widest.jmax)
        throw std::runtime_error("dyadic bank: requested range exceeds the resolvable range");
    return make_bank(g, kind, domain, jmin, jmax);
}

PartitionReport verify_partition(const DyadicBank& bank) {
    Timer timer;
    PartitionReport rep;
    rep.jmin = bank.jmin;
    rep.jmax = bank.jmax;
    if (bank.kind == BankKind::temporal_psi) {
        const Grid& g = bank.grid;
        for (int m = 0; m < g.time.nt; ++m) {
            double tau = g.tfreq(m);
            ++rep.total_modes;
            if (!bank.resolvable(&tau, 1)) continue;
            ++rep.resolvable_modes;
            double s = 0;
            for (int k = bank.jmin; k <= bank.jmax; ++k) s += bank.eval_temporal(k, tau);
            rep.max_deviation = std::max(rep.max_deviation, std::abs(s - 1.0));
        }
        rep.wall_ms = timer.ms();
        return rep;
    }
    Field probe(bank.grid, Rank::scalar, bank.domain == Domain::half ? Domain::whole : bank.domain,
                1, State::spectral);
    auto tab = freq_tables(probe);
    int nsp = probe.nspatial();
    std::vector<double> xi(nsp);
    for_each_index(probe.extents(), [&](std::size_t, const int* ix) {
        for (int a = 0; a < nsp; ++a) xi[a] = tab[a][ix[a]];
        ++rep.total_modes;
        if (!bank.resolvable(xi.data(), nsp)) return;
        ++rep.resolvable_modes;
        double s = 0;
        for (int j = bank.jmin; j <= bank.jmax; ++j) s += bank.eval(j, xi.data(), nsp);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(s - 1.0));
    });
    rep.wall_ms = timer.ms();
    return rep;
}

Field lp_block(const Field& f, const DyadicBank& bank, int j, const ExtensionPolicy& policy) {
    if (bank.kind == BankKind::temporal_psi)
        throw std::runtime_error("lp_block: use temporal_block for temporal banks");
    if (f.domain() == Domain::half) {
        Field w = extend(f, policy);
        return restrict_whole(lp_block(w, bank, j));
    }
    int nsp = f.nspatial();
    return apply_multiplier(f, [&bank, j, nsp](const double* xi) {
        return cplx(bank.eval(j, xi, nsp), 0.0);
    });
}

Field temporal_block(const Field& f, const DyadicBank& tbank, int k) {
    if (tbank.kind != BankKind::temporal_psi)
        throw std::runtime_error("temporal_block: bank is not temporal");
    Field s = time_forward(f);
    std::size_t w = s.size() / s.nt();
    for (int m = 0; m < s.nt(); ++m) {
        double mult = tbank.eval_temporal(k, f.grid().tfreq(m));
        cplx* p = s.data() + static_cast<std::size_t>(m) * w;
        for (std::size_t i = 0; i < w; ++i) p[i] *= mult;
    }
    return time_inverse(s);
}

std::string bank_kind_name(BankKind k) {
    switch (k) {
        case BankKind::annulus_phi: return "annulus_phi";
        case BankKind::lowpass_zeta: return "lowpass_zeta";
        case BankKind::separated_Phi: return "separated_Phi";
        case BankKind::temporal_psi: return "temporal_psi";
    }
    return "?";
}

} // namespace slab
