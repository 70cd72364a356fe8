#include "slab/field.hpp"
#include "slab/fft.hpp"
#include <algorithm>
#include <cmath>

namespace slab {

namespace {

int rank_components(Rank r, int n) {
    switch (r) {
        case Rank::scalar: return 1;
        case Rank::vector: return n;
        case Rank::matrix: return n * n;
    }
    return 1;
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("field: " + msg); }

void require(bool ok, const char* msg) {
    if (!ok) fail(msg);
}

} // namespace

Field::Field(const Grid& g, Rank rank, Domain domain, int nt, State state)
    : grid_(g), rank_(rank), domain_(domain), state_(state), nt_(nt) {
    validate_grid(g);
    require(nt == 1 || nt == g.time.nt, "nt must be 1 or grid.time.nt");
    ncomp_ = rank_components(rank, g.n);
    int nsp = (domain == Domain::boundary) ? g.n - 1 : g.n;
    ext_.resize(nsp);
    for (int a = 0; a < nsp; ++a) {
        if (domain == Domain::half && a == g.normal_axis())
            ext_[a] = g.half_extent(a);
        else
            ext_[a] = g.whole_extent(a);
    }
    require(!(domain == Domain::half && state == State::spectral),
            "half-domain fields have no spectral state; extend first");
    ssize_ = 1;
    for (int e : ext_) ssize_ *= static_cast<std::size_t>(e);
    data_.assign(static_cast<std::size_t>(nt_) * ncomp_ * ssize_, cplx{0.0, 0.0});
}

Field Field::zeros_like(const Field& f) { return Field(f.grid_, f.rank_, f.domain_, f.nt_, f.state_); }

Field Field::time_slice(int t) const {
    require(t >= 0 && t < nt_, "time index out of range");
    Field s(grid_, rank_, domain_, 1, state_);
    std::copy(data_.begin() + static_cast<std::size_t>(t) * ncomp_ * ssize_,
              data_.begin() + static_cast<std::size_t>(t + 1) * ncomp_ * ssize_, s.data_.begin());
    return s;
}

void Field::set_time_slice(int t, const Field& slice) {
    require(t >= 0 && t < nt_, "time index out of range");
    require(slice.nt_ == 1 && slice.ncomp_ == ncomp_ && slice.ssize_ == ssize_,
            "incompatible time slice");
    std::copy(slice.data_.begin(), slice.data_.end(),
              data_.begin() + static_cast<std::size_t>(t) * ncomp_ * ssize_);
}

Field Field::component(int c) const {
    require(c >= 0 && c < ncomp_, "component out of range");
    Field s(grid_, Rank::scalar, domain_, nt_, state_);
    for (int t = 0; t < nt_; ++t)
        std::copy(comp_ptr(t, c), comp_ptr(t, c) + ssize_, s.comp_ptr(t, 0));
    return s;
}

void Field::set_component(int c, const Field& scalar) {
    require(c >= 0 && c < ncomp_, "component out of range");
    require(scalar.ncomp_ == 1 && scalar.nt_ == nt_ && scalar.ssize_ == ssize_,
            "incompatible component");
    for (int t = 0; t < nt_; ++t)
        std::copy(scalar.comp_ptr(t, 0), scalar.comp_ptr(t, 0) + ssize_, comp_ptr(t, c));
}

void Field::check_compatible(const Field& other, const char* what) const {
    if (!(grid_ == other.grid_) || rank_ != other.rank_ || domain_ != other.domain_ ||
        nt_ != other.nt_ || state_ != other.state_)
        fail(std::string("incompatible operands in ") + what);
}

std::vector<std::vector<double>> freq_tables(const Field& f) {
    std::vector<std::vector<double>> tab(f.nspatial());
    for (int a = 0; a < f.nspatial(); ++a) {
        int e = f.extents()[a];
        tab[a].resize(e);
        for (int m = 0; m < e; ++m) tab[a][m] = f.grid().freq(a, m);
    }
    return tab;
}

// --- transforms -------------------------------------------------------------

namespace {

std::vector<int> fft_dims(const Field& f) {
    std::vector<int> dims;
    dims.push_back(f.nt() * f.ncomp());
    for (int e : f.extents()) dims.push_back(e);
    return dims;
}

std::vector<int> fft_axes(const Field& f) {
    std::vector<int> axes;
    for (int a = 0; a < f.nspatial(); ++a) axes.push_back(a + 1);
    return axes;
}

} // namespace

Field to_spectral(const Field& f) {
    require(f.domain() != Domain::half, "cannot transform a half-domain field; extend first");
    if (f.state() == State::spectral) return f;
    Field out = f;
    fft::forward(out.data(), fft_dims(out), fft_axes(out));
    out.set_state(State::spectral);
    return out;
}

Field to_physical(const Field& f) {
    if (f.state() == State::physical) return f;
    Field out = f;
    fft::inverse(out.data(), fft_dims(out), fft_axes(out));
    out.set_state(State::physical);
    return out;
}

Field time_forward(const Field& f) {
    require(f.nt() == f.grid().time.nt && f.nt() > 1, "time transform needs the full window");
    Field out = f;
    std::vector<int> dims{f.nt(), static_cast<int>(f.size() / f.nt())};
    fft::forward(out.data(), dims, {0});
    return out;
}

Field time_inverse(const Field& f) {
    require(f.nt() == f.grid().time.nt && f.nt() > 1, "time transform needs the full window");
    Field out = f;
    std::vector<int> dims{f.nt(), static_cast<int>(f.size() / f.nt())};
    fft::inverse(out.data(), dims, {0});
    return out;
}

// --- half-space plumbing -----------------------------------------------------

Field extend(const Field& half, const ExtensionPolicy& policy) {
    require(half.domain() == Domain::half, "extend expects a half-domain field");
    require(half.state() == State::physical, "extend expects physical samples");
    const Grid& g = half.grid();
    int na = g.normal_axis();
    int N = g.npts[na];
    int M = 2 * N;
    Field whole(g, half.rank(), Domain::whole, half.nt());

    std::vector<int> ext_h = half.extents();
    for (int t = 0; t < half.nt(); ++t) {
        for (int c = 0; c < half.ncomp(); ++c) {
            Parity par = policy.at(c);
            const cplx* src = half.comp_ptr(t, c);
            cplx* dst = whole.comp_ptr(t, c);
            for_each_index(ext_h, [&](std::size_t flat, const int* ix) {
                int j = ix[na];
                // destination flat index with normal extent M
                std::size_t dflat = 0;
                for (int a = 0; a < half.nspatial(); ++a) {
                    int e = (a == na) ? M : ext_h[a];
                    dflat = dflat * e + ix[a];
                }
                cplx v = src[flat];
                if (par == Parity::odd && (j == 0 || j == N)) v = 0.0;
                dst[dflat] = v;
                if (j > 0 && j < N) {
                    // mirror plane index M - j
                    std::size_t mflat = 0;
                    for (int a = 0; a < half.nspatial(); ++a) {
                        int e = (a == na) ? M : ext_h[a];
                        int i = (a == na) ? (M - j) : ix[a];
                        mflat = mflat * e + i;
                    }
                    switch (par) {
                        case Parity::even: dst[mflat] = v; break;
                        case Parity::odd: dst[mflat] = -v; break;
                        case Parity::zero: dst[mflat] = 0.0; break;
                    }
                }
            });
        }
    }
    return whole;
}

Field restrict_whole(const Field& whole) {
    require(whole.domain() == Domain::whole, "restrict expects a whole-domain field");
    require(whole.state() == State::physical, "restrict expects physical samples");
    const Grid& g = whole.grid();
    int na = g.normal_axis();
    int N = g.npts[na];
    Field half(g, whole.rank(), Domain::half, whole.nt());
    std::vector<int> ext_h = half.extents();
    for (int t = 0; t < half.nt(); ++t) {
        for (int c = 0; c < half.ncomp(); ++c) {
            const cplx* src = whole.comp_ptr(t, c);
            cplx* dst = half.comp_ptr(t, c);
            for_each_index(ext_h, [&](std::size_t flat, const int* ix) {
                std::size_t sflat = 0;
                for (int a = 0; a < half.nspatial(); ++a) {
                    int e = (a == na) ? 2 * N : ext_h[a];
                    sflat = sflat * e + ix[a];
                }
                dst[flat] = src[sflat];
            });
        }
    }
    return half;
}

Field plane_slice(const Field& f, int plane) {
    require(f.domain() != Domain::boundary, "plane_slice expects a field with a normal axis");
    require(f.state() == State::physical, "plane_slice expects physical samples");
    const Grid& g = f.grid();
    int na = g.normal_axis();
    require(plane >= 0 && plane < f.extents()[na], "plane index out of range");
    Field b(g, f.rank(), Domain::boundary, f.nt());
    std::vector<int> ext_b = b.extents();
    for (int t = 0; t < f.nt(); ++t) {
        for (int c = 0; c < f.ncomp(); ++c) {
            const cplx* src = f.comp_ptr(t, c);
            cplx* dst = b.comp_ptr(t, c);
            for_each_index(ext_b, [&](std::size_t flat, const int* ix) {
                std::size_t sflat = 0;
                for (int a = 0; a < f.nspatial(); ++a) {
                    int e = f.extents()[a];
                    int i = (a == na) ? plane : ix[a];
                    sflat = sflat * e + i;
                }
                dst[flat] = src[sflat];
            });
        }
    }
    return b;
}

Field trace_bottom(const Field& f) { return plane_slice(f, 0); }

// --- calculus ----------------------------------------------------------------

void apply_multiplier_inplace(Field& f, const std::function<cplx(const double*)>& m) {
    require(f.state() == State::spectral, "multiplier expects a spectral field");
    auto tab = freq_tables(f);
    int nsp = f.nspatial();
    std::vector<double> xi(nsp);
    // cache multiplier values over the spatial index set, reuse for (t, c)
    std::vector<cplx> mult(f.spatial_size());
    for_each_index(f.extents(), [&](std::size_t flat, const int* ix) {
        for (int a = 0; a < nsp; ++a) xi[a] = tab[a][ix[a]];
        mult[flat] = m(xi.data());
    });
    for (int t = 0; t < f.nt(); ++t)
        for (int c = 0; c < f.ncomp(); ++c) {
            cplx* p = f.comp_ptr(t, c);
            for (std::size_t i = 0; i < f.spatial_size(); ++i) p[i] *= mult[i];
        }
}

Field apply_multiplier(const Field& f, const std::function<cplx(const double*)>& m) {
    Field s = to_spectral(f);
    apply_multiplier_inplace(s, m);
    return f.state() == State::physical ? to_physical(s) : s;
}

namespace {

/// Derivative along one axis in spectral space; Nyquist mode zeroed to keep
/// real fields real under odd-order differentiation.
Field derivative_whole(const Field& f, int axis) {
    require(axis >= 0 && axis < f.nspatial(), "derivative axis out of range");
    Field s = to_spectral(f);
    auto tab = freq_tables(f);
    int e = f.extents()[axis];
    for (int t = 0; t < s.nt(); ++t)
        for (int c = 0; c < s.ncomp(); ++c) {
            cplx* p = s.comp_ptr(t, c);
            for_each_index(s.extents(), [&](std::size_t flat, const int* ix) {
                if (ix[axis] == e / 2)
                    p[flat] = 0.0;
                else
                    p[flat] *= cplx(0.0, tab[axis][ix[axis]]);
            });
        }
    return f.state() == State::physical ? to_physical(s) : s;
}

} // namespace

Field derivative(const Field& f, int axis) {
    if (f.domain() == Domain::half)
        fail("derivative on a half-domain field needs an extension policy");
    return derivative_whole(f, axis);
}

Field derivative(const Field& f, int axis, const ExtensionPolicy& policy) {
    if (f.domain() != Domain::half) return derivative_whole(f, axis);
    return restrict_whole(derivative_whole(extend(f, policy), axis));
}

namespace {

ExtensionPolicy comp_policy(const ExtensionPolicy& p, int c) {
    return ExtensionPolicy{{p.at(c)}};
}

} // namespace

Field jacobian(const Field& v, const ExtensionPolicy& policy) {
    require(v.rank() == Rank::vector, "jacobian expects a vector field");
    int n = v.grid().n;
    Field J(v.grid(), Rank::matrix, v.domain(), v.nt(), v.state());
    for (int i = 0; i < n; ++i) {
        Field ci = v.component(i);
        for (int j = 0; j < n; ++j) {
            Field d = (v.domain() == Domain::half)
                          ? derivative(ci, j, comp_policy(policy, i))
                          : derivative(ci, j);
            J.set_component(i * n + j, d);
        }
    }
    return J;
}

Field gradient(const Field& s, const ExtensionPolicy& policy) {
    require(s.rank() == Rank::scalar, "gradient expects a scalar field");
    int n = s.grid().n;
    Field gvec(s.grid(), Rank::vector, s.domain(), s.nt(), s.state());
    for (int i = 0; i < n; ++i) {
        Field d = (s.domain() == Domain::half) ? derivative(s, i, policy) : derivative(s, i);
        gvec.set_component(i, d);
    }
    return gvec;
}

Field divergence(const Field& v, const ExtensionPolicy& policy) {
    require(v.rank() == Rank::vector, "divergence expects a vector field");
    int n = v.grid().n;
    Field out(v.grid(), Rank::scalar, v.domain(), v.nt(), v.state());
    for (int i = 0; i < n; ++i) {
        Field ci = v.component(i);
        Field d = (v.domain() == Domain::half) ? derivative(ci, i, comp_policy(policy, i))
                                               : derivative(ci, i);
        axpy(out, 1.0, d);
    }
    return out;
}

Field divergence_matrix(const Field& E, const ExtensionPolicy& policy) {
    require(E.rank() == Rank::matrix, "divergence_matrix expects a matrix field");
    int n = E.grid().n;
    Field out(E.grid(), Rank::vector, E.domain(), E.nt(), E.state());
    for (int j = 0; j < n; ++j) {
        Field col(E.grid(), Rank::scalar, E.domain(), E.nt(), E.state());
        for (int i = 0; i < n; ++i) {
            Field cij = E.component(i * n + j);
            Field d = (E.domain() == Domain::half)
                          ? derivative(cij, i, comp_policy(policy, i * n + j))
                          : derivative(cij, i);
            axpy(col, 1.0, d);
        }
        out.set_component(j, col);
    }
    return out;
}

Field laplacian(const Field& f, const ExtensionPolicy& policy) {
    if (f.domain() == Domain::half)
        return restrict_whole(laplacian(extend(f, policy)));
    Field s = to_spectral(f);
    int nsp = f.nspatial();
    apply_multiplier_inplace(s, [nsp](const double* xi) {
        double r2 = 0;
        for (int a = 0; a < nsp; ++a) r2 += xi[a] * xi[a];
        return cplx(-r2, 0.0);
    });
    return f.state() == State::physical ? to_physical(s) : s;
}

Field newtonian_potential(const Field& f, double* zero_mass) {
    require(f.domain() == Domain::whole, "newtonian_potential acts on whole-domain fields");
    Field s = to_spectral(f);
    double zmass = 0.0;
    for (int t = 0; t < s.nt(); ++t)
        for (int c = 0; c < s.ncomp(); ++c) zmass = std::max(zmass, std::abs(s.comp_ptr(t, c)[0]));
    int nsp = f.nspatial();
    apply_multiplier_inplace(s, [nsp](const double* xi) {
        double r2 = 0;
        for (int a = 0; a < nsp; ++a) r2 += xi[a] * xi[a];
        return r2 == 0.0 ? cplx(0.0, 0.0) : cplx(1.0 / r2, 0.0);
    });
    if (zero_mass) *zero_mass = zmass;
    return f.state() == State::physical ? to_physical(s) : s;
}

Field dt4(const Field& f) {
    require(f.nt() >= 5, "dt4 needs at least 5 time samples");
    double dt = f.grid().time.dt();
    Field out = Field::zeros_like(f);
    std::size_t w = f.ncomp() * f.spatial_size();
    const cplx* src = f.data();
    cplx* dst = out.data();
    int nt = f.nt();
    auto row = [&](int m) { return src + static_cast<std::size_t>(m) * w; };
    for (int m = 0; m < nt; ++m) {
        cplx* o = dst + static_cast<std::size_t>(m) * w;
        const double inv = 1.0 / (12.0 * dt);
        if (m >= 2 && m <= nt - 3) {
            const cplx *a = row(m - 2), *b = row(m - 1), *d = row(m + 1), *e = row(m + 2);
            for (std::size_t i = 0; i < w; ++i) o[i] = (a[i] - 8.0 * b[i] + 8.0 * d[i] - e[i]) * inv;
        } else if (m == 0) {
            const cplx *f0 = row(0), *f1 = row(1), *f2 = row(2), *f3 = row(3), *f4 = row(4);
            for (std::size_t i = 0; i < w; ++i)
                o[i] = (-25.0 * f0[i] + 48.0 * f1[i] - 36.0 * f2[i] + 16.0 * f3[i] - 3.0 * f4[i]) * inv;
        } else if (m == 1) {
            const cplx *f0 = row(0), *f1 = row(1), *f2 = row(2), *f3 = row(3), *f4 = row(4);
            for (std::size_t i = 0; i < w; ++i)
                o[i] = (-3.0 * f0[i] - 10.0 * f1[i] + 18.0 * f2[i] - 6.0 * f3[i] + f4[i]) * inv;
        } else if (m == nt - 2) {
            const cplx *f0 = row(nt - 5), *f1 = row(nt - 4), *f2 = row(nt - 3), *f3 = row(nt - 2),
                       *f4 = row(nt - 1);
            for (std::size_t i = 0; i < w; ++i)
                o[i] = (-f0[i] + 6.0 * f1[i] - 18.0 * f2[i] + 10.0 * f3[i] + 3.0 * f4[i]) * inv;
        } else {
            const cplx *f0 = row(nt - 5), *f1 = row(nt - 4), *f2 = row(nt - 3), *f3 = row(nt - 2),
                       *f4 = row(nt - 1);
            for (std::size_t i = 0; i < w; ++i)
                o[i] = (3.0 * f0[i] - 16.0 * f1[i] + 36.0 * f2[i] - 48.0 * f3[i] + 25.0 * f4[i]) * inv;
        }
    }
    return out;
}

Field time_integral(const Field& f) {
    require(f.nt() > 1, "time_integral needs a time-dependent field");
    double dt = f.grid().time.dt();
    int z = f.grid().time.zero_index();
    Field out = Field::zeros_like(f);
    std::size_t w = f.ncomp() * f.spatial_size();
    for (int m = z + 1; m < f.nt(); ++m) {
        const cplx* fa = f.data() + static_cast<std::size_t>(m - 1) * w;
        const cplx* fb = f.data() + static_cast<std::size_t>(m) * w;
        const cplx* prev = out.data() + static_cast<std::size_t>(m - 1) * w;
        cplx* o = out.data() + static_cast<std::size_t>(m) * w;
        for (std::size_t i = 0; i < w; ++i) o[i] = prev[i] + 0.5 * dt * (fa[i] + fb[i]);
    }
    return out;
}

// --- algebra -----------------------------------------------------------------

Field operator+(const Field& a, const Field& b) {
    a.check_compatible(b, "operator+");
    Field out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += b.data()[i];
    return out;
}

Field operator-(const Field& a, const Field& b) {
    a.check_compatible(b, "operator-");
    Field out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] -= b.data()[i];
    return out;
}

Field operator*(double s, const Field& f) {
    Field out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] *= s;
    return out;
}

Field operator*(cplx s, const Field& f) {
    Field out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] *= s;
    return out;
}

void axpy(Field& y, cplx alpha, const Field& x) {
    y.check_compatible(x, "axpy");
    for (std::size_t i = 0; i < y.size(); ++i) y.data()[i] += alpha * x.data()[i];
}

Field pointwise(const Field& a, const Field& b) {
    a.check_compatible(b, "pointwise");
    require(a.state() == State::physical, "pointwise product expects physical samples");
    Field out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] *= b.data()[i];
    return out;
}

Field real_part(const Field& f) {
    Field out = f;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] = cplx(out.data()[i].real(), 0.0);
    return out;
}

double max_abs(const Field& f) {
    double m = 0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f.data()[i]));
    return m;
}

double max_imag(const Field& f) {
    double m = 0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f.data()[i].imag()));
    return m;
}

namespace {

/// Per-point measure weight; half-domain fields get trapezoid closure in the
/// normal direction.
double point_weight(const Field& f, const int* ix) {
    const Grid& g = f.grid();
    double w = 1.0;
    for (int a = 0; a < f.nspatial(); ++a) w *= g.spacing(a);
    if (f.domain() == Domain::half) {
        int na = g.normal_axis();
        if (ix[na] == 0 || ix[na] == g.npts[na]) w *= 0.5;
    }
    return w;
}

} // namespace

double lp_norm(const Field& f, double p, int t) {
    require(t >= 0 && t < f.nt(), "time index out of range");
    bool inf = !std::isfinite(p);
    double total = 0.0, sup = 0.0;
    for (int c = 0; c < f.ncomp(); ++c) {
        const cplx* v = f.comp_ptr(t, c);
        double acc = 0.0;
        for_each_index(f.extents(), [&](std::size_t flat, const int* ix) {
            double m = std::abs(v[flat]);
            if (inf)
                sup = std::max(sup, m);
            else
                acc += std::pow(m, p) * point_weight(f, ix);
        });
        if (!inf) total += std::pow(acc, 1.0 / p);
    }
    return inf ? sup : total;
}

double l2_all(const Field& f) {
    double acc = 0.0;
    for (int t = 0; t < f.nt(); ++t)
        for (int c = 0; c < f.ncomp(); ++c) {
            const cplx* v = f.comp_ptr(t, c);
            for_each_index(f.extents(), [&](std::size_t flat, const int* ix) {
                acc += std::norm(v[flat]) * point_weight(f, ix);
            });
        }
    return std::sqrt(acc);
}

double reflection_defect(const Field& whole, Parity parity, int c) {
    require(whole.domain() == Domain::whole, "reflection_defect expects a whole-domain field");
    const Grid& g = whole.grid();
    int na = g.normal_axis();
    int M = g.whole_extent(na);
    int N = g.npts[na];
    double worst = 0.0;
    for (int t = 0; t < whole.nt(); ++t) {
        const cplx* v = whole.comp_ptr(t, c);
        for_each_index(whole.extents(), [&](std::size_t flat, const int* ix) {
            int j = ix[na];
            if (parity == Parity::zero) {
                if (j > N) worst = std::max(worst, std::abs(v[flat]));
                return;
            }
            int jm = (M - j) % M;
            std::size_t mflat = 0;
            for (int a = 0; a < whole.nspatial(); ++a) {
                int e = whole.extents()[a];
                int i = (a == na) ? jm : ix[a];
                mflat = mflat * e + i;
            }
            cplx d = (parity == Parity::even) ? v[flat] - v[mflat] : v[flat] + v[mflat];
            worst = std::max(worst, std::abs(d));
        });
    }
    return worst;
}

} // namespace slab
