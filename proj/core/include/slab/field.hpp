#pragma once
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>
#include "slab/grid.hpp"

namespace slab {

using cplx = std::complex<double>;

enum class Rank { scalar, vector, matrix };
enum class State { physical, spectral };
enum class Domain { whole, half, boundary };
enum class Parity { even, odd, zero };

/// Per-component reflection policy used when a half-domain field is extended
/// to the doubled torus. A single entry broadcasts to all components.
struct ExtensionPolicy {
    std::vector<Parity> comp{Parity::even};
    Parity at(int c) const { return comp.size() == 1 ? comp[0] : comp.at(c); }
    static ExtensionPolicy uniform(Parity p) { return ExtensionPolicy{{p}}; }
    /// Tangential components odd, normal component even (the reduction's
    /// convention for forces and initial velocities).
    static ExtensionPolicy tangential_odd(int n) {
        ExtensionPolicy e;
        e.comp.assign(n, Parity::odd);
        e.comp[n - 1] = Parity::even;
        return e;
    }
};

/// Dense complex samples over the grid. Layout: [time][component][x0]...[xk]
/// row major. Half-domain fields store npts[n-1]+1 normal planes (both
/// walls); whole-domain fields store the doubled torus; boundary fields have
/// no normal axis. Fields are value types and all operations below are pure.
class Field {
public:
    Field() = default;
    Field(const Grid& g, Rank rank, Domain domain, int nt = 1,
          State state = State::physical);

    static Field zeros_like(const Field& f);

    const Grid& grid() const { return grid_; }
    Rank rank() const { return rank_; }
    Domain domain() const { return domain_; }
    State state() const { return state_; }
    void set_state(State s) { state_ = s; }
    int nt() const { return nt_; }
    int ncomp() const { return ncomp_; }
    int nspatial() const { return static_cast<int>(ext_.size()); }
    const std::vector<int>& extents() const { return ext_; }
    std::size_t spatial_size() const { return ssize_; }
    std::size_t size() const { return data_.size(); }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }
    cplx* comp_ptr(int t, int c) { return data_.data() + (static_cast<std::size_t>(t) * ncomp_ + c) * ssize_; }
    const cplx* comp_ptr(int t, int c) const { return data_.data() + (static_cast<std::size_t>(t) * ncomp_ + c) * ssize_; }

    cplx& at(int t, int c, std::size_t flat) { return data_[(static_cast<std::size_t>(t) * ncomp_ + c) * ssize_ + flat]; }
    const cplx& at(int t, int c, std::size_t flat) const { return data_[(static_cast<std::size_t>(t) * ncomp_ + c) * ssize_ + flat]; }

    std::size_t flat_index(const int* ix) const {
        std::size_t f = 0;
        for (std::size_t a = 0; a < ext_.size(); ++a) f = f * ext_[a] + ix[a];
        return f;
    }

    /// Copy of one time slice (nt = 1).
    Field time_slice(int t) const;
    void set_time_slice(int t, const Field& slice);
    /// Copy of one component as a scalar field.
    Field component(int c) const;
    void set_component(int c, const Field& scalar);

    void check_compatible(const Field& other, const char* what) const;

private:
    Grid grid_;
    Rank rank_ = Rank::scalar;
    Domain domain_ = Domain::whole;
    State state_ = State::physical;
    int nt_ = 1;
    int ncomp_ = 1;
    std::vector<int> ext_;
    std::size_t ssize_ = 0;
    std::vector<cplx> data_;
};

/// Iterate a spatial multi-index in row-major order.
template <class F>
void for_each_index(const std::vector<int>& ext, F&& fn) {
    std::vector<int> ix(ext.size(), 0);
    std::size_t total = 1;
    for (int e : ext) total *= static_cast<std::size_t>(e);
    for (std::size_t flat = 0; flat < total; ++flat) {
        fn(flat, ix.data());
        for (int a = static_cast<int>(ext.size()) - 1; a >= 0; --a) {
            if (++ix[a] < ext[a]) break;
            ix[a] = 0;
        }
    }
}

/// Signed angular frequencies along each spatial axis of a field (spectral
/// index convention); table[axis][m].
std::vector<std::vector<double>> freq_tables(const Field& f);

// --- transforms -----------------------------------------------------------

Field to_spectral(const Field& f);
Field to_physical(const Field& f);
/// Transform the time axis (requires nt == grid.time.nt).
Field time_forward(const Field& f);
Field time_inverse(const Field& f);

// --- half-space plumbing ---------------------------------------------------

Field extend(const Field& half, const ExtensionPolicy& policy);
Field restrict_whole(const Field& whole);
/// Trace on the physical wall x_n = 0 as a boundary field.
Field trace_bottom(const Field& f);
/// Trace on an arbitrary half-grid plane.
Field plane_slice(const Field& f, int plane);

// --- calculus --------------------------------------------------------------

Field derivative(const Field& f, int axis);
Field derivative(const Field& f, int axis, const ExtensionPolicy& policy);
/// Jacobian of a vector field: component (i,j) = d u_i / d x_j.
Field jacobian(const Field& v, const ExtensionPolicy& policy = {});
Field gradient(const Field& s, const ExtensionPolicy& policy = {});
Field divergence(const Field& v, const ExtensionPolicy& policy = {});
/// Row divergence of a matrix field: out_j = sum_i d E_ij / d x_i.
Field divergence_matrix(const Field& E, const ExtensionPolicy& policy = {});
Field laplacian(const Field& f, const ExtensionPolicy& policy = {});
/// Inverse of -Laplace on the torus; the zero mode is dropped and its mass
/// reported through `zero_mass` when provided.
Field newtonian_potential(const Field& f, double* zero_mass = nullptr);

/// Apply a scalar spectral multiplier (same for every component). The
/// callback receives the signed frequency vector of the mode.
void apply_multiplier_inplace(Field& spectral,
                              const std::function<cplx(const double* xi)>& m);
Field apply_multiplier(const Field& f, const std::function<cplx(const double* xi)>& m);

/// Fourth-order finite-difference time derivative on the stored window.
Field dt4(const Field& f);
/// Cumulative trapezoid integral from t = 0 (zero for earlier samples).
Field time_integral(const Field& f);

// --- algebra and norms ------------------------------------------------------

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double s, const Field& f);
Field operator*(cplx s, const Field& f);
void axpy(Field& y, cplx alpha, const Field& x);
/// Pointwise product (physical state).
Field pointwise(const Field& a, const Field& b);
Field real_part(const Field& f);

double max_abs(const Field& f);
double max_imag(const Field& f);
/// L^p norm over space (single time slice), measure weights included;
/// components enter as an l1 sum of component norms for p < inf and a max
/// for p = inf. Half-domain fields use trapezoid weights in the normal axis.
double lp_norm(const Field& f, double p, int t = 0);
double l2_all(const Field& f);

/// Max over the grid of |f_even-reflection mismatch| for symmetry tests.
double reflection_defect(const Field& whole, Parity parity, int c = 0);

} // namespace slab
