#pragma once
#include <array>
#include <cmath>
#include <vector>

namespace slab {

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Uniform sampling of the time interval [t0, t1] with nt samples, t0 <= 0
/// so that zero-extension padding for t < 0 is part of the stored window.
/// The last sample sits at t1 - dt (half-open window), matching the
/// periodic model used by the temporal transforms.
struct TimeWindow {
    double t0 = 0.0;
    double t1 = 1.0;
    int nt = 1;

    double length() const { return t1 - t0; }
    double dt() const { return length() / nt; }
    double t(int m) const { return t0 + dt() * m; }
    /// Index of the sample at t = 0 (t0 must be an exact multiple of dt).
    int zero_index() const { return static_cast<int>(std::lround(-t0 / dt())); }
    bool operator==(const TimeWindow&) const = default;
};

/// Discrete model of the half-space slab. Tangential axes are periodic with
/// the given box lengths; the normal axis models the slab [0, height] as one
/// half of a torus of period 2*height, so reflection extensions are exact
/// grid symmetries. `npts` counts samples per tangential period and per slab
/// height; the doubled normal axis therefore carries 2*npts[n-1] samples and
/// a half-domain field stores npts[n-1]+1 planes (both walls included).
struct Grid {
    int n = 2;                                  // spatial dimension, 2 or 3
    std::array<double, 3> box{2.0 * pi, 2.0 * pi, 2.0 * pi};
    std::array<int, 3> npts{64, 64, 64};
    TimeWindow time;

    static Grid make(int n, std::array<double, 3> box, std::array<int, 3> npts,
                     TimeWindow tw = {});

    int normal_axis() const { return n - 1; }
    /// Extent of the full (possibly doubled) torus along a spatial axis.
    int whole_extent(int axis) const {
        return axis == normal_axis() ? 2 * npts[axis] : npts[axis];
    }
    /// Extent of a half-domain field along a spatial axis.
    int half_extent(int axis) const {
        return axis == normal_axis() ? npts[axis] + 1 : npts[axis];
    }
    double period(int axis) const {
        return axis == normal_axis() ? 2.0 * box[axis] : box[axis];
    }
    double spacing(int axis) const { return period(axis) / whole_extent(axis); }
    /// Angular frequency of mode m along a spatial axis (signed convention).
    double freq(int axis, int m) const {
        int N = whole_extent(axis);
        int k = (m <= N / 2) ? m : m - N;
        return 2.0 * pi * k / period(axis);
    }
    bool is_nyquist(int axis, int m) const { return m == whole_extent(axis) / 2; }
    /// Angular frequency of temporal mode m over the stored window.
    double tfreq(int m) const {
        int k = (m <= time.nt / 2) ? m : m - time.nt;
        return 2.0 * pi * k / time.length();
    }
    double fundamental(int axis) const { return 2.0 * pi / period(axis); }
    double nyquist(int axis) const { return pi / spacing(axis); }

    bool operator==(const Grid&) const = default;
};

void validate_grid(const Grid& g);

} // namespace slab
