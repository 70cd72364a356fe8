#include "slab/grid.hpp"
#include <stdexcept>
#include <string>

namespace slab {

namespace {
bool power_of_two(int v) { return v >= 1 && (v & (v - 1)) == 0; }
} // namespace

Grid Grid::make(int n, std::array<double, 3> box, std::array<int, 3> npts, TimeWindow tw) {
    Grid g;
    g.n = n;
    g.box = box;
    g.npts = npts;
    g.time = tw;
    validate_grid(g);
    return g;
}

void validate_grid(const Grid& g) {
    if (g.n != 2 && g.n != 3) throw std::invalid_argument("grid: n must be 2 or 3");
    for (int a = 0; a < g.n; ++a) {
        if (!(g.box[a] > 0)) throw std::invalid_argument("grid: box lengths must be positive");
        if (!power_of_two(g.npts[a]) || g.npts[a] < 8)
            throw std::invalid_argument("grid: npts must be powers of two >= 8, got " +
                                        std::to_string(g.npts[a]));
    }
    if (g.time.nt < 1) throw std::invalid_argument("grid: nt must be >= 1");
    if (g.time.nt > 1) {
        if (!(g.time.t1 > g.time.t0)) throw std::invalid_argument("grid: empty time window");
        if (g.time.t0 > 0) throw std::invalid_argument("grid: time window must start at t <= 0");
    }
}

} // namespace slab
