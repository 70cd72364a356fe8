#include "slab/fft.hpp"
#include <fftw3.h>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace slab::fft {

namespace {

std::mutex plan_mutex;

// Key: (extent, howmany, stride, dist, sign). Plans are created UNALIGNED so
// they can be executed on any buffer with the same geometry.
using PlanKey = std::tuple<int, int, int, int, int>;
std::map<PlanKey, fftw_plan>& plan_cache() {
    static std::map<PlanKey, fftw_plan> cache;
    return cache;
}

fftw_plan get_plan(int n, int howmany, int stride, int dist, int sign,
                   std::complex<double>* probe) {
    PlanKey key{n, howmany, stride, dist, sign};
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    fftw_complex* p = reinterpret_cast<fftw_complex*>(probe);
    fftw_plan plan = fftw_plan_many_dft(1, &n, howmany, p, nullptr, stride, dist,
                                        p, nullptr, stride, dist, sign,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    cache.emplace(key, plan);
    return plan;
}

void transform_axis(std::complex<double>* data, const std::vector<int>& dims,
                    int axis, int sign) {
    int nd = static_cast<int>(dims.size());
    if (axis < 0 || axis >= nd) throw std::runtime_error("fft: axis out of range");
    long long total = 1;
    for (int d : dims) total *= d;
    int n = dims[axis];
    long long inner = 1;
    for (int i = axis + 1; i < nd; ++i) inner *= dims[i];
    long long outer = total / (n * inner);

    // Lines along `axis` at fixed outer index form `inner` interleaved
    // transforms with stride `inner`, distance 1.
    fftw_plan plan = get_plan(n, static_cast<int>(inner), static_cast<int>(inner), 1,
                              sign, data);
    for (long long o = 0; o < outer; ++o) {
        fftw_complex* base = reinterpret_cast<fftw_complex*>(data + o * n * inner);
        fftw_execute_dft(plan, base, base);
    }
    double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (long long i = 0; i < total; ++i) data[i] *= scale;
}

void transform(std::complex<double>* data, const std::vector<int>& dims,
               const std::vector<int>& axes, int sign) {
    for (int a : axes) transform_axis(data, dims, a, sign);
}

} // namespace

void forward(std::complex<double>* data, const std::vector<int>& dims,
             const std::vector<int>& axes) {
    transform(data, dims, axes, FFTW_FORWARD);
}

void inverse(std::complex<double>* data, const std::vector<int>& dims,
             const std::vector<int>& axes) {
    transform(data, dims, axes, FFTW_BACKWARD);
}

void forward_all(std::complex<double>* data, const std::vector<int>& dims) {
    std::vector<int> axes(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) axes[i] = static_cast<int>(i);
    forward(data, dims, axes);
}

void inverse_all(std::complex<double>* data, const std::vector<int>& dims) {
    std::vector<int> axes(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) axes[i] = static_cast<int>(i);
    inverse(data, dims, axes);
}

} // namespace slab::fft
