#pragma once
#include <complex>
#include <vector>

namespace slab::fft {

/// Unitary discrete Fourier transforms over selected axes of a row-major
/// complex array. Each transformed axis contributes a 1/sqrt(extent) factor
/// in both directions, so forward followed by inverse is the identity and
/// the l2 norm is preserved exactly (up to rounding).
///
/// Plans are created with FFTW_ESTIMATE (deterministic plan choice) and
/// cached; plan creation is serialized, execution is re-entrant.
void forward(std::complex<double>* data, const std::vector<int>& dims,
             const std::vector<int>& axes);
void inverse(std::complex<double>* data, const std::vector<int>& dims,
             const std::vector<int>& axes);

/// All axes at once.
void forward_all(std::complex<double>* data, const std::vector<int>& dims);
void inverse_all(std::complex<double>* data, const std::vector<int>& dims);

} // namespace slab::fft
