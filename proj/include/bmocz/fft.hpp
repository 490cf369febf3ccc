#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bmocz::fft {

// Forward DFT: out[k] = sum_n in[n] e^{-j 2pi k n / N}, input zero-padded to
// N. FFTW-backed (any N, including the K*Q sizes of the oversampled decoder).
// Plans and their buffers are cached per thread; plan creation/destruction is
// serialized internally, execution is lock-free, so concurrent use across
// trial workers is safe. `out` is resized to N.
void forward(std::span<const std::complex<double>> in, std::size_t N,
             std::vector<std::complex<double>>& out);

}  // namespace bmocz::fft
