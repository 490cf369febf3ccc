#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bmocz {

using cd = std::complex<double>;

struct CfoEstimate {
  double psi_hat = 0.0;       // 2pi * peak_index / N
  std::size_t peak_index = 0;
  double peak_value = 0.0;    // |Y~| at the peak
  std::size_t N = 0;
};

// Full-range CFO estimate: argmax_n |Y~(e^{-j 2pi n/N})| over one N-point DFT
// of the zero-padded frame. The magnitude profile of a smooshed frame peaks
// where the constellation gap sits, i.e. at angle psi, independent of the
// message. Requires N >= len(y_tilde); ties break toward the smallest index.
// No sub-grid interpolation: the raw grid argmax is the estimate.
//
// Only meaningful for zeta > 0. A zeta = 0 constellation has a flat
// (sinusoidal) profile with no unique peak; the simulator warns and proceeds,
// which is what reproduces the Huffman-under-CFO failure curve.
CfoEstimate estimate_cfo(std::span<const cd> y_tilde, std::size_t N);

// y_n <- y_n e^{-j psi_hat n}
std::vector<cd> correct_cfo(std::span<const cd> y_tilde, double psi_hat);

}  // namespace bmocz
