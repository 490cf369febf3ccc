#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bmocz/rng.hpp"

namespace bmocz {

using cd = std::complex<double>;

struct ChannelRealization {
  cd h = 1.0;            // flat fading gain (single tap)
  double sigma_n2 = 0.0; // complex noise variance
  double psi = 0.0;      // CFO phase increment per sample, [0, 2pi)
};

struct CfoDecomposition {
  double psi0 = 0.0;  // fractional part, [0, dphi)
  int m_shift = 0;    // integer multiples of dphi, reduced mod K
};

// sigma_n^2 = (frame_len / k_info) * 10^{-ebn0_db/10}.
// Frame energy is ||x||^2 = frame_len and the fading gain has unit variance,
// so Eb = frame_len / k_info per information bit and sigma_n^2 = N0.
// k_info is K for uncoded frames and 106 for the (127,106) coded ones.
double noise_variance_from_ebn0(double ebn0_db, int k_info, int frame_len);

// y_n = h x_n + w_n with w ~ CN(0, sigma_n2) i.i.d., then y_n *= e^{j psi n}.
// Draws exactly frame_len complex noise samples from rng (one Box-Muller pair
// each), nothing else.
std::vector<cd> apply_channel(std::span<const cd> x, const ChannelRealization& ch,
                              TrialRng& rng);

// in-place phase ramp y_n *= e^{j psi n}
void rotate_frame(std::span<cd> y, double psi);

// psi = psi0 + m_shift dphi with dphi = (2pi - zeta)/K; psi0 = psi mod dphi,
// m_shift = floor(psi/dphi) mod K. For zeta = 0 (K dphi = 2pi) the
// decomposition is exact mod 2pi over the whole CFO range.
CfoDecomposition decompose_cfo(double psi, int K, double zeta);

// h ~ CN(0,1); the AWGN channel mode uses h = 1 exactly and draws nothing
cd draw_fading(TrialRng& rng);

}  // namespace bmocz
