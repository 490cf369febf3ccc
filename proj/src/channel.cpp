#include "bmocz/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bmocz {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double noise_variance_from_ebn0(double ebn0_db, int k_info, int frame_len) {
  if (k_info < 1 || frame_len < 1)
    throw std::invalid_argument("noise_variance_from_ebn0: k_info and frame_len must be >= 1");
  return double(frame_len) / double(k_info) * std::pow(10.0, -ebn0_db / 10.0);
}

std::vector<cd> apply_channel(std::span<const cd> x, const ChannelRealization& ch,
                              TrialRng& rng) {
  std::vector<cd> y(x.size());
  const double s = std::sqrt(ch.sigma_n2 / 2.0);
  for (size_t n = 0; n < x.size(); ++n) {
    const auto [g1, g2] = rng.normal2();
    y[n] = ch.h * x[n] + cd(s * g1, s * g2);
  }
  if (ch.psi != 0.0) rotate_frame(y, ch.psi);
  return y;
}

void rotate_frame(std::span<cd> y, double psi) {
  const cd step = std::polar(1.0, psi);
  cd w = 1.0;
  for (cd& v : y) {
    v *= w;
    w *= step;
  }
}

CfoDecomposition decompose_cfo(double psi, int K, double zeta) {
  if (!(psi >= 0.0) || psi >= kTwoPi)
    throw std::invalid_argument("decompose_cfo: psi must be in [0, 2pi)");
  const double dphi = (kTwoPi - zeta) / K;
  const int m = int(std::floor(psi / dphi));
  CfoDecomposition d;
  d.psi0 = psi - m * dphi;
  d.m_shift = m % K;
  return d;
}

cd draw_fading(TrialRng& rng) {
  const auto [g1, g2] = rng.normal2();
  return cd(g1, g2) * std::numbers::sqrt2 / 2.0;  // CN(0,1)
}

}  // namespace bmocz
