#include "bmocz/constellation.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bmocz {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_common(int K, double lambda, double zeta) {
  if (K < 1) throw std::domain_error("constellation: K must be >= 1");
  if (!(lambda > 0.0) || lambda > 1.0)
    throw std::domain_error("constellation: lambda must be in (0, 1]");
  if (!(zeta >= 0.0) || zeta >= kTwoPi)
    throw std::domain_error("constellation: zeta must be in [0, 2pi)");
}
}  // namespace

double huffman_radius(int K, double lambda) {
  check_common(K, lambda, 0.0);
  return std::sqrt(1.0 + 2.0 * lambda * std::sin(std::numbers::pi / K));
}

double sbmocz_radius(int K, double lambda, double zeta) {
  check_common(K, lambda, zeta);
  return std::sqrt(1.0 + 2.0 * lambda * std::sin((kTwoPi - zeta) / (2.0 * K)));
}

std::vector<double> sbmocz_phases(int K, double zeta) {
  check_common(K, 1.0, zeta);
  std::vector<double> phi(size_t(K), 0.0);
  const double offset = (kTwoPi + zeta * (K - 1)) / (2.0 * K);
  const double step = (kTwoPi - zeta) / K;
  for (int k = 0; k < K; ++k) phi[size_t(k)] = step * k + offset;
  return phi;
}

Constellation make_constellation(const ConstellationParams& p) {
  check_common(p.K, p.lambda, p.zeta);
  if (p.zeta > 0.9 * kTwoPi)
    std::fprintf(stderr,
                 "warning: zeta = %.4f is close to 2pi; zeros are heavily "
                 "perturbed and DiZeT margins degrade\n",
                 p.zeta);
  Constellation c;
  c.params = p;
  c.radius = sbmocz_radius(p.K, p.lambda, p.zeta);
  c.phases = sbmocz_phases(p.K, p.zeta);
  return c;
}

std::vector<cd> map_bits_to_zeros(std::span<const uint8_t> m, const Constellation& c) {
  if (int(m.size()) != c.params.K)
    throw std::invalid_argument("map_bits_to_zeros: message length != K");
  std::vector<cd> zeros(m.size());
  const double r = c.radius, rinv = 1.0 / c.radius;
  for (size_t k = 0; k < m.size(); ++k) {
    const double phi = std::fmod(c.phases[k], kTwoPi);
    zeros[k] = std::polar(m[k] ? r : rinv, phi);
  }
  return zeros;
}

std::pair<double, double> zero_separation_check(const Constellation& c) {
  const double r = c.radius;
  const double d_cp = r - 1.0 / r;
  const double d_az = 2.0 / r * std::sin((kTwoPi - c.params.zeta) / (2.0 * c.params.K));
  return {d_cp, d_az};
}

}  // namespace bmocz
