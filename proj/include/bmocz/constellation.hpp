#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace bmocz {

using cd = std::complex<double>;

struct ConstellationParams {
  int K = 0;            // bits (= zeros) per frame
  double zeta = 0.0;    // smooshing factor, [0, 2pi); 0 reproduces Huffman BMOCZ
  double lambda = 0.5;  // radial-vs-angular trade-off, (0, 1]
};

// r_hb = sqrt(1 + 2 lambda sin(pi/K))
double huffman_radius(int K, double lambda);

// r_sb = sqrt(1 + 2 lambda sin((2pi - zeta)/(2K))); equals r_hb at zeta = 0
double sbmocz_radius(int K, double lambda, double zeta);

// phi_k = (2pi - zeta) k/K + (2pi + zeta (K-1))/(2K).
// Stored unreduced (strictly increasing, spacing exactly (2pi - zeta)/K) so
// spacing and symmetry checks need no wraparound cases; reduced mod 2pi only
// when zeros are materialized. The gap is centered on the positive real
// axis: phi_0 + phi_{K-1} = 2pi.
std::vector<double> sbmocz_phases(int K, double zeta);

struct Constellation {
  ConstellationParams params;
  double radius = 1.0;          // uniform over k, > 1
  std::vector<double> phases;   // unreduced, size K

  double dphi() const { return (2.0 * std::numbers::pi - params.zeta) / params.K; }
};

// validates params, computes radius and phases; warns on zeta close to 2pi
Constellation make_constellation(const ConstellationParams& p);

// bit 1 -> radius e^{j phi_k}, bit 0 -> radius^{-1} e^{j phi_k}
std::vector<cd> map_bits_to_zeros(std::span<const uint8_t> m, const Constellation& c);

// {d_cp, d_az}: radial separation of a conjugate-reciprocal pair and
// azimuthal separation of adjacent zeros; d_cp = lambda * d_az by construction
std::pair<double, double> zero_separation_check(const Constellation& c);

}  // namespace bmocz
