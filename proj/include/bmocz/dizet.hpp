#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bmocz/constellation.hpp"

namespace bmocz {

struct DizetDecision {
  std::vector<uint8_t> bits;    // length K
  std::vector<double> margins;  // R^K |Y(R^-1 e^{j phi_k})| - |Y(R e^{j phi_k})|
};

// Direct zero testing: bit k = 1 iff |Y(R e^{j phi_k})| < R^K |Y(R^-1 e^{j phi_k})|
// (weight R^{N_z - 1} with N_z = K+1 zeros... frame length K+1). Exact ties
// decide 0. Scale-invariant in y, so no channel knowledge is needed.
DizetDecision dizet_decode(std::span<const cd> y, const Constellation& c);

// Fractional-CFO search for Huffman constellations (zeta = 0): over the Q
// candidates q*dphi/Q, de-rotate y, decode, and score by total |margin|
// (total decision confidence); returns the argmax (ties toward smaller q).
//
// Implemented by evaluating Y on the uniform K*Q-point grid per circle with
// a single DFT — every candidate's evaluation points land on that grid — and
// it agrees with the literal de-rotate-then-decode definition to rounding
// error (see tests). Falls back to the literal loop when K*Q < K+2.
double oversampled_fractional_cfo(std::span<const cd> y, const Constellation& c, int Q);

// same search, also exposing the winning candidate's decision so the ACPC
// receiver does not have to decode twice
struct OversampledDizet {
  double psi0_hat = 0.0;
  DizetDecision decision;
};
OversampledDizet oversampled_dizet(std::span<const cd> y, const Constellation& c, int Q);

}  // namespace bmocz
