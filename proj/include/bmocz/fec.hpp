#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bmocz/constellation.hpp"

namespace bmocz {

// GF(2^7) in polynomial basis, primitive polynomial x^7 + x^3 + 1 (pinned so
// every table, codeword and syndrome is bit-exactly reproducible)
namespace gf128 {
inline constexpr int kFieldOrder = 127;  // multiplicative order
uint8_t mul(uint8_t a, uint8_t b);
uint8_t inv(uint8_t a);          // a != 0
uint8_t pow_alpha(long e);       // alpha^e for any integer e
int log_alpha(uint8_t a);        // in [0, 127), a != 0
}  // namespace gf128

// (127,106) narrow-sense BCH, designed distance 7, t = 3.
// Generator = m1 * m3 * m5 (degree 21), codewords indexed bit i = coefficient
// of x^i; systematic encoding puts info at positions 21..126.
namespace bch {
inline constexpr int n = 127;
inline constexpr int k = 106;

const std::vector<uint8_t>& generator();  // 22 coefficients, ascending

std::vector<uint8_t> encode(std::span<const uint8_t> info);

struct DecodeResult {
  bool ok = false;
  int error_count = 0;
  std::vector<uint8_t> info;  // on failure: systematic positions of the input
};

// Syndromes + Berlekamp-Massey + Chien search, corrects up to t_max errors
// (t_max 2 inside the ACPC, 3 standalone). ok is granted only when the
// corrected word is a true codeword (all six syndromes vanish), so a pattern
// beyond t_max can never be reported as a clean decode.
DecodeResult decode(std::span<const uint8_t> word, int t_max);
}  // namespace bch

// Affine cyclically-permutable construction on top of the BCH code: the
// transmitted word is codeword XOR a fixed public offset vector. Because the
// BCH code is cyclic, a received cyclic shift of any transmitted word differs
// from shift(codeword') XOR offset only through shift(offset) XOR offset; the
// offset is pinned (found by randomized search, tools/acpc_offset_search) so
// that for all d != 0 shift_d(offset) XOR offset keeps Hamming distance >= 3
// from every codeword and weight >= 5 (radius-2 balls around the shifts of a
// transmitted word stay disjoint). Under a bounded-distance t = 2 decode a
// wrong shift then needs 3 - e extra alignment errors on top of the e channel
// flips, so the true shift is the unique minimum-cost decode for e <= 1 and
// wins with high probability at e = 2; distance >= 5 at every shift (which
// would make e = 2 exact) is unattainable here, the covering radius of the
// (127,106) code is already 5.
namespace acpc {

std::span<const uint8_t> offset();  // 127 bits

std::vector<uint8_t> encode(std::span<const uint8_t> info);  // bch encode XOR offset

struct Result {
  std::vector<uint8_t> info_bits;  // length 106
  int detected_shift = 0;          // in [0, 127)
  bool decode_ok = false;
  double psi_hat = 0.0;            // psi0_hat + detected_shift * dphi (diagnostic)
};

// Full receiver: oversampled fractional-CFO search with factor Q, de-rotate,
// DiZeT, then try all 127 cyclic shifts and keep the one whose candidate
// BCH-decodes with <= 2 errors (ties: fewer errors, then smaller shift).
// When no shift decodes, decode_ok = false and info_bits falls back to the
// systematic positions of the shift-0 candidate. Requires a Huffman
// constellation with K = 127.
Result decode(std::span<const cd> y_tilde, const Constellation& c, int Q);

}  // namespace acpc

}  // namespace bmocz
