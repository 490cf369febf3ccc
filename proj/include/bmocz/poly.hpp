#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bmocz {

using cd = std::complex<double>;

// Coefficients of prod_k (z - alpha_k), ascending order, scaled by a positive
// real so that ||x||^2 = K+1. The product is monic, so after scaling the
// leading coefficient x_K is automatically real and positive (canonical
// global phase; the decoder is invariant to it).
//
// Monomials are multiplied in a coprime-stride order over the zero indices.
// In natural angular order every partial product has its roots packed on an
// arc, and such polynomials have coefficients up to ~C(K/2, K/4) (~1e18 at
// K = 128), which destroys double precision. A stride near 0.382*K keeps
// each prefix spread around the circle and intermediates O(1).
//
// Throws std::overflow_error if an intermediate magnitude exceeds a guard
// (cannot happen for |alpha| near 1 with the stride ordering).
std::vector<cd> zeros_to_coeffs(std::span<const cd> zeros);

// Horner: sum_n x_n z^n
cd evaluate(std::span<const cd> x, cd z);

// Horner at many points in one coefficient pass (SoA layout, vectorizable).
// Matches evaluate() to rounding error; used by the decoder hot path.
std::vector<cd> evaluate_points(std::span<const cd> x, std::span<const cd> pts);

// entry n = X(e^{-j 2pi n / N}), the N-point DFT of the zero-padded
// coefficients. Requires N >= len(x) (rejects aliasing).
std::vector<cd> unit_circle_dft(std::span<const cd> x, std::size_t N);

// autocorrelation a_l = sum_n x_{n+l} x_n^*, l = -K..K, returned as a vector
// of length 2K+1 with a_l at index l+K; a_0 = ||x||^2
std::vector<cd> autocorrelation(std::span<const cd> x);

}  // namespace bmocz
