#include "bmocz/cfo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bmocz/channel.hpp"
#include "bmocz/fft.hpp"

namespace bmocz {

CfoEstimate estimate_cfo(std::span<const cd> y_tilde, std::size_t N) {
  if (N < y_tilde.size())
    throw std::invalid_argument("estimate_cfo: N must be >= frame length");
  thread_local std::vector<cd> spec;
  fft::forward(y_tilde, N, spec);
  std::size_t best = 0;
  double best_n = std::norm(spec[0]);
  for (std::size_t n = 1; n < N; ++n) {
    const double v = std::norm(spec[n]);
    if (v > best_n) {  // strict: ties keep the smallest index
      best_n = v;
      best = n;
    }
  }
  CfoEstimate est;
  est.peak_index = best;
  est.peak_value = std::sqrt(best_n);
  est.N = N;
  est.psi_hat = 2.0 * std::numbers::pi * double(best) / double(N);
  return est;
}

std::vector<cd> correct_cfo(std::span<const cd> y_tilde, double psi_hat) {
  std::vector<cd> y(y_tilde.begin(), y_tilde.end());
  if (psi_hat != 0.0) rotate_frame(y, -psi_hat);
  return y;
}

}  // namespace bmocz
