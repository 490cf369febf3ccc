#include "bmocz/poly.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bmocz/fft.hpp"

namespace bmocz {

std::vector<cd> zeros_to_coeffs(std::span<const cd> zeros) {
  const int K = int(zeros.size());
  if (K < 1) throw std::invalid_argument("zeros_to_coeffs: need at least one zero");

  // coprime stride so prefixes of the product stay spread over the circle
  int stride = std::max(1, int(std::lround(0.382 * K)));
  while (std::gcd(stride, K) != 1) ++stride;

  constexpr double kGuard = 1e12;  // stride order keeps magnitudes O(1)
  std::vector<cd> c(size_t(K) + 1, cd{});
  c[0] = 1.0;
  int deg = 0, idx = 0;
  for (int k = 0; k < K; ++k) {
    const cd a = zeros[size_t(idx)];
    idx += stride;
    if (idx >= K) idx -= K;
    // multiply by (z - a), ascending coefficients, in place
    double peak = 0.0;
    for (int j = deg + 1; j >= 1; --j) {
      c[size_t(j)] = c[size_t(j) - 1] - a * c[size_t(j)];
      peak = std::max(peak, std::abs(c[size_t(j)].real()) + std::abs(c[size_t(j)].imag()));
    }
    c[0] = -a * c[0];
    ++deg;
    if (peak > kGuard)
      throw std::overflow_error("zeros_to_coeffs: intermediate coefficient overflow");
  }

  double norm2 = 0.0;
  for (const cd& v : c) norm2 += std::norm(v);
  // product is monic, so after the positive real scaling x_K = scale > 0
  const double scale = std::sqrt(double(K + 1) / norm2);
  for (cd& v : c) v *= scale;
  return c;
}

cd evaluate(std::span<const cd> x, cd z) {
  cd acc = x.back();
  for (size_t n = x.size() - 1; n-- > 0;) acc = acc * z + x[n];
  return acc;
}

std::vector<cd> evaluate_points(std::span<const cd> x, std::span<const cd> pts) {
  const size_t P = pts.size();
  const size_t K = x.size() - 1;
  std::vector<double> zr(P), zi(P), ar(P), ai(P);
  for (size_t p = 0; p < P; ++p) {
    zr[p] = pts[p].real();
    zi[p] = pts[p].imag();
    ar[p] = x[K].real();
    ai[p] = x[K].imag();
  }
  for (size_t n = K; n-- > 0;) {
    const double cr = x[n].real(), ci = x[n].imag();
    double* __restrict pr = ar.data();
    double* __restrict pi = ai.data();
    const double* __restrict qr = zr.data();
    const double* __restrict qi = zi.data();
    for (size_t p = 0; p < P; ++p) {
      const double t = pr[p] * qr[p] - pi[p] * qi[p] + cr;
      pi[p] = pr[p] * qi[p] + pi[p] * qr[p] + ci;
      pr[p] = t;
    }
  }
  std::vector<cd> out(P);
  for (size_t p = 0; p < P; ++p) out[p] = cd(ar[p], ai[p]);
  return out;
}

std::vector<cd> unit_circle_dft(std::span<const cd> x, std::size_t N) {
  if (N < x.size())
    throw std::invalid_argument("unit_circle_dft: N < K+1 aliases the coefficients");
  std::vector<cd> out;
  fft::forward(x, N, out);
  return out;
}

std::vector<cd> autocorrelation(std::span<const cd> x) {
  const int K = int(x.size()) - 1;
  std::vector<cd> a(size_t(2 * K) + 1);
  for (int l = -K; l <= K; ++l) {
    cd s = 0.0;
    const int lo = std::max(0, -l), hi = std::min(K, K - l);
    for (int n = lo; n <= hi; ++n) s += x[size_t(n + l)] * std::conj(x[size_t(n)]);
    a[size_t(l + K)] = s;
  }
  return a;
}

}  // namespace bmocz
