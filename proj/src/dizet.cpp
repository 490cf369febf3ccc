#include "bmocz/dizet.hpp"

#include <cmath>
#include <stdexcept>

#include "bmocz/cfo.hpp"
#include "bmocz/fft.hpp"
#include "bmocz/poly.hpp"

namespace bmocz {

DizetDecision dizet_decode(std::span<const cd> y, const Constellation& c) {
  const int K = c.params.K;
  if (int(y.size()) != K + 1)
    throw std::invalid_argument("dizet_decode: frame length must be K+1");
  const double r = c.radius;

  std::vector<cd> pts(size_t(2 * K));
  for (int k = 0; k < K; ++k) {
    pts[size_t(k)] = std::polar(r, c.phases[size_t(k)]);
    pts[size_t(K + k)] = std::polar(1.0 / r, c.phases[size_t(k)]);
  }
  const auto vals = evaluate_points(y, pts);
  const double wK = std::pow(r, K);  // comparison weight R^{N_z - 1}

  DizetDecision d;
  d.bits.resize(size_t(K));
  d.margins.resize(size_t(K));
  for (int k = 0; k < K; ++k) {
    const double outer = std::sqrt(std::norm(vals[size_t(k)]));
    const double inner = std::sqrt(std::norm(vals[size_t(K + k)]));
    const double margin = wK * inner - outer;
    d.margins[size_t(k)] = margin;
    d.bits[size_t(k)] = margin > 0.0 ? 1 : 0;  // exact tie decides 0
  }
  return d;
}

namespace {

// literal definition: de-rotate by each candidate, decode, score
OversampledDizet oversampled_scalar(std::span<const cd> y, const Constellation& c, int Q) {
  OversampledDizet best;
  double best_score = -1.0;
  const double step = c.dphi() / Q;
  for (int q = 0; q < Q; ++q) {
    const auto yq = correct_cfo(y, q * step);
    auto d = dizet_decode(yq, c);
    double score = 0.0;
    for (double m : d.margins) score += std::fabs(m);
    if (score > best_score) {
      best_score = score;
      best.psi0_hat = q * step;
      best.decision = std::move(d);
    }
  }
  return best;
}

}  // namespace

OversampledDizet oversampled_dizet(std::span<const cd> y, const Constellation& c, int Q) {
  const int K = c.params.K;
  if (c.params.zeta != 0.0)
    throw std::invalid_argument("oversampled_dizet: requires a Huffman (zeta = 0) constellation");
  if (Q < 1) throw std::invalid_argument("oversampled_dizet: Q must be >= 1");
  if (int(y.size()) != K + 1)
    throw std::invalid_argument("oversampled_dizet: frame length must be K+1");

  const size_t M = size_t(K) * size_t(Q);
  if (M < y.size() + 1) return oversampled_scalar(y, c, Q);  // grid would alias

  // De-rotating by theta and evaluating at R^{+-1} e^{j phi_k} equals
  // evaluating Y at R^{+-1} e^{j(phi_k - theta)}. For zeta = 0 all K*Q
  // candidate angles phi_k - q dphi/Q lie on the uniform M-point grid
  // phi_0 - 2pi t/M (mod 2pi), M = K*Q, so one M-point DFT per circle covers
  // every candidate: V[t] = Y(rho e^{j(phi_0 - 2pi t/M)}) = DFT_M(y_n rho^n e^{j phi_0 n}).
  const double phi0 = c.phases[0];
  thread_local std::vector<cd> coef, spec;
  thread_local std::vector<double> mag_out, mag_in;
  coef.resize(y.size());
  auto fill_mags = [&](double rho, std::vector<double>& mags) {
    const cd g = std::polar(rho, phi0);
    cd w = 1.0;
    for (size_t n = 0; n < y.size(); ++n) {
      coef[n] = y[n] * w;
      w *= g;
    }
    fft::forward(coef, M, spec);
    mags.resize(M);
    for (size_t t = 0; t < M; ++t) mags[t] = std::sqrt(std::norm(spec[t]));
  };
  fill_mags(c.radius, mag_out);
  fill_mags(1.0 / c.radius, mag_in);

  const double wK = std::pow(c.radius, K);
  // candidate angle phi_k - q dphi/Q sits at grid index t = (q - kQ) mod M
  int best_q = 0;
  double best_score = -1.0;
  for (int q = 0; q < Q; ++q) {
    double score = 0.0;
    for (int k = 0; k < K; ++k) {
      long t = long(q) - long(k) * Q;
      if (t < 0) t += long(M);
      score += std::fabs(wK * mag_in[size_t(t)] - mag_out[size_t(t)]);
    }
    if (score > best_score) {  // strict: ties keep the smaller q
      best_score = score;
      best_q = q;
    }
  }

  OversampledDizet res;
  res.psi0_hat = best_q * c.dphi() / Q;
  res.decision.bits.resize(size_t(K));
  res.decision.margins.resize(size_t(K));
  for (int k = 0; k < K; ++k) {
    long t = long(best_q) - long(k) * Q;
    if (t < 0) t += long(M);
    const double margin = wK * mag_in[size_t(t)] - mag_out[size_t(t)];
    res.decision.margins[size_t(k)] = margin;
    res.decision.bits[size_t(k)] = margin > 0.0 ? 1 : 0;
  }
  return res;
}

double oversampled_fractional_cfo(std::span<const cd> y, const Constellation& c, int Q) {
  return oversampled_dizet(y, c, Q).psi0_hat;
}

}  // namespace bmocz
