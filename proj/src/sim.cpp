#include "bmocz/sim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "bmocz/cfo.hpp"
#include "bmocz/channel.hpp"
#include "bmocz/constellation.hpp"
#include "bmocz/dizet.hpp"
#include "bmocz/fec.hpp"
#include "bmocz/poly.hpp"
#include "bmocz/rng.hpp"

namespace bmocz {

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::huffman_uncoded: return "huffman_uncoded";
    case Scheme::sbmocz_uncoded: return "sbmocz_uncoded";
    case Scheme::huffman_bch: return "huffman_bch";
    case Scheme::sbmocz_bch: return "sbmocz_bch";
    case Scheme::huffman_acpc: return "huffman_acpc";
  }
  return "?";
}

const char* to_string(ChannelModel c) {
  return c == ChannelModel::awgn ? "awgn" : "rayleigh_flat";
}

const char* to_string(CfoModel c) { return c == CfoModel::none ? "none" : "uniform_full_range"; }

bool scheme_from_string(const std::string& s, Scheme& out) {
  for (Scheme v : {Scheme::huffman_uncoded, Scheme::sbmocz_uncoded, Scheme::huffman_bch,
                   Scheme::sbmocz_bch, Scheme::huffman_acpc})
    if (s == to_string(v)) {
      out = v;
      return true;
    }
  return false;
}

bool channel_from_string(const std::string& s, ChannelModel& out) {
  for (ChannelModel v : {ChannelModel::awgn, ChannelModel::rayleigh_flat})
    if (s == to_string(v)) {
      out = v;
      return true;
    }
  return false;
}

bool cfo_from_string(const std::string& s, CfoModel& out) {
  for (CfoModel v : {CfoModel::none, CfoModel::uniform_full_range})
    if (s == to_string(v)) {
      out = v;
      return true;
    }
  return false;
}

bool is_coded(Scheme s) { return s != Scheme::huffman_uncoded && s != Scheme::sbmocz_uncoded; }

int k_info(const SimConfig& cfg) { return is_coded(cfg.scheme) ? bch::k : cfg.K; }

int frame_len(const SimConfig& cfg) { return cfg.K + 1; }

std::vector<std::string> validate_config(SimConfig& cfg) {
  std::vector<std::string> warnings;
  const bool coded = is_coded(cfg.scheme);
  if (coded) {
    if (cfg.K == 0) cfg.K = bch::n;
    if (cfg.K != bch::n)
      throw std::invalid_argument("K: coded schemes run with K = 127 (got " +
                                  std::to_string(cfg.K) + ")");
  } else if (cfg.K < 1) {
    throw std::invalid_argument("K: required and must be >= 1");
  }

  const bool smooshed = cfg.scheme == Scheme::sbmocz_uncoded || cfg.scheme == Scheme::sbmocz_bch;
  if (smooshed && cfg.zeta <= 0.0)
    throw std::invalid_argument("zeta: sbmocz schemes need zeta > 0");
  if (!smooshed && cfg.zeta != 0.0)
    throw std::invalid_argument("zeta: huffman schemes need zeta = 0");
  if (!(cfg.zeta >= 0.0 && cfg.zeta < 2 * std::numbers::pi))
    throw std::invalid_argument("zeta: must lie in [0, 2*pi)");
  if (!(cfg.lambda > 0.0 && cfg.lambda <= 1.0))
    throw std::invalid_argument("lambda: must lie in (0, 1]");
  if (cfg.N < cfg.K + 1)
    throw std::invalid_argument("N: CFO estimator resolution must be >= K + 1");
  if (cfg.Q < 1) throw std::invalid_argument("Q: oversampling factor must be >= 1");
  if (cfg.ebn0_grid_db.empty()) throw std::invalid_argument("ebn0_grid_db: must be non-empty");
  if (!std::is_sorted(cfg.ebn0_grid_db.begin(), cfg.ebn0_grid_db.end()))
    throw std::invalid_argument("ebn0_grid_db: must be sorted ascending");
  if (cfg.max_trials < 1) throw std::invalid_argument("max_trials: must be >= 1");
  if (cfg.target_block_errors < 1)
    throw std::invalid_argument("target_block_errors: must be >= 1");

  if (cfg.cfo == CfoModel::uniform_full_range && cfg.zeta == 0.0 &&
      cfg.scheme != Scheme::huffman_acpc)
    warnings.push_back(
        "cfo: zeta = 0 leaves the spectral CFO estimator without a unique peak; "
        "expect this curve to sit near BER 0.5 (the Huffman-under-CFO baseline)");
  return warnings;
}

namespace {

// per-thread scratch shared across trials of one sweep
struct TrialCtx {
  Constellation c;
  std::vector<uint8_t> bits;
  std::vector<cd> zeros;
  std::vector<cd> x;
  std::vector<cd> y;

  explicit TrialCtx(const SimConfig& cfg)
      : c(make_constellation({cfg.K, cfg.zeta, cfg.lambda})) {}
};

int count_bit_errors(std::span<const uint8_t> tx, std::span<const uint8_t> rx) {
  int e = 0;
  for (size_t i = 0; i < tx.size(); ++i) e += tx[i] != rx[i];
  return e;
}

double wrap_sqerr(double psi_hat, double psi) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double d = std::fmod(psi_hat - psi, two_pi);
  if (d > std::numbers::pi) d -= two_pi;
  if (d < -std::numbers::pi) d += two_pi;
  return d * d;
}

TrialRecord run_trial_ctx(const SimConfig& cfg, double ebn0_db, uint64_t trial_index,
                          TrialCtx& ctx) {
  const int ki = k_info(cfg);
  TrialRng rng(cfg.master_seed, ebn0_db, trial_index);

  // draw order is pinned (bits, fading, noise, then CFO) so configs sharing a
  // seed see common random numbers and gap estimates stay tight
  ctx.bits.resize(size_t(ki));
  for (auto& b : ctx.bits) b = uint8_t(rng.bit());

  std::span<const uint8_t> tx_frame_bits;
  std::vector<uint8_t> coded_bits;
  switch (cfg.scheme) {
    case Scheme::huffman_uncoded:
    case Scheme::sbmocz_uncoded: tx_frame_bits = ctx.bits; break;
    case Scheme::huffman_bch:
    case Scheme::sbmocz_bch: coded_bits = bch::encode(ctx.bits); tx_frame_bits = coded_bits; break;
    case Scheme::huffman_acpc: coded_bits = acpc::encode(ctx.bits); tx_frame_bits = coded_bits; break;
  }

  ctx.zeros = map_bits_to_zeros(tx_frame_bits, ctx.c);
  ctx.x = zeros_to_coeffs(ctx.zeros);

  ChannelRealization ch;
  ch.sigma_n2 = noise_variance_from_ebn0(ebn0_db, ki, frame_len(cfg));
  ch.h = cfg.channel == ChannelModel::rayleigh_flat ? draw_fading(rng) : cd(1.0, 0.0);
  ctx.y = apply_channel(ctx.x, ch, rng);  // ch.psi stays 0: psi is drawn after the noise
  double psi = 0.0;
  if (cfg.cfo == CfoModel::uniform_full_range) {
    psi = 2 * std::numbers::pi * rng.uniform01();
    rotate_frame(ctx.y, psi);
  }

  TrialRecord rec;
  std::vector<uint8_t> rx_bits;
  double psi_hat = 0.0;
  switch (cfg.scheme) {
    case Scheme::huffman_uncoded:
    case Scheme::sbmocz_uncoded: {
      if (cfg.cfo == CfoModel::uniform_full_range) {
        const auto est = estimate_cfo(ctx.y, size_t(cfg.N));
        psi_hat = est.psi_hat;
        rx_bits = dizet_decode(correct_cfo(ctx.y, est.psi_hat), ctx.c).bits;
      } else {
        rx_bits = dizet_decode(ctx.y, ctx.c).bits;
      }
      break;
    }
    case Scheme::huffman_bch:
    case Scheme::sbmocz_bch: {
      std::vector<cd> y_corr;
      if (cfg.cfo == CfoModel::uniform_full_range) {
        const auto est = estimate_cfo(ctx.y, size_t(cfg.N));
        psi_hat = est.psi_hat;
        y_corr = correct_cfo(ctx.y, est.psi_hat);
      } else {
        y_corr.assign(ctx.y.begin(), ctx.y.end());
      }
      const auto word = dizet_decode(y_corr, ctx.c).bits;
      rx_bits = bch::decode(word, 3).info;
      break;
    }
    case Scheme::huffman_acpc: {
      auto res = acpc::decode(ctx.y, ctx.c, cfg.Q);
      psi_hat = res.psi_hat;
      rx_bits = std::move(res.info_bits);
      break;
    }
  }

  rec.bit_errors = count_bit_errors(ctx.bits, rx_bits);
  rec.block_error = rec.bit_errors > 0;
  if (cfg.cfo == CfoModel::uniform_full_range) rec.cfo_sqerr = wrap_sqerr(psi_hat, psi);
  return rec;
}

constexpr int64_t kBatch = 128;

struct BatchSums {
  int64_t bit_errors = 0;
  int64_t block_errors = 0;
  double cfo_sqerr = 0.0;
  int64_t trials = 0;
};

// Workers claim batch indices from an atomic counter and publish sums; a
// commit loop folds batches strictly in index order and evaluates the stop
// rule only on that committed prefix. Results are therefore bit-identical
// for any worker count, at the cost of up to (workers - 1) wasted batches
// per grid point.
PointResult run_point(const SimConfig& cfg, double ebn0_db, int workers) {
  const int64_t max_batches = (cfg.max_trials + kBatch - 1) / kBatch;

  std::vector<BatchSums> sums(size_t(max_batches), BatchSums{});
  std::vector<char> ready(size_t(max_batches), 0);
  std::atomic<int64_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable cv;

  auto work = [&] {
    TrialCtx ctx(cfg);
    while (!stop.load(std::memory_order_relaxed)) {
      const int64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= max_batches) break;
      BatchSums s;
      const int64_t lo = b * kBatch;
      const int64_t hi = std::min(lo + kBatch, cfg.max_trials);
      for (int64_t t = lo; t < hi && !stop.load(std::memory_order_relaxed); ++t) {
        const auto rec = run_trial_ctx(cfg, ebn0_db, uint64_t(t), ctx);
        s.bit_errors += rec.bit_errors;
        s.block_errors += rec.block_error;
        s.cfo_sqerr += rec.cfo_sqerr;
        ++s.trials;
      }
      if (s.trials == hi - lo) {  // only complete batches count
        std::lock_guard lk(mu);
        sums[size_t(b)] = s;
        ready[size_t(b)] = 1;
        cv.notify_all();
      }
    }
    cv.notify_all();
  };

  std::vector<std::thread> pool;
  pool.reserve(size_t(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);

  PointResult pr;
  pr.ebn0_db = ebn0_db;
  double sq = 0.0;
  {
    std::unique_lock lk(mu);
    for (int64_t b = 0; b < max_batches; ++b) {
      cv.wait(lk, [&] { return ready[size_t(b)] != 0; });
      const auto& s = sums[size_t(b)];
      pr.trials += s.trials;
      pr.bit_errors += s.bit_errors;
      pr.block_errors += s.block_errors;
      sq += s.cfo_sqerr;
      if (pr.block_errors >= cfg.target_block_errors) break;
    }
  }
  stop.store(true, std::memory_order_relaxed);
  cv.notify_all();
  for (auto& th : pool) th.join();

  pr.ber = double(pr.bit_errors) / (double(pr.trials) * k_info(cfg));
  pr.bler = double(pr.block_errors) / double(pr.trials);
  pr.cfo_rmse = cfg.cfo == CfoModel::uniform_full_range && pr.trials > 0
                    ? std::sqrt(sq / double(pr.trials))
                    : 0.0;
  return pr;
}

}  // namespace

TrialRecord run_trial(const SimConfig& cfg, double ebn0_db, uint64_t trial_index) {
  TrialCtx ctx(cfg);
  return run_trial_ctx(cfg, ebn0_db, trial_index, ctx);
}

SweepResult run_sweep(const SimConfig& cfg, int workers) {
  SimConfig c = cfg;
  validate_config(c);
  if (workers <= 0) workers = std::max(1u, std::thread::hardware_concurrency());

  const auto t0 = std::chrono::steady_clock::now();
  SweepResult res;
  res.config = c;
  res.points.reserve(c.ebn0_grid_db.size());
  for (double db : c.ebn0_grid_db) res.points.push_back(run_point(c, db, workers));
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::optional<double> crossing_ebn0(std::span<const std::pair<double, double>> curve,
                                    double target_rate) {
  constexpr double kFloor = 1e-300;  // keeps log() finite when a point saw zero errors
  for (size_t i = 0; i + 1 < curve.size(); ++i) {
    const double r0 = std::max(curve[i].second, kFloor);
    const double r1 = std::max(curve[i + 1].second, kFloor);
    if (r0 >= target_rate && r1 < target_rate) {
      const double l0 = std::log(r0), l1 = std::log(r1), lt = std::log(target_rate);
      return curve[i].first +
             (curve[i + 1].first - curve[i].first) * (lt - l0) / (l1 - l0);
    }
  }
  return std::nullopt;
}

std::optional<double> crossing_ebn0(const SweepResult& r, double target_rate, Metric m) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(r.points.size());
  for (const auto& p : r.points)
    curve.emplace_back(p.ebn0_db, m == Metric::ber ? p.ber : p.bler);
  return crossing_ebn0(curve, target_rate);
}

std::optional<double> db_gap_at(const SweepResult& a, const SweepResult& b, double target_rate,
                                Metric m) {
  const auto ca = crossing_ebn0(a, target_rate, m);
  const auto cb = crossing_ebn0(b, target_rate, m);
  if (!ca || !cb) return std::nullopt;
  return *cb - *ca;
}

}  // namespace bmocz
