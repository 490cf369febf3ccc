// Acceptance gate: each criterion below prints exactly one [PASS]/[FAIL] line
// and the process exits nonzero on failure. Tolerances are pinned here, next
// to the check that uses them. Long Monte Carlo sweeps are cached on disk
// (keyed by their exact configs) so the BER and BLER criteria that read the
// same curves do not re-simulate them.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bmocz/cfo.hpp"
#include "bmocz/channel.hpp"
#include "bmocz/cli.hpp"
#include "bmocz/constellation.hpp"
#include "bmocz/dizet.hpp"
#include "bmocz/fec.hpp"
#include "bmocz/poly.hpp"
#include "bmocz/rng.hpp"
#include "bmocz/sim.hpp"
#include "json.hpp"

using namespace bmocz;
constexpr double kTwoPi = 2 * std::numbers::pi;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!cond) {
      detail += " <-- FAIL";
      ok = false;
    }
  }
  void require_band(double x, double lo, double hi, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s = %.3f (want %.3f..%.3f)", what.c_str(), x, lo, hi);
    require(x >= lo && x <= hi, buf);
  }
};

std::vector<uint8_t> random_bits(int K, TrialRng& rng) {
  std::vector<uint8_t> m(size_t(K), 0);
  for (auto& b : m) b = uint8_t(rng.bit());
  return m;
}

// ---------------------------------------------------------------- sweep cache

uint64_t fnv64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string cache_key(const std::vector<SimConfig>& cfgs) {
  std::string all;
  for (const auto& c : cfgs) all += serialize_config_kv(c);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)fnv64(all));
  return buf;
}

std::optional<std::vector<SweepResult>> load_cache(const std::string& path,
                                                   const std::vector<SimConfig>& cfgs) {
  std::ifstream f(path);
  if (!f) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(f);
    if (j.at("key") != cache_key(cfgs)) return std::nullopt;
    std::vector<SweepResult> out;
    for (size_t i = 0; i < cfgs.size(); ++i) {
      const auto& js = j.at("sweeps").at(i);
      SweepResult r;
      r.config = parse_config_text(js.at("config").get<std::string>());
      if (!(r.config == cfgs[i])) return std::nullopt;
      for (const auto& jp : js.at("points")) {
        PointResult p;
        p.ebn0_db = jp.at(0).get<double>();
        p.trials = jp.at(1).get<int64_t>();
        p.bit_errors = jp.at(2).get<int64_t>();
        p.block_errors = jp.at(3).get<int64_t>();
        p.ber = jp.at(4).get<double>();
        p.bler = jp.at(5).get<double>();
        p.cfo_rmse = jp.at(6).get<double>();
        r.points.push_back(p);
      }
      r.wall_seconds = js.at("wall_seconds").get<double>();
      out.push_back(std::move(r));
    }
    std::fprintf(stderr, "loaded %zu cached sweeps from %s\n", out.size(), path.c_str());
    return out;
  } catch (...) {
    return std::nullopt;
  }
}

std::vector<SweepResult> cached_sweeps(const std::string& path,
                                       const std::vector<SimConfig>& cfgs) {
  if (auto hit = load_cache(path, cfgs)) return *hit;
  std::vector<SweepResult> out;
  for (const auto& c : cfgs) {
    std::fprintf(stderr, "sweeping %s / %s / %s ...\n", to_string(c.scheme),
                 to_string(c.channel), to_string(c.cfo));
    out.push_back(run_sweep(c, 0));
    std::fprintf(stderr, "  done in %.1f s\n", out.back().wall_seconds);
  }
  nlohmann::json j;
  j["key"] = cache_key(cfgs);
  j["sweeps"] = nlohmann::json::array();
  for (const auto& r : out) {
    nlohmann::json js;
    js["config"] = serialize_config_kv(r.config);
    js["wall_seconds"] = r.wall_seconds;
    js["points"] = nlohmann::json::array();
    for (const auto& p : r.points)
      js["points"].push_back(
          {p.ebn0_db, p.trials, p.bit_errors, p.block_errors, p.ber, p.bler, p.cfo_rmse});
    j["sweeps"].push_back(std::move(js));
  }
  std::ofstream f(path);
  f << j.dump();
  return out;
}

// -------------------------------------------------------- criterion sweeps

std::vector<double> grid(double a, double b, double step) {
  std::vector<double> g;
  for (int i = 0; a + i * step <= b + 1e-9; ++i) g.push_back(a + i * step);
  return g;
}

SimConfig sweep_cfg(Scheme s, ChannelModel ch, CfoModel cf, int K, double zeta,
                    std::vector<double> g, int64_t max_trials, int64_t target,
                    uint64_t seed) {
  SimConfig c;
  c.scheme = s;
  c.channel = ch;
  c.cfo = cf;
  c.K = K;
  c.zeta = zeta;
  c.ebn0_grid_db = std::move(g);
  c.max_trials = max_trials;
  c.target_block_errors = target;
  c.master_seed = seed;
  validate_config(c);
  return c;
}

// order: red_awgn, red_fading, h_awgn, s_awgn, sc_awgn, h_fading, s_fading, sc_fading
std::vector<SimConfig> fig3_sweep_set() {
  constexpr uint64_t seed = 777;
  constexpr double z = 0.0117;
  using S = Scheme;
  using Ch = ChannelModel;
  using Cf = CfoModel;
  return {
      sweep_cfg(S::huffman_uncoded, Ch::awgn, Cf::uniform_full_range, 128, 0, grid(0, 16, 1),
                10000, 200, seed),
      sweep_cfg(S::huffman_uncoded, Ch::rayleigh_flat, Cf::uniform_full_range, 128, 0,
                grid(0, 38, 2), 10000, 200, seed),
      sweep_cfg(S::huffman_uncoded, Ch::awgn, Cf::none, 128, 0, grid(8, 14, 1), 20000, 2000,
                seed),
      sweep_cfg(S::sbmocz_uncoded, Ch::awgn, Cf::none, 128, z, grid(8, 14, 1), 20000, 2000,
                seed),
      sweep_cfg(S::sbmocz_uncoded, Ch::awgn, Cf::uniform_full_range, 128, z, grid(8, 14, 1),
                20000, 2000, seed),
      sweep_cfg(S::huffman_uncoded, Ch::rayleigh_flat, Cf::none, 128, 0, grid(20, 36, 2),
                20000, 2000, seed),
      sweep_cfg(S::sbmocz_uncoded, Ch::rayleigh_flat, Cf::none, 128, z, grid(20, 36, 2),
                20000, 2000, seed),
      sweep_cfg(S::sbmocz_uncoded, Ch::rayleigh_flat, Cf::uniform_full_range, 128, z,
                grid(20, 36, 2), 20000, 2000, seed),
  };
}

// order: hb_awgn, sb_awgn, ac_awgn, sb_fading, ac_fading
std::vector<SimConfig> fig4_sweep_set() {
  constexpr uint64_t seed = 778;
  using S = Scheme;
  using Ch = ChannelModel;
  using Cf = CfoModel;
  // awgn sweeps get a deeper trial cap: the BER 1e-3 crossings land near the
  // 20k-trial statistics floor, and the gap check needs dozens of block
  // events at both bracketing grid points
  return {
      sweep_cfg(S::huffman_bch, Ch::awgn, Cf::none, 127, 0, grid(5, 13, 1), 60000, 2000,
                seed),
      sweep_cfg(S::sbmocz_bch, Ch::awgn, Cf::uniform_full_range, 127, 0.0130, grid(5, 13, 1),
                60000, 2000, seed),
      sweep_cfg(S::huffman_acpc, Ch::awgn, Cf::uniform_full_range, 127, 0, grid(5, 13, 1),
                60000, 2000, seed),
      sweep_cfg(S::sbmocz_bch, Ch::rayleigh_flat, Cf::uniform_full_range, 127, 0.0130,
                grid(14, 34, 2), 20000, 2000, seed),
      sweep_cfg(S::huffman_acpc, Ch::rayleigh_flat, Cf::uniform_full_range, 127, 0,
                grid(14, 34, 2), 20000, 2000, seed),
  };
}

double gap_or_nan(const SweepResult& a, const SweepResult& b, double target, Metric m) {
  const auto g = db_gap_at(a, b, target, m);
  return g ? *g : std::numeric_limits<double>::quiet_NaN();
}

// ------------------------------------------------------------- criteria

Outcome c1_radii() {
  Outcome o;
  const double tol = 5e-5;
  char buf[120];
  const double r1 = sbmocz_radius(128, 0.5, 0.0117);
  std::snprintf(buf, sizeof(buf), "sbmocz_radius(128,0.5,0.0117) = %.7f vs 1.0122", r1);
  o.require(std::abs(r1 - 1.0122) <= tol, buf);
  const double r2 = sbmocz_radius(127, 0.5, 0.0130);
  std::snprintf(buf, sizeof(buf), "sbmocz_radius(127,0.5,0.0130) = %.7f vs 1.0123", r2);
  o.require(std::abs(r2 - 1.0123) <= tol, buf);
  const double r3 = huffman_radius(128, 0.5);
  std::snprintf(buf, sizeof(buf), "huffman_radius(128,0.5) = %.7f vs 1.0122", r3);
  o.require(std::abs(r3 - 1.0122) <= tol, buf);
  return o;
}

Outcome c2_properties() {
  Outcome o;
  TrialRng rng(1001, 0.0, 0);
  double worst_dtft = 0, worst_invar = 0, worst_sym = 0, worst_sep = 0, worst_imp = 0;
  for (int K : {15, 16, 31, 32}) {
    const auto c = make_constellation({K, 0.25, 0.5});
    const double a0 = K + 1;
    const int G = 512;

    // power spectrum on a theta grid, reused by all three spectral checks
    std::vector<std::vector<double>> spectra;
    for (int msg = 0; msg < 100; ++msg) {
      const auto x = zeros_to_coeffs(map_bits_to_zeros(random_bits(K, rng), c));
      std::vector<double> spec(size_t(G), 0.0);
      for (int g = 0; g < G; ++g)
        spec[size_t(g)] = std::norm(evaluate(x, std::polar(1.0, -kTwoPi * g / G)));

      if (msg < 4) {
        // |X(e^{-j theta})|^2 equals the DTFT of the autocorrelation
        const auto a = autocorrelation(x);
        for (int g = 0; g < G; ++g) {
          const double th = kTwoPi * g / G;
          cd dtft = 0;
          for (int l = -K; l <= K; ++l)
            dtft += a[size_t(l + K)] * std::polar(1.0, -th * l);
          worst_dtft = std::max(worst_dtft, std::abs(spec[size_t(g)] - dtft.real()) / a0);
          worst_dtft = std::max(worst_dtft, std::abs(dtft.imag()) / a0);
        }
        // symmetry |X(e^{-j theta})|^2 = |X(e^{+j theta})|^2
        for (int g = 0; g < G; ++g) {
          const double plus = std::norm(evaluate(x, std::polar(1.0, kTwoPi * g / G)));
          worst_sym = std::max(worst_sym, std::abs(spec[size_t(g)] - plus) / a0);
        }
      }
      spectra.push_back(std::move(spec));
    }
    // message invariance of the whole profile
    for (size_t m = 1; m < spectra.size(); ++m)
      for (int g = 0; g < G; ++g)
        worst_invar =
            std::max(worst_invar, std::abs(spectra[m][size_t(g)] - spectra[0][size_t(g)]) / a0);

    // d_cp = lambda * d_az
    for (double lambda : {0.3, 0.5, 1.0}) {
      const auto cc = make_constellation({K, 0.25, lambda});
      const auto [d_cp, d_az] = zero_separation_check(cc);
      worst_sep = std::max(worst_sep, std::abs(d_cp - lambda * d_az));
    }

    // Huffman impulsive autocorrelation at zeta = 0
    const auto ch = make_constellation({K, 0.0, 0.5});
    for (int msg = 0; msg < 10; ++msg) {
      const auto x = zeros_to_coeffs(map_bits_to_zeros(random_bits(K, rng), ch));
      const auto a = autocorrelation(x);
      for (int l = 1; l < K; ++l)
        worst_imp = std::max(worst_imp, std::abs(a[size_t(K + l)]) / a0);
    }
  }
  char buf[100];
  std::snprintf(buf, sizeof(buf), "dtft-vs-|X|^2 max err %.2e (tol 1e-8)", worst_dtft);
  o.require(worst_dtft < 1e-8, buf);
  std::snprintf(buf, sizeof(buf), "message invariance max err %.2e (tol 1e-6)", worst_invar);
  o.require(worst_invar < 1e-6, buf);
  std::snprintf(buf, sizeof(buf), "theta symmetry max err %.2e (tol 1e-8)", worst_sym);
  o.require(worst_sym < 1e-8, buf);
  std::snprintf(buf, sizeof(buf), "d_cp - lambda*d_az max %.2e (tol 1e-12)", worst_sep);
  o.require(worst_sep < 1e-12, buf);
  std::snprintf(buf, sizeof(buf), "huffman off-peak autocorr max %.2e (tol 1e-6)", worst_imp);
  o.require(worst_imp < 1e-6, buf);
  return o;
}

Outcome c3_roundtrips() {
  Outcome o;
  const int trials = 1000;

  int plain_fail = 0;
  for (int K : {8, 32, 128}) {
    for (double zeta : {0.0, 0.0117}) {
      const auto c = make_constellation({K, zeta, 0.5});
      TrialRng rng(1002, double(K) + zeta, 0);
      for (int t = 0; t < trials; ++t) {
        const auto m = random_bits(K, rng);
        auto y = zeros_to_coeffs(map_bits_to_zeros(m, c));
        const cd h = std::polar(0.05 + 2.0 * rng.uniform01(), kTwoPi * rng.uniform01());
        for (auto& v : y) v *= h;
        plain_fail += dizet_decode(y, c).bits != m;
      }
    }
  }
  o.require(plain_fail == 0, "dizet with random h: " + std::to_string(plain_fail) +
                                 "/6000 failures");

  int cfo_fail = 0;
  for (int K : {8, 32, 128}) {
    const auto c = make_constellation({K, 0.0117, 0.5});
    TrialRng rng(1003, double(K), 0);
    for (int t = 0; t < trials; ++t) {
      const auto m = random_bits(K, rng);
      auto y = zeros_to_coeffs(map_bits_to_zeros(m, c));
      const cd h = std::polar(0.05 + 2.0 * rng.uniform01(), kTwoPi * rng.uniform01());
      for (auto& v : y) v *= h;
      rotate_frame(y, kTwoPi * rng.uniform01());
      const auto est = estimate_cfo(y, 1024);
      cfo_fail += dizet_decode(correct_cfo(y, est.psi_hat), c).bits != m;
    }
  }
  o.require(cfo_fail == 0, "smooshed + estimator at N=1024: " + std::to_string(cfo_fail) +
                               "/3000 failures");

  int acpc_fail = 0;
  {
    const auto c = make_constellation({127, 0.0, 0.5});
    TrialRng rng(1004, 0.0, 0);
    for (int t = 0; t < trials; ++t) {
      const auto m = random_bits(bch::k, rng);
      auto y = zeros_to_coeffs(map_bits_to_zeros(acpc::encode(m), c));
      const cd h = std::polar(0.05 + 2.0 * rng.uniform01(), kTwoPi * rng.uniform01());
      for (auto& v : y) v *= h;
      rotate_frame(y, kTwoPi * rng.uniform01());
      const auto res = acpc::decode(y, c, 200);
      acpc_fail += !(res.decode_ok && res.info_bits == m);
    }
  }
  o.require(acpc_fail == 0,
            "ACPC K=127 full-range CFO: " + std::to_string(acpc_fail) + "/1000 failures");
  return o;
}

Outcome c4_oracle() {
  Outcome o;
  const int K = 8, trials = 4000;
  const double ebn0_db = 12.0;
  const auto c = make_constellation({K, 0.0, 0.5});

  std::vector<std::vector<cd>> codebook(1u << K);
  for (uint32_t w = 0; w < codebook.size(); ++w) {
    std::vector<uint8_t> m(K);
    for (int k = 0; k < K; ++k) m[size_t(k)] = uint8_t((w >> k) & 1);
    codebook[w] = zeros_to_coeffs(map_bits_to_zeros(m, c));
  }

  const double sigma2 = noise_variance_from_ebn0(ebn0_db, K, K + 1);
  const double s = std::sqrt(sigma2 / 2);
  TrialRng rng(1005, ebn0_db, 0);
  int agree = 0;
  for (int t = 0; t < trials; ++t) {
    uint32_t w = uint32_t(rng.next() & (codebook.size() - 1));
    std::vector<cd> y = codebook[w];
    for (auto& v : y) {
      const auto [g1, g2] = rng.normal2();
      v += cd(s * g1, s * g2);
    }
    const auto d = dizet_decode(y, c);
    uint32_t dz = 0;
    for (int k = 0; k < K; ++k) dz |= uint32_t(d.bits[size_t(k)]) << k;

    double best = 1e300;
    uint32_t ml = 0;
    for (uint32_t cand = 0; cand < codebook.size(); ++cand) {
      double dist = 0;
      for (size_t n = 0; n < y.size(); ++n) dist += std::norm(y[n] - codebook[cand][n]);
      if (dist < best) {
        best = dist;
        ml = cand;
      }
    }
    agree += dz == ml;
  }
  const double frac = double(agree) / trials;
  char buf[100];
  std::snprintf(buf, sizeof(buf), "dizet vs min-distance oracle agreement %.4f (need >= 0.95)",
                frac);
  o.require(frac >= 0.95, buf);
  return o;
}

Outcome c5_fig3_ber() {
  Outcome o;
  const auto r = cached_sweeps("acceptance_cache_fig3.json", fig3_sweep_set());
  const auto &redA = r[0], &redF = r[1], &hA = r[2], &sA = r[3], &scA = r[4], &hF = r[5],
             &scF = r[7];

  double red_lo = 1.0, red_hi = 0.0;
  for (const auto* red : {&redA, &redF})
    for (const auto& p : red->points) {
      red_lo = std::min(red_lo, p.ber);
      red_hi = std::max(red_hi, p.ber);
    }
  char buf[120];
  std::snprintf(buf, sizeof(buf), "huffman-under-CFO BER in [%.3f, %.3f] (want 0.45..0.55)",
                red_lo, red_hi);
  o.require(red_lo >= 0.45 && red_hi <= 0.55, buf);

  o.require_band(gap_or_nan(hA, sA, 1e-3, Metric::ber), 1.3 - 0.5, 1.3 + 0.5,
                 "awgn BER 1e-3 sbmocz(no cfo) - huffman");
  o.require_band(gap_or_nan(hA, scA, 1e-3, Metric::ber), 1.46 - 0.5, 1.46 + 0.5,
                 "awgn BER 1e-3 sbmocz(cfo) - huffman");
  o.require_band(gap_or_nan(hF, scF, 1e-3, Metric::ber), 2.92 - 0.75, 2.92 + 0.75,
                 "fading BER 1e-3 sbmocz(cfo) - huffman");
  return o;
}

Outcome c6_fig3_bler() {
  Outcome o;
  const auto r = cached_sweeps("acceptance_cache_fig3.json", fig3_sweep_set());
  const auto &hA = r[2], &sA = r[3], &scA = r[4], &hF = r[5], &sF = r[6], &scF = r[7];

  const double dA = gap_or_nan(sA, scA, 1e-2, Metric::bler);
  const double dF = gap_or_nan(sF, scF, 1e-2, Metric::bler);
  o.require_band(std::abs(dA), 0.0, 0.3, "awgn BLER 1e-2 |with - without cfo|");
  o.require_band(std::abs(dF), 0.0, 0.3, "fading BLER 1e-2 |with - without cfo|");
  o.require_band(gap_or_nan(hA, scA, 1e-2, Metric::bler), 1.5 - 0.5, 1.5 + 0.5,
                 "awgn BLER 1e-2 sbmocz(cfo) - huffman");
  o.require_band(gap_or_nan(hF, scF, 1e-2, Metric::bler), 1.0 - 0.5, 1.0 + 0.5,
                 "fading BLER 1e-2 sbmocz(cfo) - huffman");
  return o;
}

Outcome c7_bch() {
  Outcome o;
  TrialRng rng(1006, 0.0, 0);
  int bad_t3 = 0, bad_t2 = 0, miscorrect = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    std::vector<uint8_t> m(size_t(bch::k));
    for (auto& b : m) b = uint8_t(rng.bit());
    const auto code = bch::encode(m);
    auto word = code;
    const int w = int(rng.next() % 4);  // weight 0..3
    std::vector<int> pos;
    while (int(pos.size()) < w) {
      const int p = int(rng.next() % uint64_t(bch::n));
      bool dup = false;
      for (int q : pos) dup = dup || q == p;
      if (!dup) {
        pos.push_back(p);
        word[size_t(p)] ^= 1;
      }
    }

    const auto r3 = bch::decode(word, 3);
    if (!(r3.ok && r3.error_count == w && r3.info == m)) ++bad_t3;
    if (r3.ok) {
      // re-encode consistency: the corrected word must be the true codeword
      if (bch::encode(r3.info) != code) ++miscorrect;
    }

    const auto r2 = bch::decode(word, 2);
    if (w <= 2) {
      if (!(r2.ok && r2.info == m)) ++bad_t2;
    } else if (r2.ok) {
      ++miscorrect;  // weight 3 accepted at t_max = 2 would be silent corruption
    }
  }
  o.require(bad_t3 == 0, "t=3 failures " + std::to_string(bad_t3) + "/10000");
  o.require(bad_t2 == 0, "t=2 (weight<=2) failures " + std::to_string(bad_t2));
  o.require(miscorrect == 0, "silent miscorrections " + std::to_string(miscorrect));
  return o;
}

Outcome c8_fig4() {
  Outcome o;
  const auto r = cached_sweeps("acceptance_cache_fig4.json", fig4_sweep_set());
  const auto &hbA = r[0], &sbA = r[1], &acA = r[2], &sbF = r[3], &acF = r[4];

  // the awgn gaps are read at BER 1e-3: the reference states a high-Eb/N0 gap
  // without naming a level, the curves have already converged there, and it is
  // the deepest level the trial budget measures with sound statistics (the
  // shift-search ACPC loses whole blocks to rare mis-shifts, so its deeper
  // tail thins out faster than a plain bounded-distance decoder's)
  o.require_band(gap_or_nan(sbF, acF, 1e-3, Metric::ber), 4.0 - 1.5, 4.0 + 1.5,
                 "fading BER 1e-3 acpc - sbmocz_bch");
  o.require_band(gap_or_nan(hbA, sbA, 1e-3, Metric::ber), 1.6 - 0.75, 1.6 + 0.75,
                 "awgn BER 1e-3 sbmocz_bch - huffman_bch");
  o.require_band(gap_or_nan(hbA, acA, 1e-3, Metric::ber), 1.6 - 0.75, 1.6 + 0.75,
                 "awgn BER 1e-3 acpc - huffman_bch");
  o.require_band(gap_or_nan(acA, sbA, 1e-2, Metric::bler), 0.65 - 0.5, 0.65 + 0.5,
                 "awgn BLER 1e-2 sbmocz_bch - acpc");
  o.require_band(gap_or_nan(acF, sbF, 1e-2, Metric::bler), 0.6 - 0.5, 0.6 + 0.5,
                 "fading BLER 1e-2 sbmocz_bch - acpc");
  return o;
}

Outcome c9_determinism() {
  Outcome o;
  SimConfig a = sweep_cfg(Scheme::sbmocz_uncoded, ChannelModel::awgn,
                          CfoModel::uniform_full_range, 32, 0.05, {4.0, 8.0}, 4000, 400, 5);
  SimConfig b = sweep_cfg(Scheme::huffman_acpc, ChannelModel::awgn,
                          CfoModel::uniform_full_range, 127, 0.0, {6.0}, 600, 100, 5);
  b.Q = 50;

  for (const auto& cfg : {a, b}) {
    std::string first;
    for (int workers : {1, 2, 4}) {
      const auto res = run_sweep(cfg, workers);
      const auto csv = csv_string({&res, 1});
      if (workers == 1)
        first = csv;
      else
        o.require(csv == first, std::string(to_string(cfg.scheme)) + " workers=" +
                                    std::to_string(workers) + " CSV identical");
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance c1..c9\n");
    return 2;
  }
  const std::string which = argv[1];
  struct Entry {
    const char* id;
    const char* name;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {"c1", "constellation radii", c1_radii},
      {"c2", "spectral property suite", c2_properties},
      {"c3", "noiseless round-trips", c3_roundtrips},
      {"c4", "small-scale oracle agreement", c4_oracle},
      {"c5", "uncoded BER trends", c5_fig3_ber},
      {"c6", "uncoded BLER trends", c6_fig3_bler},
      {"c7", "BCH bounded-distance decoding", c7_bch},
      {"c8", "coded BER/BLER trends", c8_fig4},
      {"c9", "worker-count determinism", c9_determinism},
  };
  for (const auto& e : entries) {
    if (which != e.id) continue;
    const Outcome o = e.fn();
    std::printf("[%s] %s: %s — %s\n", o.ok ? "PASS" : "FAIL", e.id, e.name,
                o.detail.c_str());
    return o.ok ? 0 : 1;
  }
  std::fprintf(stderr, "unknown criterion '%s'\n", which.c_str());
  return 2;
}
