#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bmocz {

enum class Scheme { huffman_uncoded, sbmocz_uncoded, huffman_bch, sbmocz_bch, huffman_acpc };
enum class ChannelModel { awgn, rayleigh_flat };
enum class CfoModel { none, uniform_full_range };

const char* to_string(Scheme s);
const char* to_string(ChannelModel c);
const char* to_string(CfoModel c);
bool scheme_from_string(const std::string& s, Scheme& out);
bool channel_from_string(const std::string& s, ChannelModel& out);
bool cfo_from_string(const std::string& s, CfoModel& out);

struct SimConfig {
  Scheme scheme = Scheme::huffman_uncoded;
  ChannelModel channel = ChannelModel::awgn;
  CfoModel cfo = CfoModel::none;
  int K = 0;                // uncoded: required; coded schemes: fixed 127
  double zeta = 0.0;        // required > 0 for sbmocz schemes, 0 for huffman
  double lambda = 0.5;
  int N = 1024;             // CFO estimator resolution
  int Q = 200;              // ACPC oversampling factor
  std::vector<double> ebn0_grid_db;
  int64_t max_trials = 100000;
  int64_t target_block_errors = 200;
  uint64_t master_seed = 1;

  bool operator==(const SimConfig&) const = default;
};

bool is_coded(Scheme s);
int k_info(const SimConfig& cfg);     // K uncoded, 106 coded
int frame_len(const SimConfig& cfg);  // K + 1

// Normalizes (fills K = 127 for coded schemes) and checks cross-field
// consistency; throws std::invalid_argument with the offending key on error.
// Returns human-readable warnings (e.g. CFO estimation requested on a
// zeta = 0 constellation, which has no unique spectral peak — the expected
// setup for the Huffman-fails-under-CFO baseline, but worth flagging).
std::vector<std::string> validate_config(SimConfig& cfg);

struct TrialRecord {
  int bit_errors = 0;
  bool block_error = false;
  double cfo_sqerr = 0.0;  // wrap-aware (psi_hat - psi)^2; 0 when cfo = none
};

// One full transmit -> impair -> correct -> decode chain, a pure function of
// (cfg, ebn0_db, trial_index)
TrialRecord run_trial(const SimConfig& cfg, double ebn0_db, uint64_t trial_index);

struct PointResult {
  double ebn0_db = 0.0;
  int64_t trials = 0;
  int64_t bit_errors = 0;
  int64_t block_errors = 0;
  double ber = 0.0;
  double bler = 0.0;
  double cfo_rmse = 0.0;
};

struct SweepResult {
  SimConfig config;
  std::vector<PointResult> points;
  double wall_seconds = 0.0;
};

// Runs each grid point until target_block_errors or max_trials. Trials run in
// fixed-size batches claimed by workers; batches are committed strictly in
// index order and the stop rule is evaluated only on the committed prefix, so
// the result is bit-identical for every worker count. workers = 0 picks
// hardware concurrency.
SweepResult run_sweep(const SimConfig& cfg, int workers = 0);

enum class Metric { ber, bler };

// Eb/N0 where a (dB, rate) curve first crosses target_rate from above,
// log-linear interpolation between adjacent grid points; nullopt if the
// curve never spans the target
std::optional<double> crossing_ebn0(std::span<const std::pair<double, double>> curve,
                                    double target_rate);
std::optional<double> crossing_ebn0(const SweepResult& r, double target_rate, Metric m);

// crossing(b) - crossing(a): positive when b needs more Eb/N0 than a
std::optional<double> db_gap_at(const SweepResult& a, const SweepResult& b,
                                double target_rate, Metric m);

}  // namespace bmocz
