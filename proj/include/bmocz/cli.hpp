#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bmocz/sim.hpp"

namespace bmocz {

// Experiment presets mirroring the uncoded (K = 128) and coded (K = 127)
// comparison figures; each expands to the full scheme x channel config list.
struct Preset {
  std::string name;
  std::string note;
  std::vector<SimConfig> configs;
};

const std::vector<std::string>& preset_names();
Preset expand_preset(const std::string& name, uint64_t seed);

// FNV-1a over the canonical serialization of the expanded configs (seed 1);
// pinned in tests so silent preset drift fails CI
uint64_t preset_checksum(const std::string& name);

// Flat key=value config document ('#' comments, blank lines ignored).
// Keys: scheme, channel, cfo, K, zeta, lambda, N, Q, ebn0_grid_db,
// max_trials, target_block_errors, master_seed. Unknown or duplicate keys are
// rejected. ebn0_grid_db is a comma list, or start:stop:step (inclusive).
// Defaults (N=1024, Q=200, lambda=0.5, ...) are applied and echoed back.
SimConfig parse_config_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
SimConfig parse_config_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

// canonical key=value form; parse_config_text(serialize_config_kv(c)) == c
std::string serialize_config_kv(const SimConfig& cfg);

// CSV: one row per curve point, columns exactly
// scheme,channel,cfo,ebn0_db,trials,bit_errors,block_errors,ber,bler,cfo_rmse
void write_csv(const std::string& path, std::span<const SweepResult> results);
std::string csv_string(std::span<const SweepResult> results);

struct RunMeta {
  uint64_t seed = 1;
  std::string git_describe;
  double wall_seconds = 0.0;
  std::string grid_note;  // provenance caveats (e.g. axis ranges read off plots)
};
// JSON: config echo per sweep plus seed / git-describe / wall-time metadata
void write_json(const std::string& path, std::span<const SweepResult> results,
                const RunMeta& meta);

std::string git_describe();

// rows parsed back from CSV (the gaps subcommand post-processes emitted files)
struct CurvePoint {
  double ebn0_db = 0;
  int64_t trials = 0, bit_errors = 0, block_errors = 0;
  double ber = 0, bler = 0, cfo_rmse = 0;
};
struct Curve {
  std::string scheme, channel, cfo;
  std::vector<CurvePoint> points;
};
std::vector<Curve> load_csv(const std::string& path);

// Prints measured dB gaps next to their reported reference values for every
// gap whose curve pair is present; notes the missing ones. Returns the number
// of gaps actually measured.
int report_gaps(const std::vector<Curve>& curves, std::ostream& os);

}  // namespace bmocz
