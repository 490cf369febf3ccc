#include <cstdio>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bmocz/cli.hpp"
#include "bmocz/sim.hpp"

namespace fs = std::filesystem;
using namespace bmocz;

namespace {

int cmd_run(const std::string& preset, const std::string& config_path, uint64_t seed,
            int workers, const std::string& out_dir, const std::string& format) {
  std::vector<SimConfig> configs;
  std::string stem;
  std::string note;
  if (!preset.empty()) {
    const Preset p = expand_preset(preset, seed);
    configs = p.configs;
    note = p.note;
    stem = p.name;
  } else {
    std::vector<std::string> warnings;
    SimConfig c = parse_config_file(config_path, &warnings);
    c.master_seed = seed;
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    configs.push_back(std::move(c));
    stem = fs::path(config_path).stem().string();
  }

  if (!note.empty()) std::cerr << stem << ": " << note << '\n';
  std::vector<SweepResult> results;
  RunMeta meta;
  meta.seed = seed;
  meta.git_describe = git_describe();
  for (size_t i = 0; i < configs.size(); ++i) {
    const auto& c = configs[i];
    std::cerr << "[" << i + 1 << "/" << configs.size() << "] " << to_string(c.scheme) << " / "
              << to_string(c.channel) << " / " << to_string(c.cfo) << " ... " << std::flush;
    results.push_back(run_sweep(c, workers));
    std::cerr << "done in " << results.back().wall_seconds << " s\n";
    meta.wall_seconds += results.back().wall_seconds;
  }

  fs::create_directories(out_dir);
  const fs::path base = fs::path(out_dir) / stem;
  if (format == "csv" || format == "both") {
    write_csv((base.string() + ".csv"), results);
    std::cout << base.string() + ".csv" << '\n';
  }
  if (format == "json" || format == "both") {
    write_json((base.string() + ".json"), results, meta);
    std::cout << base.string() + ".json" << '\n';
  }
  return 0;
}

int cmd_gaps(const std::vector<std::string>& files) {
  std::vector<Curve> curves;
  for (const auto& f : files) {
    auto c = load_csv(f);
    curves.insert(curves.end(), std::make_move_iterator(c.begin()),
                  std::make_move_iterator(c.end()));
  }
  const int n = report_gaps(curves, std::cout);
  std::cerr << n << " gap(s) measured\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-constellation modulation Monte Carlo simulator"};
  app.require_subcommand(1);

  std::string preset, config_path, out_dir = ".", format = "csv";
  uint64_t seed = 1;
  int workers = 0;

  auto* run = app.add_subcommand("run", "run a preset or a config-file sweep");
  auto* opt_preset = run->add_option("--preset", preset, "preset name (see `presets`)");
  auto* opt_config = run->add_option("--config", config_path, "key=value config file")
                         ->check(CLI::ExistingFile);
  opt_preset->excludes(opt_config);
  opt_config->excludes(opt_preset);
  run->add_option("--seed", seed, "master seed (default 1)");
  run->add_option("--workers", workers, "worker threads, 0 = hardware concurrency");
  run->add_option("--out-dir", out_dir, "output directory (default .)");
  run->add_option("--format", format, "csv | json | both")
      ->check(CLI::IsMember({"csv", "json", "both"}));

  std::vector<std::string> gap_files;
  auto* gaps = app.add_subcommand("gaps", "measure dB gaps from emitted CSV files");
  gaps->add_option("files", gap_files, "CSV files produced by `run`")
      ->required()
      ->check(CLI::ExistingFile);

  auto* presets = app.add_subcommand("presets", "list available presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) {
      if (preset.empty() && config_path.empty()) {
        std::cerr << "run: need --preset or --config\n";
        return 1;
      }
      return cmd_run(preset, config_path, seed, workers, out_dir, format);
    }
    if (gaps->parsed()) return cmd_gaps(gap_files);
    if (presets->parsed()) {
      for (const auto& n : preset_names()) {
        const Preset p = expand_preset(n, 1);
        std::cout << n << "  (" << p.configs.size() << " sweeps)  " << p.note << '\n';
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
