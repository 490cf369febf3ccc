#include "bmocz/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bmocz {

namespace {

std::string fmt(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);  // shortest round-trip form
  return std::string(buf, p);
}

std::vector<double> make_grid(double start, double stop, double step) {
  std::vector<double> g;
  const int n = int(std::lround((stop - start) / step));
  for (int i = 0; i <= n; ++i) g.push_back(start + i * step);
  return g;
}

constexpr const char* kGridNote =
    "Eb/N0 grid endpoints follow the visible axis ranges of the reference figures "
    "(not stated numerically in the captions).";
constexpr const char* kStoppingRule =
    "per grid point: stop at target_block_errors or max_trials, whichever first";

SimConfig base_uncoded(Scheme s, ChannelModel ch, CfoModel cf, double zeta) {
  SimConfig c;
  c.scheme = s;
  c.channel = ch;
  c.cfo = cf;
  c.K = 128;
  c.zeta = zeta;
  c.ebn0_grid_db = ch == ChannelModel::awgn ? make_grid(0, 16, 1) : make_grid(0, 38, 2);
  c.max_trials = 200000;
  c.target_block_errors = 200;
  return c;
}

SimConfig base_coded(Scheme s, ChannelModel ch, CfoModel cf, double zeta) {
  SimConfig c;
  c.scheme = s;
  c.channel = ch;
  c.cfo = cf;
  c.K = 127;
  c.zeta = zeta;
  c.ebn0_grid_db = ch == ChannelModel::awgn ? make_grid(0, 12, 1) : make_grid(0, 36, 2);
  c.max_trials = 50000;
  c.target_block_errors = 200;
  return c;
}

std::vector<SimConfig> uncoded_configs() {
  std::vector<SimConfig> v;
  for (ChannelModel ch : {ChannelModel::awgn, ChannelModel::rayleigh_flat}) {
    v.push_back(base_uncoded(Scheme::huffman_uncoded, ch, CfoModel::none, 0.0));
    v.push_back(base_uncoded(Scheme::sbmocz_uncoded, ch, CfoModel::none, 0.0117));
    v.push_back(base_uncoded(Scheme::sbmocz_uncoded, ch, CfoModel::uniform_full_range, 0.0117));
  }
  return v;
}

std::vector<SimConfig> coded_configs() {
  std::vector<SimConfig> v;
  for (ChannelModel ch : {ChannelModel::awgn, ChannelModel::rayleigh_flat}) {
    v.push_back(base_coded(Scheme::huffman_bch, ch, CfoModel::none, 0.0));
    v.push_back(base_coded(Scheme::sbmocz_bch, ch, CfoModel::uniform_full_range, 0.0130));
    v.push_back(base_coded(Scheme::huffman_acpc, ch, CfoModel::uniform_full_range, 0.0));
  }
  return v;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig3a_ber", "fig3b_bler", "fig4a_ber",
                                              "fig4b_bler"};
  return names;
}

Preset expand_preset(const std::string& name, uint64_t seed) {
  Preset p;
  p.name = name;
  if (name == "fig3a_ber" || name == "fig3b_bler") {
    p.note = std::string("uncoded comparison, K = 128, zeta = 0.0117 (") +
             (name == "fig3a_ber" ? "read the ber column)" : "read the bler column)");
    p.configs = uncoded_configs();
  } else if (name == "fig4a_ber" || name == "fig4b_bler") {
    p.note = std::string("coded comparison, K = 127, (127,106) BCH / ACPC, zeta = 0.0130 (") +
             (name == "fig4a_ber" ? "read the ber column)" : "read the bler column)");
    p.configs = coded_configs();
  } else {
    throw std::invalid_argument("unknown preset '" + name + "' (see `presets`)");
  }
  for (auto& c : p.configs) c.master_seed = seed;
  return p;
}

uint64_t preset_checksum(const std::string& name) {
  const Preset p = expand_preset(name, 1);
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
  };
  for (const auto& c : p.configs) {
    mix(serialize_config_kv(c));
    mix("\n");
  }
  return h;
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return d;
  } catch (...) {
    throw std::invalid_argument(key + ": not a number: '" + v + "'");
  }
}

int64_t parse_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const int64_t i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return i;
  } catch (...) {
    throw std::invalid_argument(key + ": not an integer: '" + v + "'");
  }
}

std::vector<double> parse_grid(const std::string& v) {
  std::vector<double> g;
  if (v.find(':') != std::string::npos) {  // start:stop:step, inclusive
    double a[3];
    std::string tok;
    std::istringstream ss(v);
    int i = 0;
    while (std::getline(ss, tok, ':')) {
      if (i >= 3) throw std::invalid_argument("ebn0_grid_db: expected start:stop:step");
      a[i++] = parse_double("ebn0_grid_db", trim(tok));
    }
    if (i != 3 || a[2] <= 0 || a[1] < a[0])
      throw std::invalid_argument("ebn0_grid_db: expected start:stop:step with step > 0");
    for (double x = a[0]; x <= a[1] + 1e-9 * a[2]; x += a[2]) g.push_back(x);
  } else {
    std::string tok;
    std::istringstream ss(v);
    while (std::getline(ss, tok, ',')) g.push_back(parse_double("ebn0_grid_db", trim(tok)));
  }
  return g;
}

}  // namespace

SimConfig parse_config_text(const std::string& text, std::vector<std::string>* warnings) {
  SimConfig cfg;
  std::vector<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    for (const auto& s : seen)
      if (s == key) throw std::invalid_argument(key + ": duplicate key");
    seen.push_back(key);

    if (key == "scheme") {
      if (!scheme_from_string(val, cfg.scheme))
        throw std::invalid_argument("scheme: unknown value '" + val + "'");
    } else if (key == "channel") {
      if (!channel_from_string(val, cfg.channel))
        throw std::invalid_argument("channel: unknown value '" + val + "'");
    } else if (key == "cfo") {
      if (!cfo_from_string(val, cfg.cfo))
        throw std::invalid_argument("cfo: unknown value '" + val + "'");
    } else if (key == "K") {
      cfg.K = int(parse_int(key, val));
    } else if (key == "zeta") {
      cfg.zeta = parse_double(key, val);
    } else if (key == "lambda") {
      cfg.lambda = parse_double(key, val);
    } else if (key == "N") {
      cfg.N = int(parse_int(key, val));
    } else if (key == "Q") {
      cfg.Q = int(parse_int(key, val));
    } else if (key == "ebn0_grid_db") {
      cfg.ebn0_grid_db = parse_grid(val);
    } else if (key == "max_trials") {
      cfg.max_trials = parse_int(key, val);
    } else if (key == "target_block_errors") {
      cfg.target_block_errors = parse_int(key, val);
    } else if (key == "master_seed") {
      cfg.master_seed = uint64_t(parse_int(key, val));
    } else {
      throw std::invalid_argument(key + ": unknown key");
    }
  }
  auto w = validate_config(cfg);
  if (warnings) *warnings = std::move(w);
  return cfg;
}

SimConfig parse_config_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), warnings);
}

std::string serialize_config_kv(const SimConfig& cfg) {
  std::ostringstream o;
  o << "scheme=" << to_string(cfg.scheme) << '\n';
  o << "channel=" << to_string(cfg.channel) << '\n';
  o << "cfo=" << to_string(cfg.cfo) << '\n';
  o << "K=" << cfg.K << '\n';
  o << "zeta=" << fmt(cfg.zeta) << '\n';
  o << "lambda=" << fmt(cfg.lambda) << '\n';
  o << "N=" << cfg.N << '\n';
  o << "Q=" << cfg.Q << '\n';
  o << "ebn0_grid_db=";
  for (size_t i = 0; i < cfg.ebn0_grid_db.size(); ++i)
    o << (i ? "," : "") << fmt(cfg.ebn0_grid_db[i]);
  o << '\n';
  o << "max_trials=" << cfg.max_trials << '\n';
  o << "target_block_errors=" << cfg.target_block_errors << '\n';
  o << "master_seed=" << cfg.master_seed << '\n';
  return o.str();
}

std::string csv_string(std::span<const SweepResult> results) {
  std::ostringstream o;
  o << "scheme,channel,cfo,ebn0_db,trials,bit_errors,block_errors,ber,bler,cfo_rmse\n";
  for (const auto& r : results)
    for (const auto& p : r.points)
      o << to_string(r.config.scheme) << ',' << to_string(r.config.channel) << ','
        << to_string(r.config.cfo) << ',' << fmt(p.ebn0_db) << ',' << p.trials << ','
        << p.bit_errors << ',' << p.block_errors << ',' << fmt(p.ber) << ',' << fmt(p.bler)
        << ',' << fmt(p.cfo_rmse) << '\n';
  return o.str();
}

void write_csv(const std::string& path, std::span<const SweepResult> results) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << csv_string(results);
  if (!f) throw std::runtime_error("write failed: " + path);
}

void write_json(const std::string& path, std::span<const SweepResult> results,
                const RunMeta& meta) {
  nlohmann::ordered_json j;
  j["meta"] = {{"seed", meta.seed},
               {"git_describe", meta.git_describe},
               {"wall_seconds", meta.wall_seconds},
               {"grid_note", meta.grid_note.empty() ? kGridNote : meta.grid_note},
               {"stopping_rule", kStoppingRule}};
  j["sweeps"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json cfg{{"scheme", to_string(r.config.scheme)},
                               {"channel", to_string(r.config.channel)},
                               {"cfo", to_string(r.config.cfo)},
                               {"K", r.config.K},
                               {"zeta", r.config.zeta},
                               {"lambda", r.config.lambda},
                               {"N", r.config.N},
                               {"Q", r.config.Q},
                               {"ebn0_grid_db", r.config.ebn0_grid_db},
                               {"max_trials", r.config.max_trials},
                               {"target_block_errors", r.config.target_block_errors},
                               {"master_seed", r.config.master_seed}};
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : r.points)
      pts.push_back({{"ebn0_db", p.ebn0_db},
                     {"trials", p.trials},
                     {"bit_errors", p.bit_errors},
                     {"block_errors", p.block_errors},
                     {"ber", p.ber},
                     {"bler", p.bler},
                     {"cfo_rmse", p.cfo_rmse}});
    j["sweeps"].push_back({{"config", std::move(cfg)},
                           {"wall_seconds", r.wall_seconds},
                           {"points", std::move(pts)}});
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << j.dump(2) << '\n';
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string git_describe() {
#ifdef BMOCZ_GIT_DESCRIBE
  return BMOCZ_GIT_DESCRIBE;
#else
  return "unknown";
#endif
}

std::vector<Curve> load_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(f, line)) throw std::runtime_error("empty CSV: " + path);
  if (trim(line) != "scheme,channel,cfo,ebn0_db,trials,bit_errors,block_errors,ber,bler,cfo_rmse")
    throw std::runtime_error("unexpected CSV header in " + path);

  std::vector<Curve> curves;
  int lineno = 1;
  while (std::getline(f, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::string tok;
    std::istringstream ss(line);
    while (std::getline(ss, tok, ',')) cells.push_back(tok);
    if (cells.size() != 10)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 10 columns");
    if (curves.empty() || curves.back().scheme != cells[0] ||
        curves.back().channel != cells[1] || curves.back().cfo != cells[2]) {
      curves.push_back({cells[0], cells[1], cells[2], {}});
    }
    CurvePoint p;
    p.ebn0_db = parse_double("ebn0_db", cells[3]);
    p.trials = parse_int("trials", cells[4]);
    p.bit_errors = parse_int("bit_errors", cells[5]);
    p.block_errors = parse_int("block_errors", cells[6]);
    p.ber = parse_double("ber", cells[7]);
    p.bler = parse_double("bler", cells[8]);
    p.cfo_rmse = parse_double("cfo_rmse", cells[9]);
    curves.back().points.push_back(p);
  }
  return curves;
}

namespace {

struct GapSpec {
  const char* label;
  const char* scheme_ref;  // better curve (gap is measured relative to it)
  const char* cfo_ref;
  const char* scheme_cmp;  // worse curve
  const char* cfo_cmp;
  const char* channel;
  Metric metric;
  double target;
  double reported;
};

constexpr GapSpec kGaps[] = {
    {"uncoded BER 1e-3, AWGN: sbmocz(no cfo) vs huffman", "huffman_uncoded", "none",
     "sbmocz_uncoded", "none", "awgn", Metric::ber, 1e-3, 1.3},
    {"uncoded BER 1e-3, fading: sbmocz(no cfo) vs huffman", "huffman_uncoded", "none",
     "sbmocz_uncoded", "none", "rayleigh_flat", Metric::ber, 1e-3, 0.85},
    {"uncoded BER 1e-3, AWGN: sbmocz(cfo) vs huffman", "huffman_uncoded", "none",
     "sbmocz_uncoded", "uniform_full_range", "awgn", Metric::ber, 1e-3, 1.46},
    {"uncoded BER 1e-3, fading: sbmocz(cfo) vs huffman", "huffman_uncoded", "none",
     "sbmocz_uncoded", "uniform_full_range", "rayleigh_flat", Metric::ber, 1e-3, 2.92},
    {"uncoded BLER 1e-2, AWGN: sbmocz cfo vs no cfo", "sbmocz_uncoded", "none",
     "sbmocz_uncoded", "uniform_full_range", "awgn", Metric::bler, 1e-2, 0.0},
    {"uncoded BLER 1e-2, fading: sbmocz cfo vs no cfo", "sbmocz_uncoded", "none",
     "sbmocz_uncoded", "uniform_full_range", "rayleigh_flat", Metric::bler, 1e-2, 0.0},
    {"uncoded BLER 1e-2, AWGN: sbmocz(cfo) vs huffman", "huffman_uncoded", "none",
     "sbmocz_uncoded", "uniform_full_range", "awgn", Metric::bler, 1e-2, 1.5},
    {"uncoded BLER 1e-2, fading: sbmocz(cfo) vs huffman", "huffman_uncoded", "none",
     "sbmocz_uncoded", "uniform_full_range", "rayleigh_flat", Metric::bler, 1e-2, 1.0},
    {"coded BER 1e-3, AWGN: sbmocz-bch(cfo) vs huffman-bch", "huffman_bch", "none",
     "sbmocz_bch", "uniform_full_range", "awgn", Metric::ber, 1e-3, 1.6},
    {"coded BER 1e-3, AWGN: acpc(cfo) vs huffman-bch", "huffman_bch", "none", "huffman_acpc",
     "uniform_full_range", "awgn", Metric::ber, 1e-3, 1.6},
    {"coded BER 1e-3, fading: acpc(cfo) vs sbmocz-bch(cfo)", "sbmocz_bch",
     "uniform_full_range", "huffman_acpc", "uniform_full_range", "rayleigh_flat", Metric::ber,
     1e-3, 4.0},
    {"coded BLER 1e-2, AWGN: sbmocz-bch(cfo) vs acpc(cfo)", "huffman_acpc",
     "uniform_full_range", "sbmocz_bch", "uniform_full_range", "awgn", Metric::bler, 1e-2,
     0.65},
    {"coded BLER 1e-2, fading: sbmocz-bch(cfo) vs acpc(cfo)", "huffman_acpc",
     "uniform_full_range", "sbmocz_bch", "uniform_full_range", "rayleigh_flat", Metric::bler,
     1e-2, 0.6},
};

const Curve* find_curve(const std::vector<Curve>& curves, const char* scheme,
                        const char* channel, const char* cfo) {
  for (const auto& c : curves)
    if (c.scheme == scheme && c.channel == channel && c.cfo == cfo) return &c;
  return nullptr;
}

std::optional<double> curve_crossing(const Curve& c, double target, Metric m) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(c.points.size());
  for (const auto& p : c.points)
    pts.emplace_back(p.ebn0_db, m == Metric::ber ? p.ber : p.bler);
  return crossing_ebn0(pts, target);
}

}  // namespace

int report_gaps(const std::vector<Curve>& curves, std::ostream& os) {
  int measured = 0;
  os << "gap (positive = second curve needs more Eb/N0)          reported   measured\n";
  for (const auto& g : kGaps) {
    os << g.label;
    for (size_t i = std::string(g.label).size(); i < 56; ++i) os << ' ';
    const Curve* ref = find_curve(curves, g.scheme_ref, g.channel, g.cfo_ref);
    const Curve* cmp = find_curve(curves, g.scheme_cmp, g.channel, g.cfo_cmp);
    if (!ref || !cmp) {
      os << "   --        (missing " << (ref ? g.scheme_cmp : g.scheme_ref) << " curve)\n";
      continue;
    }
    const auto cr = curve_crossing(*ref, g.target, g.metric);
    const auto cc = curve_crossing(*cmp, g.target, g.metric);
    if (!cr || !cc) {
      os << "   --        (a curve never crosses the target rate)\n";
      continue;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%7.2f dB %7.2f dB\n", g.reported, *cc - *cr);
    os << buf;
    ++measured;
  }
  return measured;
}

}  // namespace bmocz
