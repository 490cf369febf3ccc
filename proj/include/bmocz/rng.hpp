#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace bmocz {

// splitmix64 step; used only to expand seed material into generator state.
inline uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic per-trial stream (xoshiro256++), keyed by
// (master_seed, Eb/N0 bits, trial index). Any trial is reproducible in
// isolation, so sweep results cannot depend on worker scheduling.
//
// Draw order inside a trial is pinned (bits, fading gain, noise, CFO angle,
// in that order) so that configs differing only in scheme/channel/CFO share
// common random numbers; dB-gap measurements between paired curves then see
// strongly correlated noise, which tightens them considerably.
class TrialRng {
 public:
  TrialRng(uint64_t master_seed, double ebn0_db, uint64_t trial_index) {
    uint64_t s = master_seed;
    splitmix64(s);
    s ^= std::bit_cast<uint64_t>(ebn0_db);
    splitmix64(s);
    s ^= trial_index * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull;
    for (auto& w : state_) w = splitmix64(s);
  }

  uint64_t next() {
    const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // uniform in [0, 1), 53-bit resolution
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  int bit() { return int(next() >> 63); }

  // pair of independent standard normals (Box-Muller)
  std::pair<double, double> normal2() {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * uniform01();
    return {r * std::cos(th), r * std::sin(th)};
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t state_[4];
};

}  // namespace bmocz
