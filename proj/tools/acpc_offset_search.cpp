// Finds the fixed ACPC offset vector: a 127-bit word a such that for every
// cyclic shift d != 0, shift_d(a) XOR a has Hamming distance >= 3 from the
// (127,106) BCH code and weight >= 5. On a clean word, bounded-distance t = 2
// decoding then succeeds only at the true shift. Prints the offset as two
// 64-bit hex literals; the result is pinned in src/fec.cpp and re-verified by
// a test. (Distance >= 5 from the code at every shift would make two-flip
// decoding exact, but the code's covering radius is 5, so essentially no
// word clears that bar 126 times over.)

#include <cstdint>
#include <cstdio>
#include <random>
#include <unordered_set>
#include <vector>

#include "bmocz/fec.hpp"

using namespace bmocz;

namespace {

// syndromes S1,S3,S5 packed 7 bits each; equal tuples <=> same coset
uint32_t syndrome_key(const std::vector<uint8_t>& w) {
  uint32_t key = 0;
  int shift = 0;
  for (int j : {1, 3, 5}) {
    uint8_t s = 0;
    for (int i = 0; i < bch::n; ++i)
      if (w[size_t(i)]) s ^= gf128::pow_alpha(long(i) * j);
    key |= uint32_t(s) << shift;
    shift += 7;
  }
  return key;
}

}  // namespace

int main() {
  // d(w, code) <= 2 iff w's syndrome tuple matches some weight <= 2 pattern;
  // distinct patterns give distinct tuples because the minimum distance is 7
  std::unordered_set<uint32_t> near;
  std::vector<uint8_t> e(size_t(bch::n), 0);
  near.insert(syndrome_key(e));
  for (int i = 0; i < bch::n; ++i) {
    e[size_t(i)] = 1;
    near.insert(syndrome_key(e));
    for (int j = i + 1; j < bch::n; ++j) {
      e[size_t(j)] = 1;
      near.insert(syndrome_key(e));
      e[size_t(j)] = 0;
    }
    e[size_t(i)] = 0;
  }
  std::printf("weight<=2 coset table: %zu entries\n", near.size());

  std::mt19937_64 rng(2026);
  std::vector<uint8_t> a(size_t(bch::n)), s(size_t(bch::n));
  for (int tries = 1;; ++tries) {
    uint64_t lo = rng(), hi = rng();
    for (int i = 0; i < 64; ++i) a[size_t(i)] = uint8_t((lo >> i) & 1);
    for (int i = 64; i < bch::n; ++i) a[size_t(i)] = uint8_t((hi >> (i - 64)) & 1);

    bool ok = true;
    for (int d = 1; d < bch::n && ok; ++d) {
      int weight = 0;
      for (int i = 0; i < bch::n; ++i) {
        s[size_t(i)] = uint8_t(a[size_t((i + d) % bch::n)] ^ a[size_t(i)]);
        weight += s[size_t(i)];
      }
      ok = weight >= 5 && !near.contains(syndrome_key(s));
    }
    if (ok) {
      hi &= (1ull << 63) - 1;  // bit 127 unused
      std::printf("found after %d tries\n", tries);
      std::printf("kOffsetLo = 0x%016llxULL\n", (unsigned long long)lo);
      std::printf("kOffsetHi = 0x%016llxULL\n", (unsigned long long)hi);
      return 0;
    }
  }
}
