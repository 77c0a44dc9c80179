#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mseg/multisegment.hpp"

namespace mseg {

// Raw engine draws only, so seeded corpora are identical across platforms and
// standard library implementations.
inline int rand_below(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

// A multisegment with at most max_segments segments inside a window of
// window_width consecutive values. The window base is drawn from
// [base_lo2, base_hi2] in doubled units and may land on either coset when
// mix_cosets is set.
inline Multisegment random_multisegment(std::mt19937_64& rng, int max_segments,
                                        int window_width, int base_lo2, int base_hi2,
                                        bool mix_cosets) {
  int base2 = base_lo2 + 2 * rand_below(rng, (base_hi2 - base_lo2) / 2 + 1);
  if (mix_cosets && rand_below(rng, 2) == 1) base2 += 1;
  const int n = rand_below(rng, max_segments + 1);
  std::vector<Segment> segs;
  segs.reserve(n);
  for (int k = 0; k < n; ++k) {
    const int b = rand_below(rng, window_width);
    const int e = b + rand_below(rng, window_width - b);
    segs.emplace_back(Value{base2 + 2 * b}, Value{base2 + 2 * e});
  }
  return Multisegment(std::move(segs));
}

}  // namespace mseg
