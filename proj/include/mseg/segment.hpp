#pragma once

#include <algorithm>
#include <compare>
#include <optional>

#include "mseg/errors.hpp"
#include "mseg/value.hpp"

namespace mseg {

// A run of consecutive values [b, e]; the atom of the theory.
struct Segment {
  Value b;  // base: the smallest element
  Value e;  // end: the largest element

  Segment(Value base, Value end) : b(base), e(end) {
    if (!same_coset(base, end))
      throw MixedCosetError("segment endpoints lie in different cosets");
    if (base > end) throw InvalidSegmentError("segment base exceeds its end");
  }

  int length() const { return (e.twice - b.twice) / 2 + 1; }
  bool contains(Value v) const { return same_coset(v, b) && b <= v && v <= e; }

  friend auto operator<=>(const Segment&, const Segment&) = default;
};

// d1 precedes d2: b1 < b2, e1 < e2 and b2 <= e1 + 1. Callers pass segments
// from a single coset; the relation is not meaningful across cosets.
inline bool precedes(const Segment& d1, const Segment& d2) {
  return d1.b < d2.b && d1.e < d2.e && d2.b.twice <= d1.e.twice + 2;
}

inline bool intersects(const Segment& a, const Segment& b) {
  return a.b <= b.e && b.b <= a.e;
}

inline std::optional<Segment> intersection(const Segment& a, const Segment& b) {
  if (!intersects(a, b)) return std::nullopt;
  return Segment(std::max(a.b, b.b), std::min(a.e, b.e));
}

// Whether a ∪ b is again a single run of consecutive values.
inline bool union_is_segment(const Segment& a, const Segment& b) {
  return a.b.twice <= b.e.twice + 2 && b.b.twice <= a.e.twice + 2;
}

inline Segment hull(const Segment& a, const Segment& b) {
  return Segment(std::min(a.b, b.b), std::max(a.e, b.e));
}

}  // namespace mseg
