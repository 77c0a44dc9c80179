#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mseg/multisegment.hpp"

namespace mseg {

inline constexpr int kDefaultPartitionCap = 10;

// The six numerical invariants of a non-empty multisegment.
struct InvariantProfile {
  Value e_max;     // e: maximum value
  int longest;     // L: length of the longest segment
  int count;       // n: number of segments
  int components;  // c: maximal runs in the union of all segments
  int cover_size;  // S: total size of those runs
  int endoscopic;  // C: maximal parts in a dual-splitting decomposition
};

// Maximal runs of the set union of all segments (the minimal cover).
std::vector<Segment> connected_cover(const Multisegment& alpha);
int component_count(const Multisegment& alpha);
int cover_size(const Multisegment& alpha);

// C: the maximum k over partitions alpha = a_1 ⊔ ... ⊔ a_k with
// dual(alpha) = dual(a_1) ⊔ ... ⊔ dual(a_k) as multisets. Exhaustive over set
// partitions of the segments (identical segments deduplicated); a recursive
// binary-split lower bound is used only to prune the search, never to decide.
// Throws CapExceededError when the segment count exceeds the cap.
int endoscopic_count(const Multisegment& alpha, int partition_cap = kDefaultPartitionCap);

InvariantProfile invariant_profile(const Multisegment& alpha,
                                   int partition_cap = kDefaultPartitionCap);

// Consecutive unit shifts of one segment, each with multiplicity one.
bool is_simple(const Multisegment& alpha);

// Bases and ends both strictly increasing in canonical order.
bool is_ladder(const Multisegment& alpha);

// The symmetry center: the unique candidate (min+max)/2 when alpha mirrored
// through it equals alpha (with multiplicities), nullopt otherwise. The
// center may sit on the opposite coset. Throws on empty input.
std::optional<Value> center(const Multisegment& alpha);

// The simple symmetric multisegment {[-e, b], [-e+1, b+1], ..., [-b, e]}.
// pre: -e <= b <= e with b, e in one coset.
Multisegment symmetric_block(Value b, Value e);

// The forced block whose top is the shortest segment ending at the maximum
// value of a centered multisegment, provided all of its members are present.
std::optional<Multisegment> arthur_top_block(const Multisegment& centered);

// Decomposition of the centered multisegment into simple symmetric blocks.
struct ArthurDecomposition {
  std::vector<std::pair<Multisegment, int>> blocks;  // block, multiplicity
  Value offset;                                      // the center subtracted
};

// Centers alpha, then extracts blocks greedily from the top value down; if
// the greedy order fails, an exhaustive backtracking search over block
// choices decides. Throws on empty input.
std::optional<ArthurDecomposition> arthur_decompose(const Multisegment& alpha);

// Empty multisegments count as Arthur type by convention.
bool is_arthur(const Multisegment& alpha);

}  // namespace mseg
