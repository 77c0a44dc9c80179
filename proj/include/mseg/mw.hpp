#pragma once

#include <utility>
#include <vector>

#include "mseg/multisegment.hpp"

namespace mseg {

// One removed value inside an iteration: which segment (index into the
// canonical order of the iteration's input) lost which end value.
struct TraceStep {
  int segment_index;
  Segment segment;  // the chosen segment before its end value was removed
  Value removed;
};

// A single iteration. The chain runs from the maximum value e downward to
// the base m of the emitted segment [m, e]; removed values are e, e-1, ..., m
// with no gaps, and the chosen segments never decrease in length.
struct TraceIteration {
  std::vector<TraceStep> chain;
  Segment emitted;
  Multisegment remainder;
};

struct DualTrace {
  std::vector<TraceIteration> iterations;
};

// One iteration: starting from the shortest segment ending at the maximum
// value, repeatedly pick the shortest preceding segment ending one lower,
// strip the end value of every chosen segment and emit [m, e]. Ties among
// equal-shortest candidates resolve to the canonically smallest (b, e);
// duplicates resolve to the lowest index. Throws on an empty multisegment.
TraceIteration mw_first_segment(const Multisegment& alpha);

// The dual multisegment: iterate mw_first_segment on the remainders until
// nothing is left and collect the emitted segments.
Multisegment mw_dual(const Multisegment& alpha);

std::pair<Multisegment, DualTrace> mw_dual_traced(const Multisegment& alpha);

}  // namespace mseg
