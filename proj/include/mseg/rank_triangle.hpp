#pragma once

#include <vector>

#include "mseg/multisegment.hpp"

namespace mseg {

// The table r_{i,j} (i <= j in the support interval) counting segments [k, l]
// with k <= i and j <= l. Lookups outside the support return 0.
class RankTriangle {
 public:
  RankTriangle() = default;  // empty support
  RankTriangle(Value min, Value max);

  bool empty_support() const { return width_ == 0; }
  Value support_min() const { return min_; }
  Value support_max() const { return Value{min_.twice + 2 * (width_ - 1)}; }
  int width() const { return width_; }

  int at(Value i, Value j) const;
  void set(Value i, Value j, int r);  // pre: i <= j inside the support
  void add(Value i, Value j, int d);

  friend bool operator==(const RankTriangle&, const RankTriangle&) = default;

 private:
  int index(Value i, Value j) const {
    return ((i.twice - min_.twice) / 2) * width_ + (j.twice - min_.twice) / 2;
  }

  Value min_{};
  int width_ = 0;
  std::vector<int> r_;
};

RankTriangle ranks(const Multisegment& alpha);

// Inverse of ranks via the inclusion-exclusion multiplicities
// m_{i,j} = r_{i,j} - r_{i-1,j} - r_{i,j+1} + r_{i-1,j+1}; throws
// NegativeMultiplicityError when some m_{i,j} < 0.
Multisegment multisegment_from_ranks(const RankTriangle& triangle);

// Pointwise r-comparison over the union of the two supports.
bool leq_ranks(const RankTriangle& a, const RankTriangle& b);

// alpha <= beta: equal weights and pointwise rank comparison. Returns false
// (not an error) when the weights differ.
bool leq(const Multisegment& alpha, const Multisegment& beta);

}  // namespace mseg
