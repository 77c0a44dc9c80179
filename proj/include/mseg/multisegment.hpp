#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mseg/segment.hpp"

namespace mseg {

// Multiplicity of each value across the segments of a multisegment; this is
// the top row r_{i,i} of the rank triangle.
class Weight {
 public:
  Weight() = default;

  void add(Value v, int k = 1);
  int count(Value v) const;
  int total() const { return total_; }
  bool empty() const { return counts_.empty(); }
  Value min() const { return counts_.begin()->first; }   // pre: non-empty
  Value max() const { return counts_.rbegin()->first; }  // pre: non-empty
  const std::map<Value, int>& counts() const { return counts_; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.counts_ == b.counts_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.counts_ < b.counts_; }

 private:
  std::map<Value, int> counts_;
  int total_ = 0;
};

// A finite multiset of segments on one value line. Segments are kept in
// canonical (b, e)-lexicographic order, so equality is multiset equality.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segs_; }
  const Segment& operator[](std::size_t i) const { return segs_[i]; }
  std::size_t size() const { return segs_.size(); }
  bool empty() const { return segs_.empty(); }

  // Total number of covered values, counted with multiplicity.
  int content() const;

  Value min_value() const;  // pre: non-empty
  Value max_value() const;  // pre: non-empty

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend auto operator<=>(const Multisegment& a, const Multisegment& b) {
    return a.segs_ <=> b.segs_;
  }

 private:
  std::vector<Segment> segs_;
};

Weight weight(const Multisegment& alpha);

// Replace segments i1 and i2 by their intersection and union when the two
// properly cross; nullopt when the pair is disjoint, equal or nested (those
// cases would reproduce the input).
std::optional<Multisegment> act_union_intersection(const Multisegment& alpha,
                                                   std::size_t i1, std::size_t i2);

// Replace two disjoint segments whose union is a single run by that union;
// nullopt otherwise.
std::optional<Multisegment> act_conjunction(const Multisegment& alpha,
                                            std::size_t i1, std::size_t i2);

// alpha translated by delta_twice/2.
Multisegment shifted(const Multisegment& alpha, int delta_twice);

}  // namespace mseg
