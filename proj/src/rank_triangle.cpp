#include "mseg/rank_triangle.hpp"

#include <algorithm>
#include <stdexcept>

#include "mseg/text.hpp"

namespace mseg {

RankTriangle::RankTriangle(Value min, Value max) : min_(min) {
  if (!same_coset(min, max) || max < min)
    throw std::invalid_argument("rank triangle support must be a non-empty interval");
  width_ = (max.twice - min.twice) / 2 + 1;
  r_.assign(static_cast<std::size_t>(width_) * width_, 0);
}

int RankTriangle::at(Value i, Value j) const {
  if (width_ == 0) return 0;
  if (!same_coset(i, min_) || !same_coset(j, min_)) return 0;
  if (i < min_ || j > support_max() || i > j) return 0;
  return r_[index(i, j)];
}

void RankTriangle::set(Value i, Value j, int r) { r_[index(i, j)] = r; }

void RankTriangle::add(Value i, Value j, int d) { r_[index(i, j)] += d; }

RankTriangle ranks(const Multisegment& alpha) {
  if (alpha.empty()) return {};
  RankTriangle t(alpha.min_value(), alpha.max_value());
  const Value hi = t.support_max();
  for (Value i = t.support_min(); i <= hi; i = i.next()) {
    for (Value j = i; j <= hi; j = j.next()) {
      int count = 0;
      for (const Segment& s : alpha.segments())
        if (s.b <= i && j <= s.e) ++count;
      t.set(i, j, count);
    }
  }
  return t;
}

Multisegment multisegment_from_ranks(const RankTriangle& triangle) {
  if (triangle.empty_support()) return Multisegment{};
  std::vector<Segment> segs;
  const Value lo = triangle.support_min();
  const Value hi = triangle.support_max();
  for (Value i = lo; i <= hi; i = i.next()) {
    for (Value j = i; j <= hi; j = j.next()) {
      const int m = triangle.at(i, j) - triangle.at(i.prev(), j) -
                    triangle.at(i, j.next()) + triangle.at(i.prev(), j.next());
      if (m < 0)
        throw NegativeMultiplicityError("negative multiplicity at (" + to_string(i) +
                                            ", " + to_string(j) + ")",
                                        i.twice, j.twice);
      for (int k = 0; k < m; ++k) segs.emplace_back(i, j);
    }
  }
  return Multisegment(std::move(segs));
}

bool leq_ranks(const RankTriangle& a, const RankTriangle& b) {
  if (a.empty_support() && b.empty_support()) return true;
  const Value lo = a.empty_support()   ? b.support_min()
                   : b.empty_support() ? a.support_min()
                                       : std::min(a.support_min(), b.support_min());
  const Value hi = a.empty_support()   ? b.support_max()
                   : b.empty_support() ? a.support_max()
                                       : std::max(a.support_max(), b.support_max());
  for (Value i = lo; i <= hi; i = i.next())
    for (Value j = i; j <= hi; j = j.next())
      if (a.at(i, j) > b.at(i, j)) return false;
  return true;
}

bool leq(const Multisegment& alpha, const Multisegment& beta) {
  if (weight(alpha) != weight(beta)) return false;
  return leq_ranks(ranks(alpha), ranks(beta));
}

}  // namespace mseg
