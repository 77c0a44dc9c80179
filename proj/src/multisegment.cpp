#include "mseg/multisegment.hpp"

#include <algorithm>
#include <stdexcept>

namespace mseg {

void Weight::add(Value v, int k) {
  if (k == 0) return;
  int& slot = counts_[v];
  slot += k;
  total_ += k;
  if (slot == 0) counts_.erase(v);
}

int Weight::count(Value v) const {
  auto it = counts_.find(v);
  return it == counts_.end() ? 0 : it->second;
}

Multisegment::Multisegment(std::vector<Segment> segments) : segs_(std::move(segments)) {
  for (std::size_t i = 1; i < segs_.size(); ++i)
    if (!same_coset(segs_[i].b, segs_[0].b))
      throw MixedCosetError("multisegment mixes integer and half-integer cosets");
  std::sort(segs_.begin(), segs_.end());
}

int Multisegment::content() const {
  int total = 0;
  for (const Segment& s : segs_) total += s.length();
  return total;
}

Value Multisegment::min_value() const { return segs_.front().b; }

Value Multisegment::max_value() const {
  Value m = segs_.front().e;
  for (const Segment& s : segs_) m = std::max(m, s.e);
  return m;
}

Weight weight(const Multisegment& alpha) {
  Weight w;
  for (const Segment& s : alpha.segments())
    for (Value v = s.b; v <= s.e; v = v.next()) w.add(v);
  return w;
}

namespace {

void check_indices(const Multisegment& alpha, std::size_t i1, std::size_t i2) {
  if (i1 >= alpha.size() || i2 >= alpha.size())
    throw std::out_of_range("segment index out of range");
  if (i1 == i2) throw std::invalid_argument("action needs two distinct segment indices");
}

}  // namespace

std::optional<Multisegment> act_union_intersection(const Multisegment& alpha,
                                                   std::size_t i1, std::size_t i2) {
  check_indices(alpha, i1, i2);
  const Segment& d1 = alpha[i1];
  const Segment& d2 = alpha[i2];
  if (!intersects(d1, d2)) return std::nullopt;
  // Equal or nested pairs reproduce the input; the order must move strictly.
  if ((d1.b <= d2.b && d2.e <= d1.e) || (d2.b <= d1.b && d1.e <= d2.e)) return std::nullopt;
  std::vector<Segment> segs = alpha.segments();
  segs[i1] = *intersection(d1, d2);
  segs[i2] = hull(d1, d2);
  return Multisegment(std::move(segs));
}

std::optional<Multisegment> act_conjunction(const Multisegment& alpha,
                                            std::size_t i1, std::size_t i2) {
  check_indices(alpha, i1, i2);
  const Segment& d1 = alpha[i1];
  const Segment& d2 = alpha[i2];
  if (intersects(d1, d2)) return std::nullopt;
  if (!union_is_segment(d1, d2)) return std::nullopt;
  std::vector<Segment> segs;
  segs.reserve(alpha.size() - 1);
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (k != i1 && k != i2) segs.push_back(alpha[k]);
  segs.push_back(hull(d1, d2));
  return Multisegment(std::move(segs));
}

Multisegment shifted(const Multisegment& alpha, int delta_twice) {
  std::vector<Segment> segs;
  segs.reserve(alpha.size());
  for (const Segment& s : alpha.segments())
    segs.emplace_back(Value{s.b.twice + delta_twice}, Value{s.e.twice + delta_twice});
  return Multisegment(std::move(segs));
}

}  // namespace mseg
