#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mseg/rank_triangle.hpp"

namespace mseg {

struct EnumerationLimits {
  int content_cap = 14;
};

// All multisegments of the given weight, each exactly once, in canonical
// order, generated by recursively peeling segments off the residual weight.
// Throws CapExceededError beyond the content cap.
std::vector<Multisegment> enumerate_weight(const Weight& w,
                                           const EnumerationLimits& limits = {});

// All weights supported inside [lo, hi] (coset of lo) with total in
// [1, max_total].
std::vector<Weight> enumerate_weights(Value lo, Value hi, int max_total);

// All beta in the weight class of alpha with alpha <= beta, alpha included.
std::vector<Multisegment> upper_set(const Multisegment& alpha,
                                    const EnumerationLimits& limits = {});

// Reflexive-transitive closure of alpha under the two generating actions over
// all index pairs.
std::vector<Multisegment> action_closure(const Multisegment& alpha,
                                         const EnumerationLimits& limits = {});

using DualFn = std::function<Multisegment(const Multisegment&)>;

// Weight classes enumerated once per weight; members carry their rank
// triangle and the rank triangle of their dual, which is all the rigidity
// filter needs.
class WeightClassCache {
 public:
  explicit WeightClassCache(DualFn dual, EnumerationLimits limits = {})
      : dual_(std::move(dual)), limits_(limits) {}

  struct Member {
    Multisegment ms;
    RankTriangle rk;
    RankTriangle dual_rk;
  };

  const std::vector<Member>& members(const Weight& w);
  const DualFn& dual_fn() const { return dual_; }
  const EnumerationLimits& limits() const { return limits_; }

 private:
  DualFn dual_;
  EnumerationLimits limits_;
  std::map<Weight, std::vector<Member>> classes_;
};

struct RigidityReport {
  Multisegment subject;
  bool singleton = false;
  std::vector<Multisegment> witnesses;  // every beta != alpha with alpha <= beta
                                        // and dual(alpha) <= dual(beta)
  std::size_t class_size = 0;
  std::string method;  // "exhaustive"
};

RigidityReport rigidity_check(const Multisegment& alpha, WeightClassCache& cache);
RigidityReport rigidity_check(const Multisegment& alpha, const DualFn& dual,
                              const EnumerationLimits& limits = {});

enum class Family { simple, ladder, arthur, all };

// Members of the family with support inside [lo, hi] and content at most
// max_content, canonical order. For arthur the support must be symmetric and
// the subjects are all multiset unions of simple symmetric blocks that fit.
std::vector<Multisegment> enumerate_family(Family family, Value lo, Value hi,
                                           int max_content,
                                           const EnumerationLimits& limits = {});

struct SweepResult {
  std::vector<RigidityReport> failures;  // non-singleton reports only
  std::size_t checked = 0;
};

SweepResult rigidity_sweep(Family family, Value lo, Value hi, int max_content,
                           WeightClassCache& cache);

}  // namespace mseg
