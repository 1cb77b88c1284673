#ifndef PPTLAB_LADDER_HPP
#define PPTLAB_LADDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "pptlab/delta.hpp"
#include "pptlab/ideal.hpp"

namespace pptlab {

// (l_1, ..., l_n) with 0 <= l_i <= p-1 for i < n and 0 <= l_n <= p.
class LadderIndex {
 public:
  LadderIndex(std::vector<unsigned> entries, unsigned p);

  const std::vector<unsigned>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<unsigned> entries_;
};

struct LadderOptions {
  // Work level i (counted from the outside, starting at 1) modulo
  // m^[p^i].  Containment of the final ideal in m^[p] is unaffected.
  bool truncate = true;
  // Evaluate every candidate s and check downward closure.  Defaults to on
  // for p <= 5; larger primes use binary search.
  std::optional<bool> full_scan;
  // Keep the untruncated final ideal of every committed step.
  bool trace = false;
};

// I(l_1, ..., l_n) built inside-out:
//   I(l_n) = (f^(p - l_n))
//   I(l_i, ...) = f^(p - l_i - 1) u(F_*(Delta(f)^l_i I(l_(i+1), ...))) + (f^(p - l_i))
// With truncate, the result is the ideal modulo m^[p] (generators reduced).
ResIdeal compute_ladder(const HypersurfaceInput& h, const LadderIndex& idx,
                        bool truncate = false);

// Whether I(l_1, ..., l_n) is contained in m^[p].
bool ladder_contained(const HypersurfaceInput& h, const LadderIndex& idx,
                      bool truncate = true);

// s_n = max{0 <= s <= p : I(s_1, ..., s_(n-1), s) in m^[p]}.
// Throws MonotonicityViolation if the observed containment set is not an
// initial segment of 0..p.
unsigned next_s(const HypersurfaceInput& h, const std::vector<unsigned>& prefix,
                const LadderOptions& opts = {});

struct SplitSequence {
  HypersurfaceInput h;
  unsigned depth = 0;
  std::vector<unsigned> values;  // s_0, ..., s_depth; s_0 = 0
  std::optional<unsigned> terminated_at_p;
  std::vector<double> ms_per_depth;
  // rendered generators of I(s_1, ..., s_n), only with LadderOptions::trace
  std::vector<std::vector<std::string>> per_step_ideals;

  unsigned p() const { return h.p(); }
};

SplitSequence splitting_sequence(const HypersurfaceInput& h, unsigned depth,
                                 const LadderOptions& opts = {});

}  // namespace pptlab

#endif
