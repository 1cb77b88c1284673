#include "pptlab/ladder.hpp"

#include <chrono>

#include "pptlab/errors.hpp"

namespace pptlab {

namespace {

std::uint64_t level_bound(unsigned p, std::size_t level, bool truncate) {
  return truncate ? frobenius_bound(p, static_cast<unsigned>(level)) : 0;
}

// One recursion step: from generators of I(l_(i+1), ...) (valid modulo
// m^[inner]) to generators of I(l_i, ...) modulo m^[outer].
std::vector<ResPoly> ladder_step(const HypersurfaceInput& h,
                                 const std::vector<ResPoly>& inner_gens,
                                 unsigned l, std::uint64_t inner,
                                 std::uint64_t outer) {
  const unsigned p = h.p();
  const ResPoly& d = h.delta_power(l);
  EchelonBasis root(h.context_ptr());
  for (const auto& k : inner_gens) {
    ResPoly prod = mul_truncated(k, d, inner);
    for (const auto& c : u_components(prod)) root.insert(c.truncated(outer));
  }
  EchelonBasis next(h.context_ptr());
  const ResPoly fa = h.f_power(p - l - 1).truncated(outer);
  for (const auto& r : root.rows()) next.insert(mul_truncated(r, fa, outer));
  next.insert(h.f_power(p - l).truncated(outer));
  return next.rows();
}

// Generators of I(l_2, ..., l_n) at level 2 (or of I(l_1) when n == 1).
std::vector<ResPoly> inner_chain(const HypersurfaceInput& h,
                                 const LadderIndex& idx, bool truncate,
                                 std::size_t stop_level) {
  const unsigned p = h.p();
  const std::size_t n = idx.size();
  std::vector<ResPoly> gens{
      h.f_power(p - idx[n - 1]).truncated(level_bound(p, n, truncate))};
  for (std::size_t level = n - 1; level >= stop_level; --level) {
    gens = ladder_step(h, gens, idx[level - 1],
                       level_bound(p, level + 1, truncate),
                       level_bound(p, level, truncate));
  }
  return gens;
}

}  // namespace

LadderIndex::LadderIndex(std::vector<unsigned> entries, unsigned p)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw Error(ErrorKind::InvalidIndex, "ladder index must be non-empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const unsigned cap = (i + 1 == entries_.size()) ? p : p - 1;
    if (entries_[i] > cap)
      throw Error(ErrorKind::InvalidIndex,
                  "ladder entry " + std::to_string(i + 1) + " = " +
                      std::to_string(entries_[i]) + " exceeds " +
                      std::to_string(cap));
  }
}

ResIdeal compute_ladder(const HypersurfaceInput& h, const LadderIndex& idx,
                        bool truncate) {
  auto gens = inner_chain(h, idx, truncate, 1);
  return ResIdeal::from_generators(h.context_ptr(), gens);
}

bool ladder_contained(const HypersurfaceInput& h, const LadderIndex& idx,
                      bool truncate) {
  const unsigned p = h.p();
  if (idx.size() == 1)
    return member_frobenius_power(h.f_power(p - idx[0]), 1);
  // Build up to level 2, then test the outermost step term by term.
  auto inner = inner_chain(h, idx, truncate, 2);
  const unsigned l = idx[0];
  if (!member_frobenius_power(h.f_power(p - l), 1)) return false;
  const std::uint64_t inner_bound = level_bound(p, 2, truncate);
  const ResPoly& d = h.delta_power(l);
  const ResPoly fa = h.f_power(p - l - 1).truncated(p);
  EchelonBasis root(h.context_ptr());
  for (const auto& k : inner) {
    ResPoly prod = mul_truncated(k, d, inner_bound);
    for (const auto& c : u_components(prod)) {
      // reduce modulo m^[p] first: (c + m^[p]) f^a + m^[p] = c f^a + m^[p]
      ResPoly low = c.truncated(p);
      if (low.is_zero() || !root.insert(low)) continue;
      if (!mul_truncated(low, fa, p).is_zero()) return false;
    }
  }
  return true;
}

unsigned next_s(const HypersurfaceInput& h, const std::vector<unsigned>& prefix,
                const LadderOptions& opts) {
  const unsigned p = h.p();
  for (unsigned v : prefix)
    if (v >= p)
      throw Error(ErrorKind::InvalidIndex,
                  "prefix entries must be at most p-1 to extend the sequence");
  auto contained = [&](unsigned s) {
    std::vector<unsigned> e = prefix;
    e.push_back(s);
    return ladder_contained(h, LadderIndex(std::move(e), p), opts.truncate);
  };
  const bool full = opts.full_scan.value_or(p <= 5);
  if (full) {
    std::vector<bool> in(p + 1);
    for (unsigned s = 0; s <= p; ++s) in[s] = contained(s);
    unsigned best = 0;
    bool any = false;
    for (unsigned s = 0; s <= p; ++s)
      if (in[s]) {
        best = s;
        any = true;
      }
    if (!any)
      throw Error(ErrorKind::MonotonicityViolation,
                  "no s satisfies the containment, not even s = 0");
    for (unsigned s = 0; s <= best; ++s)
      if (!in[s])
        throw Error(ErrorKind::MonotonicityViolation,
                    "containment holds for s = " + std::to_string(best) +
                        " but fails for s = " + std::to_string(s));
    return best;
  }
  // largest s in [lo, hi] with containment; lo is assumed contained
  unsigned lo = 0, hi = p;
  bool lo_checked = false;
  while (lo < hi) {
    unsigned mid = lo + (hi - lo + 1) / 2;
    if (contained(mid)) {
      lo = mid;
      lo_checked = true;
    } else {
      hi = mid - 1;
    }
  }
  if (!lo_checked && !contained(0))
    throw Error(ErrorKind::MonotonicityViolation,
                "no s satisfies the containment, not even s = 0");
  return lo;
}

SplitSequence splitting_sequence(const HypersurfaceInput& h, unsigned depth,
                                 const LadderOptions& opts) {
  if (depth < 1)
    throw Error(ErrorKind::InvalidArgument, "depth must be at least 1");
  const unsigned p = h.p();
  SplitSequence seq{h, depth, {0}, std::nullopt, {}, {}};
  std::vector<unsigned> prefix;
  for (unsigned n = 1; n <= depth; ++n) {
    if (seq.terminated_at_p) {
      seq.values.push_back(p);
      seq.ms_per_depth.push_back(0.0);
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    unsigned s = next_s(h, prefix, opts);
    auto stop = std::chrono::steady_clock::now();
    seq.ms_per_depth.push_back(
        std::chrono::duration<double, std::milli>(stop - start).count());
    seq.values.push_back(s);
    prefix.push_back(s);
    if (opts.trace) {
      auto ideal = compute_ladder(h, LadderIndex(prefix, p), false);
      std::vector<std::string> gens;
      for (const auto& g : ideal.generators()) gens.push_back(g.render());
      seq.per_step_ideals.push_back(std::move(gens));
    }
    if (s == p) seq.terminated_at_p = n;
  }
  return seq;
}

}  // namespace pptlab
