#ifndef PPTLAB_VERDICT_HPP
#define PPTLAB_VERDICT_HPP

#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pptlab/ladder.hpp"
#include "pptlab/rational.hpp"

namespace pptlab {

// ---------------------------------------------------------------------------
// Quick criteria and certified families
// ---------------------------------------------------------------------------

// Evaluation of the three shortcut criteria for f in m^[p]:
//   C1: f^(p-1) Delta(f)^(p-1) = c (x_1...x_N)^(p^2-1) mod m^[p^2], c != 0
//   C2: Delta(f)^(p-1) in m^[p^2]
//   C3: Delta(f - p x_1...x_N) in m^[p^2]
struct QuickCriteria {
  bool applicable = false;  // f-bar in m^[p]
  std::set<int> satisfied;
  std::string note;
};

QuickCriteria check_quick_criteria(const HypersurfaceInput& h);

// s_0..s_depth implied by a satisfied criterion (C1: alternating p-1, 0;
// C2: p-1 then p; C3: constant p-1).
std::vector<unsigned> criterion_prediction(int criterion, unsigned p,
                                           unsigned depth);

// s_e = (p^e mod N) - 1 for the Fermat hypersurface x_1^N + ... + x_N^N,
// valid for p > N >= 2.  Returns s_0..s_depth.
std::vector<unsigned> fermat_predict(unsigned N, unsigned p, unsigned depth);

// True when f is exactly x_1^N + ... + x_N^N with N the variable count.
bool is_fermat(const HypersurfaceInput& h);

// A/f regular: f has a linear term with unit coefficient, or f = p v mod m^2
// with v a unit.
bool regularity_test(const HypersurfaceInput& h);

enum class Certificate { None, C1, C3, FermatCY, Regular };
const char* to_string(Certificate c);

// Which closed-form family, if any, pins down the entire sequence, and
// whether its prediction agrees with the computed prefix.
struct Certification {
  Certificate certificate = Certificate::None;
  QuickCriteria criteria;
  // predicted s_0..s_depth for C1/C3/FermatCY; empty otherwise
  std::vector<unsigned> predicted;
  // false when a criterion fired but its prediction disagrees with the ladder
  bool consistent = true;
  std::vector<std::string> notes;
};

Certification certify(const SplitSequence& seq);

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

enum class PurityBasis { AllBounded, QuickCriterion };

struct PerfectoidPure {
  PurityBasis basis = PurityBasis::AllBounded;
  int criterion = 0;  // 1 or 3 with QuickCriterion
  bool certified = false;
  Certificate certificate = Certificate::None;
  unsigned up_to_depth = 0;  // meaningful when !certified
};

struct NotPerfectoidPure {
  unsigned r = 0;  // length of the leading (p-1)-run
  bool flagged_r1 = false;
};

enum class InconclusiveReason { DepthExhausted, UnclassifiedPattern };
const char* to_string(InconclusiveReason r);

struct Inconclusive {
  InconclusiveReason reason = InconclusiveReason::UnclassifiedPattern;
};

using Verdict = std::variant<PerfectoidPure, NotPerfectoidPure, Inconclusive>;

struct ClassifyOptions {
  // r = 1 becomes Inconclusive, and an uncertified window made only of p-1
  // becomes Inconclusive{DepthExhausted}.
  bool strict = false;
};

Verdict classify(const SplitSequence& seq, const Certification& cert,
                 const ClassifyOptions& opts = {});
Verdict classify(const SplitSequence& seq, const ClassifyOptions& opts = {});

std::string describe(const Verdict& v);

// ---------------------------------------------------------------------------
// Thresholds
// ---------------------------------------------------------------------------

// sum_{i=1}^{d} (p - 1 - s_i) / p^i over values = s_0..s_d.  Throws
// SequenceHitP if some s_i = p.
Rational ppt_partial(std::span<const unsigned> values, unsigned p);

struct Period {
  unsigned preperiod = 0;
  unsigned period = 0;
  bool operator==(const Period&) const = default;
};

// Smallest (a, pi), scanning a then pi, with a + 2 pi <= d and
// s_(a+j) = s_(a+pi+j) whenever a + pi + j <= d.
std::optional<Period> detect_period(std::span<const unsigned> values);

// Value of the series when s_1..s_a is the preperiod and s_(a+1)..s_(a+pi)
// repeats forever.
Rational ppt_closed_form(std::span<const unsigned> values, unsigned p,
                         unsigned preperiod, unsigned period);

struct ExactPpt {
  Rational value;
  unsigned preperiod = 0;
  unsigned period = 0;
  bool conjectural = true;
  std::string source;  // "period-detection" or the certificate name
};

struct PptValue {
  Rational partial;
  std::optional<ExactPpt> exact;
};

// Partial sum plus the exact value when the sequence is certified or shows
// two full periods.  Requires every s_i <= p-1.
PptValue compute_ppt(const SplitSequence& seq, const Certification& cert);

// ---------------------------------------------------------------------------
// Quasi-F-split height and F-pure threshold
// ---------------------------------------------------------------------------

struct QfsHeight {
  enum class Kind { Finite, NotQuasiFSplit, ExceedsDepth };
  Kind kind = Kind::ExceedsDepth;
  unsigned height = 0;  // with Finite
  unsigned depth = 0;   // with ExceedsDepth
};

// Smallest h with s_1 = ... = s_(h-1) = 1 and s_h = 0.
QfsHeight qfs_height(std::span<const unsigned> values);

// nu(p^e) = max{n : f-bar^n not in m^[p^e]}.  f must be a nonzero
// non-unit.
std::uint64_t nu(const ResPoly& f, unsigned e);

struct NuTable {
  std::vector<std::uint64_t> entries;  // entries[e-1] = nu(p^e)
  unsigned p = 0;
};

// nu(p^e) for e = 1..e_max, each seeded from the previous one via the
// Frobenius.  Asserts nu(p^(e+1)) >= p nu(p^e).
NuTable nu_table(const ResPoly& f, unsigned e_max);

// nu(p^e_max) / p^e_max
Rational fpt_approx(const ResPoly& f, unsigned e_max);

}  // namespace pptlab

#endif
