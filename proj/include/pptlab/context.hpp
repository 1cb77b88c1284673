#ifndef PPTLAB_CONTEXT_HPP
#define PPTLAB_CONTEXT_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pptlab {

inline constexpr unsigned kMaxVars = 6;
inline constexpr unsigned kMaxPrime = 13;
// p^N above this makes the multiplier box of the Frobenius root too large.
inline constexpr std::uint64_t kMaxMultiplierBox = 20000;

// Caps that turn runaway computations into ResourceLimit errors.
struct Limits {
  // total terms held by one echelon workspace
  std::size_t max_monomials = 500000;
  // polynomials fed into one generator reduction
  std::size_t max_generators = 100000;
};

// The ambient data everything else is interpreted against: the prime p, the
// variables x_1..x_N of A = W(F_p)[[x_1..x_N]], and the resource caps.
class Context {
 public:
  static std::shared_ptr<const Context> create(unsigned p,
                                               std::vector<std::string> vars,
                                               Limits limits = {});

  unsigned p() const { return p_; }
  unsigned nvars() const { return static_cast<unsigned>(vars_.size()); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const Limits& limits() const { return limits_; }

  // p^N, the number of Frobenius-root multipliers
  std::uint64_t multiplier_box() const;

  // Index of a variable name, or -1.
  int var_index(const std::string& name) const;

  // Two contexts are compatible when p and the variable list agree; limits
  // are a tuning knob and do not participate.
  bool operator==(const Context& other) const {
    return p_ == other.p_ && vars_ == other.vars_;
  }

 private:
  Context(unsigned p, std::vector<std::string> vars, Limits limits)
      : p_(p), vars_(std::move(vars)), limits_(limits) {}

  unsigned p_;
  std::vector<std::string> vars_;
  Limits limits_;
};

using ContextPtr = std::shared_ptr<const Context>;

bool is_prime(unsigned n);

// Throws ContextMismatch unless both contexts are compatible.
void require_same_context(const Context& a, const Context& b);

// "x,y,z" -> {x,y,z}; "x1..x5" -> {x1,...,x5}.  Shorthand and plain names
// may be mixed: "a,x1..x3".
std::vector<std::string> parse_var_list(const std::string& text);

}  // namespace pptlab

#endif
