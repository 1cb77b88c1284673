#ifndef PPTLAB_MONOMIAL_HPP
#define PPTLAB_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>

#include "pptlab/context.hpp"

namespace pptlab {

// Exponent vector of x_1^a_1 ... x_N^a_N.  Unused slots (index >= N) stay 0,
// so monomials of one context compare and hash on the full array.
class Monomial {
 public:
  static constexpr std::uint32_t kMaxExponent = (1u << 31) - 1;

  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> exps);

  std::uint32_t operator[](unsigned i) const { return exp_[i]; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::array<std::uint32_t, kMaxVars>& exponents() const { return exp_; }

  void set(unsigned i, std::uint32_t e);

  // Product; throws ResourceLimit if an exponent would reach 2^31.
  Monomial operator*(const Monomial& other) const;
  // Componentwise multiplication of the exponents by k.
  Monomial scaled(std::uint64_t k) const;

  bool divides(const Monomial& other) const;
  // Largest exponent across the variables.
  std::uint32_t max_exponent() const;

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

  // Graded lexicographic order: total degree first, then lexicographic in
  // variable order (x_1 > x_2 > ...).
  std::strong_ordering operator<=>(const Monomial& other) const {
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    return exp_ <=> other.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint32_t, kMaxVars> exp_{};
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace pptlab

#endif
