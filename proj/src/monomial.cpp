#include "pptlab/monomial.hpp"

#include <algorithm>

#include "pptlab/errors.hpp"

namespace pptlab {

Monomial::Monomial(std::span<const std::uint32_t> exps) {
  if (exps.size() > kMaxVars)
    throw Error(ErrorKind::InvalidArgument, "too many exponents");
  for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<unsigned>(i), exps[i]);
}

void Monomial::set(unsigned i, std::uint32_t e) {
  if (e > kMaxExponent)
    throw Error(ErrorKind::ResourceLimit, "exponent exceeds 2^31 - 1");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    std::uint64_t e = std::uint64_t{exp_[i]} + other.exp_[i];
    if (e > kMaxExponent)
      throw Error(ErrorKind::ResourceLimit, "exponent exceeds 2^31 - 1");
    r.exp_[i] = static_cast<std::uint32_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    std::uint64_t e = std::uint64_t{exp_[i]} * k;
    if (e > kMaxExponent)
      throw Error(ErrorKind::ResourceLimit, "exponent exceeds 2^31 - 1");
    r.exp_[i] = static_cast<std::uint32_t>(e);
  }
  r.degree_ = degree_ * k;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

std::uint32_t Monomial::max_exponent() const {
  return *std::max_element(exp_.begin(), exp_.end());
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto e : exp_) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

}  // namespace pptlab
