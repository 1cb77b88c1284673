#ifndef PPTLAB_POLY_HPP
#define PPTLAB_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pptlab/context.hpp"
#include "pptlab/monomial.hpp"

namespace pptlab {

// Coefficient ring of a sparse polynomial.  Lift is Z/p^2 (the class of an
// element of A modulo p^2), Residue is F_p (elements of A/pA).
enum class Coeffs { Lift, Residue };

struct Term {
  Monomial mono;
  std::uint32_t coeff;  // least non-negative residue, never 0

  bool operator==(const Term&) const = default;
};

template <Coeffs C>
class Poly;
template <Coeffs C>
Poly<C> mul_truncated(const Poly<C>& a, const Poly<C>& b, std::uint64_t bound);

// Sparse multivariate polynomial with canonical term list: no zero
// coefficients, monomials strictly descending in graded-lex order.  The zero
// polynomial has no terms.  Values are immutable once built.
template <Coeffs C>
class Poly {
 public:
  explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Poly constant(ContextPtr ctx, std::int64_t c);
  static Poly variable(ContextPtr ctx, unsigned index);
  static Poly monomial(ContextPtr ctx, const Monomial& m, std::int64_t c = 1);
  // Combines duplicates, reduces coefficients, drops zeros and sorts.
  static Poly from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context_ptr() const { return ctx_; }
  const Context& context() const { return *ctx_; }
  std::uint32_t modulus() const;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  std::uint32_t coeff(const Monomial& m) const;
  std::uint32_t constant_term() const;
  std::uint64_t total_degree() const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly scaled(std::int64_t c) const;
  Poly times_monomial(const Monomial& m, std::uint32_t c = 1) const;

  // Keeps only the monomials with every exponent < bound, i.e. reduces
  // modulo (x_1^bound, ..., x_N^bound).
  Poly truncated(std::uint64_t bound) const;
  // True when every monomial has some exponent >= bound.
  bool in_frobenius_box(std::uint64_t bound) const;

  bool operator==(const Poly& other) const;

  // Descending graded-lex, coefficients as least non-negative residues,
  // explicit '*' between factors so the text parses back to the same value.
  std::string render() const;

 private:
  Poly(ContextPtr ctx, std::vector<Term> canonical)
      : ctx_(std::move(ctx)), terms_(std::move(canonical)) {}

  ContextPtr ctx_;
  std::vector<Term> terms_;

  template <Coeffs D>
  friend class Poly;
  template <Coeffs D>
  friend Poly<D> mul_truncated(const Poly<D>&, const Poly<D>&, std::uint64_t);
};

using LiftPoly = Poly<Coeffs::Lift>;
using ResPoly = Poly<Coeffs::Residue>;

// a*b reduced modulo (x_i^bound); bound == 0 means no truncation.
template <Coeffs C>
Poly<C> mul_truncated(const Poly<C>& a, const Poly<C>& b, std::uint64_t bound);

// a^k by binary powering; a^0 = 1.  With bound != 0 every intermediate is
// reduced modulo (x_i^bound).
template <Coeffs C>
Poly<C> pow(const Poly<C>& a, std::uint64_t k, std::uint64_t bound = 0);

// x_i -> x_i^p on every monomial; coefficients are fixed.
LiftPoly frobenius_substitute(const LiftPoly& a);
// Coefficientwise reduction Z/p^2 -> F_p.
ResPoly project_mod_p(const LiftPoly& a);
// The b with p*lift(b) = a; throws NotDivisible otherwise.
ResPoly exact_div_p(const LiftPoly& a);
// Least non-negative representatives as Z/p^2 coefficients.
LiftPoly lift(const ResPoly& b);
// p * lift(b).
LiftPoly times_p(const ResPoly& b);

// Frobenius power of x_1^(p-1)...x_N^(p-1)-style products: the monomial with
// every exponent equal to e.
Monomial diagonal_monomial(const Context& ctx, std::uint32_t e);

extern template class Poly<Coeffs::Lift>;
extern template class Poly<Coeffs::Residue>;

}  // namespace pptlab

#endif
