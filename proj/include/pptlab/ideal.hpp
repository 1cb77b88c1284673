#ifndef PPTLAB_IDEAL_HPP
#define PPTLAB_IDEAL_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "pptlab/poly.hpp"

namespace pptlab {

// Incremental row echelon form over F_p with monomials as coordinates and
// graded-lex pivots.  Rows are monic; no two rows share a leading monomial.
// Each inserted vector is fully reduced against the rows already present.
class EchelonBasis {
 public:
  explicit EchelonBasis(ContextPtr ctx);

  // Reduces g against the basis and keeps the remainder if nonzero.
  // Returns true when the rank grew.  Enforces the context limits.
  bool insert(const ResPoly& g);

  // Remainder of g after reduction; zero iff g lies in the span.
  ResPoly reduce(const ResPoly& g) const;
  bool contains(const ResPoly& g) const { return reduce(g).is_zero(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t fed() const { return fed_; }

  // Current rows (echelon, not back-substituted), insertion order.
  std::vector<ResPoly> rows() const;

  // The unique reduced row echelon basis of the span, descending leads.
  std::vector<ResPoly> reduced_rows() const;

 private:
  std::vector<Term> reduce_terms(const std::vector<Term>& g) const;

  ContextPtr ctx_;
  std::vector<std::vector<Term>> rows_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivot_;
  std::size_t stored_terms_ = 0;
  std::size_t fed_ = 0;
};

// Echelon-reduced generator list: the reduced row echelon basis of the
// F_p-span of gens.  Same span, hence the same ideal.
std::vector<ResPoly> echelon_reduce(const std::vector<ResPoly>& gens);

// Finitely generated ideal of A/pA whose generators form a reduced row
// echelon basis of their own span.
class ResIdeal {
 public:
  explicit ResIdeal(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static ResIdeal from_generators(ContextPtr ctx, const std::vector<ResPoly>& gens);
  static ResIdeal principal(const ResPoly& g);
  static ResIdeal unit(ContextPtr ctx);

  const ContextPtr& context_ptr() const { return ctx_; }
  const std::vector<ResPoly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  std::uint64_t degree_bound() const { return degree_bound_; }

  // Generator-level equality (identical echelon bases).
  bool operator==(const ResIdeal& other) const { return gens_ == other.gens_; }

 private:
  ContextPtr ctx_;
  std::vector<ResPoly> gens_;
  std::uint64_t degree_bound_ = 0;
};

// The dual-basis generator u of Hom(F_* A-bar, A-bar) picking the coefficient
// of x_1^(p-1)...x_N^(p-1): monomials x^a with a = (p-1,...,p-1) mod p map to
// x^((a-(p-1))/p), everything else to 0.
ResPoly u_single(const ResPoly& g);

// The nonzero values u(x^e g) over the multiplier box e in {0..p-1}^N, ordered
// by multiplier.  Each monomial of g is selected by exactly one multiplier, so
// these are the residue-class components of g.
std::vector<ResPoly> u_components(const ResPoly& g);

// Image ideal u(F_* J), generated by u(x^e g) for g in gens(J), e in the box.
ResIdeal u_image(const ResIdeal& J);

ResIdeal ideal_mul_poly(const ResIdeal& J, const ResPoly& g);
ResIdeal ideal_add(const ResIdeal& J, const ResIdeal& K);
ResIdeal ideal_add_principal(const ResIdeal& J, const ResPoly& g);

// p^e, saturated at 2^32 (no exponent can reach it).
std::uint64_t frobenius_bound(unsigned p, unsigned e);

// g in m^[p^e] = (x_1^(p^e), ..., x_N^(p^e)): every monomial has some
// exponent >= p^e.
bool member_frobenius_power(const ResPoly& g, unsigned e);
bool ideal_in_frobenius_power(const ResIdeal& J, unsigned e);

}  // namespace pptlab

#endif
