#include "pptlab/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "pptlab/errors.hpp"

namespace pptlab {

namespace {

std::uint32_t reduce(std::int64_t c, std::uint32_t m) {
  std::int64_t r = c % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

bool descending(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merge of two canonical term lists with b scaled by `sign` (1 or m-1).
std::vector<Term> merge_add(const std::vector<Term>& a,
                            const std::vector<Term>& b, std::uint32_t sign,
                            std::uint32_t m) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->mono > j->mono) {
      out.push_back(*i++);
    } else if (j->mono > i->mono) {
      out.push_back({j->mono, (j->coeff * sign) % m});
      ++j;
    } else {
      std::uint32_t c = (i->coeff + j->coeff * sign) % m;
      if (c != 0) out.push_back({i->mono, c});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back({j->mono, (j->coeff * sign) % m});
  return out;
}

bool within(const Monomial& m, std::uint64_t bound) {
  return bound == 0 || m.max_exponent() < bound;
}

}  // namespace

template <Coeffs C>
std::uint32_t Poly<C>::modulus() const {
  return C == Coeffs::Lift ? ctx_->p() * ctx_->p() : ctx_->p();
}

template <Coeffs C>
Poly<C> Poly<C>::constant(ContextPtr ctx, std::int64_t c) {
  return monomial(std::move(ctx), Monomial{}, c);
}

template <Coeffs C>
Poly<C> Poly<C>::variable(ContextPtr ctx, unsigned index) {
  if (index >= ctx->nvars())
    throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(ctx), m, 1);
}

template <Coeffs C>
Poly<C> Poly<C>::monomial(ContextPtr ctx, const Monomial& m, std::int64_t c) {
  Poly out(std::move(ctx));
  for (unsigned i = out.ctx_->nvars(); i < kMaxVars; ++i)
    if (m[i] != 0)
      throw Error(ErrorKind::InvalidArgument,
                  "monomial uses more variables than the context has");
  std::uint32_t r = reduce(c, out.modulus());
  if (r != 0) out.terms_.push_back({m, r});
  return out;
}

template <Coeffs C>
Poly<C> Poly<C>::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Poly out(std::move(ctx));
  const std::uint32_t m = out.modulus();
  std::sort(terms.begin(), terms.end(), descending);
  std::vector<Term> canon;
  canon.reserve(terms.size());
  for (const auto& t : terms) {
    for (unsigned i = out.ctx_->nvars(); i < kMaxVars; ++i)
      if (t.mono[i] != 0)
        throw Error(ErrorKind::InvalidArgument,
                    "monomial uses more variables than the context has");
    std::uint32_t c = t.coeff % m;
    if (!canon.empty() && canon.back().mono == t.mono) {
      canon.back().coeff = (canon.back().coeff + c) % m;
    } else {
      canon.push_back({t.mono, c});
    }
  }
  std::erase_if(canon, [](const Term& t) { return t.coeff == 0; });
  out.terms_ = std::move(canon);
  return out;
}

template <Coeffs C>
std::uint32_t Poly<C>::coeff(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.mono > key; });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

template <Coeffs C>
std::uint32_t Poly<C>::constant_term() const {
  return (!terms_.empty() && terms_.back().mono.is_one()) ? terms_.back().coeff
                                                          : 0;
}

template <Coeffs C>
std::uint64_t Poly<C>::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

template <Coeffs C>
Poly<C> Poly<C>::operator+(const Poly& other) const {
  require_same_context(*ctx_, *other.ctx_);
  return Poly(ctx_, merge_add(terms_, other.terms_, 1, modulus()));
}

template <Coeffs C>
Poly<C> Poly<C>::operator-(const Poly& other) const {
  require_same_context(*ctx_, *other.ctx_);
  const std::uint32_t m = modulus();
  return Poly(ctx_, merge_add(terms_, other.terms_, m - 1, m));
}

template <Coeffs C>
Poly<C> Poly<C>::operator-() const {
  return scaled(-1);
}

template <Coeffs C>
Poly<C> Poly<C>::operator*(const Poly& other) const {
  return mul_truncated(*this, other, 0);
}

template <Coeffs C>
Poly<C> Poly<C>::scaled(std::int64_t c) const {
  const std::uint32_t m = modulus();
  const std::uint32_t r = reduce(c, m);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::uint32_t v = (t.coeff * r) % m;
    if (v != 0) out.push_back({t.mono, v});
  }
  return Poly(ctx_, std::move(out));
}

template <Coeffs C>
Poly<C> Poly<C>::times_monomial(const Monomial& mono, std::uint32_t c) const {
  const std::uint32_t m = modulus();
  c %= m;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::uint32_t v = (t.coeff * c) % m;
    if (v != 0) out.push_back({t.mono * mono, v});
  }
  // multiplying by a monomial preserves graded-lex order
  return Poly(ctx_, std::move(out));
}

template <Coeffs C>
Poly<C> Poly<C>::truncated(std::uint64_t bound) const {
  if (bound == 0) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_)
    if (t.mono.max_exponent() < bound) out.push_back(t);
  return Poly(ctx_, std::move(out));
}

template <Coeffs C>
bool Poly<C>::in_frobenius_box(std::uint64_t bound) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.max_exponent() >= bound;
  });
}

template <Coeffs C>
bool Poly<C>::operator==(const Poly& other) const {
  return *ctx_ == *other.ctx_ && terms_ == other.terms_;
}

template <Coeffs C>
std::string Poly<C>::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ctx_->var_names();
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string factors;
    for (unsigned i = 0; i < ctx_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (t.mono[i] > 1) factors += "^" + std::to_string(t.mono[i]);
    }
    if (factors.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += factors;
    } else {
      out += std::to_string(t.coeff) + "*" + factors;
    }
  }
  return out;
}

template <Coeffs C>
Poly<C> mul_truncated(const Poly<C>& a, const Poly<C>& b, std::uint64_t bound) {
  require_same_context(*a.ctx_, *b.ctx_);
  Poly<C> out(a.ctx_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::uint32_t m = a.modulus();
  if (a.size() == 1 || b.size() == 1) {
    const auto& single = a.size() == 1 ? a : b;
    const auto& other = a.size() == 1 ? b : a;
    std::vector<Term> terms;
    terms.reserve(other.size());
    const Term& s = single.lead();
    for (const auto& t : other.terms_) {
      std::uint32_t v = (t.coeff * s.coeff) % m;
      if (v == 0) continue;
      Monomial mono = t.mono * s.mono;
      if (within(mono, bound)) terms.push_back({mono, v});
    }
    out.terms_ = std::move(terms);
    return out;
  }
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial mono = s.mono * t.mono;
      if (!within(mono, bound)) continue;
      auto& slot = acc[mono];
      slot = (slot + s.coeff * t.coeff) % m;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [mono, c] : acc)
    if (c != 0) terms.push_back({mono, c});
  std::sort(terms.begin(), terms.end(), descending);
  out.terms_ = std::move(terms);
  return out;
}

template <Coeffs C>
Poly<C> pow(const Poly<C>& a, std::uint64_t k, std::uint64_t bound) {
  Poly<C> result = Poly<C>::constant(a.context_ptr(), 1).truncated(bound);
  if (k == 0) return result;
  Poly<C> base = a.truncated(bound);
  while (true) {
    if (k & 1) result = mul_truncated(result, base, bound);
    k >>= 1;
    if (k == 0) break;
    base = mul_truncated(base, base, bound);
  }
  return result;
}

template class Poly<Coeffs::Lift>;
template class Poly<Coeffs::Residue>;
template LiftPoly mul_truncated(const LiftPoly&, const LiftPoly&, std::uint64_t);
template ResPoly mul_truncated(const ResPoly&, const ResPoly&, std::uint64_t);
template LiftPoly pow(const LiftPoly&, std::uint64_t, std::uint64_t);
template ResPoly pow(const ResPoly&, std::uint64_t, std::uint64_t);

LiftPoly frobenius_substitute(const LiftPoly& a) {
  std::vector<Term> out;
  out.reserve(a.size());
  const unsigned p = a.context().p();
  for (const auto& t : a.terms()) out.push_back({t.mono.scaled(p), t.coeff});
  // scaling exponents uniformly preserves graded-lex order
  return LiftPoly::from_terms(a.context_ptr(), std::move(out));
}

ResPoly project_mod_p(const LiftPoly& a) {
  std::vector<Term> out;
  out.reserve(a.size());
  const unsigned p = a.context().p();
  for (const auto& t : a.terms())
    if (t.coeff % p != 0) out.push_back({t.mono, t.coeff % p});
  return ResPoly::from_terms(a.context_ptr(), std::move(out));
}

ResPoly exact_div_p(const LiftPoly& a) {
  std::vector<Term> out;
  out.reserve(a.size());
  const unsigned p = a.context().p();
  for (const auto& t : a.terms()) {
    if (t.coeff % p != 0)
      throw Error(ErrorKind::NotDivisible,
                  "coefficient " + std::to_string(t.coeff) +
                      " is not divisible by p = " + std::to_string(p));
    out.push_back({t.mono, t.coeff / p});
  }
  return ResPoly::from_terms(a.context_ptr(), std::move(out));
}

LiftPoly lift(const ResPoly& b) {
  return LiftPoly::from_terms(b.context_ptr(), b.terms());
}

LiftPoly times_p(const ResPoly& b) {
  std::vector<Term> out;
  out.reserve(b.size());
  const unsigned p = b.context().p();
  for (const auto& t : b.terms()) out.push_back({t.mono, t.coeff * p});
  return LiftPoly::from_terms(b.context_ptr(), std::move(out));
}

Monomial diagonal_monomial(const Context& ctx, std::uint32_t e) {
  Monomial m;
  for (unsigned i = 0; i < ctx.nvars(); ++i) m.set(i, e);
  return m;
}

}  // namespace pptlab
