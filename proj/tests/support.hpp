// Shared helpers for the unit tests: seeded random inputs and a few
// deliberately naive reference implementations.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "pptlab/ideal.hpp"
#include "pptlab/parse.hpp"
#include "pptlab/poly.hpp"
#include "pptlab/rational.hpp"

namespace testsupport {

using namespace pptlab;

inline constexpr int kCases = 200;

inline ContextPtr ctx(unsigned p, const char* vars) {
  return Context::create(p, parse_var_list(vars));
}

inline LiftPoly P(const ContextPtr& c, const char* src) { return parse_poly(src, c); }
inline ResPoly R(const ContextPtr& c, const char* src) {
  return project_mod_p(parse_poly(src, c));
}

inline Monomial mono(std::initializer_list<std::uint32_t> e) {
  std::vector<std::uint32_t> v(e);
  return Monomial(v);
}

template <Coeffs C>
Poly<C> random_poly(const ContextPtr& c, std::mt19937_64& rng, unsigned max_terms,
                    unsigned max_exp) {
  const std::uint32_t mod = C == Coeffs::Lift ? c->p() * c->p() : c->p();
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
  std::uniform_int_distribution<std::uint32_t> coeff(1, mod - 1);
  std::vector<Term> terms;
  const unsigned n = nterms(rng);
  for (unsigned t = 0; t < n; ++t) {
    Monomial m;
    for (unsigned i = 0; i < c->nvars(); ++i) m.set(i, exp(rng));
    terms.push_back({m, coeff(rng)});
  }
  return Poly<C>::from_terms(c, std::move(terms));
}

inline LiftPoly random_lift(const ContextPtr& c, std::mt19937_64& rng,
                            unsigned max_terms = 4, unsigned max_exp = 3) {
  return random_poly<Coeffs::Lift>(c, rng, max_terms, max_exp);
}
inline ResPoly random_res(const ContextPtr& c, std::mt19937_64& rng,
                          unsigned max_terms = 4, unsigned max_exp = 3) {
  return random_poly<Coeffs::Residue>(c, rng, max_terms, max_exp);
}

// Integer polynomial with unbounded coefficients, for checking arithmetic
// done in Z/p^2 against plain integer expansion.
struct IntPoly {
  std::map<std::vector<std::uint32_t>, BigInt> terms;

  static IntPoly from(const LiftPoly& f) {
    IntPoly out;
    const unsigned n = f.context().nvars();
    for (const auto& t : f.terms()) {
      std::vector<std::uint32_t> e(n);
      for (unsigned i = 0; i < n; ++i) e[i] = t.mono[i];
      out.terms[e] = t.coeff;
    }
    return out;
  }

  IntPoly operator*(const IntPoly& o) const {
    IntPoly out;
    for (const auto& [a, ca] : terms)
      for (const auto& [b, cb] : o.terms) {
        std::vector<std::uint32_t> e(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
        out.terms[e] += ca * cb;
      }
    return out;
  }

  IntPoly pow(unsigned k) const {
    IntPoly out;
    out.terms[std::vector<std::uint32_t>(terms.empty() ? 0 : terms.begin()->first.size())] = 1;
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  IntPoly frobenius(unsigned p) const {
    IntPoly out;
    for (const auto& [e, c] : terms) {
      auto f = e;
      for (auto& x : f) x *= p;
      out.terms[f] += c;
    }
    return out;
  }

  IntPoly minus(const IntPoly& o) const {
    IntPoly out = *this;
    for (const auto& [e, c] : o.terms) out.terms[e] -= c;
    return out;
  }

  // Divides every coefficient by p (asserting exactness) and reduces mod p.
  ResPoly div_p_mod_p(const ContextPtr& c) const {
    const unsigned p = c->p();
    std::vector<Term> out;
    for (const auto& [e, coef] : terms) {
      if (coef % p != 0) throw std::runtime_error("not divisible by p");
      BigInt q = coef / p;
      q %= p;
      if (q < 0) q += p;
      Monomial m;
      for (unsigned i = 0; i < e.size(); ++i) m.set(i, e[i]);
      out.push_back({m, static_cast<std::uint32_t>(q)});
    }
    return ResPoly::from_terms(c, std::move(out));
  }
};

// u applied monomial by monomial, straight from the dual-basis definition.
inline ResPoly naive_u(const ResPoly& g) {
  const unsigned p = g.context().p();
  const unsigned n = g.context().nvars();
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    bool selected = true;
    Monomial m;
    for (unsigned i = 0; i < n && selected; ++i) {
      if (t.mono[i] % p != p - 1) selected = false;
      else m.set(i, (t.mono[i] - (p - 1)) / p);
    }
    if (selected) out.push_back({m, t.coeff});
  }
  return ResPoly::from_terms(g.context_ptr(), std::move(out));
}

// All e in {0..p-1}^N as monomials.
inline std::vector<Monomial> multiplier_box(const Context& c) {
  std::vector<Monomial> out{Monomial{}};
  for (unsigned i = 0; i < c.nvars(); ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (unsigned e = 0; e < c.p(); ++e) {
        Monomial k = m;
        k.set(i, e);
        next.push_back(k);
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<ResPoly> naive_u_image(const std::vector<ResPoly>& gens) {
  std::vector<ResPoly> out;
  for (const auto& g : gens)
    for (const auto& e : multiplier_box(g.context()))
      out.push_back(naive_u(g.times_monomial(e)));
  return out;
}

// Rank of the F_p-span by dense Gaussian elimination; independent of
// EchelonBasis.
inline std::size_t dense_rank(const std::vector<ResPoly>& polys, unsigned p) {
  std::map<Monomial, std::size_t> col;
  for (const auto& g : polys)
    for (const auto& t : g.terms()) col.emplace(t.mono, col.size());
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : polys) {
    std::vector<std::int64_t> r(col.size(), 0);
    for (const auto& t : g.terms()) r[col[t.mono]] = t.coeff;
    rows.push_back(std::move(r));
  }
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < p - 2; ++i) r = r * a % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < col.size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t s = inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = x * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::int64_t f = rows[r][c];
      for (std::size_t k = 0; k < col.size(); ++k)
        rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % static_cast<std::int64_t>(p) + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline bool same_span(const std::vector<ResPoly>& a, const std::vector<ResPoly>& b,
                      unsigned p) {
  std::vector<ResPoly> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = dense_rank(both, p);
  return r == dense_rank(a, p) && r == dense_rank(b, p);
}

}  // namespace testsupport
