#include "pptlab/ideal.hpp"

#include <algorithm>
#include <functional>

#include "pptlab/errors.hpp"

namespace pptlab {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is a small prime: Fermat inversion
  std::uint32_t r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

using Accumulator = std::map<Monomial, std::uint32_t, std::greater<>>;

}  // namespace

EchelonBasis::EchelonBasis(ContextPtr ctx) : ctx_(std::move(ctx)) {}

std::vector<Term> EchelonBasis::reduce_terms(const std::vector<Term>& g) const {
  const std::uint32_t p = ctx_->p();
  Accumulator acc;
  for (const auto& t : g) acc.emplace(t.mono, t.coeff);
  std::vector<Term> out;
  while (!acc.empty()) {
    auto top = acc.begin();
    const Monomial mono = top->first;
    const std::uint32_t c = top->second;
    acc.erase(top);
    if (c == 0) continue;
    auto it = pivot_.find(mono);
    if (it == pivot_.end()) {
      out.push_back({mono, c});
      continue;
    }
    // subtract c * row (row is monic with leading monomial `mono`)
    const auto& row = rows_[it->second];
    const std::uint32_t neg = p - c;
    for (std::size_t k = 1; k < row.size(); ++k) {
      auto [slot, fresh] = acc.try_emplace(row[k].mono, 0);
      slot->second = (slot->second + neg * row[k].coeff) % p;
      if (slot->second == 0) acc.erase(slot);
    }
  }
  return out;
}

ResPoly EchelonBasis::reduce(const ResPoly& g) const {
  require_same_context(*ctx_, g.context());
  return ResPoly::from_terms(ctx_, reduce_terms(g.terms()));
}

bool EchelonBasis::insert(const ResPoly& g) {
  require_same_context(*ctx_, g.context());
  if (g.is_zero()) return false;
  const auto& limits = ctx_->limits();
  if (++fed_ > limits.max_generators)
    throw Error(ErrorKind::ResourceLimit,
                "generator reduction exceeded " +
                    std::to_string(limits.max_generators) + " inputs");
  std::vector<Term> rem = reduce_terms(g.terms());
  if (rem.empty()) return false;
  const std::uint32_t p = ctx_->p();
  const std::uint32_t inv = inverse_mod(rem.front().coeff, p);
  for (auto& t : rem) t.coeff = t.coeff * inv % p;
  stored_terms_ += rem.size();
  if (stored_terms_ > limits.max_monomials)
    throw Error(ErrorKind::ResourceLimit,
                "echelon workspace exceeded " +
                    std::to_string(limits.max_monomials) + " monomials");
  pivot_.emplace(rem.front().mono, rows_.size());
  rows_.push_back(std::move(rem));
  return true;
}

std::vector<ResPoly> EchelonBasis::rows() const {
  std::vector<ResPoly> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(ResPoly::from_terms(ctx_, r));
  return out;
}

std::vector<ResPoly> EchelonBasis::reduced_rows() const {
  const std::uint32_t p = ctx_->p();
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows_[a].front().mono < rows_[b].front().mono;
  });
  // Ascending leads: every pivot below the current lead already belongs to
  // a fully reduced row, so one substitution pass per row suffices.
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> done;
  std::vector<ResPoly> out;
  out.reserve(rows_.size());
  for (std::size_t idx : order) {
    const auto& row = rows_[idx];
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    bool touched = false;
    for (std::size_t k = 1; k < row.size(); ++k) {
      auto it = done.find(row[k].mono);
      if (it == done.end()) {
        auto& slot = acc[row[k].mono];
        slot = (slot + row[k].coeff) % p;
        continue;
      }
      touched = true;
      const std::uint32_t neg = p - row[k].coeff;
      for (std::size_t j = 1; j < it->second.size(); ++j) {
        auto& slot = acc[it->second[j].mono];
        slot = (slot + neg * it->second[j].coeff) % p;
      }
    }
    std::vector<Term> full;
    if (!touched) {
      full = row;
    } else {
      full.reserve(acc.size() + 1);
      full.push_back(row.front());
      for (const auto& [mono, c] : acc)
        if (c != 0) full.push_back({mono, c});
      std::sort(full.begin() + 1, full.end(),
                [](const Term& a, const Term& b) { return a.mono > b.mono; });
    }
    out.push_back(ResPoly::from_terms(ctx_, full));
    done.emplace(row.front().mono, std::move(full));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<ResPoly> echelon_reduce(const std::vector<ResPoly>& gens) {
  if (gens.empty()) return {};
  EchelonBasis basis(gens.front().context_ptr());
  for (const auto& g : gens) basis.insert(g);
  return basis.reduced_rows();
}

ResIdeal ResIdeal::from_generators(ContextPtr ctx,
                                   const std::vector<ResPoly>& gens) {
  ResIdeal out(std::move(ctx));
  for (const auto& g : gens) require_same_context(*out.ctx_, g.context());
  out.gens_ = echelon_reduce(gens);
  for (const auto& g : out.gens_)
    out.degree_bound_ = std::max(out.degree_bound_, g.total_degree());
  return out;
}

ResIdeal ResIdeal::principal(const ResPoly& g) {
  return from_generators(g.context_ptr(), {g});
}

ResIdeal ResIdeal::unit(ContextPtr ctx) {
  auto one = ResPoly::constant(ctx, 1);
  return from_generators(std::move(ctx), {one});
}

ResPoly u_single(const ResPoly& g) {
  const std::uint32_t p = g.context().p();
  const unsigned n = g.context().nvars();
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    Monomial m;
    bool selected = true;
    for (unsigned i = 0; i < n && selected; ++i) {
      if (t.mono[i] % p != p - 1) selected = false;
      else m.set(i, (t.mono[i] - (p - 1)) / p);
    }
    // c^(1/p) = c over F_p
    if (selected) out.push_back({m, t.coeff});
  }
  return ResPoly::from_terms(g.context_ptr(), std::move(out));
}

std::vector<ResPoly> u_components(const ResPoly& g) {
  const std::uint32_t p = g.context().p();
  const unsigned n = g.context().nvars();
  // keyed by the multiplier e = (p-1) - (a mod p); std::map keeps the
  // multiplier order deterministic
  std::map<Monomial, std::vector<Term>> classes;
  for (const auto& t : g.terms()) {
    Monomial e, q;
    for (unsigned i = 0; i < n; ++i) {
      std::uint32_t r = t.mono[i] % p;
      e.set(i, p - 1 - r);
      q.set(i, (t.mono[i] - r) / p);
    }
    classes[e].push_back({q, t.coeff});
  }
  std::vector<ResPoly> out;
  out.reserve(classes.size());
  for (auto& [e, terms] : classes)
    out.push_back(ResPoly::from_terms(g.context_ptr(), std::move(terms)));
  return out;
}

ResIdeal u_image(const ResIdeal& J) {
  EchelonBasis basis(J.context_ptr());
  for (const auto& g : J.generators())
    for (const auto& c : u_components(g)) basis.insert(c);
  return ResIdeal::from_generators(J.context_ptr(), basis.reduced_rows());
}

ResIdeal ideal_mul_poly(const ResIdeal& J, const ResPoly& g) {
  require_same_context(*J.context_ptr(), g.context());
  std::vector<ResPoly> gens;
  gens.reserve(J.generators().size());
  for (const auto& h : J.generators()) gens.push_back(h * g);
  return ResIdeal::from_generators(J.context_ptr(), gens);
}

ResIdeal ideal_add(const ResIdeal& J, const ResIdeal& K) {
  require_same_context(*J.context_ptr(), *K.context_ptr());
  std::vector<ResPoly> gens = J.generators();
  gens.insert(gens.end(), K.generators().begin(), K.generators().end());
  return ResIdeal::from_generators(J.context_ptr(), gens);
}

ResIdeal ideal_add_principal(const ResIdeal& J, const ResPoly& g) {
  require_same_context(*J.context_ptr(), g.context());
  std::vector<ResPoly> gens = J.generators();
  gens.push_back(g);
  return ResIdeal::from_generators(J.context_ptr(), gens);
}

std::uint64_t frobenius_bound(unsigned p, unsigned e) {
  constexpr std::uint64_t kCap = std::uint64_t{1} << 32;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q >= kCap) return kCap;
  }
  return q;
}

bool member_frobenius_power(const ResPoly& g, unsigned e) {
  if (e == 0)
    throw Error(ErrorKind::InvalidArgument, "Frobenius power needs e >= 1");
  return g.in_frobenius_box(frobenius_bound(g.context().p(), e));
}

bool ideal_in_frobenius_power(const ResIdeal& J, unsigned e) {
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [e](const ResPoly& g) { return member_frobenius_power(g, e); });
}

}  // namespace pptlab
