#include "pptlab/verdict.hpp"

#include <algorithm>

#include "pptlab/errors.hpp"

namespace pptlab {

namespace {

// x_1 ... x_N raised to e
ResPoly diagonal(const ContextPtr& ctx, std::uint32_t e) {
  return ResPoly::monomial(ctx, diagonal_monomial(*ctx, e), 1);
}

bool matches_prefix(const std::vector<unsigned>& computed,
                    const std::vector<unsigned>& predicted) {
  const std::size_t n = std::min(computed.size(), predicted.size());
  return std::equal(computed.begin(), computed.begin() + n, predicted.begin());
}

// multiplicative order of p modulo N (gcd(p, N) = 1)
unsigned order_mod(unsigned p, unsigned N) {
  unsigned x = p % N, k = 1;
  while (x != 1 % N) {
    x = x * p % N;
    ++k;
  }
  return k;
}

}  // namespace

QuickCriteria check_quick_criteria(const HypersurfaceInput& h) {
  QuickCriteria out;
  const unsigned p = h.p();
  if (!member_frobenius_power(h.f_res(), 1)) {
    out.note = "f is not in m^[p]; the quick criteria do not apply";
    return out;
  }
  out.applicable = true;
  const std::uint64_t p2 = std::uint64_t{p} * p;
  const ContextPtr& ctx = h.context_ptr();

  // C1
  ResPoly lhs = mul_truncated(pow(h.f_res(), p - 1, p2),
                              pow(h.delta_f(), p - 1, p2), p2);
  const Monomial target = diagonal_monomial(*ctx, static_cast<std::uint32_t>(p2 - 1));
  if (lhs.size() == 1 && lhs.lead().mono == target) out.satisfied.insert(1);

  // C2
  if (member_frobenius_power(pow(h.delta_f(), p - 1, p2), 2)) out.satisfied.insert(2);

  // C3
  LiftPoly f_prime = h.f_lift() - times_p(diagonal(ctx, 1));
  if (member_frobenius_power(delta(f_prime), 2)) out.satisfied.insert(3);
  return out;
}

std::vector<unsigned> criterion_prediction(int criterion, unsigned p,
                                           unsigned depth) {
  std::vector<unsigned> v{0};
  for (unsigned n = 1; n <= depth; ++n) {
    switch (criterion) {
      case 1: v.push_back(n % 2 == 1 ? p - 1 : 0); break;
      case 2: v.push_back(n == 1 ? p - 1 : p); break;
      case 3: v.push_back(p - 1); break;
      default:
        throw Error(ErrorKind::InvalidArgument,
                    "unknown criterion " + std::to_string(criterion));
    }
  }
  return v;
}

std::vector<unsigned> fermat_predict(unsigned N, unsigned p, unsigned depth) {
  if (N < 2 || p <= N)
    throw Error(ErrorKind::PNotGreaterThanN,
                "the Fermat prediction needs p > N >= 2 (p = " +
                    std::to_string(p) + ", N = " + std::to_string(N) + ")");
  std::vector<unsigned> v{0};
  unsigned pe = 1;
  for (unsigned e = 1; e <= depth; ++e) {
    pe = pe * p % N;
    v.push_back(pe - 1);  // pe != 0 since gcd(p, N) = 1
  }
  return v;
}

bool is_fermat(const HypersurfaceInput& h) {
  const auto& ctx = h.context_ptr();
  const unsigned N = ctx->nvars();
  if (N < 2) return false;
  LiftPoly expected(ctx);
  for (unsigned i = 0; i < N; ++i) {
    Monomial m;
    m.set(i, N);
    expected = expected + LiftPoly::monomial(ctx, m, 1);
  }
  return h.f_lift() == expected;
}

bool regularity_test(const HypersurfaceInput& h) {
  const unsigned p = h.p();
  for (const auto& t : h.f_lift().terms()) {
    if (t.mono.degree() == 1 && t.coeff % p != 0) return true;
    // validated f has constant term p v; v is a unit iff the term is nonzero
    if (t.mono.is_one() && t.coeff != 0) return true;
  }
  return false;
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::None: return "none";
    case Certificate::C1: return "C1";
    case Certificate::C3: return "C3";
    case Certificate::FermatCY: return "fermat-cy";
    case Certificate::Regular: return "regular";
  }
  return "none";
}

const char* to_string(InconclusiveReason r) {
  return r == InconclusiveReason::DepthExhausted ? "DepthExhausted"
                                                 : "UnclassifiedPattern";
}

Certification certify(const SplitSequence& seq) {
  Certification cert;
  const unsigned p = seq.p();
  cert.criteria = check_quick_criteria(seq.h);
  const auto& sat = cert.criteria.satisfied;

  if (sat.count(2)) {
    auto pred = criterion_prediction(2, p, std::min(seq.depth, 2u));
    if (!matches_prefix(seq.values, pred)) {
      cert.consistent = false;
      cert.notes.push_back("C2 holds but the computed sequence does not start (0, p-1, p)");
    }
  }

  struct Candidate {
    Certificate kind;
    std::vector<unsigned> predicted;
  };
  std::vector<Candidate> candidates;
  if (sat.count(3)) candidates.push_back({Certificate::C3, criterion_prediction(3, p, seq.depth)});
  if (sat.count(1)) candidates.push_back({Certificate::C1, criterion_prediction(1, p, seq.depth)});
  const unsigned N = seq.h.context().nvars();
  if (is_fermat(seq.h) && p > N)
    candidates.push_back({Certificate::FermatCY, fermat_predict(N, p, seq.depth)});

  for (auto& c : candidates) {
    if (matches_prefix(seq.values, c.predicted)) {
      if (cert.certificate == Certificate::None) {
        cert.certificate = c.kind;
        cert.predicted = std::move(c.predicted);
      }
    } else {
      cert.consistent = false;
      cert.notes.push_back(std::string(to_string(c.kind)) +
                           " prediction disagrees with the computed sequence");
    }
  }
  if (cert.certificate == Certificate::None && regularity_test(seq.h)) {
    const bool bounded = std::all_of(seq.values.begin(), seq.values.end(),
                                     [p](unsigned s) { return s < p; });
    if (bounded) {
      cert.certificate = Certificate::Regular;
    } else {
      cert.consistent = false;
      cert.notes.push_back("A/f is regular but the sequence reached p");
    }
  }
  return cert;
}

Verdict classify(const SplitSequence& seq, const Certification& cert,
                 const ClassifyOptions& opts) {
  const unsigned p = seq.p();
  const auto& v = seq.values;
  const std::size_t d = v.size() - 1;
  auto hit = std::find(v.begin() + 1, v.end(), p);
  if (hit == v.end()) {
    PerfectoidPure out;
    out.certificate = cert.certificate;
    out.certified = cert.certificate != Certificate::None;
    out.up_to_depth = static_cast<unsigned>(d);
    if (cert.certificate == Certificate::C1 || cert.certificate == Certificate::C3) {
      out.basis = PurityBasis::QuickCriterion;
      out.criterion = cert.certificate == Certificate::C1 ? 1 : 3;
    }
    if (!out.certified && opts.strict &&
        std::all_of(v.begin() + 1, v.end(), [p](unsigned s) { return s == p - 1; }))
      return Inconclusive{InconclusiveReason::DepthExhausted};
    return out;
  }
  const auto r = static_cast<unsigned>(hit - v.begin()) - 1;
  const bool run = r >= 1 && std::all_of(v.begin() + 1, v.begin() + 1 + r,
                                         [p](unsigned s) { return s == p - 1; });
  if (!run) return Inconclusive{InconclusiveReason::UnclassifiedPattern};
  if (r >= 2) return NotPerfectoidPure{r, false};
  if (opts.strict) return Inconclusive{InconclusiveReason::UnclassifiedPattern};
  return NotPerfectoidPure{1, true};
}

Verdict classify(const SplitSequence& seq, const ClassifyOptions& opts) {
  return classify(seq, certify(seq), opts);
}

std::string describe(const Verdict& v) {
  if (auto* pp = std::get_if<PerfectoidPure>(&v)) {
    std::string s = "perfectoid pure";
    if (pp->certified)
      s += std::string(" (certified: ") + to_string(pp->certificate) + ")";
    else
      s += " up to depth " + std::to_string(pp->up_to_depth);
    return s;
  }
  if (auto* np = std::get_if<NotPerfectoidPure>(&v)) {
    std::string s = "not perfectoid pure (r = " + std::to_string(np->r) + ")";
    if (np->flagged_r1) s += " [r = 1 outside the r >= 2 hypothesis]";
    return s;
  }
  return std::string("inconclusive (") +
         to_string(std::get<Inconclusive>(v).reason) + ")";
}

Rational ppt_partial(std::span<const unsigned> values, unsigned p) {
  BigInt num = 0;
  BigInt den = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] >= p)
      throw Error(ErrorKind::SequenceHitP,
                  "s_" + std::to_string(i) + " = p; the threshold series is undefined");
    num = num * p + (p - 1 - values[i]);
    den *= p;
  }
  return Rational(num, den);
}

std::optional<Period> detect_period(std::span<const unsigned> values) {
  if (values.empty()) return std::nullopt;
  const std::size_t d = values.size() - 1;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t pi = 1; a + 2 * pi <= d; ++pi) {
      bool ok = true;
      for (std::size_t j = 1; a + pi + j <= d && ok; ++j)
        ok = values[a + j] == values[a + pi + j];
      if (ok) return Period{static_cast<unsigned>(a), static_cast<unsigned>(pi)};
    }
  }
  return std::nullopt;
}

Rational ppt_closed_form(std::span<const unsigned> values, unsigned p,
                         unsigned preperiod, unsigned period) {
  if (period == 0 || preperiod + period + 1 > values.size())
    throw Error(ErrorKind::InvalidArgument,
                "period window does not fit the sequence");
  for (std::size_t i = 1; i <= preperiod + period; ++i)
    if (values[i] >= p)
      throw Error(ErrorKind::SequenceHitP,
                  "s_" + std::to_string(i) + " = p; the threshold series is undefined");
  Rational head = ppt_partial(values.subspan(0, preperiod + 1), p);
  BigInt block = 0;
  for (unsigned j = 1; j <= period; ++j)
    block = block * p + (p - 1 - values[preperiod + j]);
  // p^-a * (block / p^pi) * p^pi / (p^pi - 1)
  BigInt ppi = big_pow(p, period);
  Rational tail(block, big_pow(p, preperiod) * (ppi - 1));
  return head + tail;
}

PptValue compute_ppt(const SplitSequence& seq, const Certification& cert) {
  const unsigned p = seq.p();
  PptValue out{ppt_partial(seq.values, p), std::nullopt};
  auto exact = [&](std::span<const unsigned> v, unsigned a, unsigned pi,
                   bool conjectural, std::string source) {
    out.exact = ExactPpt{ppt_closed_form(v, p, a, pi), a, pi, conjectural,
                         std::move(source)};
  };
  switch (cert.certificate) {
    case Certificate::C3: {
      auto v = criterion_prediction(3, p, 1);
      exact(v, 0, 1, false, "C3");
      return out;
    }
    case Certificate::C1: {
      auto v = criterion_prediction(1, p, 2);
      exact(v, 0, 2, false, "C1");
      return out;
    }
    case Certificate::FermatCY: {
      const unsigned N = seq.h.context().nvars();
      const unsigned pi = order_mod(p, N);
      auto v = fermat_predict(N, p, pi);
      exact(v, 0, pi, false, "fermat-cy");
      return out;
    }
    default:
      break;
  }
  if (auto per = detect_period(seq.values))
    exact(seq.values, per->preperiod, per->period, true, "period-detection");
  return out;
}

QfsHeight qfs_height(std::span<const unsigned> values) {
  QfsHeight out;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == 0) {
      out.kind = QfsHeight::Kind::Finite;
      out.height = static_cast<unsigned>(i);
      return out;
    }
    if (values[i] != 1) {
      out.kind = QfsHeight::Kind::NotQuasiFSplit;
      return out;
    }
  }
  out.kind = QfsHeight::Kind::ExceedsDepth;
  out.depth = values.empty() ? 0 : static_cast<unsigned>(values.size() - 1);
  return out;
}

NuTable nu_table(const ResPoly& f, unsigned e_max) {
  if (e_max < 1) throw Error(ErrorKind::InvalidArgument, "e must be at least 1");
  if (f.is_zero() || f.constant_term() != 0)
    throw Error(ErrorKind::InvalidArgument,
                "nu needs a nonzero element of the maximal ideal");
  const ContextPtr& ctx = f.context_ptr();
  const unsigned p = ctx->p();
  const std::size_t cap = ctx->limits().max_monomials;
  NuTable table;
  table.p = p;
  ResPoly power = ResPoly::constant(ctx, 1);  // f^k mod m^[q], nonzero
  std::uint64_t k = 0;
  for (unsigned e = 1; e <= e_max; ++e) {
    const std::uint64_t q = frobenius_bound(p, e);
    if (e > 1) {
      // (f^k)^p = f^(pk); Frobenius is injective on monomial supports, so
      // f^(pk) stays outside m^[pq]
      std::vector<Term> terms;
      terms.reserve(power.size());
      for (const auto& t : power.terms()) terms.push_back({t.mono.scaled(p), t.coeff});
      power = ResPoly::from_terms(ctx, std::move(terms));
      k *= p;
    }
    while (true) {
      ResPoly next = mul_truncated(power, f, q);
      if (next.is_zero()) break;
      if (next.size() > cap)
        throw Error(ErrorKind::ResourceLimit,
                    "nu computation exceeded " + std::to_string(cap) + " monomials");
      power = std::move(next);
      ++k;
    }
    if (!table.entries.empty() && k < p * table.entries.back())
      throw Error(ErrorKind::Internal, "nu(p^(e+1)) < p nu(p^e)");
    table.entries.push_back(k);
  }
  return table;
}

std::uint64_t nu(const ResPoly& f, unsigned e) {
  return nu_table(f, e).entries.back();
}

Rational fpt_approx(const ResPoly& f, unsigned e_max) {
  auto table = nu_table(f, e_max);
  return Rational(BigInt(table.entries.back()), big_pow(f.context().p(), e_max));
}

}  // namespace pptlab
