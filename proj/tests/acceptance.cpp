// Acceptance run: one PASS/FAIL line per criterion, exact comparisons, wall
// clock budgets.  Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "pptlab/corpus.hpp"
#include "pptlab/errors.hpp"
#include "pptlab/verdict.hpp"
#include "support.hpp"

using namespace pptlab;
using namespace testsupport;
using V = std::vector<unsigned>;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

std::string show(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

HypersurfaceInput input(unsigned p, const char* vars, const std::string& f) {
  return HypersurfaceInput::validate(parse_poly(f, ctx(p, vars)));
}

struct Analysis {
  SplitSequence seq;
  Certification cert;
  Verdict verdict;
  std::optional<PptValue> ppt;
};

Analysis analyse(unsigned p, const char* vars, const std::string& f, unsigned depth) {
  auto seq = splitting_sequence(input(p, vars, f), depth);
  auto cert = certify(seq);
  auto verdict = classify(seq, cert);
  std::optional<PptValue> ppt;
  if (!seq.terminated_at_p) ppt = compute_ppt(seq, cert);
  return {std::move(seq), std::move(cert), verdict, ppt};
}

void expect_seq(Outcome& o, const Analysis& a, const V& want, const std::string& tag) {
  o.expect(a.seq.values == want, tag + " sequence " + show(a.seq.values) + " != " + show(want));
}

void expect_exact(Outcome& o, const Analysis& a, const Rational& want, const std::string& tag) {
  if (!a.ppt || !a.ppt->exact) {
    o.expect(false, tag + " has no exact ppt");
    return;
  }
  o.expect(a.ppt->exact->value == want,
           tag + " ppt " + a.ppt->exact->value.str() + " != " + want.str());
}

const PerfectoidPure* as_pure(const Verdict& v) { return std::get_if<PerfectoidPure>(&v); }
const NotPerfectoidPure* as_not_pure(const Verdict& v) {
  return std::get_if<NotPerfectoidPure>(&v);
}

const char* kQuintic = "x1^5+x2^5+x3^5+x4^5+x5^5";
const char* kCross =
    "x1^4+x2^4+x3^4+x4^4+x1^2*x2^2+x1^2*x3^2+x2^2*x3^2+x1*x2*x3*(x1+x2+x3)";
const char* kQuartic = "x^4+y^4+z^4+w^4";

void c1(Outcome& o) {
  auto a = analyse(2, "x,y", "x^2+y^2", 7);
  expect_seq(o, a, {0, 1, 1, 1, 1, 1, 1, 1}, "x^2+y^2");
  auto* pp = as_pure(a.verdict);
  o.expect(pp && pp->certified && pp->certificate == Certificate::C3,
           "verdict is not PerfectoidPure certified by C3: " + describe(a.verdict));
  expect_exact(o, a, Rational(0), "x^2+y^2");
}

void c2(Outcome& o) {
  auto a = analyse(2, "x,y,z", "x^3+y^3+z^3", 7);
  expect_seq(o, a, {0, 1, 0, 1, 0, 1, 0, 1}, "cubic");
  o.expect(a.cert.criteria.satisfied.count(1) == 1, "C1 does not fire");
  expect_exact(o, a, Rational(1, 3), "cubic");
}

void c3(Outcome& o) {
  auto a = analyse(3, "x,y,z,w", kQuartic, 6);
  expect_seq(o, a, {0, 2, 0, 2, 0, 2, 0}, "quartic p=3");
  expect_exact(o, a, Rational(1, 4), "quartic p=3");
  o.expect(Rational(2, 3 * 3 - 1) == Rational(1, 4), "2/(p^2-1) at p=3");
}

void c4(Outcome& o) {
  auto a = analyse(2, "x1..x5", kQuintic, 2);
  o.expect(a.seq.values.size() == 3 && a.seq.values[1] == 1 && a.seq.values[2] == 2,
           "quintic s_1, s_2 = " + show(a.seq.values));
  auto* np = as_not_pure(a.verdict);
  o.expect(np && np->r == 1 && np->flagged_r1,
           "quintic verdict " + describe(a.verdict));
  auto b = analyse(2, "x1..x5", std::string(kQuintic) + "+2*x1*x2*x3*x4*x5", 6);
  expect_seq(o, b, {0, 1, 1, 1, 1, 1, 1}, "quintic + 2x1..x5");
  o.expect(as_pure(b.verdict) != nullptr, "quintic + 2x1..x5 not pure");
  expect_exact(o, b, Rational(0), "quintic + 2x1..x5");
}

void c5(Outcome& o) {
  auto a = analyse(2, "x1..x4", kCross, 3);
  o.expect(as_not_pure(a.verdict) != nullptr, "quartic verdict " + describe(a.verdict));
  auto b = analyse(2, "x1..x4", std::string(kCross) + "+2*x1*x2*x3*x4", 6);
  auto* pp = as_pure(b.verdict);
  o.expect(pp && pp->certified && pp->basis == PurityBasis::QuickCriterion &&
               pp->criterion == 3,
           "quartic + 2x1x2x3x4 verdict " + describe(b.verdict));
  expect_exact(o, b, Rational(0), "quartic + 2x1x2x3x4");
}

void c6(Outcome& o) {
  struct Case {
    unsigned N, p;
    const char* vars;
    const char* f;
  };
  const Case cases[] = {{3, 5, "x,y,z", "x^3+y^3+z^3"},
                        {4, 5, "x,y,z,w", kQuartic},
                        {4, 7, "x,y,z,w", kQuartic},
                        {3, 7, "x,y,z", "x^3+y^3+z^3"}};
  for (const auto& c : cases) {
    const std::string tag = "(N,p)=(" + std::to_string(c.N) + "," + std::to_string(c.p) + ")";
    auto t0 = std::chrono::steady_clock::now();
    auto seq = splitting_sequence(input(c.p, c.vars, c.f), 4);
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(s < 60.0, tag + " took " + std::to_string(s) + " s");
    o.expect(seq.values == fermat_predict(c.N, c.p, 4),
             tag + " " + show(seq.values) + " != " + show(fermat_predict(c.N, c.p, 4)));
    if (c.N == 4 && c.p == 5)
      o.expect(ppt_partial(seq.values, 5) == Rational(624, 625), "(4,5) partial != 624/625");
  }
}

void c7(Outcome& o) {
  struct Case {
    unsigned p;
    const char* vars;
    const char* f;
    unsigned depth;
  };
  const Case cases[] = {{3, "x", "3-x^2", 4}, {2, "x,y", "x+y^3", 5}, {3, "x,y", "x+y^3", 5}};
  for (const auto& c : cases) {
    const std::string tag = std::string(c.f) + " p=" + std::to_string(c.p);
    auto h = input(c.p, c.vars, c.f);
    o.expect(regularity_test(h), tag + " not regular");
    auto seq = splitting_sequence(h, c.depth);
    auto table = nu_table(h.f_res(), c.depth);
    for (unsigned n = 1; n <= c.depth; ++n) {
      Rational partial = ppt_partial(std::span<const unsigned>(seq.values).subspan(0, n + 1), c.p);
      Rational by_nu(BigInt(table.entries[n - 1]), big_pow(c.p, n));
      o.expect(partial == by_nu, tag + " n=" + std::to_string(n) + ": " + partial.str() +
                                     " != " + by_nu.str());
    }
    o.expect(fpt_approx(h.f_res(), c.depth) == ppt_partial(seq.values, c.p),
             tag + " fpt_approx disagrees");
    if (c.p == 3 && c.depth == 4 && std::string(c.f) == "3-x^2") {
      o.expect(seq.values == V{0, 1, 1, 1, 1}, "3-x^2 sequence " + show(seq.values));
      auto v = compute_ppt(seq, certify(seq));
      o.expect(v.exact && v.exact->value == Rational(1, 2), "3-x^2 limit != 1/2");
    }
  }
}

// Randomized property harness; each property runs kCases cases.
void c8(Outcome& o) {
  std::mt19937_64 rng(8);
  auto count = [&](const std::string& name, const std::function<bool()>& one) {
    int bad = 0;
    for (int i = 0; i < kCases; ++i) bad += !one();
    o.expect(bad == 0, name + ": " + std::to_string(bad) + " failing case(s)");
  };
  auto random_valid = [&](const ContextPtr& c, unsigned terms, unsigned exp) {
    while (true) {
      auto f = random_lift(c, rng, terms, exp);
      auto fb = project_mod_p(f);
      if (!fb.is_zero() && fb.constant_term() == 0) return HypersurfaceInput::validate(f);
    }
  };

  auto c2v = ctx(2, "x,y");
  auto c3v = ctx(3, "x,y");
  count("delta product rule", [&] {
    const auto& c = rng() % 2 ? c2v : c3v;
    const unsigned p = c->p();
    auto f = random_lift(c, rng), g = random_lift(c, rng);
    return delta(f * g) ==
           pow(project_mod_p(f), p) * delta(g) + pow(project_mod_p(g), p) * delta(f);
  });
  count("delta sum rule", [&] {
    const auto& c = rng() % 2 ? c2v : c3v;
    const unsigned p = c->p();
    auto f = random_lift(c, rng), g = random_lift(c, rng);
    auto fb = project_mod_p(f), gb = project_mod_p(g);
    ResPoly cross(c);
    unsigned binom = 1;
    for (unsigned k = 1; k < p; ++k) {
      binom = binom * (p - k + 1) / k;
      cross = cross + (pow(fb, k) * pow(gb, p - k)).scaled((binom / p) % p);
    }
    return delta(f + g) == delta(f) + delta(g) + cross;
  });
  count("u semilinearity", [&] {
    const auto& c = rng() % 2 ? c2v : c3v;
    auto g = random_res(c, rng, 3, 2);
    auto h = random_res(c, rng, 5, 3 * c->p());
    return u_single(pow(g, c->p()) * h) == g * u_single(h);
  });
  count("Fedder duality", [&] {
    const auto& c = rng() % 2 ? c2v : c3v;
    std::vector<ResPoly> gens;
    const unsigned n = 1 + rng() % 3;
    for (unsigned k = 0; k < n; ++k)
      gens.push_back(random_res(c, rng, 2, 2 * c->p() * c->p()));
    auto J = ResIdeal::from_generators(c, gens);
    bool u_in_m = true;
    for (const auto& g : u_image(J).generators()) u_in_m = u_in_m && g.constant_term() == 0;
    bool naive_in_m = true;
    for (const auto& g : naive_u_image(gens)) naive_in_m = naive_in_m && g.constant_term() == 0;
    const bool in_mp = ideal_in_frobenius_power(J, 1);
    return u_in_m == in_mp && naive_in_m == in_mp;
  });
  count("echelon span preservation", [&] {
    auto c = ctx(2 + (rng() % 2), "x,y,z");
    std::vector<ResPoly> gens;
    const unsigned n = 1 + rng() % 6;
    for (unsigned k = 0; k < n; ++k) gens.push_back(random_res(c, rng, 4, 2));
    return same_span(echelon_reduce(gens), gens, c->p());
  });
  count("prefix stability", [&] {
    auto h = random_valid(rng() % 2 ? c2v : c3v, 4, 3);
    auto a = splitting_sequence(h, 2).values;
    auto b = splitting_sequence(h, 3).values;
    return std::equal(a.begin(), a.end(), b.begin());
  });
  count("mod p^2 invariance", [&] {
    const auto& c = rng() % 2 ? c2v : c3v;
    auto h = random_valid(c, 4, 3);
    auto g = random_lift(c, rng, 3, 3);
    const std::string shifted = "(" + h.f_lift().render() + ")+" +
                                std::to_string(c->p() * c->p()) + "*(" + g.render() + ")";
    auto h2 = HypersurfaceInput::validate(parse_poly(shifted, c));
    return splitting_sequence(h, 3).values == splitting_sequence(h2, 3).values;
  });
  count("downward closure", [&] {
    const auto& c = rng() % 2 ? c2v : c3v;
    const unsigned p = c->p();
    auto h = random_valid(c, 4, 4);
    std::vector<unsigned> prefix;
    if (rng() % 2) {
      unsigned s1 = next_s(h, {});
      if (s1 < p) prefix.push_back(s1);
    }
    bool seen_out = false;
    for (unsigned s = 0; s <= p; ++s) {
      auto idx = prefix;
      idx.push_back(s);
      const bool in = ladder_contained(h, LadderIndex(idx, p));
      if (s == 0 && !in) return false;
      if (in && seen_out) return false;
      seen_out = seen_out || !in;
    }
    return true;
  });
}

void c9(Outcome& o) {
  auto a = analyse(7, "x,y,z,w", kQuartic, 4);
  expect_seq(o, a, {0, 2, 0, 2, 0}, "quartic p=7");
  expect_exact(o, a, Rational(17, 24), "quartic p=7");
  o.expect(Rational(7 * 7 - 2 * 7 - 1, 7 * 7 - 1) == Rational(17, 24), "formula at p=7");
  if (a.ppt && a.ppt->exact)
    o.expect(a.ppt->exact->value != Rational(2, 48), "reported the published 2/48");
  const CorpusEntry* row = nullptr;
  for (const auto& e : builtin_corpus())
    if (e.name == "fermat-quartic-p7") row = &e;
  o.expect(row && row->annotation.find("discrepancy") != std::string::npos,
           "corpus row is not annotated");
  o.expect(row && row->expected_ppt == std::optional<std::string>("17/24"),
           "corpus row does not expect 17/24");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    void (*body)(Outcome&);
  };
  const Criterion all[] = {
      {1, "x^2+y^2 at p=2: (0,1,...,1), certified by C3, ppt 0", 1, c1},
      {2, "Fermat cubic at p=2: (0,1,0,1,...), C1, ppt 1/3", 5, c2},
      {3, "Fermat quartic at p=3: (0,2,0,2,...), ppt 1/4", 60, c3},
      {4, "Fermat quintic at p=2: not pure (r=1); plus 2x1..x5: ppt 0", 60, c4},
      {5, "cross-term quartic at p=2: not pure; plus 2x1x2x3x4: ppt 0 via C3", 60, c5},
      {6, "Fermat oracle for (3,5),(4,5),(4,7),(3,7) to depth 4", 240, c6},
      {7, "regular case: ppt_partial(n) = nu(p^n)/p^n", 10, c7},
      {8, "property suites, 200 cases each", 600, c8},
      {9, "Fermat quartic at p=7: (0,2,0,2,0), ppt 17/24, annotated", 60, c9},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(s < c.budget_s, "over budget");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", s);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ["
              << timing << "]";
    if (!o.ok) std::cout << " -- " << o.why.str();
    std::cout << "\n";
    failed += !o.ok;
  }
  std::cout << (9 - failed) << "/9 criteria passed\n";
  return failed;
}
