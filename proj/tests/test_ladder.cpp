#include <doctest.h>

#include "pptlab/errors.hpp"
#include "pptlab/ladder.hpp"
#include "support.hpp"

using namespace pptlab;
using namespace testsupport;

namespace {

HypersurfaceInput input(const ContextPtr& c, const char* src) {
  return HypersurfaceInput::validate(P(c, src));
}

// A random valid f: nonzero mod p, no unit constant term.
HypersurfaceInput random_input(const ContextPtr& c, std::mt19937_64& rng,
                               unsigned max_terms = 4, unsigned max_exp = 3) {
  while (true) {
    auto f = random_lift(c, rng, max_terms, max_exp);
    auto fb = project_mod_p(f);
    if (fb.is_zero() || fb.constant_term() != 0) continue;
    return HypersurfaceInput::validate(f);
  }
}

// The ladder straight from the recursion: naive u on every multiplier, no
// truncation, no echelon reduction.
std::vector<ResPoly> naive_ladder(const HypersurfaceInput& h, const std::vector<unsigned>& idx) {
  const unsigned p = h.p();
  const auto& f = h.f_res();
  std::vector<ResPoly> gens{pow(f, p - idx.back())};
  for (std::size_t i = idx.size() - 1; i-- > 0;) {
    const unsigned l = idx[i];
    std::vector<ResPoly> scaled;
    for (const auto& g : gens) scaled.push_back(pow(h.delta_f(), l) * g);
    std::vector<ResPoly> next;
    const auto fl = pow(f, p - l - 1);
    for (const auto& v : naive_u_image(scaled))
      if (!v.is_zero()) next.push_back(fl * v);
    next.push_back(pow(f, p - l));
    gens = std::move(next);
  }
  return gens;
}

bool all_in_mp(const std::vector<ResPoly>& gens) {
  for (const auto& g : gens)
    if (!member_frobenius_power(g, 1)) return false;
  return true;
}

}  // namespace

TEST_CASE("ladder index bounds") {
  CHECK_NOTHROW(LadderIndex({1, 2}, 2));
  CHECK_NOTHROW(LadderIndex({2}, 2));
  CHECK_THROWS_AS(LadderIndex({2, 1}, 2), Error);
  CHECK_THROWS_AS(LadderIndex({3}, 2), Error);
  CHECK_THROWS_AS(LadderIndex({}, 2), Error);
}

TEST_CASE("compute_ladder examples") {
  auto c = ctx(2, "x,y");
  auto h = input(c, "x^2+y^2");
  CHECK(compute_ladder(h, LadderIndex({2}, 2)) == ResIdeal::unit(c));
  CHECK(compute_ladder(h, LadderIndex({1}, 2)) == ResIdeal::principal(R(c, "x^2+y^2")));
  CHECK(compute_ladder(h, LadderIndex({1, 1}, 2)) ==
        ResIdeal::from_generators(c, {R(c, "x*y*(x+y)"), R(c, "x^2+y^2")}));
  for (unsigned p : {3u, 5u}) {
    auto cp = ctx(p, "x,y,z");
    auto hp = input(cp, "x^3+y^3+z^3");
    CHECK(compute_ladder(hp, LadderIndex({p - 1}, p)) == ResIdeal::principal(hp.f_res()));
  }
}

TEST_CASE("next_s examples") {
  auto c = ctx(2, "x,y");
  auto h = input(c, "x^2+y^2");
  CHECK(next_s(h, {}) == 1);
  CHECK(next_s(h, {1}) == 1);
  CHECK_FALSE(ladder_contained(h, LadderIndex({1, 2}, 2)));
  CHECK(ladder_contained(h, LadderIndex({1, 1}, 2)));
  LadderOptions bin;
  bin.full_scan = false;
  CHECK(next_s(h, {1, 1}, bin) == 1);
}

TEST_CASE("splitting_sequence examples") {
  auto c = ctx(2, "x,y");
  CHECK(splitting_sequence(input(c, "x^2+y^2"), 6).values == std::vector<unsigned>{0, 1, 1, 1, 1, 1, 1});
  auto c3 = ctx(2, "x,y,z");
  CHECK(splitting_sequence(input(c3, "x^3+y^3+z^3"), 6).values ==
        std::vector<unsigned>{0, 1, 0, 1, 0, 1, 0});
  auto c5 = ctx(2, "x1..x5");
  auto s = splitting_sequence(input(c5, "x1^5+x2^5+x3^5+x4^5+x5^5"), 3);
  CHECK(s.values == std::vector<unsigned>{0, 1, 2, 2});
  CHECK(s.terminated_at_p == 2u);
  CHECK_THROWS_AS(splitting_sequence(input(c, "x^2+y^2"), 0), Error);
}

TEST_CASE("trace keeps the committed ideals") {
  auto c = ctx(2, "x,y");
  LadderOptions opts;
  opts.trace = true;
  auto s = splitting_sequence(input(c, "x^2+y^2"), 2, opts);
  REQUIRE(s.per_step_ideals.size() == 2);
  CHECK(s.per_step_ideals[0] == std::vector<std::string>{"x^2 + y^2"});
  CHECK(s.ms_per_depth.size() == 2);
}

TEST_CASE("property: ladder agrees with the naive recursion") {
  std::mt19937_64 rng(41);
  for (unsigned p : {2u, 3u}) {
    auto c = ctx(p, "x,y");
    for (int i = 0; i < kCases; ++i) {
      auto h = random_input(c, rng, 3, 3);
      const unsigned n = 1 + rng() % (p == 2 ? 3 : 2);
      std::vector<unsigned> idx;
      for (unsigned k = 0; k + 1 < n; ++k) idx.push_back(rng() % p);
      idx.push_back(rng() % (p + 1));
      LadderIndex li(idx, p);
      auto naive = naive_ladder(h, idx);
      auto exact = compute_ladder(h, li, false);
      REQUIRE(same_span(exact.generators(), echelon_reduce(naive), p));
      const bool contained = all_in_mp(naive);
      REQUIRE(ladder_contained(h, li, true) == contained);
      REQUIRE(ladder_contained(h, li, false) == contained);
      REQUIRE(ideal_in_frobenius_power(compute_ladder(h, li, true), 1) == contained);
    }
  }
}

TEST_CASE("property: downward closure and the s = 0 floor") {
  std::mt19937_64 rng(42);
  for (unsigned p : {2u, 3u, 5u}) {
    auto c = ctx(p, "x,y");
    for (int i = 0; i < kCases; ++i) {
      auto h = random_input(c, rng, 4, p == 5 ? 6 : 4);
      std::vector<unsigned> prefix;
      const unsigned steps = p == 5 ? 2 : 3;
      for (unsigned n = 1; n <= steps; ++n) {
        std::vector<bool> in(p + 1);
        for (unsigned s = 0; s <= p; ++s) {
          auto idx = prefix;
          idx.push_back(s);
          in[s] = ladder_contained(h, LadderIndex(idx, p));
        }
        REQUIRE(in[0]);
        unsigned top = 0;
        while (top + 1 <= p && in[top + 1]) ++top;
        for (unsigned s = top + 1; s <= p; ++s) REQUIRE_FALSE(in[s]);
        LadderOptions full, bin;
        full.full_scan = true;
        bin.full_scan = false;
        REQUIRE(next_s(h, prefix, full) == top);
        REQUIRE(next_s(h, prefix, bin) == top);
        if (top == p) break;
        prefix.push_back(top);
      }
    }
  }
}

TEST_CASE("property: prefix stability") {
  std::mt19937_64 rng(43);
  for (unsigned p : {2u, 3u}) {
    auto c = ctx(p, "x,y,z");
    for (int i = 0; i < kCases; ++i) {
      auto h = random_input(c, rng, 4, 3);
      const unsigned d = 1 + rng() % 3;
      auto shorter = splitting_sequence(h, d).values;
      auto longer = splitting_sequence(h, d + 1 + rng() % 2).values;
      REQUIRE(std::equal(shorter.begin(), shorter.end(), longer.begin()));
      REQUIRE(longer[0] == 0);
      // once p, always p
      for (std::size_t k = 1; k + 1 < longer.size(); ++k)
        if (longer[k] == p) REQUIRE(longer[k + 1] == p);
    }
  }
}

TEST_CASE("property: the sequence depends only on f mod p^2") {
  std::mt19937_64 rng(44);
  for (unsigned p : {2u, 3u}) {
    auto c = ctx(p, "x,y");
    for (int i = 0; i < kCases; ++i) {
      auto h = random_input(c, rng, 4, 3);
      auto g = random_lift(c, rng, 4, 4);
      // integer pre-image f + p^2 g, rendered and parsed back through the
      // integer grammar
      const std::string shifted = "(" + h.f_lift().render() + ") + " +
                                  std::to_string(p * p) + "*(" + g.render() + ")";
      auto h2 = HypersurfaceInput::validate(parse_poly(shifted, c));
      REQUIRE(h2.f_lift() == h.f_lift());
      REQUIRE(splitting_sequence(h, 3).values == splitting_sequence(h2, 3).values);
    }
  }
}

TEST_CASE("truncated and exact scans agree") {
  std::mt19937_64 rng(45);
  auto c = ctx(3, "x,y,z");
  LadderOptions exact;
  exact.truncate = false;
  for (int i = 0; i < 40; ++i) {
    auto h = random_input(c, rng, 4, 3);
    REQUIRE(splitting_sequence(h, 2).values == splitting_sequence(h, 2, exact).values);
  }
}
