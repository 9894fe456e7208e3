#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace ugb;
using namespace ugb::testing;

namespace {

void expect_code(Errc code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

GenSet random_unital_set(const AlgebraPtr& a, Rng& rng) {
  std::vector<Poly> gens;
  const auto n = uniform(rng, 1, 3);
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(random_unital_poly(a, uniform(rng, 1, 3), 3, rng));
  return GenSet(a, std::move(gens));
}

// Every division-loop invariant at once.
void check_trace(const Poly& f, const GenSet& gens, const DivisionTrace& t) {
  EXPECT_EQ(expand_steps(t.steps, gens) + t.remainder, f);
  const auto leads = gens.leading_words();
  const bool comm = gens.algebra().oracle() == MulOracle::CommutativeMerge;
  for (const auto& term : t.remainder.terms())
    for (const auto& d : leads)
      EXPECT_FALSE(ref_divides(d, term.word, comm));
  for (std::size_t i = 1; i < t.working_leads.size(); ++i)
    EXPECT_TRUE(gens.algebra().less(t.working_leads[i], t.working_leads[i - 1]));
  EXPECT_EQ(t.steps.size() + t.peeled.size(), t.working_leads.size());
  for (const auto& s : t.steps) {
    EXPECT_FALSE(s.lambda.is_zero());
    EXPECT_LT(s.gen, gens.size());
  }
}

} // namespace

TEST(Division, HandComputedFirstMatch) {
  // Alphabet order y < x, so x^2 leads x^2 - y.
  const auto a = Algebra::make(RingSpec::integers(), Alphabet({"y", "x"}));
  const GenSet g(a, {parse_poly(a, "x^2 - y")});
  const auto t = divide(parse_poly(a, "x^3"), g);
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].left, Word{});
  EXPECT_EQ(t.steps[0].right, Word{1});
  EXPECT_EQ(t.remainder, parse_poly(a, "y x"));
  EXPECT_EQ(format_trace(t, a->alphabet()), "step 1: 1 * (1) * g0 * (x)\nremainder: y x\n");
}

TEST(Division, LambdaUsesTheInverseLeadingCoefficient) {
  const auto a = Algebra::make(RingSpec::integers_mod(7), Alphabet({"x", "y"}));
  const GenSet g(a, {parse_poly(a, "3*x y - 1")});
  const auto t = divide(parse_poly(a, "x y x"), g);
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].lambda, a->ring().from_integer(5)); // 3 * 5 = 1 mod 7
  EXPECT_EQ(t.remainder, parse_poly(a, "5*x"));
}

TEST(Division, FirstMatchPrefersLowIndexThenLeftmost) {
  const auto a = Algebra::make(RingSpec::integers(), Alphabet({"x", "y"}));
  const GenSet g(a, {parse_poly(a, "y"), parse_poly(a, "x")});
  const auto step = try_divide_step(parse_poly(a, "x y x y"), g);
  ASSERT_TRUE(step);
  EXPECT_EQ(step->gen, 0u);
  EXPECT_EQ(step->left, (Word{0}));
  EXPECT_FALSE(try_divide_step(parse_poly(a, "3"), g));
}

TEST(Division, InvariantsOnRandomInputs) {
  Rng rng(41);
  const std::vector<AlgebraPtr> algebras{
      Algebra::make(RingSpec::integers(), Alphabet::indexed(2)),
      Algebra::make(RingSpec::integers_mod(6), Alphabet::indexed(3)),
      Algebra::make(RingSpec::rationals(), Alphabet::indexed(2)),
      Algebra::make(RingSpec::integers_mod(9), Alphabet::indexed(3), MulOracle::CommutativeMerge)};
  for (const auto& a : algebras)
    for (int trial = 0; trial < 150; ++trial) {
      const GenSet g = random_unital_set(a, rng);
      const Poly f = random_poly(a, 4, 5, rng);
      check_trace(f, g, divide(f, g));
      check_trace(f, g, divide(f, g, Seeded{static_cast<std::uint64_t>(trial)}));
    }
}

TEST(Division, SeededRunsReplay) {
  Rng rng(42);
  const auto a = Algebra::make(RingSpec::integers(), Alphabet::indexed(2));
  for (int trial = 0; trial < 50; ++trial) {
    const GenSet g = random_unital_set(a, rng);
    const Poly f = random_poly(a, 4, 5, rng);
    const auto t1 = divide(f, g, Seeded{7});
    const auto t2 = divide(f, g, Seeded{7});
    EXPECT_EQ(t1.remainder, t2.remainder);
    EXPECT_EQ(format_trace(t1, a->alphabet()), format_trace(t2, a->alphabet()));
  }
}

TEST(Division, NonGroebnerRemaindersDependOnStrategy) {
  const auto a = Algebra::make(RingSpec::integers(), Alphabet({"y", "x"}));
  const GenSet g(a, {parse_poly(a, "x^2 - y")});
  std::set<std::string> remainders;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    remainders.insert(format_poly(divide(parse_poly(a, "x^3"), g, Seeded{seed}).remainder));
  EXPECT_EQ(remainders, (std::set<std::string>{"x y", "y x"}));
}

TEST(Division, Errors) {
  const auto a = Algebra::make(RingSpec::integers(), Alphabet({"x"}));
  expect_code(Errc::NotUnital, [&] { divide(parse_poly(a, "x"), GenSet(a, {parse_poly(a, "2*x")})); });
  expect_code(Errc::InvalidArgument, [&] { GenSet(a, {Poly(a)}); });
  const GenSet g(a, {parse_poly(a, "x - 1")});
  expect_code(Errc::BudgetExceeded, [&] { divide(parse_poly(a, "x^5"), g, FirstMatch{}, 3); });
  expect_code(Errc::InvalidArgument, [&] { divide(parse_poly(a, "x"), g, FirstMatch{}, 0); });
  const auto b = Algebra::make(RingSpec::integers(), Alphabet({"y"}));
  expect_code(Errc::AlgebraMismatch, [&] { divide(parse_poly(b, "y"), g); });
  EXPECT_EQ(divide(parse_poly(a, "x^5"), g).remainder, parse_poly(a, "1"));
}

TEST(Division, NotUnitalNamesTheGenerator) {
  const auto a = Algebra::make(RingSpec::integers_mod(6), Alphabet({"x"}));
  const GenSet g(a, {parse_poly(a, "x"), parse_poly(a, "3*x^2 + 1")});
  EXPECT_FALSE(g.is_unital());
  try {
    g.require_unital();
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("generator 1"), std::string::npos);
  }
}

TEST(Division, StrictModeNeedsACertificate) {
  const auto p = load_problem("x2y.gb");
  const GenSet g = p.gen_set();
  const Poly f = parse_poly(p.algebra, "x^3");
  expect_code(Errc::NotAGroebnerBasis, [&] { normal_form(f, g); });
  EXPECT_EQ(normal_form(f, g, Strictness::Exploratory), parse_poly(p.algebra, "y x"));
  expect_code(Errc::NotAGroebnerBasis, [&] { certify_groebner(g); });

  const auto sl2 = load_problem("sl2.lie");
  const GenSet cert = certify_groebner(sl2.gen_set());
  EXPECT_TRUE(cert.groebner_verified());
  EXPECT_EQ(normal_form(parse_poly(sl2.algebra, "f e"), cert), parse_poly(sl2.algebra, "e f - h"));
}
