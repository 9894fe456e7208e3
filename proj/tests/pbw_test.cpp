#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace ugb;
using namespace ugb::testing;

TEST(Lie, BracketIsAntisymmetric) {
  const auto sl2 = *load_problem("sl2.lie").lie;
  const auto& z = sl2.ring();
  EXPECT_EQ(sl2.bracket(1, 0), (std::vector<RingElement>{z.zero(), z.zero(), -z.one()}));
  EXPECT_EQ(sl2.bracket(0, 1), (std::vector<RingElement>{z.zero(), z.zero(), z.one()}));
  EXPECT_EQ(sl2.bracket(2, 2), (std::vector<RingElement>(3, z.zero())));
  EXPECT_THROW(LieAlgebra(z, Alphabet::indexed(2)).set_bracket(0, 1, {z.one(), z.one()}), Error);
  EXPECT_THROW(LieAlgebra(z, Alphabet::indexed(2)).set_bracket(1, 0, {z.one()}), Error);
}

TEST(Lie, JacobiMatchesReference) {
  Rng rng(71);
  for (const auto& ring : {RingSpec::integers_mod(5), RingSpec::integers()}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto lie = random_lie(ring, uniform(rng, 2, 4), rng);
      bool ref_ok = true;
      for (Letter i = 0; i < lie.rank(); ++i)
        for (Letter j = 0; j < i; ++j)
          for (Letter k = 0; k < j; ++k)
            for (const auto& c : ref_jacobi(lie, i, j, k))
              ref_ok = ref_ok && c.is_zero();
      const auto v = validate_lie(lie);
      EXPECT_TRUE(v.antisymmetry_failures.empty());
      EXPECT_EQ(v.ok(), ref_ok);
      for (const auto& f : v.jacobi_failures) {
        auto want = ref_jacobi(lie, f.i, f.j, f.k);
        for (std::size_t k = 0; k < want.size(); ++k)
          EXPECT_TRUE((want[k] + f.sum[k]).is_zero() || want[k] == f.sum[k]);
      }
    }
  }
}

TEST(Lie, KnownAlgebrasAreValid) {
  for (const char* name : {"sl2.lie", "heisenberg_z4.lie", "abelian.lie"})
    EXPECT_TRUE(validate_lie(*load_problem(name).lie).ok()) << name;
  EXPECT_FALSE(validate_lie(*load_problem("sl2_perturbed.lie").lie).ok());
}

TEST(Pbw, GeneratorsAndPairs) {
  const auto sl2 = *load_problem("sl2.lie").lie;
  const auto sys = build_pbw(sl2);
  ASSERT_EQ(sys.generators.size(), 3u);
  using P = std::pair<Letter, Letter>;
  EXPECT_EQ(sys.pairs, (std::vector<P>{{1, 0}, {2, 0}, {2, 1}}));
  EXPECT_EQ(format_poly(sys.generators[0]), "f e - e f + h");
  EXPECT_EQ(format_poly(sys.generators[1]), "h e - e h - 2*e");
  EXPECT_EQ(format_poly(sys.generators[2]), "h f - f h + 2*f");
  try {
    build_pbw(*load_problem("sl2_perturbed.lie").lie);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidLie);
  }
  EXPECT_NO_THROW(build_pbw(*load_problem("sl2_perturbed.lie").lie, LieCheck::Skip));
}

TEST(Pbw, CountsAreBinomial) {
  for (std::size_t n = 0; n < 12; ++n)
    for (std::size_t k = 0; k < 12; ++k)
      EXPECT_EQ(binomial(n, k), ref_binomial(n, k)) << n << " " << k;
  const auto sl2 = verify_pbw(*load_problem("sl2.lie").lie, 4);
  EXPECT_TRUE(sl2.ok());
  EXPECT_EQ(sl2.basis.counts(), (std::vector<std::size_t>{1, 3, 6, 10, 15}));
  const auto abelian = verify_pbw(*load_problem("abelian.lie").lie, 4);
  EXPECT_TRUE(abelian.ok());
  EXPECT_EQ(abelian.basis.counts(), (std::vector<std::size_t>{1, 4, 10, 20, 35}));
  const auto heis = verify_pbw(*load_problem("heisenberg_z4.lie").lie, 3);
  EXPECT_TRUE(heis.ok());
  EXPECT_EQ(heis.basis.counts(), (std::vector<std::size_t>{1, 3, 6, 10}));
}

TEST(Pbw, PerturbedTableFails) {
  const auto r = verify_pbw(*load_problem("sl2_perturbed.lie").lie, 3);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.lie.ok());
  EXPECT_EQ(r.groebner.verdict, Verdict::NotGroebner);
}

TEST(Pbw, JacobiAgreesWithBuchbergerOnRandomTables) {
  Rng rng(72);
  int valid = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto lie = random_lie(RingSpec::integers_mod(5), 3, rng);
    // Every third table is forced to satisfy Jacobi via an abelian ideal.
    if (trial % 3 == 0) {
      lie = LieAlgebra(lie.ring(), lie.basis());
      const auto& r = lie.ring();
      lie.set_bracket(1, 0, {r.zero(), r.zero(), random_element(r, rng)});
    }
    const bool jacobi = validate_lie(lie).ok();
    valid += jacobi;
    const auto sys = build_pbw(lie, LieCheck::Skip);
    EXPECT_EQ(jacobi, check_groebner(sys.generators).verdict == Verdict::IsGroebner);
  }
  EXPECT_GT(valid, 0);
}
