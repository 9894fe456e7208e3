#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/random.hpp"
#include "ugb/algebra.hpp"

using namespace ugb;
using namespace ugb::testing;

TEST(Words, ConcatenationAndSlices) {
  const Word a{0, 1}, b{2};
  EXPECT_EQ(a * b, (Word{0, 1, 2}));
  EXPECT_EQ(Word{} * a, a);
  EXPECT_EQ((Word{0, 1, 2, 3}).slice(1, 2), (Word{1, 2}));
}

TEST(Words, Alphabet) {
  Alphabet a({"y", "x"});
  EXPECT_EQ(a.find("x"), Letter{1});
  EXPECT_FALSE(a.find("z"));
  EXPECT_EQ(Alphabet::indexed(3).names(), (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_THROW(Alphabet({"x", "x"}), Error);
  EXPECT_THROW(Alphabet({""}), Error);
}

TEST(Words, DegLexMatchesTupleReference) {
  Rng rng(21);
  for (int trial = 0; trial < 5000; ++trial) {
    const Word a = random_word(3, uniform(rng, 0, 5), rng);
    const Word b = random_word(3, uniform(rng, 0, 5), rng);
    EXPECT_EQ(compare(OrderSpec{}, a, b) < 0, ref_deglex_less(a, b));
    EXPECT_EQ(compare(OrderSpec{}, a, b) == 0, a == b);
  }
}

TEST(Words, DegLexSmallCases) {
  EXPECT_TRUE(compare(OrderSpec{}, Word{}, Word{0}) < 0);
  EXPECT_TRUE(compare(OrderSpec{}, Word{2}, Word{0, 0}) < 0);
  EXPECT_TRUE(compare(OrderSpec{}, Word{0, 1}, Word{1, 0}) < 0);
}

TEST(Words, OrderIsMultiplicativeAndAboveFactors) {
  Rng rng(22);
  for (int trial = 0; trial < 3000; ++trial) {
    const Word b = random_word(3, uniform(rng, 0, 4), rng);
    const Word b2 = random_word(3, uniform(rng, 0, 4), rng);
    const Word r = random_word(3, uniform(rng, 0, 3), rng);
    const Word s = random_word(3, uniform(rng, 0, 3), rng);
    if (compare(OrderSpec{}, b, b2) < 0)
      EXPECT_TRUE(compare(OrderSpec{}, r * b * s, r * b2 * s) < 0);
    if (!r.empty() || !s.empty())
      EXPECT_TRUE(compare(OrderSpec{}, b, r * b * s) < 0);
  }
}

TEST(Words, FactorizationsMatchSlidingWindow) {
  Rng rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const Word needle = random_word(2, uniform(rng, 0, 3), rng);
    const Word hay = random_word(2, uniform(rng, 0, 8), rng);
    const auto got = factorizations(needle, hay);
    const auto want = ref_occurrences(needle, hay);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].left.size(), want[i]);
      EXPECT_EQ(got[i].left * needle * got[i].right, hay);
    }
    EXPECT_EQ(is_factor(needle, hay), !want.empty());
  }
}

TEST(Words, OverlapsMatchExhaustiveAlignment) {
  Rng rng(24);
  for (int trial = 0; trial < 3000; ++trial) {
    const Word w = random_word(2, uniform(rng, 1, 4), rng);
    const Word w2 = trial % 5 == 0 ? w : random_word(2, uniform(rng, 1, 4), rng);
    const bool self = trial % 10 == 0;
    const auto got = overlaps(w, w2, self ? Pairing::Self : Pairing::Distinct);
    EXPECT_EQ(as_ref(got), ref_overlaps(w, w2, self)) << "trial " << trial;
    EXPECT_EQ(as_ref(got).size(), got.size());
    for (const auto& o : got) {
      EXPECT_EQ(o.first.left * w * o.first.right, o.ambiguity);
      EXPECT_EQ(o.second.left * w2 * o.second.right, o.ambiguity);
    }
  }
}

TEST(Words, OverlapExamples) {
  // xx with itself: the single proper overlap xxx.
  const auto self = overlaps(Word{0, 0}, Word{0, 0}, Pairing::Self);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0].ambiguity, (Word{0, 0, 0}));
  EXPECT_EQ(self[0].kind, OverlapKind::Proper);
  // y inside xyx, once.
  const auto inc = overlaps(Word{0, 1, 0}, Word{1});
  ASSERT_EQ(inc.size(), 1u);
  EXPECT_EQ(inc[0].kind, OverlapKind::Inclusion);
  EXPECT_EQ(inc[0].second.left, Word{0});
  EXPECT_TRUE(overlaps(Word{0, 1}, Word{2}).empty());
  EXPECT_THROW(overlaps(Word{}, Word{0}), Error);
  EXPECT_THROW(overlaps(Word{0}, Word{1}, Pairing::Self), Error);
  // Two generators sharing xx: both proper overlaps and the coincidence.
  const auto twins = overlaps(Word{0, 0}, Word{0, 0});
  ASSERT_EQ(twins.size(), 3u);
  EXPECT_EQ(twins[2].ambiguity, (Word{0, 0}));
}

TEST(Algebra, FreeOracle) {
  const auto a = Algebra::make(RingSpec::integers(), Alphabet({"x", "y"}));
  EXPECT_EQ(a->multiply(Word{1}, Word{0}), (Word{1, 0}));
  EXPECT_TRUE(a->in_basis(Word{1, 0}));
  EXPECT_FALSE(a->in_basis(Word{2}));
  EXPECT_EQ(a->divisions(Word{0}, Word{0, 1, 0}).size(), 2u);
}

TEST(Algebra, CommutativeOracle) {
  const auto a = Algebra::make(RingSpec::rationals(), Alphabet({"x", "y", "z"}),
                               MulOracle::CommutativeMerge);
  EXPECT_EQ(a->multiply(Word{0, 2}, Word{1, 1}), (Word{0, 1, 1, 2}));
  EXPECT_FALSE(a->in_basis(Word{1, 0}));
  EXPECT_TRUE(a->divides(Word{0, 2}, Word{0, 1, 2}));
  EXPECT_FALSE(a->divides(Word{0, 0}, Word{0, 1, 2}));
  const auto amb = a->ambiguities(Word{0, 0}, Word{0, 1});
  ASSERT_EQ(amb.size(), 1u);
  EXPECT_EQ(amb[0].ambiguity, (Word{0, 0, 1}));
  EXPECT_TRUE(a->ambiguities(Word{0, 1}, Word{0, 1}, Pairing::Self).empty());
  EXPECT_EQ(a->ambiguities(Word{0, 1}, Word{0, 1}).size(), 1u);
}

TEST(Algebra, CommutativeDivisionsReconstruct) {
  Rng rng(25);
  const auto a = Algebra::make(RingSpec::integers(), Alphabet::indexed(3),
                               MulOracle::CommutativeMerge);
  for (int trial = 0; trial < 1000; ++trial) {
    const Word d = random_basis_word(*a, uniform(rng, 0, 3), rng);
    const Word w = random_basis_word(*a, uniform(rng, 0, 5), rng);
    const auto places = a->divisions(d, w);
    EXPECT_EQ(!places.empty(), ref_divides(d, w, true));
    for (const auto& p : places)
      EXPECT_EQ(a->multiply(p.left, d, p.right), w);
  }
}

TEST(Algebra, CommutativeOrderAxiomsOnSortedWords) {
  Rng rng(26);
  const auto a = Algebra::make(RingSpec::integers(), Alphabet::indexed(3),
                               MulOracle::CommutativeMerge);
  for (int trial = 0; trial < 3000; ++trial) {
    const Word b = random_basis_word(*a, uniform(rng, 0, 4), rng);
    const Word b2 = random_basis_word(*a, uniform(rng, 0, 4), rng);
    const Word r = random_basis_word(*a, uniform(rng, 1, 3), rng);
    if (a->less(b, b2))
      EXPECT_TRUE(a->less(a->multiply(r, b), a->multiply(r, b2)));
    EXPECT_TRUE(a->less(b, a->multiply(r, b)));
  }
}
