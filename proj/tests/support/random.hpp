#pragma once

// Hand-rolled generators for property tests. Everything is driven by an
// explicit std::mt19937_64 so failures replay from the seed.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ugb/division.hpp"
#include "ugb/pbw.hpp"

namespace ugb::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline std::int64_t uniform_signed(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline RingElement random_element(const RingSpec& ring, Rng& rng, std::int64_t bound = 9) {
  switch (ring.kind()) {
  case RingKind::Integers:
    return ring.from_integer(uniform_signed(rng, -bound, bound));
  case RingKind::IntegersMod:
    return ring.from_integer(uniform_signed(rng, 0, static_cast<std::int64_t>(ring.modulus()) - 1));
  case RingKind::Rationals:
    return ring.from_fraction(uniform_signed(rng, -bound, bound), uniform_signed(rng, 1, bound));
  }
  return ring.zero();
}

inline RingElement random_nonzero(const RingSpec& ring, Rng& rng, std::int64_t bound = 9) {
  for (;;) {
    auto c = random_element(ring, rng, bound);
    if (!c.is_zero())
      return c;
  }
}

inline RingElement random_unit(const RingSpec& ring, Rng& rng) {
  for (;;) {
    auto c = random_nonzero(ring, rng);
    if (c.is_unit())
      return c;
  }
}

inline Word random_word(std::size_t rank, std::size_t length, Rng& rng) {
  std::vector<Letter> letters(length);
  for (auto& l : letters)
    l = static_cast<Letter>(uniform(rng, 0, rank - 1));
  return Word(std::move(letters));
}

/// A basis word of the algebra (sorted under the commutative oracle).
inline Word random_basis_word(const Algebra& a, std::size_t length, Rng& rng) {
  Word w = random_word(a.rank(), length, rng);
  if (a.oracle() == MulOracle::CommutativeMerge) {
    std::vector<Letter> v(w.begin(), w.end());
    std::sort(v.begin(), v.end());
    w = Word(std::move(v));
  }
  return w;
}

inline Poly random_poly(const AlgebraPtr& a, std::size_t max_degree, std::size_t max_terms, Rng& rng) {
  std::vector<Term> terms;
  const auto n = uniform(rng, 0, max_terms);
  for (std::size_t t = 0; t < n; ++t)
    terms.push_back({random_element(a->ring(), rng),
                     random_basis_word(*a, uniform(rng, 0, max_degree), rng)});
  return Poly::normalize(a, std::move(terms));
}

/// A polynomial whose leading term has degree exactly `degree` and a unit
/// coefficient; lower terms are random of smaller degree.
inline Poly random_unital_poly(const AlgebraPtr& a, std::size_t degree, std::size_t tail_terms,
                               Rng& rng) {
  std::vector<Term> terms{{random_unit(a->ring(), rng), random_basis_word(*a, degree, rng)}};
  for (std::size_t t = 0; t < tail_terms && degree > 0; ++t)
    terms.push_back({random_element(a->ring(), rng),
                     random_basis_word(*a, uniform(rng, 0, degree - 1), rng)});
  return Poly::normalize(a, std::move(terms));
}

/// Antisymmetric by construction: only the i > j constants are drawn.
inline LieAlgebra random_lie(const RingSpec& ring, std::size_t rank, Rng& rng) {
  LieAlgebra lie(ring, Alphabet::indexed(rank));
  for (Letter i = 0; i < rank; ++i)
    for (Letter j = 0; j < i; ++j) {
      std::vector<RingElement> c;
      for (std::size_t k = 0; k < rank; ++k)
        c.push_back(random_element(ring, rng));
      lie.set_bracket(i, j, std::move(c));
    }
  return lie;
}

} // namespace ugb::testing
