#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ugb/ring.hpp"
#include "ugb/word.hpp"

namespace ugb {

/// How two basis words multiply. Both oracles return a single monic word,
/// so products of basis words are never zero.
enum class MulOracle {
  /// Free associative algebra: uv is the concatenation.
  FreeConcat,
  /// Polynomial ring: basis words are non-decreasing and uv is the sorted
  /// merge.
  CommutativeMerge,
};

/// The ambient algebra A = R<x_1..x_n> (or R[x_1..x_n]) with its monomial
/// basis and ordering.
class Algebra {
public:
  Algebra(RingSpec ring, Alphabet alphabet, MulOracle oracle = MulOracle::FreeConcat,
          OrderSpec order = {});

  static std::shared_ptr<const Algebra> make(RingSpec ring, Alphabet alphabet,
                                             MulOracle oracle = MulOracle::FreeConcat,
                                             OrderSpec order = {});

  const RingSpec& ring() const noexcept { return ring_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  MulOracle oracle() const noexcept { return oracle_; }
  const OrderSpec& order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return alphabet_.size(); }

  /// True iff every letter is in range and, for CommutativeMerge, the word
  /// is non-decreasing.
  bool in_basis(const Word& w) const;

  Word multiply(const Word& a, const Word& b) const;
  Word multiply(const Word& u, const Word& w, const Word& v) const;

  std::strong_ordering compare(const Word& a, const Word& b) const {
    return ugb::compare(order_, a, b);
  }
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  /// All context pairs (u, v) with multiply(u, divisor, v) == word. Under
  /// FreeConcat these are the factorizations; under CommutativeMerge there is
  /// at most one, the multiset quotient placed on the left.
  std::vector<Placement> divisions(const Word& divisor, const Word& word) const;
  bool divides(const Word& divisor, const Word& word) const;

  /// The ambiguities between two leading words used for S-polynomials.
  /// FreeConcat: word overlaps. CommutativeMerge: the single lcm placement
  /// (none for a self pair).
  std::vector<Overlap> ambiguities(const Word& w, const Word& w2,
                                   Pairing pairing = Pairing::Distinct) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

private:
  RingSpec ring_;
  Alphabet alphabet_;
  MulOracle oracle_;
  OrderSpec order_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

} // namespace ugb
