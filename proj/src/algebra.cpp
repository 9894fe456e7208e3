#include "ugb/algebra.hpp"

#include <algorithm>
#include <iterator>

namespace ugb {

Algebra::Algebra(RingSpec ring, Alphabet alphabet, MulOracle oracle, OrderSpec order)
    : ring_(std::move(ring)), alphabet_(std::move(alphabet)), oracle_(oracle), order_(order) {}

std::shared_ptr<const Algebra> Algebra::make(RingSpec ring, Alphabet alphabet, MulOracle oracle,
                                             OrderSpec order) {
  return std::make_shared<const Algebra>(std::move(ring), std::move(alphabet), oracle, order);
}

bool Algebra::in_basis(const Word& w) const {
  for (Letter l : w)
    if (l >= rank())
      return false;
  if (oracle_ == MulOracle::CommutativeMerge)
    return std::is_sorted(w.begin(), w.end());
  return true;
}

Word Algebra::multiply(const Word& a, const Word& b) const {
  if (oracle_ == MulOracle::FreeConcat)
    return a * b;
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Word(std::move(out));
}

Word Algebra::multiply(const Word& u, const Word& w, const Word& v) const {
  return multiply(multiply(u, w), v);
}

std::vector<Placement> Algebra::divisions(const Word& divisor, const Word& word) const {
  if (oracle_ == MulOracle::FreeConcat)
    return factorizations(divisor, word);
  if (!std::includes(word.begin(), word.end(), divisor.begin(), divisor.end()))
    return {};
  std::vector<Letter> quotient;
  std::set_difference(word.begin(), word.end(), divisor.begin(), divisor.end(),
                      std::back_inserter(quotient));
  return {Placement{Word(std::move(quotient)), Word{}}};
}

bool Algebra::divides(const Word& divisor, const Word& word) const {
  if (oracle_ == MulOracle::FreeConcat)
    return is_factor(divisor, word);
  return std::includes(word.begin(), word.end(), divisor.begin(), divisor.end());
}

std::vector<Overlap> Algebra::ambiguities(const Word& w, const Word& w2, Pairing pairing) const {
  if (oracle_ == MulOracle::FreeConcat)
    return overlaps(w, w2, pairing);
  if (pairing == Pairing::Self)
    return {};
  std::vector<Letter> lcm;
  std::set_union(w.begin(), w.end(), w2.begin(), w2.end(), std::back_inserter(lcm));
  Word ambiguity(std::move(lcm));
  Overlap o;
  o.kind = OverlapKind::Lcm;
  o.first = divisions(w, ambiguity).front();
  o.second = divisions(w2, ambiguity).front();
  o.ambiguity = std::move(ambiguity);
  return {std::move(o)};
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

} // namespace ugb
