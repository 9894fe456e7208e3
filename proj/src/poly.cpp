#include "ugb/poly.hpp"

#include <algorithm>
#include <cassert>

namespace ugb {

void require_same_algebra(const Poly& f, const Poly& g) {
  if (!same_algebra(f.algebra_ptr(), g.algebra_ptr())) {
    if (!(f.ring() == g.ring()))
      throw Error(Errc::RingMismatch, "polynomials over " + f.ring().to_string() + " and " +
                                          g.ring().to_string());
    if (f.algebra().oracle() != g.algebra().oracle())
      throw Error(Errc::OracleMismatch, "polynomials use different multiplication oracles");
    throw Error(Errc::AlgebraMismatch, "polynomials live in different algebras");
  }
}

Poly::Poly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

Poly::Poly(AlgebraPtr algebra, std::vector<Term> sorted_terms)
    : algebra_(std::move(algebra)), terms_(std::move(sorted_terms)) {}

Poly Poly::normalize(AlgebraPtr algebra, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (!(t.coeff.ring() == algebra->ring()))
      throw Error(Errc::RingMismatch, "coefficient from " + t.coeff.ring().to_string() +
                                          " in a polynomial over " + algebra->ring().to_string());
    if (!algebra->in_basis(t.word))
      throw Error(Errc::BasisViolation, "word is not a basis monomial of this algebra");
  }
  const Algebra& alg = *algebra;
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& a, const Term& b) { return alg.less(b.word, a.word); });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().word == t.word)
      merged.back().coeff = merged.back().coeff + t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  return Poly(std::move(algebra), std::move(merged));
}

Poly Poly::monomial(AlgebraPtr algebra, RingElement coeff, Word word) {
  std::vector<Term> terms;
  terms.push_back({std::move(coeff), std::move(word)});
  return normalize(std::move(algebra), std::move(terms));
}

Poly Poly::constant(AlgebraPtr algebra, RingElement coeff) {
  return monomial(std::move(algebra), std::move(coeff), Word{});
}

const Term& Poly::leading() const {
  if (terms_.empty())
    throw Error(Errc::ZeroPolynomial, "the zero polynomial has no leading term");
  return terms_.front();
}

std::size_t Poly::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_)
    d = std::max(d, t.word.size());
  return d;
}

Poly Poly::without_leading() const {
  if (terms_.empty())
    throw Error(Errc::ZeroPolynomial, "the zero polynomial has no leading term");
  return Poly(algebra_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Poly Poly::operator-() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_)
    out.push_back({-t.coeff, t.word});
  return Poly(algebra_, std::move(out));
}

Poly combine(const Poly& f, const RingElement& c, const Poly& g) {
  require_same_algebra(f, g);
  const Algebra& alg = f.algebra();
  std::vector<Term> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  auto i = f.terms_.begin();
  auto j = g.terms_.begin();
  while (i != f.terms_.end() || j != g.terms_.end()) {
    if (j == g.terms_.end()) {
      out.push_back(*i++);
      continue;
    }
    if (i == f.terms_.end()) {
      auto coeff = c * j->coeff;
      if (!coeff.is_zero())
        out.push_back({std::move(coeff), j->word});
      ++j;
      continue;
    }
    const auto cmp = alg.compare(i->word, j->word);
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      auto coeff = c * j->coeff;
      if (!coeff.is_zero())
        out.push_back({std::move(coeff), j->word});
      ++j;
    } else {
      auto coeff = i->coeff + c * j->coeff;
      if (!coeff.is_zero())
        out.push_back({std::move(coeff), i->word});
      ++i;
      ++j;
    }
  }
  return Poly(f.algebra_, std::move(out));
}

Poly operator+(const Poly& f, const Poly& g) { return combine(f, f.ring().one(), g); }

Poly operator-(const Poly& f, const Poly& g) { return combine(f, -f.ring().one(), g); }

Poly scale(const RingElement& c, const Word& u, const Poly& f, const Word& v) {
  const Algebra& alg = f.algebra();
  std::vector<Term> out;
  out.reserve(f.terms_.size());
  for (const auto& t : f.terms_) {
    auto coeff = c * t.coeff;
    if (coeff.is_zero())
      continue;
    out.push_back({std::move(coeff), alg.multiply(u, t.word, v)});
  }
  // Admissibility: r*b*s < r*b'*s whenever b < b', so the order survives.
  assert(std::is_sorted(out.begin(), out.end(),
                        [&](const Term& a, const Term& b) { return alg.less(b.word, a.word); }));
  return Poly(f.algebra_, std::move(out));
}

Poly operator*(const RingElement& c, const Poly& f) { return scale(c, Word{}, f, Word{}); }

Poly operator*(const Poly& f, const Poly& g) {
  require_same_algebra(f, g);
  std::vector<Term> out;
  out.reserve(f.size() * g.size());
  const Algebra& alg = f.algebra();
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_)
      out.push_back({a.coeff * b.coeff, alg.multiply(a.word, b.word)});
  return Poly::normalize(f.algebra_, std::move(out));
}

bool operator==(const Poly& f, const Poly& g) {
  require_same_algebra(f, g);
  return f.terms_ == g.terms_;
}

} // namespace ugb
