#pragma once

#include <span>
#include <vector>

#include "ugb/algebra.hpp"

namespace ugb {

struct Term {
  RingElement coeff;
  Word word;
  friend bool operator==(const Term&, const Term&) = default;
};

/// An element of A: nonzero terms with distinct words, strictly descending
/// in the algebra's order, so terms()[0] is the leading term. Immutable.
class Poly {
public:
  /// The zero polynomial.
  explicit Poly(AlgebraPtr algebra);

  /// Sorts, merges like terms and drops zero coefficients. Throws
  /// Errc::BasisViolation for words outside the oracle's basis and
  /// Errc::RingMismatch for coefficients from another ring.
  static Poly normalize(AlgebraPtr algebra, std::vector<Term> terms);
  static Poly monomial(AlgebraPtr algebra, RingElement coeff, Word word);
  static Poly constant(AlgebraPtr algebra, RingElement coeff);

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }
  const RingSpec& ring() const noexcept { return algebra_->ring(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// LT(f); throws Errc::ZeroPolynomial.
  const Term& leading() const;
  const Word& leading_word() const { return leading().word; }
  const RingElement& leading_coeff() const { return leading().coeff; }

  /// Longest word length; zero for the zero polynomial.
  std::size_t degree() const;

  Poly without_leading() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(const RingElement& c, const Poly& f);

  /// Throws Errc::RingMismatch, Errc::OracleMismatch or Errc::AlgebraMismatch
  /// (alphabet or order) when the algebras differ.
  friend bool operator==(const Poly& f, const Poly& g);

private:
  Poly(AlgebraPtr algebra, std::vector<Term> sorted_terms);
  friend Poly scale(const RingElement&, const Word&, const Poly&, const Word&);
  friend Poly combine(const Poly&, const RingElement&, const Poly&);

  AlgebraPtr algebra_;
  std::vector<Term> terms_;
};

/// c * (u * f * v), multiplying every word through the oracle.
Poly scale(const RingElement& c, const Word& u, const Poly& f, const Word& v);

/// f + c * g in one merge pass.
Poly combine(const Poly& f, const RingElement& c, const Poly& g);

void require_same_algebra(const Poly& f, const Poly& g);

} // namespace ugb
