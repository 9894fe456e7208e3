#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ugb/poly.hpp"

namespace ugb {

class GenSet;
GenSet certify_groebner(const GenSet& gens);

/// A finite list of divisors G = {g_i} sharing one algebra. Carries a
/// unital certificate (the inverses of the leading coefficients) when
/// every LC(g_i) is a unit, and a Groebner flag that only
/// certify_groebner can set.
class GenSet {
public:
  explicit GenSet(AlgebraPtr algebra, std::vector<Poly> gens = {});

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const Algebra& algebra() const noexcept { return *algebra_; }

  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  const Poly& operator[](std::size_t i) const { return gens_.at(i); }
  const std::vector<Poly>& polys() const noexcept { return gens_; }
  auto begin() const noexcept { return gens_.begin(); }
  auto end() const noexcept { return gens_.end(); }

  std::vector<Word> leading_words() const;

  bool is_unital() const noexcept { return lead_inverses_.has_value(); }
  /// Throws Errc::NotUnital naming the first non-unit leading coefficient.
  void require_unital() const;
  /// LC(g_i)^{-1}; throws Errc::NotUnital.
  const RingElement& lead_inverse(std::size_t i) const;

  bool groebner_verified() const noexcept { return groebner_verified_; }

private:
  friend GenSet certify_groebner(const GenSet& gens);

  AlgebraPtr algebra_;
  std::vector<Poly> gens_;
  std::optional<std::vector<RingElement>> lead_inverses_;
  bool groebner_verified_ = false;
};

/// One reduction f_i := f_{i-1} - lambda * left * g_gen * right.
struct DivisionStep {
  RingElement lambda;
  Word left;
  std::size_t gen = 0;
  Word right;
};

struct DivisionTrace {
  std::vector<DivisionStep> steps;
  Poly remainder;
  /// Leading terms moved to the remainder, in the order they were peeled.
  std::vector<Term> peeled;
  /// LM(f_0), LM(f_1), ... of the nonzero working polynomials.
  std::vector<Word> working_leads;
};

/// Lowest generator index, then leftmost factorization.
struct FirstMatch {};
/// Uniform choice among all (generator, factorization) matches, driven by
/// a generator seeded once per division.
struct Seeded {
  std::uint64_t seed = 0;
};
using Strategy = std::variant<FirstMatch, Seeded>;

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// The FirstMatch divisor for LT(f), with lambda = LC(f) * LC(g)^{-1}.
/// Throws Errc::NotUnital and Errc::ZeroPolynomial.
std::optional<DivisionStep> try_divide_step(const Poly& f, const GenSet& gens);

/// Runs the division loop: peel LT(f) when no LM(g) divides LM(f),
/// otherwise cancel it. Divisors are drawn from G only, so the remainder is
/// G-normal. Throws Errc::NotUnital and Errc::BudgetExceeded.
DivisionTrace divide(const Poly& f, const GenSet& gens, const Strategy& strategy = FirstMatch{},
                     std::size_t step_budget = kDefaultStepBudget);

/// sum_k lambda_k * left_k * g_{gen_k} * right_k.
Poly expand_steps(const std::vector<DivisionStep>& steps, const GenSet& gens);

enum class Strictness {
  /// Requires a Groebner-certified G; throws Errc::NotAGroebnerBasis.
  Strict,
  /// Accepts any unital G; results are only G-normal.
  Exploratory,
};

Poly normal_form(const Poly& f, const GenSet& gens, Strictness strictness = Strictness::Strict);

} // namespace ugb
