#include "ugb/division.hpp"

#include <random>

namespace ugb {

GenSet::GenSet(AlgebraPtr algebra, std::vector<Poly> gens)
    : algebra_(std::move(algebra)), gens_(std::move(gens)) {
  std::vector<RingElement> inverses;
  bool unital = true;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Poly& g = gens_[i];
    if (!same_algebra(g.algebra_ptr(), algebra_))
      throw Error(Errc::AlgebraMismatch, "generator " + std::to_string(i) + " lives in another algebra");
    if (g.is_zero())
      throw Error(Errc::InvalidArgument, "generator " + std::to_string(i) + " is zero");
    if (unital && g.leading_coeff().is_unit())
      inverses.push_back(g.leading_coeff().inverse());
    else
      unital = false;
  }
  if (unital)
    lead_inverses_ = std::move(inverses);
}

std::vector<Word> GenSet::leading_words() const {
  std::vector<Word> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_)
    out.push_back(g.leading_word());
  return out;
}

void GenSet::require_unital() const {
  if (lead_inverses_)
    return;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& lc = gens_[i].leading_coeff();
    if (!lc.is_unit())
      throw Error(Errc::NotUnital, "leading coefficient " + lc.to_string() + " of generator " +
                                       std::to_string(i) + " is not a unit of " +
                                       algebra_->ring().to_string());
  }
}

const RingElement& GenSet::lead_inverse(std::size_t i) const {
  require_unital();
  return lead_inverses_->at(i);
}

namespace {

struct Match {
  std::size_t gen;
  Placement placement;
};

std::vector<Match> all_matches(const Word& lead, const GenSet& gens) {
  std::vector<Match> out;
  const Algebra& alg = gens.algebra();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto& p : alg.divisions(gens[i].leading_word(), lead))
      out.push_back({i, std::move(p)});
  return out;
}

std::optional<Match> first_match(const Word& lead, const GenSet& gens) {
  const Algebra& alg = gens.algebra();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Word& w = gens[i].leading_word();
    if (w.size() > lead.size() || !alg.divides(w, lead))
      continue;
    return Match{i, alg.divisions(w, lead).front()};
  }
  return std::nullopt;
}

DivisionStep make_step(const Poly& f, const GenSet& gens, Match m) {
  return {f.leading_coeff() * gens.lead_inverse(m.gen), std::move(m.placement.left), m.gen,
          std::move(m.placement.right)};
}

} // namespace

std::optional<DivisionStep> try_divide_step(const Poly& f, const GenSet& gens) {
  gens.require_unital();
  auto m = first_match(f.leading_word(), gens);
  if (!m)
    return std::nullopt;
  return make_step(f, gens, std::move(*m));
}

DivisionTrace divide(const Poly& f, const GenSet& gens, const Strategy& strategy,
                     std::size_t step_budget) {
  gens.require_unital();
  require_same_algebra(f, Poly(gens.algebra_ptr()));
  if (step_budget == 0)
    throw Error(Errc::InvalidArgument, "step budget must be positive");

  std::optional<std::mt19937_64> rng;
  if (const auto* seeded = std::get_if<Seeded>(&strategy))
    rng.emplace(seeded->seed);

  const RingElement one = f.ring().one();
  DivisionTrace trace{{}, Poly(f.algebra_ptr()), {}, {}};
  std::vector<Term> remainder;
  Poly work = f;
  std::size_t iterations = 0;
  while (!work.is_zero()) {
    if (++iterations > step_budget)
      throw Error(Errc::BudgetExceeded,
                  "division did not finish within " + std::to_string(step_budget) + " steps");
    trace.working_leads.push_back(work.leading_word());

    std::optional<Match> match;
    if (rng) {
      auto matches = all_matches(work.leading_word(), gens);
      if (!matches.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, matches.size() - 1);
        match = std::move(matches[pick(*rng)]);
      }
    } else {
      match = first_match(work.leading_word(), gens);
    }

    if (!match) {
      trace.peeled.push_back(work.leading());
      remainder.push_back(work.leading());
      work = work.without_leading();
      continue;
    }
    DivisionStep step = make_step(work, gens, std::move(*match));
    work = combine(work, -step.lambda, scale(one, step.left, gens[step.gen], step.right));
    trace.steps.push_back(std::move(step));
  }
  // Peeled leading words strictly decrease, so the list is already sorted.
  trace.remainder = Poly::normalize(f.algebra_ptr(), std::move(remainder));
  return trace;
}

Poly expand_steps(const std::vector<DivisionStep>& steps, const GenSet& gens) {
  Poly sum(gens.algebra_ptr());
  const RingElement one = gens.algebra().ring().one();
  for (const auto& s : steps)
    sum = combine(sum, s.lambda, scale(one, s.left, gens[s.gen], s.right));
  return sum;
}

Poly normal_form(const Poly& f, const GenSet& gens, Strictness strictness) {
  gens.require_unital();
  if (strictness == Strictness::Strict && !gens.groebner_verified())
    throw Error(Errc::NotAGroebnerBasis,
                "normal forms require a verified Groebner basis (use exploratory mode for G-normal "
                "remainders)");
  return divide(f, gens).remainder;
}

} // namespace ugb
