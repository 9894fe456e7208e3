#include "ugb/quotient.hpp"

#include <algorithm>
#include <numeric>

namespace ugb {

std::vector<std::size_t> QuotientBasis::counts() const {
  std::vector<std::size_t> out;
  for (const auto& words : by_degree)
    out.push_back(words.size());
  return out;
}

std::vector<std::size_t> QuotientBasis::cumulative_counts() const {
  auto out = counts();
  std::partial_sum(out.begin(), out.end(), out.begin());
  return out;
}

std::size_t QuotientBasis::total() const {
  const auto c = counts();
  return std::accumulate(c.begin(), c.end(), std::size_t{0});
}

bool is_normal(const Word& w, const GenSet& gens) {
  const Algebra& alg = gens.algebra();
  return std::none_of(gens.begin(), gens.end(),
                      [&](const Poly& g) { return alg.divides(g.leading_word(), w); });
}

namespace {

// Prefixes of w are known normal, so only forbidden words that end at the
// new last letter can occur (free case). The commutative case has no
// positional structure and rechecks divisibility.
bool extension_is_normal(const Word& w, const std::vector<Word>& forbidden, const Algebra& alg) {
  if (alg.oracle() == MulOracle::CommutativeMerge) {
    return std::none_of(forbidden.begin(), forbidden.end(),
                        [&](const Word& f) { return alg.divides(f, w); });
  }
  for (const auto& f : forbidden) {
    if (f.size() > w.size())
      continue;
    if (std::equal(f.begin(), f.end(), w.end() - static_cast<std::ptrdiff_t>(f.size())))
      return false;
  }
  return true;
}

} // namespace

QuotientBasis enumerate_basis(const GenSet& gens, std::size_t max_degree, Strictness strictness) {
  if (strictness == Strictness::Strict && !gens.groebner_verified())
    throw Error(Errc::NotAGroebnerBasis,
                "quotient bases require a verified Groebner basis (use exploratory mode for "
                "G-normal words)");
  const Algebra& alg = gens.algebra();
  QuotientBasis basis;
  basis.forbidden = gens.leading_words();
  basis.max_degree = max_degree;
  basis.verified = gens.groebner_verified();

  std::vector<Word> level;
  if (extension_is_normal(Word{}, basis.forbidden, alg))
    level.push_back(Word{});
  basis.by_degree.push_back(level);
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : level) {
      const Letter start =
          alg.oracle() == MulOracle::CommutativeMerge && !w.empty() ? w[w.size() - 1] : Letter{0};
      for (Letter a = start; a < alg.rank(); ++a) {
        Word candidate = w * Word{a};
        if (extension_is_normal(candidate, basis.forbidden, alg))
          next.push_back(std::move(candidate));
      }
    }
    std::sort(next.begin(), next.end(), [&](const Word& a, const Word& b) { return alg.less(a, b); });
    basis.by_degree.push_back(next);
    level = std::move(next);
  }
  return basis;
}

Decomposition decompose(const Poly& f, const GenSet& gens, Strictness strictness) {
  gens.require_unital();
  if (strictness == Strictness::Strict && !gens.groebner_verified())
    throw Error(Errc::NotAGroebnerBasis, "decomposition requires a verified Groebner basis");
  auto trace = divide(f, gens);
  Decomposition out{expand_steps(trace.steps, gens), std::move(trace.remainder)};
  if (!(out.ideal_part + out.normal_part == f))
    throw std::logic_error("division trace does not reconstruct its input");
  return out;
}

} // namespace ugb
