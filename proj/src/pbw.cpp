#include "ugb/pbw.hpp"

#include <algorithm>

namespace ugb {

LieAlgebra::LieAlgebra(RingSpec ring, Alphabet basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

void LieAlgebra::set_bracket(Letter i, Letter j, std::vector<RingElement> coeffs) {
  if (i >= rank() || j >= rank() || i <= j)
    throw Error(Errc::InvalidArgument, "brackets are given for basis indices i > j only");
  if (coeffs.size() != rank())
    throw Error(Errc::InvalidArgument, "bracket needs " + std::to_string(rank()) + " coefficients");
  for (const auto& c : coeffs)
    if (!(c.ring() == ring_))
      throw Error(Errc::RingMismatch, "structure constant from " + c.ring().to_string());
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const RingElement& c) { return c.is_zero(); }))
    upper_.erase({i, j});
  else
    upper_[{i, j}] = std::move(coeffs);
}

std::vector<RingElement> LieAlgebra::bracket(Letter i, Letter j) const {
  std::vector<RingElement> zero(rank(), ring_.zero());
  if (i == j)
    return zero;
  const auto key = i > j ? std::pair{i, j} : std::pair{j, i};
  const auto it = upper_.find(key);
  if (it == upper_.end())
    return zero;
  if (i > j)
    return it->second;
  std::vector<RingElement> out;
  out.reserve(rank());
  for (const auto& c : it->second)
    out.push_back(-c);
  return out;
}

namespace {

using Vec = std::vector<RingElement>;

void add_scaled(Vec& acc, const RingElement& c, const Vec& v) {
  for (std::size_t k = 0; k < acc.size(); ++k)
    acc[k] = acc[k] + c * v[k];
}

// [sum_m a_m x_m, x_k]
Vec bracket_with(const LieAlgebra& lie, const Vec& a, Letter k) {
  Vec out(lie.rank(), lie.ring().zero());
  for (Letter m = 0; m < lie.rank(); ++m)
    if (!a[m].is_zero())
      add_scaled(out, a[m], lie.bracket(m, k));
  return out;
}

} // namespace

LieValidation validate_lie(const LieAlgebra& lie) {
  LieValidation report;
  const auto n = static_cast<Letter>(lie.rank());
  for (Letter i = 0; i < n; ++i) {
    for (Letter j = 0; j < n; ++j) {
      const Vec a = lie.bracket(i, j);
      const Vec b = lie.bracket(j, i);
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (!(a[k] + b[k]).is_zero()) {
          report.antisymmetry_failures.emplace_back(i, j);
          break;
        }
      }
    }
  }
  for (Letter i = 0; i < n; ++i) {
    for (Letter j = 0; j < i; ++j) {
      for (Letter k = 0; k < j; ++k) {
        Vec sum = bracket_with(lie, lie.bracket(i, j), k);
        add_scaled(sum, lie.ring().one(), bracket_with(lie, lie.bracket(j, k), i));
        add_scaled(sum, lie.ring().one(), bracket_with(lie, lie.bracket(k, i), j));
        if (std::any_of(sum.begin(), sum.end(), [](const RingElement& c) { return !c.is_zero(); }))
          report.jacobi_failures.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  return report;
}

PbwSystem build_pbw(const LieAlgebra& lie, LieCheck check) {
  if (check == LieCheck::Require) {
    const auto validation = validate_lie(lie);
    if (!validation.ok()) {
      std::string where;
      if (!validation.jacobi_failures.empty()) {
        const auto& v = validation.jacobi_failures.front();
        where = " (Jacobi fails on " + lie.basis().name(v.i) + ", " + lie.basis().name(v.j) + ", " +
                lie.basis().name(v.k) + ")";
      }
      throw Error(Errc::InvalidLie, "structure constants do not define a Lie algebra" + where);
    }
  }
  auto algebra = Algebra::make(lie.ring(), lie.basis(), MulOracle::FreeConcat);
  const RingSpec& ring = lie.ring();
  std::vector<Poly> gens;
  std::vector<std::pair<Letter, Letter>> pairs;
  for (Letter i = 0; i < lie.rank(); ++i) {
    for (Letter j = 0; j < i; ++j) {
      std::vector<Term> terms;
      terms.push_back({ring.one(), Word{i, j}});
      terms.push_back({-ring.one(), Word{j, i}});
      const auto br = lie.bracket(i, j);
      for (Letter k = 0; k < lie.rank(); ++k)
        if (!br[k].is_zero())
          terms.push_back({-br[k], Word{k}});
      gens.push_back(Poly::normalize(algebra, std::move(terms)));
      pairs.emplace_back(i, j);
    }
  }
  return {algebra, GenSet(algebra, std::move(gens)), std::move(pairs)};
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  Integer out = 1;
  for (std::size_t i = 1; i <= k; ++i)
    out = out * (n - k + i) / i;
  return out;
}

PbwReport verify_pbw(const LieAlgebra& lie, std::size_t max_degree) {
  PbwReport report;
  report.lie = validate_lie(lie);
  const auto system = build_pbw(lie, LieCheck::Skip);
  report.groebner = check_groebner(system.generators);
  if (report.groebner.verdict == Verdict::IsGroebner)
    report.basis = enumerate_basis(certify_groebner(system.generators), max_degree);
  else
    report.basis = enumerate_basis(system.generators, max_degree, Strictness::Exploratory);

  report.all_nondecreasing = true;
  for (const auto& level : report.basis.by_degree)
    for (const auto& w : level)
      if (!std::is_sorted(w.begin(), w.end()))
        report.all_nondecreasing = false;

  report.counts_match = true;
  const auto counts = report.basis.counts();
  for (std::size_t d = 0; d <= max_degree; ++d) {
    const Integer expected = lie.rank() == 0 ? Integer(d == 0 ? 1 : 0)
                                             : binomial(lie.rank() + d - 1, d);
    report.expected_counts.push_back(expected);
    if (Integer(counts[d]) != expected)
      report.counts_match = false;
  }
  return report;
}

} // namespace ugb
