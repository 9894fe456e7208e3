#include "ugb/critical_pairs.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace ugb {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::IsGroebner: return "IsGroebner";
  case Verdict::NotGroebner: return "NotGroebner";
  case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::vector<SPoly> s_polynomials(const GenSet& gens) {
  gens.require_unital();
  const Algebra& alg = gens.algebra();
  const RingElement one = alg.ring().one();
  std::vector<SPoly> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      for (auto& o : alg.ambiguities(gens[i].leading_word(), gens[j].leading_word(),
                                       i == j ? Pairing::Self : Pairing::Distinct)) {
        // LC(u*g*v) = LC(g) for monic single-word oracles.
        Poly a = scale(gens.lead_inverse(i), o.first.left, gens[i], o.first.right);
        Poly b = scale(gens.lead_inverse(j), o.second.left, gens[j], o.second.right);
        Poly value = a - b;
        out.push_back({i, j, std::move(o), std::move(value)});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const SPoly& a, const SPoly& b) {
    return alg.less(a.overlap.ambiguity, b.overlap.ambiguity);
  });
  return out;
}

std::vector<TelescopeTerm> telescope(std::span<const Poly> fs, std::span<const RingElement> cs) {
  if (fs.empty() || fs.size() != cs.size())
    throw Error(Errc::PreconditionViolated, "telescope needs one coefficient per polynomial");
  for (const auto& f : fs) {
    require_same_algebra(f, fs.front());
    if (f.is_zero())
      throw Error(Errc::PreconditionViolated, "telescope inputs must be nonzero");
    if (!(f.leading_word() == fs.front().leading_word()))
      throw Error(Errc::PreconditionViolated, "telescope inputs must share one leading word");
    if (!f.leading_coeff().is_unit())
      throw Error(Errc::PreconditionViolated, "leading coefficient " + f.leading_coeff().to_string() +
                                                  " is not a unit");
  }
  const RingSpec& ring = fs.front().ring();
  RingElement running = ring.zero();
  std::vector<RingElement> partial;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    running = running + cs[i] * fs[i].leading_coeff();
    partial.push_back(running);
  }
  if (!running.is_zero())
    throw Error(Errc::PreconditionViolated,
                "sum of c_i * LC(f_i) is " + running.to_string() + ", not zero");

  std::vector<TelescopeTerm> out;
  for (std::size_t k = 0; k + 1 < fs.size(); ++k) {
    Poly diff = fs[k].leading_coeff().inverse() * fs[k] -
                fs[k + 1].leading_coeff().inverse() * fs[k + 1];
    out.push_back({partial[k], std::move(diff)});
  }
  return out;
}

namespace {

struct PairOutcome {
  std::optional<DivisionTrace> trace;
  bool budget_exceeded = false;
};

PairOutcome reduce_pair(const SPoly& s, const GenSet& gens) {
  try {
    return {divide(s.value, gens), false};
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded)
      throw;
    return {std::nullopt, true};
  }
}

// Pair reductions are independent; results land in their own slots so the
// report does not depend on scheduling.
std::vector<PairOutcome> reduce_all(const std::vector<SPoly>& spolys, const GenSet& gens) {
  std::vector<PairOutcome> out(spolys.size());
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), spolys.size() / 16 + 1);
  if (workers <= 1) {
    for (std::size_t k = 0; k < spolys.size(); ++k)
      out[k] = reduce_pair(spolys[k], gens);
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < spolys.size(); k += workers)
        out[k] = reduce_pair(spolys[k], gens);
    }));
  }
  for (auto& t : tasks)
    t.get();
  return out;
}

} // namespace

GBReport check_groebner(const GenSet& gens, std::optional<std::size_t> max_ambiguity_degree) {
  auto spolys = s_polynomials(gens);
  if (max_ambiguity_degree) {
    std::erase_if(spolys, [&](const SPoly& s) {
      return s.overlap.ambiguity.size() > *max_ambiguity_degree;
    });
  }
  auto outcomes = reduce_all(spolys, gens);

  GBReport report;
  report.pairs_checked = spolys.size();
  bool inconclusive = false;
  for (std::size_t k = 0; k < spolys.size(); ++k) {
    if (outcomes[k].budget_exceeded) {
      inconclusive = true;
      continue;
    }
    if (!outcomes[k].trace->remainder.is_zero())
      report.witnesses.push_back({std::move(spolys[k]), std::move(*outcomes[k].trace)});
  }
  if (!report.witnesses.empty())
    report.verdict = Verdict::NotGroebner;
  else
    report.verdict = inconclusive ? Verdict::Inconclusive : Verdict::IsGroebner;
  return report;
}

GenSet certify_groebner(const GenSet& gens) {
  const auto report = check_groebner(gens);
  if (report.verdict != Verdict::IsGroebner)
    throw Error(Errc::NotAGroebnerBasis, std::string("Buchberger check returned ") +
                                             std::string(to_string(report.verdict)));
  GenSet out = gens;
  out.groebner_verified_ = true;
  return out;
}

CompletionResult complete(const GenSet& gens, std::size_t max_degree, std::size_t max_rounds) {
  gens.require_unital();
  GenSet current = gens;
  for (std::size_t round = 1; round <= max_rounds; ++round) {
    const auto report = check_groebner(current, max_degree);
    if (report.verdict == Verdict::Inconclusive)
      throw Error(Errc::BudgetExceeded, "an S-polynomial reduction exceeded the step budget");
    if (report.verdict == Verdict::IsGroebner) {
      const bool full = check_groebner(current).verdict == Verdict::IsGroebner;
      return {full ? certify_groebner(current) : current, round, full};
    }

    std::vector<Poly> next = current.polys();
    for (const auto& w : report.witnesses) {
      const Poly& r = w.trace.remainder;
      if (!r.leading_coeff().is_unit())
        throw Error(Errc::NonUnitalRemainder,
                    "remainder with leading coefficient " + r.leading_coeff().to_string() +
                        " cannot be adjoined over " + r.ring().to_string());
      Poly monic = r.leading_coeff().inverse() * r;
      if (std::find(next.begin(), next.end(), monic) == next.end())
        next.push_back(std::move(monic));
    }
    current = GenSet(current.algebra_ptr(), std::move(next));
  }
  throw Error(Errc::RoundsExceeded,
              "completion did not stabilise within " + std::to_string(max_rounds) + " rounds");
}

} // namespace ugb
