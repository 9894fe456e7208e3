#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ugb/critical_pairs.hpp"
#include "ugb/quotient.hpp"

namespace ugb {

/// A Lie algebra free of rank n over R, given by structure constants
/// [x_i, x_j] = sum_k c_ij^k x_k stored for i > j only.
class LieAlgebra {
public:
  LieAlgebra(RingSpec ring, Alphabet basis);

  const RingSpec& ring() const noexcept { return ring_; }
  const Alphabet& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Sets [x_i, x_j] for i > j; throws Errc::InvalidArgument otherwise.
  void set_bracket(Letter i, Letter j, std::vector<RingElement> coeffs);

  /// Coefficient vector of [x_i, x_j], extended by antisymmetry.
  std::vector<RingElement> bracket(Letter i, Letter j) const;

  /// The stored (i > j) brackets that are nonzero.
  const std::map<std::pair<Letter, Letter>, std::vector<RingElement>>& stored() const noexcept {
    return upper_;
  }

private:
  RingSpec ring_;
  Alphabet basis_;
  std::map<std::pair<Letter, Letter>, std::vector<RingElement>> upper_;
};

struct JacobiViolation {
  Letter i, j, k;
  std::vector<RingElement> sum;
};

struct LieValidation {
  std::vector<std::pair<Letter, Letter>> antisymmetry_failures;
  std::vector<JacobiViolation> jacobi_failures;
  bool ok() const { return antisymmetry_failures.empty() && jacobi_failures.empty(); }
};

/// Checks antisymmetry on every pair and the Jacobi identity on every
/// triple i > j > k (the Jacobi sum is alternating, so this covers all).
LieValidation validate_lie(const LieAlgebra& lie);

struct PbwSystem {
  AlgebraPtr algebra;
  /// g_{i,j} = x_i x_j - x_j x_i - [x_i, x_j] for i > j, listed by i then j.
  GenSet generators;
  std::vector<std::pair<Letter, Letter>> pairs;
};

enum class LieCheck { Require, Skip };

/// Builds the generators in the free algebra with DegLex. With
/// LieCheck::Require an invalid bracket throws Errc::InvalidLie.
PbwSystem build_pbw(const LieAlgebra& lie, LieCheck check = LieCheck::Require);

struct PbwReport {
  LieValidation lie;
  GBReport groebner;
  QuotientBasis basis;
  std::vector<Integer> expected_counts;
  bool all_nondecreasing = false;
  bool counts_match = false;

  bool ok() const {
    return lie.ok() && groebner.verdict == Verdict::IsGroebner && all_nondecreasing && counts_match;
  }
};

/// Runs the Buchberger check on the PBW system, enumerates normal words up
/// to max_degree and compares them with the non-decreasing words, whose
/// count in degree d is C(n + d - 1, d).
PbwReport verify_pbw(const LieAlgebra& lie, std::size_t max_degree);

Integer binomial(std::size_t n, std::size_t k);

} // namespace ugb
