#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "ugb/division.hpp"

namespace ugb {

struct Membership {
  enum class Status { Member, NotMemberAtBound };
  Status status = Status::NotMemberAtBound;
  /// For members: f = sum lambda * left * g_gen * right exactly.
  std::vector<DivisionStep> witness;

  bool is_member() const noexcept { return status == Status::Member; }
};

/// One spanning element left * g_gen * right of the truncated ideal.
struct SpanningRow {
  std::size_t gen = 0;
  Word left;
  Word right;
  Poly value;
};

/// The R-span of all products u * g * v of degree <= D, held as a
/// coefficient matrix (rows: distinct products, columns: every basis word
/// of degree <= D) together with an exact echelon form of it.
class TruncatedModule {
public:
  std::size_t degree_bound() const noexcept { return bound_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const std::vector<SpanningRow>& rows() const noexcept { return rows_; }
  const std::vector<Word>& columns() const noexcept { return columns_; }

  struct Echelon;

private:
  friend TruncatedModule build_truncation(const GenSet& gens, std::size_t degree_bound);
  friend Membership is_member(const Poly& f, const TruncatedModule& module);

  AlgebraPtr algebra_;
  std::size_t bound_ = 0;
  std::vector<SpanningRow> rows_;
  std::vector<Word> columns_;
  std::unordered_map<Word, std::size_t, WordHash> column_index_;
  std::shared_ptr<const Echelon> echelon_;
};

/// Enumerates contexts with |u| + deg(g) + |v| <= D (left contexts only under
/// CommutativeMerge), drops duplicate products, and row-reduces: Hermite
/// normal form over Z, Howell form over Z/n, reduced row echelon form over
/// Q. Throws Errc::BoundTooSmall when D is below a generator's degree.
TruncatedModule build_truncation(const GenSet& gens, std::size_t degree_bound);

/// Exact linear solve of f against the truncated span. NotMemberAtBound only
/// certifies non-membership within the degree bound. Throws
/// Errc::BoundTooSmall when f has degree above the bound.
Membership is_member(const Poly& f, const TruncatedModule& module);

} // namespace ugb
