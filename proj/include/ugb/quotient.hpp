#pragma once

#include <vector>

#include "ugb/division.hpp"

namespace ugb {

/// Normal words of A modulo the leading words of G, up to a degree bound.
/// These span the free module O~(G); when G is a verified Groebner basis
/// they form an R-basis of A/I in each degree.
struct QuotientBasis {
  std::vector<Word> forbidden;
  /// by_degree[d] lists the normal words of length d, ascending.
  std::vector<std::vector<Word>> by_degree;
  std::size_t max_degree = 0;
  /// False for exploratory enumerations over an unverified G.
  bool verified = false;

  std::vector<std::size_t> counts() const;
  std::vector<std::size_t> cumulative_counts() const;
  std::size_t total() const;
};

/// True iff no LM(g) divides w.
bool is_normal(const Word& w, const GenSet& gens);

/// Breadth-first enumeration; a word is extended only while it stays
/// normal. Strict mode throws Errc::NotAGroebnerBasis for an uncertified G.
QuotientBasis enumerate_basis(const GenSet& gens, std::size_t max_degree,
                              Strictness strictness = Strictness::Strict);

struct Decomposition {
  Poly ideal_part;
  Poly normal_part;
};

/// f = ideal_part + normal_part with ideal_part in I (reassembled from the
/// division steps) and normal_part supported on normal words.
Decomposition decompose(const Poly& f, const GenSet& gens,
                        Strictness strictness = Strictness::Strict);

} // namespace ugb
