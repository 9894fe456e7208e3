#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ugb/critical_pairs.hpp"
#include "ugb/membership.hpp"
#include "ugb/pbw.hpp"
#include "ugb/quotient.hpp"

namespace ugb {

// Words print as space-separated symbol names, the empty word as "1".
std::string format_word(const Word& w, const Alphabet& alphabet);
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Polynomials print as "c1*w1 + c2*w2 + ..." in descending order with unit
// coefficients elided, e.g. "2*x y x - y + 3"; zero prints as "0". The
// parser also accepts '*' between symbols and powers "x^2".
std::string format_poly(const Poly& f);
Poly parse_poly(const AlgebraPtr& algebra, std::string_view text);

std::string format_step(const DivisionStep& step, const Alphabet& alphabet);
std::string format_trace(const DivisionTrace& trace, const Alphabet& alphabet,
                         std::string_view indent = "");
std::string format_report(const GBReport& report, const Alphabet& alphabet);
std::string format_basis(const QuotientBasis& basis, const Alphabet& alphabet);

/// A problem file. Grammar, one declaration per line ('#' starts a comment):
///
///   ring Z | Z/<n> | Q
///   oracle free | commutative            (default free)
///   alphabet <name> <name> ...           (ascending generator order)
///   gen <polynomial>                     (repeatable)
///   rank <n>                             (Lie block)
///   bracket <a> <b> = <c_1> ... <c_n>    (a > b; omitted pairs are zero)
///
/// `ring` comes first. Without `alphabet` a Lie block names its basis
/// x1..xn.
struct ProblemFile {
  RingSpec ring = RingSpec::integers();
  MulOracle oracle = MulOracle::FreeConcat;
  AlgebraPtr algebra;
  std::vector<Poly> generators;
  std::optional<LieAlgebra> lie;

  GenSet gen_set() const { return GenSet(algebra, generators); }
};

/// Throws ParseError with line and column.
ProblemFile parse_problem(std::string_view text);
std::string format_problem(const ProblemFile& problem);

} // namespace ugb
