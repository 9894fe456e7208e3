#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ugb/division.hpp"

namespace ugb {

/// S = LC(g_i)^{-1} u*g_i*v - LC(g_j)^{-1} u'*g_j*v' for one ambiguity of
/// LM(g_i) and LM(g_j).
struct SPoly {
  std::size_t first = 0;
  std::size_t second = 0;
  Overlap overlap;
  Poly value;
};

enum class Verdict { IsGroebner, NotGroebner, Inconclusive };

std::string_view to_string(Verdict v);

struct Witness {
  SPoly spoly;
  DivisionTrace trace;
};

struct GBReport {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t pairs_checked = 0;
  /// One entry per S-polynomial with a nonzero remainder.
  std::vector<Witness> witnesses;
};

/// All S-polynomials for pairs i <= j, one per ambiguity of their leading
/// words, ordered ascending by ambiguity word (ties keep pair order).
/// Throws Errc::NotUnital.
std::vector<SPoly> s_polynomials(const GenSet& gens);

struct TelescopeTerm {
  RingElement coefficient;
  /// LC(f_k)^{-1} f_k - LC(f_{k+1})^{-1} f_{k+1}
  Poly difference;
};

/// Rewrites sum c_i f_i, whose leading words cancel, as
/// sum_k d_k S_{k,k+1} with d_k = c_1 a_1 + ... + c_k a_k.
/// Requires equal leading words, unit leading coefficients a_i and
/// sum c_i a_i = 0; throws Errc::PreconditionViolated otherwise.
std::vector<TelescopeTerm> telescope(std::span<const Poly> fs, std::span<const RingElement> cs);

/// Divides every S-polynomial by G with FirstMatch. When
/// `max_ambiguity_degree` is set only ambiguities up to that length are
/// examined. Throws Errc::NotUnital.
GBReport check_groebner(const GenSet& gens,
                        std::optional<std::size_t> max_ambiguity_degree = std::nullopt);

/// Returns a copy of G flagged as a verified Groebner basis; throws
/// Errc::NotAGroebnerBasis when check_groebner disagrees.
GenSet certify_groebner(const GenSet& gens);

struct CompletionResult {
  GenSet basis;
  std::size_t rounds = 0;
  /// Whether the unbounded check also passed (the basis is then certified).
  bool fully_verified = false;
};

/// Adjoins normalized remainders of failing S-polynomials (ambiguities of
/// length <= max_degree) until none fail. Throws Errc::NotUnital at entry,
/// Errc::NonUnitalRemainder when a remainder's leading coefficient is not a
/// unit, and Errc::RoundsExceeded.
CompletionResult complete(const GenSet& gens, std::size_t max_degree, std::size_t max_rounds);

} // namespace ugb
