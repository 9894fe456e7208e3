#include "ugb/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ugb {

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0)
      out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1")
      continue;
    const auto letter = alphabet.find(token);
    if (!letter)
      throw Error(Errc::InvalidArgument, "unknown symbol '" + token + "'");
    letters.push_back(*letter);
  }
  return Word(std::move(letters));
}

std::string format_poly(const Poly& f) {
  if (f.is_zero())
    return "0";
  const Alphabet& alphabet = f.algebra().alphabet();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = t.coeff.to_string();
    const bool negative = c.front() == '-';
    if (negative)
      c.erase(0, 1);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.word.empty())
      out += c;
    else if (c == "1")
      out += format_word(t.word, alphabet);
    else
      out += c + "*" + format_word(t.word, alphabet);
  }
  return out;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class PolyParser {
public:
  PolyParser(const AlgebraPtr& algebra, std::string_view text, std::size_t line, std::size_t column0)
      : algebra_(algebra), text_(text), line_(line), column0_(column0) {}

  Poly parse() {
    const RingSpec& ring = algebra_->ring();
    std::vector<Term> terms;
    skip_space();
    if (done())
      fail("expected a polynomial");
    RingElement sign = ring.one();
    if (peek() == '+' || peek() == '-') {
      if (get() == '-')
        sign = -sign;
    }
    terms.push_back(term(sign));
    while (true) {
      skip_space();
      if (done())
        break;
      const char op = get();
      if (op != '+' && op != '-')
        fail(std::string("expected '+' or '-', found '") + op + "'");
      terms.push_back(term(op == '-' ? -ring.one() : ring.one()));
    }
    try {
      return Poly::normalize(algebra_, std::move(terms));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

private:
  Term term(RingElement coeff) {
    Word word;
    bool any = false;
    while (true) {
      skip_space();
      if (done())
        break;
      const char c = peek();
      if (c == '*') {
        if (!any)
          fail("'*' without a left operand");
        get();
        skip_space();
        if (done() || !(is_digit(peek()) || is_ident_start(peek())))
          fail("expected a factor after '*'");
        continue;
      }
      if (is_digit(c)) {
        coeff = coeff * number();
      } else if (is_ident_start(c)) {
        word = algebra_->multiply(word, symbol());
      } else {
        break;
      }
      any = true;
    }
    if (!any)
      fail("expected a term");
    return {std::move(coeff), std::move(word)};
  }

  RingElement number() {
    const std::size_t start = pos_;
    std::string digits = digits_token();
    skip_space();
    if (!done() && peek() == '/') {
      get();
      skip_space();
      if (done() || !is_digit(peek()))
        fail("expected a denominator");
      digits += "/" + digits_token();
    }
    try {
      return algebra_->ring().parse_element(digits);
    } catch (const Error& e) {
      fail_at(start, e.what());
    }
  }

  Word symbol() {
    const std::size_t start = pos_;
    while (!done() && is_ident_char(peek()))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    const auto letter = algebra_->alphabet().find(name);
    if (!letter)
      fail_at(start, "unknown symbol '" + name + "'");
    std::size_t power = 1;
    skip_space();
    if (!done() && peek() == '^') {
      get();
      skip_space();
      if (done() || !is_digit(peek()))
        fail("expected an exponent");
      power = std::stoul(digits_token());
    }
    return Word(std::vector<Letter>(power, *letter));
  }

  std::string digits_token() {
    const std::size_t start = pos_;
    while (!done() && is_digit(peek()))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) {
    throw ParseError(line_, column0_ + pos + 1, message);
  }

  const AlgebraPtr& algebra_;
  std::string_view text_;
  std::size_t line_;
  std::size_t column0_;
  std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const AlgebraPtr& algebra, std::string_view text) {
  return PolyParser(algebra, text, 1, 0).parse();
}

std::string format_step(const DivisionStep& step, const Alphabet& alphabet) {
  return step.lambda.to_string() + " * (" + format_word(step.left, alphabet) + ") * g" +
         std::to_string(step.gen) + " * (" + format_word(step.right, alphabet) + ")";
}

std::string format_trace(const DivisionTrace& trace, const Alphabet& alphabet, std::string_view indent) {
  std::string out;
  for (std::size_t k = 0; k < trace.steps.size(); ++k)
    out += std::string(indent) + "step " + std::to_string(k + 1) + ": " +
           format_step(trace.steps[k], alphabet) + "\n";
  out += std::string(indent) + "remainder: " + format_poly(trace.remainder) + "\n";
  return out;
}

std::string format_report(const GBReport& report, const Alphabet& alphabet) {
  std::string out = "verdict: " + std::string(to_string(report.verdict)) + "\n";
  out += "pairs checked: " + std::to_string(report.pairs_checked) + "\n";
  for (std::size_t k = 0; k < report.witnesses.size(); ++k) {
    const auto& w = report.witnesses[k];
    out += "witness " + std::to_string(k + 1) + ": g" + std::to_string(w.spoly.first) + ", g" +
           std::to_string(w.spoly.second) + " at " +
           format_word(w.spoly.overlap.ambiguity, alphabet) + "\n";
    out += "  s-poly: " + format_poly(w.spoly.value) + "\n";
    out += format_trace(w.trace, alphabet, "  ");
  }
  return out;
}

std::string format_basis(const QuotientBasis& basis, const Alphabet& alphabet) {
  std::string out = basis.verified ? "basis: normal words of a verified Groebner basis\n"
                                   : "basis: G-normal words (Groebner property not verified)\n";
  for (std::size_t d = 0; d < basis.by_degree.size(); ++d) {
    const auto& words = basis.by_degree[d];
    out += "deg " + std::to_string(d) + ": " + std::to_string(words.size());
    for (std::size_t k = 0; k < words.size(); ++k)
      out += (k == 0 ? " [" : ", ") + format_word(words[k], alphabet);
    out += words.empty() ? "\n" : "]\n";
  }
  out += "total: " + std::to_string(basis.total()) + "\n";
  out += "cumulative:";
  for (auto c : basis.cumulative_counts())
    out += " " + std::to_string(c);
  out += "\n";
  return out;
}

namespace {

struct LineCursor {
  std::string_view line;
  std::size_t number;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
  }
  bool done() {
    skip_space();
    return pos >= line.size();
  }
  std::string_view token() {
    skip_space();
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    return line.substr(start, pos - start);
  }
  std::size_t column() const { return pos + 1; }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(number, at, message);
  }
};

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s.front()))
    return false;
  for (char c : s)
    if (!is_ident_char(c))
      return false;
  return true;
}

} // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  std::optional<RingSpec> ring;
  std::optional<std::vector<std::string>> names;
  std::optional<std::size_t> rank;
  struct PendingGen {
    std::string_view text;
    std::size_t line, column;
  };
  struct PendingBracket {
    std::string_view a, b;
    std::vector<std::string_view> coeffs;
    std::size_t line, column;
  };
  std::vector<PendingGen> gens;
  std::vector<PendingBracket> brackets;
  std::size_t oracle_line = 0;
  std::size_t rank_line = 0;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    LineCursor cur{line, line_no};
    if (cur.done())
      continue;
    const std::size_t key_col = cur.column();
    const std::string_view key = cur.token();
    if (key != "ring" && !ring)
      cur.fail("the first declaration must be 'ring'", key_col);

    if (key == "ring") {
      if (ring)
        cur.fail("duplicate 'ring' declaration", key_col);
      const std::size_t col = (cur.skip_space(), cur.column());
      try {
        ring = RingSpec::parse(cur.token());
      } catch (const Error& e) {
        cur.fail(e.what(), col);
      }
    } else if (key == "oracle") {
      const std::size_t col = (cur.skip_space(), cur.column());
      const auto value = cur.token();
      if (value == "free")
        p.oracle = MulOracle::FreeConcat;
      else if (value == "commutative")
        p.oracle = MulOracle::CommutativeMerge;
      else
        cur.fail("oracle must be 'free' or 'commutative'", col);
      oracle_line = line_no;
    } else if (key == "alphabet") {
      if (names)
        cur.fail("duplicate 'alphabet' declaration", key_col);
      names.emplace();
      while (!cur.done()) {
        const std::size_t col = cur.column();
        const auto name = cur.token();
        if (!is_identifier(name))
          cur.fail("symbol '" + std::string(name) + "' is not an identifier", col);
        if (std::find(names->begin(), names->end(), name) != names->end())
          cur.fail("duplicate symbol '" + std::string(name) + "'", col);
        names->emplace_back(name);
      }
      if (names->empty())
        cur.fail("alphabet needs at least one symbol", key_col);
    } else if (key == "gen") {
      cur.skip_space();
      gens.push_back({line.substr(cur.pos), line_no, cur.pos});
    } else if (key == "rank") {
      const std::size_t col = (cur.skip_space(), cur.column());
      const auto value = cur.token();
      if (value.empty() || !std::all_of(value.begin(), value.end(), is_digit))
        cur.fail("rank must be a positive integer", col);
      rank = std::stoul(std::string(value));
      rank_line = line_no;
      if (*rank == 0)
        cur.fail("rank must be a positive integer", col);
    } else if (key == "bracket") {
      const std::size_t col = (cur.skip_space(), cur.column());
      PendingBracket b{cur.token(), cur.token(), {}, line_no, col};
      const std::size_t eq_col = (cur.skip_space(), cur.column());
      if (cur.token() != "=")
        cur.fail("expected 'bracket <a> <b> = <coefficients>'", eq_col);
      while (!cur.done())
        b.coeffs.push_back(cur.token());
      brackets.push_back(std::move(b));
    } else {
      cur.fail("unknown declaration '" + std::string(key) + "'", key_col);
    }
  }
  if (!ring)
    throw ParseError(line_no, 1, "missing 'ring' declaration");
  p.ring = *ring;

  const bool has_lie = rank.has_value() || !brackets.empty();
  if (has_lie && !rank)
    throw ParseError(brackets.front().line, 1, "a Lie block needs a 'rank' declaration");
  if (!names) {
    if (!rank)
      throw ParseError(line_no, 1, "missing 'alphabet' declaration");
    names = Alphabet::indexed(*rank).names();
  }
  if (rank && *rank != names->size())
    throw ParseError(rank_line, 1, "rank " + std::to_string(*rank) + " does not match the alphabet size " +
                                     std::to_string(names->size()));
  if (has_lie && oracle_line && p.oracle != MulOracle::FreeConcat)
    throw ParseError(oracle_line, 1, "Lie algebras live in the free algebra (oracle free)");
  if (has_lie && !gens.empty())
    throw ParseError(gens.front().line, 1, "'gen' cannot be combined with a Lie block");

  Alphabet alphabet(*names);
  p.algebra = Algebra::make(p.ring, alphabet, p.oracle);
  for (const auto& g : gens) {
    Poly f = PolyParser(p.algebra, g.text, g.line, g.column).parse();
    if (f.is_zero())
      throw ParseError(g.line, g.column + 1, "generator is zero");
    p.generators.push_back(std::move(f));
  }
  if (has_lie) {
    LieAlgebra lie(p.ring, alphabet);
    for (const auto& b : brackets) {
      const auto i = alphabet.find(b.a);
      const auto j = alphabet.find(b.b);
      if (!i || !j)
        throw ParseError(b.line, b.column, "unknown basis symbol in bracket");
      if (*i <= *j)
        throw ParseError(b.line, b.column, "brackets are declared for a > b in alphabet order");
      if (b.coeffs.size() != alphabet.size())
        throw ParseError(b.line, b.column, "bracket needs " + std::to_string(alphabet.size()) +
                                               " coefficients");
      std::vector<RingElement> coeffs;
      for (auto c : b.coeffs) {
        try {
          coeffs.push_back(p.ring.parse_element(c));
        } catch (const Error& e) {
          throw ParseError(b.line, b.column, e.what());
        }
      }
      if (lie.stored().contains({*i, *j}))
        throw ParseError(b.line, b.column, "duplicate bracket");
      lie.set_bracket(*i, *j, std::move(coeffs));
    }
    // The generators of a Lie problem are its PBW relations.
    auto system = build_pbw(lie, LieCheck::Skip);
    p.algebra = system.algebra;
    p.generators = system.generators.polys();
    p.lie = std::move(lie);
  }
  return p;
}

std::string format_problem(const ProblemFile& problem) {
  const Alphabet& alphabet = problem.algebra->alphabet();
  std::string out = "ring " + problem.ring.to_string() + "\n";
  out += std::string("oracle ") +
         (problem.oracle == MulOracle::FreeConcat ? "free" : "commutative") + "\n";
  out += "alphabet";
  for (const auto& n : alphabet.names())
    out += " " + n;
  out += "\n";
  if (!problem.lie)
    for (const auto& g : problem.generators)
      out += "gen " + format_poly(g) + "\n";
  if (problem.lie) {
    out += "rank " + std::to_string(problem.lie->rank()) + "\n";
    for (const auto& [key, coeffs] : problem.lie->stored()) {
      out += "bracket " + alphabet.name(key.first) + " " + alphabet.name(key.second) + " =";
      for (const auto& c : coeffs)
        out += " " + c.to_string();
      out += "\n";
    }
  }
  return out;
}

} // namespace ugb
