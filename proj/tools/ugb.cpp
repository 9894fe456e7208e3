// Command-line front end: reads a problem file and runs one engine operation.
// Exit codes: 0 for a "yes" verdict, 1 for a "no" verdict, 2 for usage or
// parse errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ugb/text.hpp"

namespace {

using namespace ugb;
using json = nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct Options {
  std::string file;
  std::size_t max_degree = 3;
  std::size_t max_rounds = 16;
  std::string strategy = "first";
  bool strict = true;
  std::string format = "text";
  std::string poly;
};

bool records(const Options& o) { return o.format == "records"; }

void emit(const json& record) { std::cout << record.dump() << "\n"; }

Strategy parse_strategy(const std::string& text) {
  if (text == "first")
    return FirstMatch{};
  if (text.starts_with("seeded:")) {
    const std::string digits = text.substr(7);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit))
      return Seeded{std::stoull(digits)};
  }
  throw CLI::ValidationError("--strategy", "expected 'first' or 'seeded:<n>'");
}

Poly parse_input(const ProblemFile& p, const std::string& text) {
  try {
    return parse_poly(p.algebra, text);
  } catch (const ParseError& e) {
    throw CLI::ValidationError("--poly", e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json steps_json(const std::vector<DivisionStep>& steps, const Alphabet& a) {
  json out = json::array();
  for (const auto& s : steps)
    out.push_back({{"lambda", s.lambda.to_string()},
                   {"u", format_word(s.left, a)},
                   {"gen", s.gen},
                   {"v", format_word(s.right, a)}});
  return out;
}

// Strict mode runs the Buchberger check first; a failing check is a "no".
std::optional<GenSet> prepared(const ProblemFile& p, const Options& o) {
  GenSet gens = p.gen_set();
  gens.require_unital();
  if (!o.strict)
    return gens;
  const auto report = check_groebner(gens);
  if (report.verdict != Verdict::IsGroebner) {
    if (records(o))
      emit({{"record", "error"}, {"error", "NotAGroebnerBasis"},
            {"verdict", to_string(report.verdict)}});
    else
      std::cout << "not a Groebner basis (verdict " << to_string(report.verdict)
                << "); rerun with --no-strict for G-normal results\n";
    return std::nullopt;
  }
  return certify_groebner(gens);
}

int cmd_check_unital(const ProblemFile& p, const Options& o) {
  const GenSet gens = p.gen_set();
  const Alphabet& a = p.algebra->alphabet();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& lc = gens[i].leading_coeff();
    if (records(o))
      emit({{"record", "generator"}, {"index", i}, {"leading_word", format_word(gens[i].leading_word(), a)},
            {"leading_coeff", lc.to_string()}, {"unit", lc.is_unit()}});
    else
      std::cout << "g" << i << ": LT " << lc.to_string() << "*" << format_word(gens[i].leading_word(), a)
                << (lc.is_unit() ? " (unit)" : " (not a unit)") << "\n";
  }
  if (records(o))
    emit({{"record", "verdict"}, {"unital", gens.is_unital()}});
  else
    std::cout << "unital: " << (gens.is_unital() ? "yes" : "no") << "\n";
  return gens.is_unital() ? kYes : kNo;
}

int cmd_spolys(const ProblemFile& p, const Options& o) {
  const Alphabet& a = p.algebra->alphabet();
  const auto spolys = s_polynomials(p.gen_set());
  for (const auto& s : spolys) {
    if (records(o))
      emit({{"record", "spoly"}, {"first", s.first}, {"second", s.second},
            {"ambiguity", format_word(s.overlap.ambiguity, a)}, {"value", format_poly(s.value)}});
    else
      std::cout << "g" << s.first << ", g" << s.second << " at " << format_word(s.overlap.ambiguity, a)
                << ": " << format_poly(s.value) << "\n";
  }
  if (!records(o))
    std::cout << "count: " << spolys.size() << "\n";
  return kYes;
}

int cmd_check_gb(const ProblemFile& p, const Options& o) {
  const Alphabet& a = p.algebra->alphabet();
  const auto report = check_groebner(p.gen_set());
  if (records(o)) {
    emit({{"record", "report"}, {"verdict", to_string(report.verdict)},
          {"pairs_checked", report.pairs_checked}});
    for (const auto& w : report.witnesses)
      emit({{"record", "witness"}, {"first", w.spoly.first}, {"second", w.spoly.second},
            {"ambiguity", format_word(w.spoly.overlap.ambiguity, a)},
            {"spoly", format_poly(w.spoly.value)}, {"steps", steps_json(w.trace.steps, a)},
            {"remainder", format_poly(w.trace.remainder)}});
  } else {
    std::cout << format_report(report, a);
  }
  return report.verdict == Verdict::IsGroebner ? kYes : kNo;
}

int cmd_complete(const ProblemFile& p, const Options& o) {
  try {
    const auto result = complete(p.gen_set(), o.max_degree, o.max_rounds);
    if (records(o)) {
      json gens = json::array();
      for (const auto& g : result.basis)
        gens.push_back(format_poly(g));
      emit({{"record", "completion"}, {"rounds", result.rounds},
            {"fully_verified", result.fully_verified}, {"generators", gens}});
    } else {
      std::cout << "rounds: " << result.rounds << "\n";
      std::cout << "verified: "
                << (result.fully_verified ? "all ambiguities" : "ambiguities up to the degree bound")
                << "\n";
      for (std::size_t i = 0; i < result.basis.size(); ++i)
        std::cout << "gen " << format_poly(result.basis[i]) << "\n";
    }
    return kYes;
  } catch (const Error& e) {
    if (e.code() != Errc::NonUnitalRemainder && e.code() != Errc::RoundsExceeded)
      throw;
    if (records(o))
      emit({{"record", "error"}, {"error", to_string(e.code())}, {"message", e.what()}});
    else
      std::cout << "completion failed: " << e.what() << "\n";
    return kNo;
  }
}

int cmd_normal_form(const ProblemFile& p, const Options& o) {
  const auto gens = prepared(p, o);
  if (!gens)
    return kNo;
  const Alphabet& a = p.algebra->alphabet();
  const Poly f = parse_input(p, o.poly);
  const auto trace = divide(f, *gens, parse_strategy(o.strategy));
  const char* label = gens->groebner_verified() ? "normal form" : "G-normal remainder";
  if (records(o)) {
    emit({{"record", "division"}, {"input", format_poly(f)}, {"steps", steps_json(trace.steps, a)},
          {"remainder", format_poly(trace.remainder)}, {"verified", gens->groebner_verified()}});
  } else {
    std::cout << format_trace(trace, a);
    std::cout << label << ": " << format_poly(trace.remainder) << "\n";
  }
  return kYes;
}

int cmd_quotient_basis(const ProblemFile& p, const Options& o) {
  const auto gens = prepared(p, o);
  if (!gens)
    return kNo;
  const auto basis = enumerate_basis(*gens, o.max_degree, o.strict ? Strictness::Strict
                                                                    : Strictness::Exploratory);
  const Alphabet& a = p.algebra->alphabet();
  if (records(o)) {
    for (std::size_t d = 0; d < basis.by_degree.size(); ++d) {
      json words = json::array();
      for (const auto& w : basis.by_degree[d])
        words.push_back(format_word(w, a));
      emit({{"record", "degree"}, {"degree", d}, {"count", basis.by_degree[d].size()},
            {"words", words}});
    }
    emit({{"record", "total"}, {"total", basis.total()}, {"cumulative", basis.cumulative_counts()},
          {"verified", basis.verified}});
  } else {
    std::cout << format_basis(basis, a);
  }
  return kYes;
}

int cmd_decompose(const ProblemFile& p, const Options& o) {
  const auto gens = prepared(p, o);
  if (!gens)
    return kNo;
  const Poly f = parse_input(p, o.poly);
  const auto parts = decompose(f, *gens, o.strict ? Strictness::Strict : Strictness::Exploratory);
  if (records(o)) {
    emit({{"record", "decomposition"}, {"input", format_poly(f)},
          {"ideal_part", format_poly(parts.ideal_part)}, {"normal_part", format_poly(parts.normal_part)},
          {"verified", gens->groebner_verified()}});
  } else {
    std::cout << "input: " << format_poly(f) << "\n";
    std::cout << "ideal part: " << format_poly(parts.ideal_part) << "\n";
    std::cout << (gens->groebner_verified() ? "normal part: " : "G-normal part: ")
              << format_poly(parts.normal_part) << "\n";
  }
  return kYes;
}

int cmd_pbw(const ProblemFile& p, const Options& o) {
  if (!p.lie)
    throw CLI::ValidationError("pbw", "the problem file has no Lie block (rank/bracket lines)");
  const auto report = verify_pbw(*p.lie, o.max_degree);
  const Alphabet& a = p.lie->basis();
  if (records(o)) {
    json failures = json::array();
    for (const auto& v : report.lie.jacobi_failures)
      failures.push_back({a.name(v.i), a.name(v.j), a.name(v.k)});
    std::vector<std::string> expected;
    for (const auto& e : report.expected_counts)
      expected.push_back(e.str());
    emit({{"record", "pbw"}, {"lie_valid", report.lie.ok()}, {"jacobi_failures", failures},
          {"verdict", to_string(report.groebner.verdict)}, {"counts", report.basis.counts()},
          {"expected_counts", expected}, {"all_nondecreasing", report.all_nondecreasing},
          {"counts_match", report.counts_match}});
  } else {
    std::cout << "lie algebra: " << (report.lie.ok() ? "valid" : "invalid") << "\n";
    for (const auto& v : report.lie.jacobi_failures) {
      std::cout << "  jacobi fails on " << a.name(v.i) << ", " << a.name(v.j) << ", " << a.name(v.k)
                << ":";
      for (const auto& c : v.sum)
        std::cout << " " << c.to_string();
      std::cout << "\n";
    }
    std::cout << "groebner: " << to_string(report.groebner.verdict) << " ("
              << report.groebner.pairs_checked << " pairs)\n";
    std::cout << "counts:";
    for (auto c : report.basis.counts())
      std::cout << " " << c;
    std::cout << "\nexpected:";
    for (const auto& c : report.expected_counts)
      std::cout << " " << c;
    std::cout << "\nnon-decreasing words only: " << (report.all_nondecreasing ? "yes" : "no") << "\n";
    std::cout << "pbw: " << (report.ok() ? "confirmed" : "not confirmed") << "\n";
  }
  return report.ok() ? kYes : kNo;
}

int cmd_member(const ProblemFile& p, const Options& o) {
  const Poly f = parse_input(p, o.poly);
  const auto module = build_truncation(p.gen_set(), o.max_degree);
  const auto result = is_member(f, module);
  const Alphabet& a = p.algebra->alphabet();
  if (records(o)) {
    emit({{"record", "membership"}, {"input", format_poly(f)}, {"bound", o.max_degree},
          {"member", result.is_member()}, {"rows", module.rows().size()},
          {"witness", steps_json(result.witness, a)}});
  } else if (result.is_member()) {
    std::cout << "Member (" << module.rows().size() << " spanning products, degree <= "
              << o.max_degree << ")\n";
    for (std::size_t k = 0; k < result.witness.size(); ++k)
      std::cout << "step " << k + 1 << ": " << format_step(result.witness[k], a) << "\n";
  } else {
    std::cout << "NotMemberAtBound (no combination of products of degree <= " << o.max_degree
              << ")\n";
  }
  return result.is_member() ? kYes : kNo;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unital Groebner bases over commutative rings"};
  app.require_subcommand(1);
  Options opt;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "problem file")->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "records"}));
  };
  auto add_strict = [&](CLI::App* sub) {
    sub->add_flag("--strict,!--no-strict", opt.strict,
                  "require a verified Groebner basis (default on)");
  };

  auto* check_unital = app.add_subcommand("check-unital", "check that leading coefficients are units");
  add_file(check_unital);
  auto* spolys = app.add_subcommand("spolys", "list S-polynomials");
  add_file(spolys);
  auto* check_gb = app.add_subcommand("check-gb", "run the Buchberger criterion");
  add_file(check_gb);
  auto* completion = app.add_subcommand("complete", "adjoin failing S-polynomial remainders");
  add_file(completion);
  completion->add_option("--max-deg", opt.max_degree, "largest ambiguity length examined");
  completion->add_option("--max-rounds", opt.max_rounds, "round limit");
  auto* nf = app.add_subcommand("normal-form", "divide a polynomial by the generators");
  add_file(nf);
  add_strict(nf);
  nf->add_option("--poly", opt.poly, "polynomial to reduce")->required();
  nf->add_option("--strategy", opt.strategy, "first | seeded:<n>");
  auto* qb = app.add_subcommand("quotient-basis", "enumerate normal words by degree");
  add_file(qb);
  add_strict(qb);
  qb->add_option("--max-deg", opt.max_degree, "degree bound");
  auto* dec = app.add_subcommand("decompose", "split a polynomial into ideal and normal parts");
  add_file(dec);
  add_strict(dec);
  dec->add_option("--poly", opt.poly, "polynomial to split")->required();
  auto* pbw = app.add_subcommand("pbw", "verify the PBW basis of a Lie algebra");
  add_file(pbw);
  pbw->add_option("--max-deg", opt.max_degree, "degree bound");
  auto* member = app.add_subcommand("member", "bounded-degree ideal membership");
  add_file(member);
  member->add_option("--poly", opt.poly, "polynomial to test")->required();
  member->add_option("--max-deg", opt.max_degree, "degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (!opt.strategy.empty())
      parse_strategy(opt.strategy);
    const ProblemFile problem = parse_problem(read_file(opt.file));
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
      if (name == "check-unital") return cmd_check_unital(problem, opt);
      if (name == "spolys") return cmd_spolys(problem, opt);
      if (name == "check-gb") return cmd_check_gb(problem, opt);
      if (name == "complete") return cmd_complete(problem, opt);
      if (name == "normal-form") return cmd_normal_form(problem, opt);
      if (name == "quotient-basis") return cmd_quotient_basis(problem, opt);
      if (name == "decompose") return cmd_decompose(problem, opt);
      if (name == "pbw") return cmd_pbw(problem, opt);
      if (name == "member") return cmd_member(problem, opt);
    } catch (const Error& e) {
      if (e.code() != Errc::NotUnital)
        throw;
      if (records(opt))
        emit({{"record", "error"}, {"error", "NotUnital"}, {"message", e.what()}});
      else
        std::cout << "not unital: " << e.what() << "\n";
      return kNo;
    }
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << opt.file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
