// hypereuler: command-line front end.
//
// Exit codes: 0 success, 1 verification FAIL, 2 usage error,
// 3 domain/hypothesis error, 4 any other failure.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hypereuler/hypereuler.hpp"

namespace {

using namespace hypereuler;

enum class Format { text, json, latex };

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitOther = 4;

struct Globals {
  Format format = Format::text;
  int digits = 8;
  long max_terms = 10'000'000;
  TailMethod tail = TailMethod::euler_maclaurin;

  NumericConfig numeric() const {
    NumericConfig cfg;
    cfg.max_terms = max_terms;
    cfg.tail = tail;
    return cfg;
  }
};

int run_bernoulli(const Globals& g, int n_max) {
  const auto values = bernoulli_sequence(n_max);
  switch (g.format) {
    case Format::json:
      std::cout << bernoulli_to_json(values).dump() << "\n";
      break;
    case Format::latex:
      for (std::size_t n = 0; n < values.size(); ++n)
        std::cout << "B_{" << n << "}^{+} = " << detail::latex_rational(values[n]) << "\\\\\n";
      break;
    case Format::text:
      for (std::size_t n = 0; n < values.size(); ++n) std::cout << (n ? ", " : "") << to_string(values[n]);
      std::cout << "\n";
      break;
  }
  return 0;
}

int run_coeffs(const Globals& g, int r, const std::string& route) {
  if (route == "both") {
    const CoeffTable& a = a_table(r);
    const CoeffTable& b = b_table(r);
    const bool match = a.same_entries(b);
    switch (g.format) {
      case Format::json:
        std::cout << json{{"a", to_json(a)}, {"b", to_json(b)}, {"match", match}}.dump() << "\n";
        break;
      case Format::latex:
        std::cout << "% a-recurrence\n" << to_latex(a) << "% b-recurrence\n" << to_latex(b) << "% "
                  << (match ? "MATCH" : "MISMATCH") << "\n";
        break;
      case Format::text:
        std::cout << "a-recurrence:\n" << to_text(a) << "b-recurrence:\n" << to_text(b) << (match ? "MATCH" : "MISMATCH")
                  << "\n";
        break;
    }
    return match ? 0 : kExitFail;
  }
  const CoeffTable& table = route == "b" ? b_table(r) : a_table(r);
  switch (g.format) {
    case Format::json: std::cout << to_json(table).dump() << "\n"; break;
    case Format::latex: std::cout << to_latex(table); break;
    case Format::text: std::cout << to_text(table); break;
  }
  return 0;
}

int run_hh(const Globals& g, int p, int r, long n) {
  const Rational value = h_closed(p, r, n);
  if (static_cast<long>(r) * n <= kDefaultHyperharmonicCap && h_def(p, r, n) != value)
    throw ConsistencyError("expansion and definition disagree for H_" + std::to_string(n));
  switch (g.format) {
    case Format::json:
      std::cout << json{{"p", p}, {"r", r}, {"n", n}, {"value", to_string(value)}}.dump() << "\n";
      break;
    case Format::latex:
      std::cout << "H_{" << n << "}^{(" << p << "," << r << ")} = " << detail::latex_rational(value) << "\n";
      break;
    case Format::text: std::cout << to_string(value) << "\n"; break;
  }
  return 0;
}

int run_decompose(const Globals& g, int p, int r, int m, bool normalize, bool reduce_s1) {
  const EulerSumExpr e = normalize || reduce_s1 ? decompose_normalized(p, r, m, reduce_s1) : decompose(p, r, m);
  switch (g.format) {
    case Format::json: std::cout << to_json(e).dump() << "\n"; break;
    case Format::latex: std::cout << to_latex(e) << "\n"; break;
    case Format::text: std::cout << to_text(e) << "\n"; break;
  }
  return 0;
}

int run_verify(const Globals& g, int p, int r, int m) {
  const VerifyReport rep = verify(p, r, m, g.digits, g.numeric());
  const int sig = g.digits + 6;
  switch (g.format) {
    case Format::json: std::cout << to_json(rep).dump() << "\n"; break;
    case Format::latex:
    case Format::text:
      std::cout << "sum H_n^(" << p << "," << r << ")/n^" << m << "  =  " << to_text(rep.expression) << "\n"
                << "direct     " << rep.direct.value_string(sig) << "  +/- " << rep.direct.bound_string() << "\n"
                << "decomposed " << rep.decomposed.value_string(sig) << "  +/- " << rep.decomposed.bound_string()
                << "\n"
                << "difference " << rep.difference.to_string(4, MPFR_RNDU) << "\n"
                << (rep.pass ? "PASS" : "FAIL") << "\n";
      break;
  }
  return rep.pass ? 0 : kExitFail;
}

int run_conjectures(const Globals& g, int r_max, int only) {
  std::vector<ConjectureReport> reports;
  if (only == 0) {
    reports = check_all_conjectures(r_max);
  } else {
    using Check = ConjectureReport (*)(int);
    constexpr Check checks[] = {check_symmetry, check_antidiagonal, check_row_sums, check_signs};
    reports.push_back(checks[only - 1](r_max));
  }
  static const std::map<int, std::string> names = {{1, "signed symmetry a(r,m,l) = (-1)^(m+l) a(r,l,m)"},
                                                   {2, "anti-diagonal sums equal [n == 0]"},
                                                   {3, "row-0 sum = r, column-0 sum = 0"},
                                                   {4, "sgn a(r,m,l) = (-1)^m, no zero entries"}};
  if (g.format == Format::json) {
    json out = json::array();
    for (const auto& rep : reports) out.push_back(to_json(rep));
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (const auto& rep : reports) {
    std::cout << "pattern " << rep.conjecture << " (" << names.at(rep.conjecture) << "): "
              << (rep.all_pass ? "holds" : "VIOLATED") << " for r = 1.." << r_max << "\n";
    for (const auto& v : rep.violations)
      std::cout << "  r=" << v.r << " m=" << v.m << " l=" << v.l << ": " << to_string(v.lhs)
                << " != " << to_string(v.rhs) << "\n";
    if (!rep.min_abs_entry.empty()) {
      std::cout << "  smallest |a(r,m,l)| per r:";
      for (const auto& q : rep.min_abs_entry) std::cout << " " << to_string(q);
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coefficients, Euler-sum decompositions and certified numerics for generalized hyperharmonic numbers"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("HYPEREULER_DIGITS")) {
    try {
      g.digits = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: HYPEREULER_DIGITS is not an integer\n";
      return kExitUsage;
    }
  }
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"latex", Format::latex}};
  const std::map<std::string, TailMethod> tails{{"em", TailMethod::euler_maclaurin},
                                                {"elementary", TailMethod::elementary}};
  app.add_option("--format", g.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--digits", g.digits, "Certified decimal digits for numeric commands")->check(CLI::Range(1, 200));
  app.add_option("--max-terms", g.max_terms, "Cap on summed series terms")->check(CLI::PositiveNumber);
  app.add_option("--tail", g.tail, "Series tail method")->transform(CLI::CheckedTransformer(tails, CLI::ignore_case));

  int n_max = 0;
  auto* bern = app.add_subcommand("bernoulli", "Print B_0^+ .. B_N^+ (B_1^+ = +1/2)");
  bern->add_option("n_max", n_max, "Largest index")->required()->check(CLI::NonNegativeNumber);

  int r = 1;
  std::string route = "a";
  auto* coeffs = app.add_subcommand("coeffs", "Print the a(r,m,j) triangle");
  coeffs->add_option("r", r, "Level r")->required()->check(CLI::PositiveNumber);
  coeffs->add_option("--route", route, "Recurrence: a, b, or both (compare)")
      ->check(CLI::IsMember({"a", "b", "both"}));

  int p = 1, m = 2;
  long n = 0;
  auto* hh = app.add_subcommand("hh", "Exact H_n^(p,r)");
  hh->add_option("p", p)->required()->check(CLI::PositiveNumber);
  hh->add_option("r", r)->required()->check(CLI::PositiveNumber);
  hh->add_option("n", n)->required()->check(CLI::NonNegativeNumber);

  bool normalize = false, reduce_s1 = false;
  auto* dec = app.add_subcommand("decompose", "Express sum_n H_n^(p,r)/n^m through Euler sums S(p,q)");
  dec->add_option("p", p)->required()->check(CLI::PositiveNumber);
  dec->add_option("r", r)->required()->check(CLI::PositiveNumber);
  dec->add_option("m", m)->required()->check(CLI::PositiveNumber);
  dec->add_flag("--normalize", normalize, "Rewrite non-positive orders as zeta values");
  dec->add_flag("--reduce-s1", reduce_s1, "Also rewrite S(1,q) through Euler's formula (implies --normalize)");

  auto* ver = app.add_subcommand("verify", "Check a decomposition numerically with certified bounds");
  ver->add_option("p", p)->required()->check(CLI::PositiveNumber);
  ver->add_option("r", r)->required()->check(CLI::PositiveNumber);
  ver->add_option("m", m)->required()->check(CLI::PositiveNumber);

  int r_max = 20, only = 0;
  auto* conj = app.add_subcommand("conjectures", "Check the four coefficient patterns up to r_max");
  conj->add_option("r_max", r_max, "Largest r (default 20)")->check(CLI::PositiveNumber);
  conj->add_option("--only", only, "Check a single pattern (1-4)")->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bern) return run_bernoulli(g, n_max);
    if (*coeffs) return run_coeffs(g, r, route);
    if (*hh) return run_hh(g, p, r, n);
    if (*dec) return run_decompose(g, p, r, m, normalize, reduce_s1);
    if (*ver) return run_verify(g, p, r, m);
    if (*conj) return run_conjectures(g, r_max, only);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitUsage;
}
