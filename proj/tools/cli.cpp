#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "epi/complexity.hpp"
#include "epi/engine.hpp"
#include "epi/exponents.hpp"

namespace epi::cli {

namespace {

// Errors raised while reading the command line map to exit code 2.
struct SpecError : Error {
  using Error::Error;
};

// Errors raised by an oracle comparison map to exit code 4.
struct Mismatch : Error {
  using Error::Error;
};

std::string fmt(long double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10Lg", x);
  return buf;
}

DirectiveWord directive_arg(const std::string& text) {
  try {
    return DirectiveWord::parse(text);
  } catch (const Error& e) {
    throw SpecError(std::string("directive: ") + e.what());
  }
}

DigitString intercept_arg(const std::string& text) {
  try {
    return DigitString::parse(text);
  } catch (const Error& e) {
    throw SpecError(std::string("intercept: ") + e.what());
  }
}

BigInt integer_arg(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw SpecError("expected a nonnegative integer, got '" + text + "'");
  }
  return BigInt(text);
}

Digits digits_arg(const std::string& text) {
  try {
    return parse_digit_list(text);
  } catch (const Error& e) {
    throw SpecError(std::string("digits: ") + e.what());
  }
}

void require_valid(const NumerationSystem& sys, const DigitString& c) {
  if (!sys.valid(c)) throw ContractViolation("intercept " + c.describe() + " violates the Ostrowski conditions");
}

// Length of prefix that witnesses irep(n) for every n <= n_max.
std::size_t witness_length(const NumerationSystem& sys, std::size_t n_max) {
  return static_cast<std::size_t>(factor_count(sys, n_max)) + n_max + 1;
}

struct IrepRow {
  std::size_t n;
  BigInt value;
  std::string case_id;
};

// Rows for n in [from, to]; cross mode collects every n where the oracles disagree.
std::vector<IrepRow> irep_rows(const NumerationSystem& sys, const DigitString& c, std::size_t from,
                               std::size_t to, const std::string& mode, std::vector<std::size_t>* bad) {
  WordTower tower(sys);
  bool closed = mode == "closed" || mode == "cross";
  bool brute = mode == "brute" || mode == "cross";
  bool rauzy = mode == "rauzy" || mode == "cross";
  if (closed) require_valid(sys, c);
  FiniteWord w;
  if (brute || rauzy) w = word_from_intercept(tower, c, witness_length(sys, to));
  std::vector<IrepRow> rows;
  for (std::size_t n = from; n <= to; ++n) {
    IrepRow row{n, 0, ""};
    std::optional<BigInt> b, r;
    if (brute) {
      auto v = irep_brute(w, n);
      if (!v) throw HorizonExceeded("no repetition within the generated prefix");
      b = BigInt(*v);
    }
    if (rauzy) r = BigInt(irep_rauzy(rauzy_graph(sys, n), w));
    if (closed) {
      auto res = irep_regular(sys, c, n);
      row.value = res.value;
      row.case_id = res.case_id;
    } else {
      row.value = brute ? *b : *r;
    }
    if (mode == "cross" && (row.value != *b || row.value != *r)) bad->push_back(n);
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_word(const std::string& d, const std::string& c, std::size_t length, std::ostream& out) {
  NumerationSystem sys(directive_arg(d));
  DigitString ic = intercept_arg(c);
  WordTower tower(sys);
  out << word_from_intercept(tower, ic, length).str() << "\n";
  return kOk;
}

int cmd_numeration(const std::string& d, const std::string& op, const std::string& arg, std::ostream& out) {
  NumerationSystem sys(directive_arg(d));
  if (op == "rep") {
    out << format_digits(sys.rep(integer_arg(arg))) << "\n";
  } else if (op == "val") {
    out << sys.val(digits_arg(arg)) << "\n";
  } else if (op == "check") {
    out << (sys.satisfies_ostrowski(digits_arg(arg)) ? "valid" : "invalid") << "\n";
  } else {
    throw SpecError("numeration operation must be rep, val or check");
  }
  return kOk;
}

int cmd_irep(const std::string& d, const std::string& c, std::size_t from, std::size_t to, const std::string& mode,
             std::ostream& out, std::ostream& err) {
  if (from < 1 || from > to) throw SpecError("need 1 <= --n-from <= --n-to");
  NumerationSystem sys(directive_arg(d));
  DigitString ic = intercept_arg(c);
  std::vector<std::size_t> bad;
  auto rows = irep_rows(sys, ic, from, to, mode, &bad);
  bool with_case = mode == "closed" || mode == "cross";
  out << (with_case ? "n,irep,case\n" : "n,irep\n");
  for (const auto& row : rows) {
    out << row.n << "," << row.value;
    if (with_case) out << "," << row.case_id;
    out << "\n";
  }
  if (!bad.empty()) {
    err << "oracle mismatch at n =";
    for (auto n : bad) err << " " << n;
    err << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_figure(int fig, std::ostream& out, std::ostream& err) {
  if (fig != 1) throw SpecError("only --fig 1 is available");
  NumerationSystem sys(DirectiveWord::parse("periodic:|001122"));
  constexpr std::size_t kLast = 147;
  out << "# directive: periodic:|001122\n# intervals:";
  auto ends = interval_endpoints(sys, 5);
  for (std::size_t i = 0; i < ends.size(); ++i) out << (i ? "," : " ") << ends[i];
  out << "\n# subintervals:";
  for (std::uint64_t k = 1; k <= 5; ++k) out << (k > 1 ? "," : " ") << sys.u_len_after_run(k);
  out << "\n";
  std::vector<std::vector<IrepRow>> cols;
  std::vector<std::size_t> bad;
  for (const char* c : {"zeros", "periodic:|01", "periodic:|1"}) {
    cols.push_back(irep_rows(sys, DigitString::parse(c), 1, kLast, "cross", &bad));
  }
  out << "n,irep_zeros,irep_01,irep_ones\n";
  for (std::size_t i = 0; i < kLast; ++i) {
    out << i + 1 << "," << cols[0][i].value << "," << cols[1][i].value << "," << cols[2][i].value << "\n";
  }
  if (!bad.empty()) {
    err << "oracle mismatch at n =";
    for (auto n : bad) err << " " << n;
    err << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_exponent(const std::string& d, const std::string& c, std::uint64_t k_min, std::uint64_t k_max,
                 std::size_t n_max, const std::string& kind, long double tol, bool trace, std::ostream& out) {
  NumerationSystem sys(directive_arg(d));
  DigitString ic = intercept_arg(c);
  if (!(tol > 0)) throw SpecError("--tol must be positive");
  auto print_trace = [&](const ExponentEstimate& est, const char* key) {
    if (!trace) return;
    out << key << ",ratio\n";
    for (const auto& [k, r] : est.per_k) out << k << "," << fmt(to_long_double(r)) << "\n";
  };
  if (kind == "closed") {
    auto cf = dio_standard_closed(sys.directive(), tol);
    out << (cf.infinite ? std::string("inf") : fmt(cf.value.mid())) << "\n";
    out << "# method " << cf.method << "; index " << (cf.infinite ? std::string("inf") : fmt(cf.value.mid() + 1))
        << "\n";
  } else if (kind == "dio") {
    if (k_min > k_max) throw SpecError("need --k-min <= --k-max");
    require_valid(sys, ic);
    auto est = dio_estimate(sys, ic, k_min, k_max);
    out << fmt(est.value) << "\n";
    out << "# tail " << fmt(est.tail) << " from k=" << est.tail_start
        << "; monotone " << (est.monotone_tail ? "yes" : "no") << "\n";
    print_trace(est, "k");
  } else if (kind == "ice") {
    require_valid(sys, ic);
    auto est = ice_estimate(WordTower(sys), ic, n_max);
    out << fmt(est.value) << "\n# lower estimate over n <= " << n_max << "\n";
    print_trace(est, "n");
  } else if (kind == "bounds") {
    if (k_min > k_max) throw SpecError("need --k-min <= --k-max");
    require_valid(sys, ic);
    auto b = irrationality_bounds(sys, ic, k_min, k_max);
    out << "lower,upper,liouville\n"
        << fmt(b.lower) << "," << fmt(b.upper) << "," << (b.liouville ? "true" : "false") << "\n";
  } else {
    throw SpecError("--kind must be dio, ice, bounds or closed");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Episturmian words: generation, numeration, nonrepetitive complexity and exponents", "epi"};
  app.require_subcommand(1);

  std::string directive, intercept, op, arg, mode = "closed", kind = "dio";
  std::size_t length = 50, n_from = 1, n_to = 100, n_max = 2000;
  std::uint64_t k_min = 0, k_max = 40;
  int fig = 1;
  long double tol = 1e-12L;
  bool trace = false;

  auto* word = app.add_subcommand("word", "Prefix of the episturmian word");
  word->add_option("directive", directive, "Directive word spec")->required();
  word->add_option("intercept", intercept, "Intercept spec")->required();
  word->add_option("--length", length, "Prefix length")->capture_default_str();

  auto* num = app.add_subcommand("numeration", "Ostrowski numeration: rep, val, check");
  num->add_option("directive", directive, "Directive word spec")->required();
  num->add_option("op", op, "rep | val | check")->required()->check(CLI::IsMember({"rep", "val", "check"}));
  num->add_option("arg", arg, "Integer for rep, digits otherwise")->required();

  auto* irep = app.add_subcommand("irep", "Initial nonrepetitive complexity table (CSV)");
  irep->add_option("directive", directive, "Directive word spec")->required();
  irep->add_option("intercept", intercept, "Intercept spec")->required();
  irep->add_option("--n-from", n_from, "First n")->capture_default_str();
  irep->add_option("--n-to", n_to, "Last n")->capture_default_str();
  irep->add_option("--mode", mode, "closed | brute | rauzy | cross")
      ->capture_default_str()
      ->check(CLI::IsMember({"closed", "brute", "rauzy", "cross"}));

  auto* figure = app.add_subcommand("figure", "Figure data (CSV)");
  figure->add_option("--fig", fig, "Figure number")->capture_default_str();

  auto* expo = app.add_subcommand("exponent", "Diophantine exponent estimates and bounds");
  expo->add_option("directive", directive, "Directive word spec")->required();
  expo->add_option("intercept", intercept, "Intercept spec")->required();
  expo->add_option("--k-min", k_min, "First k")->capture_default_str();
  expo->add_option("--k-max", k_max, "Last k")->capture_default_str();
  expo->add_option("--n-max", n_max, "Largest n for --kind ice")->capture_default_str();
  expo->add_option("--kind", kind, "dio | ice | bounds | closed")
      ->capture_default_str()
      ->check(CLI::IsMember({"dio", "ice", "bounds", "closed"}));
  expo->add_option("--tol", tol, "Root tolerance")->capture_default_str();
  expo->add_flag("--trace", trace, "Also print per-k maxima as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (word->parsed()) return cmd_word(directive, intercept, length, out);
    if (num->parsed()) return cmd_numeration(directive, op, arg, out);
    if (irep->parsed()) return cmd_irep(directive, intercept, n_from, n_to, mode, out, err);
    if (figure->parsed()) return cmd_figure(fig, out, err);
    if (expo->parsed()) return cmd_exponent(directive, intercept, k_min, k_max, n_max, kind, tol, trace, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kContract;
  }
  return kParse;
}

}  // namespace epi::cli
