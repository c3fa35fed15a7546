// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cli.hpp"
#include "epi/complexity.hpp"
#include "epi/exponents.hpp"
#include "epi/kernels.hpp"
#include "gen.hpp"

using namespace epi;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

DirectiveWord D(const char* text) { return DirectiveWord::parse(text); }
DigitString C(const char* text) { return DigitString::parse(text); }
BigInt Q(const NumerationSystem& sys, std::int64_t k) { return sys.q(k); }

// 1: numeration basics for the Tribonacci system.
void numeration_basics() {
  NumerationSystem sys(D("periodic:|012"));
  const int want[] = {1, 2, 4, 7, 13, 24, 44};
  for (int k = 0; k <= 6; ++k) expect(sys.q(k) == want[k], "q_" + std::to_string(k));
  expect(format_digits(sys.rep(7)) == "0001", "rep(7)");
  expect(format_digits(sys.rep(10)) == "1101", "rep(10)");
  expect(sys.val(Digits{1, 1, 0, 1}) == 10, "val(1101)");
}

// 2: Tribonacci prefix.
void tribonacci_prefix() {
  NumerationSystem sys(D("periodic:|012"));
  expect(standard_prefix(sys, 50).str() == "01020100102010102010010201020100102010102010010201", "prefix");
}

// 3: the figure data for (001122)^omega.
void figure_data() {
  NumerationSystem sys(D("periodic:|001122"));
  auto ends = interval_endpoints(sys, 5);
  const int want[] = {1, 5, 17, 51, 147};
  expect(ends.size() >= 5, "endpoint count");
  for (int i = 0; i < 5; ++i) expect(ends[i] == want[i], "endpoint " + std::to_string(i));

  std::ostringstream out, err;
  expect(cli::run({"figure", "--fig", "1"}, out, err) == cli::kOk, "figure exit code");
  std::istringstream in(out.str());
  std::size_t rows = 0;
  bool body = false;
  for (std::string line; std::getline(in, line);) {
    if (body) ++rows;
    if (line == "n,irep_zeros,irep_01,irep_ones") body = true;
  }
  expect(rows == 147, "figure rows");

  WordTower tower(sys);
  for (const char* c : {"zeros", "periodic:|01", "periodic:|1"}) {
    auto ci = C(c);
    auto w = word_from_intercept(tower, ci, 3 * 147 + 2);
    for (std::size_t n = 1; n <= 147; ++n) {
      auto closed = irep_regular(sys, ci, n).value;
      auto brute = irep_brute(w, n);
      auto walk = irep_rauzy(rauzy_graph(sys, n), w);
      expect(brute && closed == *brute && walk == *brute, std::string(c) + " n=" + std::to_string(n));
    }
  }
}

// 4: exponent values.
void exponent_values() {
  struct Row {
    const char* delta;
    const char* c;
    long double want;
    long double tol;
  };
  const Row rows[] = {
      {"periodic:|01", "zeros", 2.6180L, 1e-3L},          {"periodic:|012", "zeros", 2.1915L, 1e-3L},
      {"periodic:|0123", "zeros", 2.0781L, 1e-3L},        {"periodic:|001122", "periodic:|1", 1.9156L, 1e-3L},
      {"periodic:|0123", "periodic:|001", 1.9873L, 1e-3L}, {"periodic:|0123", "periodic:|011", 2.7879L, 1e-3L},
      {"periodic:|0123", "periodic:|01", 2.0L, 1e-3L},     {"periodic:|01234", "periodic:|001", 1.9148L, 2e-3L},
      {"periodic:|01234", "periodic:|01", 1.8535L, 2e-3L},
  };
  for (const auto& r : rows) {
    auto est = dio_estimate(NumerationSystem(D(r.delta)), C(r.c), 0, 40);
    std::ostringstream msg;
    msg << r.delta << " " << r.c << " got " << static_cast<double>(est.value);
    expect(std::fabs(est.value - r.want) <= r.tol, msg.str());
  }
}

// 5: recurrence roots.
void roots() {
  expect(std::fabs(dominant_root({1, 1, 1, 1}).root.mid() - 1.9276L) <= 1e-4L, "zeta_4");
  expect(std::fabs(dominant_root({2, 2, 1}).root.mid() - 2.8312L) <= 1e-4L, "beta");
}

// 6a: Ostrowski bijection and roundtrip.
void bijection() {
  for (const char* text : {"periodic:|01", "periodic:|012", "periodic:|0123", "periodic:|001122"}) {
    NumerationSystem sys(D(text));
    const auto& d = sys.directive();
    for (std::uint64_t len = 1; len <= 10; ++len) {
      auto q = static_cast<std::size_t>(sys.q(static_cast<std::int64_t>(len)));
      std::vector<char> hit(q, 0);
      std::size_t count = 0;
      Digits cur(len, 0);
      while (true) {
        if (sys.satisfies_ostrowski(cur)) {
          BigInt v = sys.val(cur);
          expect(v < q, "val out of range");
          auto vi = static_cast<std::size_t>(v);
          expect(!hit[vi], "val not injective");
          hit[vi] = 1;
          ++count;
        }
        std::uint64_t i = 0;
        while (i < len && ++cur[i] > d.a(i + 1)) cur[i++] = 0;
        if (i == len) break;
      }
      expect(count == q, std::string(text) + " bijection at length " + std::to_string(len));
    }
    for (std::uint64_t n = 0; n < 1'000'000; ++n) {
      if (sys.val(sys.rep(n)) != n) expect(false, std::string(text) + " roundtrip at " + std::to_string(n));
    }
  }
}

// 6b: closed form, brute force and Rauzy walk agree.
void triples() {
  gen::Rng rng(2024);
  std::size_t count = 0;
  while (count < 10'000) {
    unsigned d = static_cast<unsigned>(gen::uniform(rng, 2, 5));
    NumerationSystem sys(gen::regular(rng, d, 4));
    WordTower tower(sys);
    constexpr std::size_t kNMax = 1500;
    std::vector<DigitString> cs;
    std::vector<FiniteWord> ws;
    for (int i = 0; i < 16; ++i) {
      cs.push_back(gen::intercept(rng, sys));
      ws.push_back(word_from_intercept(tower, cs.back(), d * kNMax + 2));
    }
    std::vector<std::size_t> ns;
    for (int i = 0; i < 4; ++i) ns.push_back(gen::uniform(rng, 1, 60));
    for (int i = 0; i < 3; ++i) ns.push_back(gen::uniform(rng, 61, kNMax));
    for (std::size_t n : ns) {
      auto g = rauzy_graph(sys, n);
      for (std::size_t i = 0; i < cs.size(); ++i) {
        auto closed = irep_regular(sys, cs[i], n).value;
        auto brute = irep_brute(ws[i], n);
        expect(brute && closed == *brute && irep_rauzy(g, ws[i]) == *brute,
               sys.directive().describe() + " c=" + cs[i].describe() + " n=" + std::to_string(n));
        ++count;
      }
    }
  }
}

// 6c: tower identities.
void tower_identities() {
  for (const char* text :
       {"periodic:|01", "periodic:|012", "periodic:|0123", "periodic:|001122", "periodic:1|0102"}) {
    auto d = D(text);
    WordTower t(d);
    const auto& sys = t.numeration();
    auto c = standard_prefix(sys, 400000);
    for (std::uint64_t k = 1; sys.u_len_after_run(k) < 100000; ++k) {
      auto s = t.standard(k);
      FiniteWord prod(d.alphabet());
      for (std::uint64_t i = k; i-- > 0;) prod.append(power(t.standard(i), d.a(i + 1)));
      expect(prod == t.central(d.r(k) + 1), "standard product");
      auto ur = t.central(d.r(k));
      expect(ur.size() < s.size() && s.has_prefix(ur), "central prefix of standard");
      bool has_p = d.pfun(d.r(k) + 1).has_value();
      auto a = d.a(k + 1);
      expect(c.has_prefix(power(s, a + 1)) == has_p, "power a+1");
      expect(!c.has_prefix(power(s, a + 2)), "power a+2");
      auto tk = t_word(t, k);
      std::size_t ext = kernels::periodic_extent(c.view(), s.size());
      expect(static_cast<std::int64_t>(ext) == static_cast<std::int64_t>((a + 1) * s.size()) + tk.length(),
             "periodic extent");
    }
  }
}

// 6d: odometer coherence and intercept roundtrip.
void odometer() {
  gen::Rng rng(29);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto d = gen::regular(rng, static_cast<unsigned>(gen::uniform(rng, 2, 5)), 4);
    WordTower t(d);
    const auto& sys = t.numeration();
    auto c = gen::intercept(rng, sys);
    std::size_t n = gen::uniform(rng, 1, 400);
    auto w = word_from_intercept(t, c, n + 1);
    DigitString sc;
    try {
      sc = shift_intercept(sys, c);
    } catch (const HorizonExceeded&) {
      continue;
    }
    expect(sys.valid(sc), "shifted intercept valid");
    expect(word_from_intercept(t, sc, n) == w.factor(2, n + 1), "shift coherence");
    auto dec = intercept_of(sys, word_from_intercept(t, c, 2000));
    for (std::size_t i = 0; i < dec.certified; ++i) expect(dec.digits[i] == c.digit(i + 1), "intercept roundtrip");
    ++checked;
  }
  expect(checked > 200, "too few odometer checks");
}

// 6e: closed identities.
void identities() {
  NumerationSystem three(D("periodic:|001122"));
  for (std::int64_t k = 4; k <= 60; ++k) {
    BigInt rhs = 2 * Q(three, k) + 5 * Q(three, k - 1) + 5 * Q(three, k - 2) - Q(three, k - 4) -
                 Q(three, k - 5) - 6;
    expect(rhs % 4 == 0 && three.u_len_after_run(static_cast<std::uint64_t>(k)) == rhs / 4, "3_u");
  }
  for (std::int64_t l = 2; l <= 60; ++l) {
    BigInt rhs = Q(three, l) + 3 * Q(three, l - 1) + Q(three, l - 2) - 3;
    expect(rhs % 4 == 0 && three.val(Digits(static_cast<std::size_t>(l), 1)) == rhs / 4, "3_val");
  }
  NumerationSystem four(D("periodic:|0123"));
  NumerationSystem trib(D("periodic:|012"));
  for (std::int64_t l = 1; l <= 40; ++l) {
    Digits a, b;
    for (std::int64_t i = 0; i < l; ++i) {
      a.insert(a.end(), {0, 0, 1});
      b.insert(b.end(), {1, 0, 0});
    }
    BigInt r4 = 4 * Q(four, 3 * l) + 3 * Q(four, 3 * l - 1) - Q(four, 3 * l - 2) + Q(four, 3 * l - 3) - 7;
    expect(r4 % 9 == 0 && four.val(a) == r4 / 9, "4-bonacci val");
    if (l < 2) continue;
    BigInt r3 = Q(trib, 3 * l) - 4 * Q(trib, 3 * (l - 1)) + Q(trib, 3 * (l - 2)) - 1;
    expect(r3 % 2 == 0 && trib.val(b) == r3 / 2, "tribonacci val");
  }
  for (std::int64_t k = 0; k <= 60; ++k) {
    expect(3 * four.u_len_run(static_cast<std::uint64_t>(k + 1)) ==
               Q(four, k + 2) - Q(four, k) + Q(four, k - 1) - 4,
           "4-bonacci length");
    expect(2 * trib.u_len(static_cast<std::uint64_t>(k + 1)) == Q(trib, k + 1) + Q(trib, k - 1) - 3,
           "tribonacci length");
  }
}

void properties() {
  bijection();
  triples();
  tower_identities();
  odometer();
  identities();
}

// 7: lower bound, unbounded quotients and the Tribonacci sandwich.
void exponent_bounds() {
  gen::Rng rng(14);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    unsigned d = static_cast<unsigned>(gen::uniform(rng, 2, 5));
    auto delta = gen::regular(rng, d, 4);
    auto [pre, per] = *delta.run_period();
    std::uint64_t amax = 0;
    for (std::uint64_t k = pre + 1; k <= pre + per; ++k) amax = std::max(amax, delta.a(k));
    if (d != 2 && amax < 3) continue;
    NumerationSystem sys(delta);
    auto c = gen::intercept(rng, sys);
    expect(dio_estimate(sys, c, 0, 60).tail > 2 + 1e-6L, "lower bound for " + delta.describe());
    ++checked;
  }
  expect(checked > 50, "too few lower-bound checks");

  for (unsigned d : {2u, 3u, 4u}) {
    NumerationSystem sys(DirectiveWord::regular_stream(d, [](std::uint64_t k) { return k; }, "a_k=k"));
    expect(dio_estimate(sys, DigitString::zeros(), 0, 30).value > 10, "unbounded quotients");
  }

  NumerationSystem trib(D("periodic:|012"));
  long double lo = dio_standard_closed(trib.directive()).value.mid();
  gen::Rng rng2(15);
  for (int t = 0; t < 60; ++t) {
    auto c = gen::intercept(rng2, trib, 8, 8);
    auto v = dio_estimate(trib, c, 0, 45).value;
    expect(v >= lo - 1e-3L && v <= lo + 1 + 1e-3L, "sandwich for " + c.describe());
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<void()> body;
  };
  const Criterion criteria[] = {
      {1, "numeration basics", 1, numeration_basics},
      {2, "tribonacci prefix", 1, tribonacci_prefix},
      {3, "figure intervals and irep agreement", 10, figure_data},
      {4, "exponent values", 30, exponent_values},
      {5, "recurrence roots", 1, roots},
      {6, "property suite", 300, properties},
      {7, "exponent bounds", 60, exponent_bounds},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.body();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget_s) {
      ok = false;
      detail = "over time budget";
    }
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                detail.empty() ? "" : " ", detail.c_str());
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
