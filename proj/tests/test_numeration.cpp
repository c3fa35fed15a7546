#include <doctest.h>

#include "epi/numeration.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace epi;

namespace {

DirectiveWord P(const char* pre, const char* per) {
  return DirectiveWord::periodic(FiniteWord::from_digits(pre, 10), FiniteWord::from_digits(per, 10));
}

std::vector<NumerationSystem> reference_systems() {
  return {NumerationSystem(P("", "01")), NumerationSystem(P("", "012")), NumerationSystem(P("", "0123")),
          NumerationSystem(P("", "001122"))};
}

std::string str(const Digits& d) { return format_digits(d); }

// |tau_k(x_{k+1})| by applying the morphisms letter by letter to strings.
std::size_t q_by_words(const DirectiveWord& d, std::uint64_t k) {
  std::string w(1, static_cast<char>('0' + d.x(k + 1)));
  for (std::uint64_t j = k; j >= 1; --j) {
    char x = static_cast<char>('0' + d.x(j));
    for (std::uint64_t t = 0; t < d.a(j); ++t) {
      std::string next;
      for (char y : w) {
        if (y != x) next += x;
        next += y;
      }
      w = next;
    }
  }
  return w.size();
}

}  // namespace

TEST_CASE("q golden values") {
  NumerationSystem trib(P("", "012"));
  std::vector<int> want{1, 2, 4, 7, 13, 24, 44};
  for (int k = 0; k <= 6; ++k) CHECK(trib.q(k) == want[k]);
  NumerationSystem fib(P("", "01"));
  std::vector<int> wf{1, 2, 3, 5, 8};
  for (int k = 0; k <= 4; ++k) CHECK(fib.q(k) == wf[k]);
  NumerationSystem three(P("", "001122"));
  std::vector<int> w3{1, 3, 9, 25, 71};
  for (int k = 0; k <= 4; ++k) CHECK(three.q(k) == w3[k]);
  CHECK(three.q(-1) == 1);
  CHECK(three.q(-2) == 0);
}

TEST_CASE("q_k equals |tau_k(x_{k+1})| built from words") {
  for (auto d : {P("", "01"), P("", "012"), P("", "001122"), P("1", "0102"), P("", "0010211"), P("33", "0121")}) {
    NumerationSystem sys(d);
    for (std::uint64_t k = 0; k <= 9; ++k) {
      REQUIRE(sys.q(static_cast<std::int64_t>(k)) == q_by_words(d, k));
      REQUIRE(sys.tau_len(k, d.x(k + 1)) == sys.q(static_cast<std::int64_t>(k)));
      if (k) REQUIRE(sys.q(static_cast<std::int64_t>(k)) > sys.q(static_cast<std::int64_t>(k) - 1));
    }
  }
}

TEST_CASE("val and rep golden values") {
  NumerationSystem trib(P("", "012"));
  CHECK(trib.val(Digits{1, 1, 0, 1}) == 10);
  CHECK(trib.val(Digits{}) == 0);
  CHECK(NumerationSystem(P("", "01")).val(Digits{1, 0, 1}) == 4);
  CHECK(str(trib.rep(7)) == "0001");
  CHECK(str(trib.rep(10)) == "1101");
  CHECK(trib.rep(0).empty());
}

TEST_CASE("Ostrowski conditions examples") {
  NumerationSystem trib(P("", "012"));
  CHECK_FALSE(trib.satisfies_ostrowski(Digits{1, 1, 1}));
  CHECK(trib.satisfies_ostrowski(Digits{0, 0, 0, 1}));
  CHECK_FALSE(trib.satisfies_ostrowski(Digits{2}));
  CHECK(trib.satisfies_ostrowski(Digits{}));
}

TEST_CASE("valid strings of length k are in bijection with [0, q_k) under val") {
  for (const auto& sys : reference_systems()) {
    const auto& d = sys.directive();
    for (std::uint64_t len = 1; len <= 10; ++len) {
      Digits cur(len, 0);
      std::vector<char> hit(static_cast<std::size_t>(sys.q(static_cast<std::int64_t>(len))), 0);
      std::size_t count = 0;
      while (true) {
        if (sys.satisfies_ostrowski(cur)) {
          BigInt v = sys.val(cur);
          REQUIRE(v < sys.q(static_cast<std::int64_t>(len)));
          auto vi = static_cast<std::size_t>(v);
          REQUIRE(hit[vi] == 0);
          hit[vi] = 1;
          ++count;
          Digits r = sys.rep(v);
          Digits padded = r;
          padded.resize(len, 0);
          REQUIRE(padded == cur);
        }
        std::uint64_t i = 0;
        while (i < len && ++cur[i] > d.a(i + 1)) cur[i++] = 0;
        if (i == len) break;
      }
      REQUIRE(count == hit.size());
    }
  }
}

TEST_CASE("val(rep(n)) = n and rep(n) is valid for n < 10^6") {
  for (const auto& sys : reference_systems()) {
    for (std::uint64_t n = 0; n < 1'000'000; ++n) {
      Digits r = sys.rep(n);
      if (sys.val(r) != n || (n % 997 == 0 && !sys.satisfies_ostrowski(r))) {
        FAIL("roundtrip failed at n = " << n);
      }
      if (!r.empty() && r.back() == 0) FAIL("trailing zero at n = " << n);
    }
  }
}

TEST_CASE("u lengths") {
  NumerationSystem three(P("", "001122"));
  // |u_{r_{k+1}}| for k = 0..4 are the figure ticks.
  std::vector<int> ticks{1, 5, 17, 51, 147};
  for (std::uint64_t k = 0; k < 5; ++k) CHECK(three.u_len_run(k + 1) == ticks[k]);
  CHECK(three.u_len(6) == 17);
  CHECK(three.u_len_run(0) == -1);
  // Against closure-built central words.
  for (auto pp : std::vector<std::pair<const char*, const char*>>{{"", "01"}, {"", "012"}, {"2", "0102"}, {"", "001122"}}) {
    NumerationSystem sys(P(pp.first, pp.second));
    auto y = oracle::directive_letters(pp.first, pp.second, 20);
    auto u = oracle::central_words(y, 16);
    for (std::uint64_t m = 1; m <= 16; ++m) REQUIRE(sys.u_len(m) == u[m - 1].size());
  }
  // Sturmian case: |u_{r_k}| = q_k - 2.
  NumerationSystem st(DirectiveWord::regular(2, {3}, {1, 2}));
  for (std::uint64_t k = 1; k < 30; ++k) REQUIRE(st.u_len_run(k) == st.q(static_cast<std::int64_t>(k)) - 2);
}

TEST_CASE("digit string grammar and access") {
  auto c = DigitString::parse("periodic:1|0");
  CHECK(c.is_finite());
  CHECK(c.digit(1) == 1);
  CHECK(c.digit(2) == 0);
  auto p = DigitString::parse("periodic:|01");
  CHECK(p.digit(1) == 0);
  CHECK(p.digit(4) == 1);
  CHECK(DigitString::parse("digits:[1,12]").digit(2) == 12);
  CHECK(DigitString::parse("zeros") == DigitString::zeros());
  CHECK(DigitString::parse("periodic:1|11") == DigitString::periodic({}, {1}));
  CHECK_THROWS_AS(DigitString::parse("ones"), ParseError);
  CHECK_THROWS_AS(DigitString::parse("periodic:1"), ParseError);
  auto s = DigitString::stream([](std::uint64_t) { return 1; }, 10, "ones");
  CHECK(s.digit(10) == 1);
  CHECK_THROWS_AS(s.digit(11), InsufficientIntercept);
}

TEST_CASE("infinite validity") {
  NumerationSystem three(P("", "001122"));
  CHECK(three.valid(DigitString::periodic({}, {1})));
  CHECK_FALSE(three.valid(DigitString::periodic({}, {2})));
  NumerationSystem tetra(P("", "0123"));
  CHECK(tetra.valid(DigitString::periodic({}, {0, 0, 1})));
  CHECK(tetra.valid(DigitString::periodic({}, {0, 1, 1})));
  CHECK_FALSE(tetra.valid(DigitString::periodic({}, {1, 1, 1, 1, 0})));
  CHECK(tetra.valid(DigitString::periodic({}, {1, 1, 1, 0})));
  CHECK_FALSE(tetra.valid(DigitString::periodic({}, {1})));
}

TEST_CASE("closed identities for (001122)^omega") {
  NumerationSystem sys(P("", "001122"));
  auto q = [&](std::int64_t k) { return sys.q(k); };
  for (std::int64_t k = 4; k <= 60; ++k) {
    BigInt rhs = 2 * q(k) + 5 * q(k - 1) + 5 * q(k - 2) - q(k - 4) - q(k - 5) - 6;
    REQUIRE(rhs % 4 == 0);
    REQUIRE(sys.u_len_after_run(static_cast<std::uint64_t>(k)) == rhs / 4);
  }
  for (std::int64_t l = 2; l <= 60; ++l) {
    BigInt rhs = q(l) + 3 * q(l - 1) + q(l - 2) - 3;
    REQUIRE(rhs % 4 == 0);
    REQUIRE(sys.val(Digits(static_cast<std::size_t>(l), 1)) == rhs / 4);
  }
}

TEST_CASE("tetranacci and tribonacci identities") {
  NumerationSystem tetra(P("", "0123"));
  auto q4 = [&](std::int64_t k) { return tetra.q(k); };
  for (std::int64_t l = 1; l <= 40; ++l) {
    Digits c;
    for (std::int64_t i = 0; i < l; ++i) c.insert(c.end(), {0, 0, 1});
    BigInt rhs = 4 * q4(3 * l) + 3 * q4(3 * l - 1) - q4(3 * l - 2) + q4(3 * l - 3) - 7;
    REQUIRE(rhs % 9 == 0);
    REQUIRE(tetra.val(c) == rhs / 9);
  }
  for (std::uint64_t k = 1; k <= 60; ++k) {
    auto kk = static_cast<std::int64_t>(k);
    REQUIRE(tetra.u_len_run(k + 1) == (q4(kk + 2) - q4(kk) + q4(kk - 1) - 4) / 3);
  }
  NumerationSystem trib(P("", "012"));
  auto q3 = [&](std::int64_t k) { return trib.q(k); };
  for (std::int64_t l = 2; l <= 40; ++l) {
    Digits c;
    for (std::int64_t i = 0; i < l; ++i) c.insert(c.end(), {1, 0, 0});
    BigInt rhs = q3(3 * l) - 4 * q3(3 * (l - 1)) + q3(3 * (l - 2)) - 1;
    REQUIRE(rhs % 2 == 0);
    REQUIRE(trib.val(c) == rhs / 2);
  }
  for (std::uint64_t k = 1; k <= 60; ++k) {
    auto kk = static_cast<std::int64_t>(k);
    REQUIRE(trib.u_len(k + 1) == (q3(kk + 1) + q3(kk - 1) - 3) / 2);
  }
}

TEST_CASE("bijection on random regular systems") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = gen::regular(rng, static_cast<unsigned>(gen::uniform(rng, 2, 5)), 3);
    NumerationSystem sys(d);
    for (std::uint64_t len = 1; len <= 7; ++len) {
      Digits cur(len, 0);
      std::size_t count = 0;
      while (true) {
        if (sys.satisfies_ostrowski(cur)) {
          ++count;
          REQUIRE(sys.val(cur) < sys.q(static_cast<std::int64_t>(len)));
        }
        std::uint64_t i = 0;
        while (i < len && ++cur[i] > d.a(i + 1)) cur[i++] = 0;
        if (i == len) break;
      }
      REQUIRE(BigInt(count) == sys.q(static_cast<std::int64_t>(len)));
    }
    for (std::uint64_t n = 0; n < 3000; ++n) REQUIRE(sys.satisfies_ostrowski(sys.rep(n)));
  }
}
