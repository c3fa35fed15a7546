#include <doctest.h>

#include "epi/words.hpp"
#include "oracles.hpp"

using namespace epi;

namespace {

FiniteWord W(const char* s) { return FiniteWord::from_digits(s, 3); }

// All words over {0..d-1} of length len.
std::vector<FiniteWord> all_words(unsigned d, std::size_t len) {
  std::vector<FiniteWord> out;
  std::vector<Letter> cur(len, 0);
  while (true) {
    out.emplace_back(d, cur);
    std::size_t i = 0;
    while (i < len && ++cur[i] == d) cur[i++] = 0;
    if (i == len) break;
  }
  return out;
}

}  // namespace

TEST_CASE("palindromic closure examples") {
  CHECK(palindromic_closure(W("")).str() == "");
  CHECK(palindromic_closure(W("0")).str() == "0");
  CHECK(palindromic_closure(W("001")).str() == "00100");
  CHECK(palindromic_closure(W("001001")).str() == "00100100");
}

TEST_CASE("closure matches the brute-force minimal extension, is idempotent, and has the suffix length formula") {
  for (unsigned d = 1; d <= 3; ++d) {
    std::size_t max_len = d == 3 ? 8 : 12;
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (const auto& w : all_words(d, len)) {
        auto c = palindromic_closure(w);
        REQUIRE(c.str() == oracle::closure(w.str()));
        REQUIRE(palindromic_closure(c) == c);
        REQUIRE(c.size() == 2 * w.size() - longest_palindromic_suffix(w));
      }
    }
  }
}

TEST_CASE("occurrences") {
  CHECK(occurrences(W("0"), W("010")) == std::vector<std::size_t>{1, 3});
  CHECK(occurrences(W("010"), W("010010")) == std::vector<std::size_t>{1, 4});
  CHECK(occurrences(W("01"), W("0101")) == std::vector<std::size_t>{1, 3});
  CHECK_THROWS_AS(occurrences(W(""), W("01")), InvalidArgument);
}

TEST_CASE("primitivity") {
  CHECK_FALSE(is_primitive(W("0101")));
  CHECK(is_primitive(W("01")));
  CHECK(is_primitive(W("01001")));
  CHECK_THROWS_AS(is_primitive(W("")), InvalidArgument);
  // Exhaustive: primitive iff no proper root divides the length.
  for (unsigned d = 1; d <= 3; ++d) {
    for (std::size_t len = 1; len <= (d == 3 ? 7u : 10u); ++len) {
      for (const auto& w : all_words(d, len)) {
        std::string s = w.str();
        bool power = false;
        for (std::size_t p = 1; p < len && !power; ++p) {
          if (len % p) continue;
          bool ok = true;
          for (std::size_t i = p; i < len && ok; ++i) ok = s[i] == s[i - p];
          power = ok;
        }
        REQUIRE(is_primitive(w) == !power);
        REQUIRE((occurrences(w, w + w).size() == 2) == is_primitive(w));
      }
    }
  }
}

TEST_CASE("fractional powers") {
  CHECK(fractional_power(W("01"), 2, 1).str() == "0101");
  CHECK(fractional_power(W("010"), 5, 3).str() == "01001");
  CHECK(fractional_power(W("0112"), 1, 1).str() == "0112");
  CHECK_THROWS_AS(fractional_power(W("010"), 3, 2), InvalidArgument);
  CHECK_THROWS_AS(fractional_power(W("010"), 1, 2), InvalidArgument);
}

TEST_CASE("letters are checked against the alphabet") {
  CHECK_THROWS_AS(FiniteWord(2, {0, 2}), InvalidArgument);
  CHECK(FiniteWord(2, {0, 1}).str() == "01");
  CHECK(W("0120").at(3) == 2);
  CHECK(W("0120").factor(2, 3).str() == "12");
}
