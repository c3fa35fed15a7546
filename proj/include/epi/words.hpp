#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epi/types.hpp"

namespace epi {

// Finite word over {0,...,alphabet-1}. Positions are 1-based in the public API.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(unsigned alphabet);
  FiniteWord(unsigned alphabet, std::vector<Letter> symbols);
  FiniteWord(unsigned alphabet, std::initializer_list<int> symbols);

  // Parses a digit string such as "0102". Alphabet defaults to max digit + 1.
  static FiniteWord from_digits(std::string_view digits, unsigned alphabet = 0);

  unsigned alphabet() const { return alphabet_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Letter at(std::size_t i) const;  // 1-based
  Letter operator[](std::size_t i) const { return symbols_[i]; }  // 0-based
  const std::vector<Letter>& symbols() const { return symbols_; }
  std::span<const Letter> view() const { return symbols_; }

  // w[i, j], 1-based inclusive; empty when j < i.
  FiniteWord factor(std::size_t i, std::size_t j) const;
  FiniteWord prefix(std::size_t n) const;
  FiniteWord reversed() const;
  bool is_palindrome() const;
  bool has_prefix(const FiniteWord& u) const;

  FiniteWord& append(const FiniteWord& w);
  FiniteWord& push_back(Letter a);

  std::string str() const;

  friend FiniteWord operator+(FiniteWord a, const FiniteWord& b) { return a.append(b); }
  friend bool operator==(const FiniteWord& a, const FiniteWord& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  unsigned alphabet_ = 0;
  std::vector<Letter> symbols_;
};

FiniteWord power(const FiniteWord& w, std::size_t n);

std::size_t longest_palindromic_suffix(const FiniteWord& w);

FiniteWord palindromic_closure(const FiniteWord& w);

// 1-based start positions of u in w.
std::vector<std::size_t> occurrences(const FiniteWord& u, const FiniteWord& w);

bool is_primitive(const FiniteWord& w);

// w^e for e = num/den, requires e >= 1 and e*|w| integral.
FiniteWord fractional_power(const FiniteWord& w, std::uint64_t num, std::uint64_t den);

}  // namespace epi
