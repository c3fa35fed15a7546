#include "epi/words.hpp"

#include <algorithm>

#include "epi/kernels.hpp"

namespace epi {

FiniteWord::FiniteWord(unsigned alphabet) : alphabet_(alphabet) {}

FiniteWord::FiniteWord(unsigned alphabet, std::vector<Letter> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  if (alphabet_ > 256) throw InvalidArgument("alphabet larger than 256 letters");
  for (Letter a : symbols_) {
    if (a >= alphabet_) throw InvalidArgument("letter outside alphabet");
  }
}

FiniteWord::FiniteWord(unsigned alphabet, std::initializer_list<int> symbols)
    : alphabet_(alphabet) {
  symbols_.reserve(symbols.size());
  for (int a : symbols) {
    if (a < 0 || static_cast<unsigned>(a) >= alphabet_) {
      throw InvalidArgument("letter outside alphabet");
    }
    symbols_.push_back(static_cast<Letter>(a));
  }
}

FiniteWord FiniteWord::from_digits(std::string_view digits, unsigned alphabet) {
  std::vector<Letter> s;
  s.reserve(digits.size());
  unsigned top = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw ParseError("not a digit: " + std::string(1, ch));
    s.push_back(static_cast<Letter>(ch - '0'));
    top = std::max(top, static_cast<unsigned>(ch - '0') + 1);
  }
  return FiniteWord(alphabet == 0 ? std::max(top, 1u) : alphabet, std::move(s));
}

Letter FiniteWord::at(std::size_t i) const {
  if (i == 0 || i > symbols_.size()) throw InvalidArgument("position out of range");
  return symbols_[i - 1];
}

FiniteWord FiniteWord::factor(std::size_t i, std::size_t j) const {
  if (i == 0) throw InvalidArgument("positions are 1-based");
  if (j < i) return FiniteWord(alphabet_);
  if (j > symbols_.size()) throw InvalidArgument("factor out of range");
  return FiniteWord(alphabet_, std::vector<Letter>(symbols_.begin() + (i - 1), symbols_.begin() + j));
}

FiniteWord FiniteWord::prefix(std::size_t n) const {
  if (n > symbols_.size()) throw InvalidArgument("prefix longer than word");
  return FiniteWord(alphabet_, std::vector<Letter>(symbols_.begin(), symbols_.begin() + n));
}

FiniteWord FiniteWord::reversed() const {
  return FiniteWord(alphabet_, std::vector<Letter>(symbols_.rbegin(), symbols_.rend()));
}

bool FiniteWord::is_palindrome() const {
  return std::equal(symbols_.begin(), symbols_.begin() + symbols_.size() / 2, symbols_.rbegin());
}

bool FiniteWord::has_prefix(const FiniteWord& u) const {
  return u.size() <= size() && kernels::common_prefix(view(), u.view()) == u.size();
}

FiniteWord& FiniteWord::append(const FiniteWord& w) {
  alphabet_ = std::max(alphabet_, w.alphabet_);
  symbols_.insert(symbols_.end(), w.symbols_.begin(), w.symbols_.end());
  return *this;
}

FiniteWord& FiniteWord::push_back(Letter a) {
  if (a >= alphabet_) throw InvalidArgument("letter outside alphabet");
  symbols_.push_back(a);
  return *this;
}

std::string FiniteWord::str() const {
  std::string out;
  out.reserve(symbols_.size());
  bool wide = alphabet_ > 10;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (wide) {
      if (i) out += ',';
      out += std::to_string(symbols_[i]);
    } else {
      out += static_cast<char>('0' + symbols_[i]);
    }
  }
  return wide ? "[" + out + "]" : out;
}

FiniteWord power(const FiniteWord& w, std::size_t n) {
  FiniteWord out(w.alphabet());
  for (std::size_t i = 0; i < n; ++i) out.append(w);
  return out;
}

std::size_t longest_palindromic_suffix(const FiniteWord& w) {
  const auto& s = w.symbols();
  std::size_t n = s.size();
  for (std::size_t len = n; len > 0; --len) {
    std::size_t start = n - len;
    bool pal = true;
    for (std::size_t i = 0; i < len / 2 && pal; ++i) pal = s[start + i] == s[n - 1 - i];
    if (pal) return len;
  }
  return 0;
}

FiniteWord palindromic_closure(const FiniteWord& w) {
  std::size_t p = longest_palindromic_suffix(w);
  FiniteWord out = w;
  const auto& s = w.symbols();
  for (std::size_t i = s.size() - p; i-- > 0;) out.push_back(s[i]);
  return out;
}

std::vector<std::size_t> occurrences(const FiniteWord& u, const FiniteWord& w) {
  if (u.empty()) throw InvalidArgument("occurrences of the empty word");
  std::vector<std::size_t> out;
  if (u.size() > w.size()) return out;
  auto wv = w.view();
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
    if (kernels::common_prefix(u.view(), wv.subspan(i)) == u.size()) out.push_back(i + 1);
  }
  return out;
}

bool is_primitive(const FiniteWord& w) {
  if (w.empty()) throw InvalidArgument("primitivity of the empty word");
  return occurrences(w, w + w).size() == 2;
}

FiniteWord fractional_power(const FiniteWord& w, std::uint64_t num, std::uint64_t den) {
  if (den == 0 || w.empty()) throw InvalidArgument("bad fractional power");
  if (num < den) throw InvalidArgument("exponent below 1");
  unsigned __int128 total = static_cast<unsigned __int128>(num) * w.size();
  if (total % den != 0) throw InvalidArgument("e*|w| is not an integer");
  auto len = static_cast<std::size_t>(total / den);
  FiniteWord out(w.alphabet());
  for (std::size_t i = 0; i < len; ++i) out.push_back(w[i % w.size()]);
  return out;
}

}  // namespace epi
