#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "epi/numeration.hpp"
#include "epi/words.hpp"

namespace epi {

// L_a: a -> a, x -> ax.
FiniteWord l_image(Letter a, const FiniteWord& w);
// mu_k(w) = L_{y_1} ... L_{y_k}(w).
FiniteWord mu_image(const DirectiveWord& delta, std::uint64_t k, const FiniteWord& w);
// tau_k(w) = mu_{r_k}(w).
FiniteWord tau_image(const DirectiveWord& delta, std::uint64_t k, const FiniteWord& w);

// A finite word, or the formal inverse of one letter (length -1).
struct SignedWord {
  FiniteWord word;
  std::optional<Letter> inverse_of;
  std::int64_t length() const {
    return inverse_of ? -1 : static_cast<std::int64_t>(word.size());
  }
};

// Explicit central and standard words of one directive word, below a size cap.
class WordTower {
 public:
  static constexpr std::size_t kDefaultCap = 10'000'000;

  explicit WordTower(NumerationSystem sys, std::size_t cap = kDefaultCap);
  explicit WordTower(DirectiveWord delta, std::size_t cap = kDefaultCap);

  const NumerationSystem& numeration() const { return sys_; }
  const DirectiveWord& directive() const { return sys_.directive(); }
  std::size_t cap() const { return cap_; }

  FiniteWord standard(std::uint64_t k) const;  // s_k
  FiniteWord h(std::uint64_t m) const;         // h_m = mu_m(y_{m+1})
  FiniteWord central(std::uint64_t m) const;   // u_m, m >= 1
  SignedWord t(std::uint64_t k) const;         // t_k

  // Shared read-only view of s_k; valid while the tower lives.
  std::shared_ptr<const std::vector<Letter>> standard_symbols(std::uint64_t k) const;

 private:
  NumerationSystem sys_;
  std::size_t cap_;
  struct Cache {
    std::mutex mu;
    std::vector<std::shared_ptr<const std::vector<Letter>>> s;
  };
  std::shared_ptr<Cache> cache_;
  void require_cap(const BigInt& len, const char* what) const;
};

FiniteWord central_word(const WordTower& tower, std::uint64_t m);
FiniteWord standard_word(const WordTower& tower, std::uint64_t k);
SignedWord t_word(const WordTower& tower, std::uint64_t k);

// Prefix of c_Delta of length n by iterating L_{x_k}^{a_k} from the inside out.
FiniteWord standard_prefix(const NumerationSystem& sys, std::size_t n);
// Prefix of c_Delta of length n as s_{k-1}^{c_k} ... s_0^{c_1} with rep(n) = c_1 ... c_k.
FiniteWord prefix_by_rep(const WordTower& tower, const BigInt& n);
// Symbols offset+1 ... offset+count of c_Delta, without materializing the first offset.
FiniteWord standard_window(const WordTower& tower, const BigInt& offset, std::size_t count);

BigInt eta(const NumerationSystem& sys, const DigitString& c, std::uint64_t k);

struct CertifiedShift {
  std::uint64_t k = 0;  // least k with eta_k >= N
  BigInt shift;         // val(c_1 ... c_k)
};
CertifiedShift certified_shift(const NumerationSystem& sys, const DigitString& c, std::size_t n);

FiniteWord word_from_intercept(const WordTower& tower, const DigitString& c, std::size_t n);

// Intercept of T(t) where c is the intercept of t.
DigitString shift_intercept(const NumerationSystem& sys, const DigitString& c,
                            std::optional<std::uint64_t> horizon = std::nullopt);

struct DecodedIntercept {
  Digits digits;             // certified digits c_1 ... c_m
  std::size_t certified = 0; // m
};
DecodedIntercept intercept_of(const NumerationSystem& sys, const FiniteWord& prefix);

// An episturmian word given by (Delta, intercept) with a growing certified prefix.
class EpisturmianWord {
 public:
  EpisturmianWord(WordTower tower, DigitString intercept);

  const WordTower& tower() const { return tower_; }
  const DigitString& intercept() const { return c_; }
  FiniteWord prefix(std::size_t n) const;

 private:
  WordTower tower_;
  DigitString c_;
  mutable std::mutex mu_;
  mutable FiniteWord cached_;
};

}  // namespace epi
