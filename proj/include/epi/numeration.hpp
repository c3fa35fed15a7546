#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epi/directive.hpp"

namespace epi {

using Digits = std::vector<std::uint64_t>;

// Infinite digit sequence c_1 c_2 ..., least significant first.
class DigitString {
 public:
  using Generator = std::function<std::uint64_t(std::uint64_t i)>;

  DigitString();  // 0^omega
  static DigitString zeros();
  static DigitString finite(Digits digits);  // zero-extended
  static DigitString periodic(Digits preperiod, Digits period);
  // Digits from a generator, available for i <= horizon only.
  static DigitString stream(Generator gen, std::uint64_t horizon, std::string label);
  // zeros | periodic:<pre>|<per> | digits:<digits>
  static DigitString parse(std::string_view text);

  std::uint64_t digit(std::uint64_t i) const;  // 1-based
  Digits prefix(std::uint64_t k) const;
  bool is_finite() const;
  // Length of the finite support (finite strings only).
  std::uint64_t support() const;
  // (preperiod, period); finite strings report period 1 with a zero tail.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> period() const;
  std::optional<std::uint64_t> horizon() const;
  // Same tail, first head.size() digits replaced.
  DigitString with_head(const Digits& head) const;
  std::string describe() const;

  friend bool operator==(const DigitString& a, const DigitString& b);

 private:
  enum class Kind { Periodic, Stream } kind_ = Kind::Periodic;
  Digits pre_;
  Digits per_{0};
  Generator gen_;
  std::uint64_t horizon_ = 0;
  std::string label_;
  void normalize();
};

std::string format_digits(std::span<const std::uint64_t> digits);

// Generalized Ostrowski numeration system attached to a directive word.
// Copies share the length caches; reads are thread-safe.
class NumerationSystem {
 public:
  explicit NumerationSystem(DirectiveWord delta);

  const DirectiveWord& directive() const { return delta_; }

  // q_k; q_{-1} = 1 and q_{-i} = 0 for i >= 2.
  BigInt q(std::int64_t k) const;
  // |u_{r_k+1}| = a_1 q_0 + ... + a_k q_{k-1}.
  BigInt u_len_after_run(std::uint64_t k) const;
  // |u_{r_k}|, with |u_{r_0}| = -1.
  BigInt u_len_run(std::uint64_t k) const;
  // |u_m| for m >= 1.
  BigInt u_len(std::uint64_t m) const;
  // |tau_k(y)|.
  BigInt tau_len(std::uint64_t k, Letter y) const;
  // Least k with q_k > n.
  std::uint64_t index_above(const BigInt& n) const;

  BigInt val(std::span<const std::uint64_t> digits) const;
  BigInt val(const DigitString& c, std::uint64_t k) const;  // val(c_1 ... c_k)
  Digits rep(const BigInt& n) const;
  bool satisfies_ostrowski(std::span<const std::uint64_t> digits) const;
  // Checks the Ostrowski conditions on c_1 ... c_K (exact for eventually periodic
  // data when K is left at its default).
  bool valid(const DigitString& c, std::optional<std::uint64_t> through = std::nullopt) const;
  std::uint64_t validation_horizon(const DigitString& c) const;

  struct Cache;

 private:
  DirectiveWord delta_;
  std::shared_ptr<Cache> cache_;
  void extend(std::uint64_t k) const;
};

}  // namespace epi
