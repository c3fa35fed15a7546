#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epi/words.hpp"

namespace epi {

struct MultiplicativeEntry {
  std::uint64_t k = 0;
  Letter x = 0;
  std::uint64_t a = 0;
  std::uint64_t r = 0;
};

// Digit list in text form: a comma-free run of single digits ("1101"), a
// bracketed list ("[1,12,0]") or a bare comma list ("1,12,0").
std::vector<std::uint64_t> parse_digit_list(std::string_view text);

// Directive word y_1 y_2 ... with lazily cached run decomposition x_1^{a_1} x_2^{a_2} ...
// Copies share the cache. Reads are safe from several threads.
class DirectiveWord {
 public:
  using PartialQuotients = std::function<std::uint64_t(std::uint64_t k)>;

  static DirectiveWord periodic(const FiniteWord& preperiod, const FiniteWord& period);
  // Regular word with letter cycle (x_1 ... x_d) and partial quotients a_pre (a_per)^omega.
  static DirectiveWord regular(std::vector<Letter> cycle, std::vector<std::uint64_t> a_pre,
                               std::vector<std::uint64_t> a_per);
  static DirectiveWord regular(unsigned d, std::vector<std::uint64_t> a_pre,
                               std::vector<std::uint64_t> a_per);
  // Regular word with a_k supplied by a generator; eventual constancy is not checked.
  static DirectiveWord regular_stream(unsigned d, PartialQuotients a, std::string label);
  static DirectiveWord parse(std::string_view text);

  unsigned alphabet() const;
  bool eventually_periodic() const;
  std::string describe() const;

  Letter letter(std::uint64_t n) const;
  MultiplicativeEntry multiplicative(std::uint64_t k) const;
  Letter x(std::uint64_t k) const;
  std::uint64_t a(std::uint64_t k) const;
  std::uint64_t r(std::uint64_t k) const;  // r(0) = 0
  // Run index k with r_{k-1} < n <= r_k.
  std::uint64_t run_of(std::uint64_t n) const;

  std::optional<std::uint64_t> pfun(std::uint64_t n) const;
  std::optional<std::uint64_t> jfun(std::uint64_t k) const;
  std::optional<unsigned> detect_regular(std::uint64_t horizon = 64) const;

  // (preperiod, period) of the run sequence (x_k, a_k); absent for streams.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> run_period() const;

  // T^{r_j}(Delta): the directive word with the first j runs removed.
  DirectiveWord drop_runs(std::uint64_t j) const;

  // Sorted letters occurring infinitely often or at some position >= n.
  std::vector<Letter> letters_from(std::uint64_t n) const;

  struct Impl;

 private:
  explicit DirectiveWord(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

}  // namespace epi
