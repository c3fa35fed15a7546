#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epi/complexity.hpp"
#include "epi/engine.hpp"
#include "epi/numeration.hpp"

namespace epi {

// Closed interval of long doubles with outward rounding.
struct Interval {
  long double lo = 0;
  long double hi = 0;

  Interval() = default;
  Interval(long double x) : lo(x), hi(x) {}  // NOLINT: implicit from scalars
  Interval(long double l, long double h) : lo(l), hi(h) {}

  long double mid() const { return lo + (hi - lo) / 2; }
  long double width() const { return hi - lo; }
  bool contains(long double x) const { return lo <= x && x <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval pow(const Interval& a, unsigned e);

struct ExponentEstimate {
  Rational exact;  // 1 + max ratio over [k_min, k_max]
  long double value = 1;
  // Largest n/irep(n) for n in I_k (dio) or over n <= N (ice, with k = n).
  std::vector<std::pair<std::uint64_t, Rational>> per_k;
  std::uint64_t k_min = 0;
  std::uint64_t k_max = 0;
  // 1 + max over the tail window [tail_start, k_max].
  Rational tail_exact;
  long double tail = 1;
  std::uint64_t tail_start = 0;
  bool monotone_tail = false;
  bool certified = true;
};

// Uses the closed form at the right endpoint of every case range for k in [k_min, k_max].
// The tail window spans the last common period of the partial quotients and the intercept,
// or tail_window entries when given.
ExponentEstimate dio_estimate(const NumerationSystem& sys, const DigitString& c, std::uint64_t k_min,
                              std::uint64_t k_max, std::optional<std::uint64_t> tail_window = std::nullopt);
// 1 + max_{n <= N} n/irep(n) by brute force over a generated prefix; never certified.
ExponentEstimate dio_brute(const WordTower& tower, const DigitString& c, std::size_t N,
                           std::size_t budget = std::size_t{1} << 26);
// 1 + max_{n <= N} n/prep(n); a lower estimate of the initial critical exponent.
ExponentEstimate ice_estimate(const WordTower& tower, const DigitString& c, std::size_t N,
                              std::size_t budget = std::size_t{1} << 26);

struct RecurrenceRoot {
  std::vector<long double> coeffs;  // q_k = sum_i coeffs[i-1] q_{k-i}
  Interval root;
};

RecurrenceRoot dominant_root(const std::vector<long double>& coeffs, long double tol = 1e-12L);
// Coefficients of the q-recurrence of a regular word with all a_k = a.
std::vector<long double> regular_recurrence(unsigned d, std::uint64_t a);

struct ClosedForm {
  Interval value;
  bool infinite = false;
  std::string method;  // "root" or "series"
};

// Diophantine exponent of c_Delta for a regular Delta.
ClosedForm dio_standard_closed(const DirectiveWord& delta, long double tol = 1e-12L);

// Ids: threeletter_1omega, fourbonacci_001, fourbonacci_011, dbonacci_0d_bound (needs d),
// fib_range. Point constants come back as tight enclosures; fib_range as [3, 2 + zeta_2].
Interval named_constant(std::string_view id, unsigned d = 0, long double tol = 1e-12L);

struct IrrationalityBounds {
  long double lower = 0;
  long double upper = 0;  // +inf for unbounded partial quotients
  bool liouville = false;
  bool certified = true;  // false when the classification rests on a finite horizon
};

// Flags unbounded partial quotients. Exact for eventually periodic data; for streams the running
// maximum of a_k must keep growing over each quarter of the horizon.
std::pair<bool, bool> unbounded_partial_quotients(const DirectiveWord& delta, std::uint64_t horizon = 64);

IrrationalityBounds irrationality_bounds(const NumerationSystem& sys, const DigitString& c,
                                         std::uint64_t k_min, std::uint64_t k_max);

long double to_long_double(const Rational& r);

}  // namespace epi
