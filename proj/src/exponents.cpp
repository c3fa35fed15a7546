#include "epi/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "epi/kernels.hpp"

namespace epi {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();
const Rational kMonotoneSlack = Rational(1, 1'000'000'000);

Interval widen(long double lo, long double hi) {
  return {std::nextafter(lo, -kInf), std::nextafter(hi, kInf)};
}

unsigned regular_period(const DirectiveWord& delta) {
  auto d = delta.detect_regular();
  if (!d) throw Unsupported("directive word is not regular: " + delta.describe());
  return *d;
}

std::uint64_t tail_period(const NumerationSystem& sys, const DigitString& c) {
  std::uint64_t p = 1;
  if (auto rp = sys.directive().run_period()) p = rp->second;
  if (auto cp = c.period()) p = std::lcm(p, cp->second);
  return p;
}

void finish(ExponentEstimate& est, std::uint64_t window) {
  Rational best = 0;
  for (const auto& [k, r] : est.per_k) best = std::max(best, r);
  est.exact = 1 + best;
  est.value = to_long_double(est.exact);

  std::size_t n = est.per_k.size();
  std::size_t w = static_cast<std::size_t>(std::min<std::uint64_t>(std::max<std::uint64_t>(window, 1), n));
  Rational tail = 0;
  for (std::size_t i = n - w; i < n; ++i) tail = std::max(tail, est.per_k[i].second);
  est.tail_start = est.per_k[n - w].first;
  est.tail_exact = 1 + tail;
  est.tail = to_long_double(est.tail_exact);

  // Compare each entry with the one a window earlier over the last two windows.
  bool up = true, down = true, any = false;
  std::size_t from = n >= 3 * w ? n - 2 * w : w;
  for (std::size_t i = from; i < n; ++i) {
    if (i < w) continue;
    Rational diff = est.per_k[i].second - est.per_k[i - w].second;
    up = up && diff >= -kMonotoneSlack;
    down = down && diff <= kMonotoneSlack;
    any = true;
  }
  est.monotone_tail = any && (up || down);
}

}  // namespace

long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

Interval operator+(const Interval& a, const Interval& b) { return widen(a.lo + b.lo, a.hi + b.hi); }

Interval operator-(const Interval& a, const Interval& b) { return widen(a.lo - b.hi, a.hi - b.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  long double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return widen(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw InvalidArgument("interval division by an interval containing 0");
  return a * widen(1 / b.hi, 1 / b.lo);
}

Interval pow(const Interval& a, unsigned e) {
  Interval out(1);
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

ExponentEstimate dio_estimate(const NumerationSystem& sys, const DigitString& c, std::uint64_t k_min,
                              std::uint64_t k_max, std::optional<std::uint64_t> tail_window) {
  unsigned d = regular_period(sys.directive());
  if (k_min > k_max) throw InvalidArgument("empty k-range");
  if (!sys.valid(c, k_max + 2 * d + 2)) throw ContractViolation("intercept is not Ostrowski-valid");
  ExponentEstimate est;
  est.k_min = k_min;
  est.k_max = k_max;
  for (std::uint64_t k = k_min; k <= k_max; ++k) {
    CaseAnalysis ca = case_analysis(sys, c, k);
    Rational best = 0;
    for (const auto& r : ca.ranges) {
      if (r.hi < 1 || r.lo >= r.hi) continue;
      best = std::max(best, Rational(r.hi, r.value));
    }
    est.per_k.emplace_back(k, best);
  }
  finish(est, tail_window.value_or(tail_period(sys, c)));
  return est;
}

ExponentEstimate dio_brute(const WordTower& tower, const DigitString& c, std::size_t N, std::size_t budget) {
  if (N == 0) throw InvalidArgument("dio_brute requires N >= 1");
  std::size_t len = (tower.directive().alphabet() + 1) * N + 1;
  ExponentEstimate est;
  est.certified = false;
  est.k_min = 1;
  est.k_max = N;
  FiniteWord w = word_from_intercept(tower, c, len);
  for (std::size_t n = 1; n <= N; ++n) {
    auto r = irep_brute(w, n);
    while (!r) {
      len *= 2;
      if (len > budget) throw ResourceLimit("prefix for dio_brute exceeds budget");
      w = word_from_intercept(tower, c, len);
      r = irep_brute(w, n);
    }
    est.per_k.emplace_back(n, Rational(n, *r));
  }
  finish(est, N);
  return est;
}

ExponentEstimate ice_estimate(const WordTower& tower, const DigitString& c, std::size_t N, std::size_t budget) {
  if (N == 0) throw InvalidArgument("ice_estimate requires N >= 1");
  std::size_t len = 8 * N + 8;
  while (true) {
    if (len > budget) throw ResourceLimit("prefix for ice_estimate exceeds budget");
    FiniteWord w = word_from_intercept(tower, c, len);
    auto z = kernels::z_array(w.view());
    ExponentEstimate est;
    est.certified = false;
    est.k_min = 1;
    est.k_max = N;
    std::size_t j = 1;
    bool complete = true;
    for (std::size_t n = 1; n <= N; ++n) {
      while (j < z.size() && z[j] < n) ++j;
      if (j == z.size()) {
        complete = false;
        break;
      }
      est.per_k.emplace_back(n, Rational(n, j));
    }
    if (complete) {
      finish(est, N);
      return est;
    }
    len *= 2;
  }
}

RecurrenceRoot dominant_root(const std::vector<long double>& coeffs, long double tol) {
  if (coeffs.empty() || !(tol > 0)) throw InvalidArgument("dominant_root needs coefficients and tol > 0");
  auto f = [&](long double x) {
    long double v = 1;
    for (long double c : coeffs) v = v * x - c;
    return v;
  };
  long double lo = 1;
  long double hi = 1 + std::accumulate(coeffs.begin(), coeffs.end(), 0.0L);
  if (!(f(lo) < 0 && f(hi) > 0)) throw BadRecurrence("no sign change on [1, 1 + sum of coefficients]");
  for (int it = 0; it < 256 && hi - lo > tol; ++it) {
    long double mid = lo + (hi - lo) / 2;
    if (mid == lo || mid == hi) break;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return {coeffs, Interval(lo, hi)};
}

std::vector<long double> regular_recurrence(unsigned d, std::uint64_t a) {
  std::vector<long double> c(d, static_cast<long double>(a));
  c.back() = 1;
  return c;
}

ClosedForm dio_standard_closed(const DirectiveWord& delta, long double tol) {
  unsigned d = regular_period(delta);
  ClosedForm out;
  if (unbounded_partial_quotients(delta).first) {
    out.infinite = true;
    out.value = Interval(kInf);
    out.method = "unbounded";
    return out;
  }
  auto rp = delta.run_period();
  if (!rp) throw Unsupported("closed form needs eventually periodic partial quotients");
  auto [pre, per] = *rp;
  std::uint64_t a = delta.a(pre + 1);
  bool uniform = true;
  for (std::uint64_t k = pre + 1; k <= pre + per; ++k) uniform = uniform && delta.a(k) == a;

  if (uniform) {
    Interval rho = dominant_root(regular_recurrence(d, a), tol).root;
    Interval A(static_cast<long double>(a));
    out.value = Interval(1) + A + (A / (rho - Interval(1)) + A - Interval(1)) / pow(rho, d);
    out.method = "root";
    return out;
  }

  // limsup of a_{k+1} + |u_{r_{k-d+1}}| / q_k, evaluated exactly far out and maximized over a period.
  NumerationSystem sys(delta);
  const BigInt target = BigInt(1) << 300;
  std::uint64_t k = pre + 4 * per + d;
  while (sys.q(static_cast<std::int64_t>(k)) < target) ++k;
  Rational best = 0;
  for (std::uint64_t j = k; j < k + per; ++j) {
    Rational r = Rational(delta.a(j + 1)) +
                 Rational(sys.u_len_run(j - d + 1), sys.q(static_cast<std::int64_t>(j)));
    best = std::max(best, r);
  }
  long double v = to_long_double(1 + best);
  out.value = Interval(v - tol, v + tol);
  out.method = "series";
  return out;
}

Interval named_constant(std::string_view id, unsigned d, long double tol) {
  if (id == "threeletter_1omega") {
    Interval beta = dominant_root({2, 2, 1}, tol).root;
    return Interval(1) + (beta - Interval(1)) / Interval(2);
  }
  if (id == "fourbonacci_001") {
    Interval z = dominant_root({1, 1, 1, 1}, tol).root;
    Interval num = Interval(-7) * pow(z, 3) + Interval(15) * pow(z, 2) + Interval(13) * z - Interval(4);
    return Interval(1) + num / Interval(27);
  }
  if (id == "fourbonacci_011") {
    Interval z = dominant_root({1, 1, 1, 1}, tol).root;
    return Interval(1) + pow(z, 2) - z;
  }
  if (id == "dbonacci_0d_bound") {
    if (d < 2) throw InvalidArgument("dbonacci_0d_bound needs d >= 2");
    Interval z = dominant_root(std::vector<long double>(d, 1), tol).root;
    return Interval(2) + Interval(1) / (pow(z, d) - z);
  }
  if (id == "fib_range") {
    Interval z = dominant_root({1, 1}, tol).root;
    return Interval(3, (Interval(2) + z).hi);
  }
  throw InvalidArgument("unknown constant id: " + std::string(id));
}

std::pair<bool, bool> unbounded_partial_quotients(const DirectiveWord& delta, std::uint64_t horizon) {
  if (delta.run_period()) return {false, true};
  horizon = std::max<std::uint64_t>(horizon, 8);
  std::uint64_t quarter = horizon / 4;
  std::uint64_t running = 0;
  bool growing = true;
  for (std::uint64_t q = 0; q < 4; ++q) {
    std::uint64_t m = 0;
    for (std::uint64_t k = q * quarter + 1; k <= (q + 1) * quarter; ++k) m = std::max(m, delta.a(k));
    if (q > 0) growing = growing && m > running;
    running = std::max(running, m);
  }
  return {growing, false};
}

IrrationalityBounds irrationality_bounds(const NumerationSystem& sys, const DigitString& c, std::uint64_t k_min,
                                         std::uint64_t k_max) {
  unsigned d = regular_period(sys.directive());
  auto est = dio_estimate(sys, c, k_min, k_max);
  auto [unbounded, exact] = unbounded_partial_quotients(sys.directive());
  IrrationalityBounds out;
  out.lower = est.value;
  out.liouville = unbounded;
  out.certified = exact;
  long double K = 2.0L * d + 1;
  out.upper = unbounded ? kInf : K * K * K * (est.value + 1);
  return out;
}

}  // namespace epi
