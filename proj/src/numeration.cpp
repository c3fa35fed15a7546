#include "epi/numeration.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace epi {

// ---- DigitString ----

DigitString::DigitString() = default;

DigitString DigitString::zeros() { return DigitString(); }

DigitString DigitString::finite(Digits digits) {
  DigitString c;
  c.pre_ = std::move(digits);
  c.normalize();
  return c;
}

DigitString DigitString::periodic(Digits preperiod, Digits period) {
  if (period.empty()) throw InvalidArgument("empty intercept period");
  DigitString c;
  c.pre_ = std::move(preperiod);
  c.per_ = std::move(period);
  c.normalize();
  return c;
}

DigitString DigitString::stream(Generator gen, std::uint64_t horizon, std::string label) {
  DigitString c;
  c.kind_ = Kind::Stream;
  c.gen_ = std::move(gen);
  c.horizon_ = horizon;
  c.label_ = std::move(label);
  c.per_.clear();
  return c;
}

DigitString DigitString::parse(std::string_view text) {
  if (text == "zeros") return zeros();
  if (text.rfind("digits:", 0) == 0) return finite(parse_digit_list(text.substr(7)));
  if (text.rfind("periodic:", 0) == 0) {
    auto rest = text.substr(9);
    auto bar = rest.find('|');
    if (bar == std::string_view::npos) throw ParseError("missing '|' in intercept spec");
    auto per = parse_digit_list(rest.substr(bar + 1));
    if (per.empty()) throw ParseError("empty intercept period");
    return periodic(parse_digit_list(rest.substr(0, bar)), std::move(per));
  }
  throw ParseError("unknown intercept spec: " + std::string(text));
}

void DigitString::normalize() {
  if (kind_ != Kind::Periodic) return;
  if (std::all_of(per_.begin(), per_.end(), [](auto v) { return v == 0; })) {
    per_ = {0};
    while (!pre_.empty() && pre_.back() == 0) pre_.pop_back();
  }
}

std::uint64_t DigitString::digit(std::uint64_t i) const {
  if (i == 0) throw InvalidArgument("digit index is 1-based");
  if (kind_ == Kind::Stream) {
    if (i > horizon_) {
      throw InsufficientIntercept("intercept digit " + std::to_string(i) + " beyond horizon " +
                                  std::to_string(horizon_));
    }
    return gen_(i);
  }
  if (i <= pre_.size()) return pre_[i - 1];
  return per_[(i - pre_.size() - 1) % per_.size()];
}

Digits DigitString::prefix(std::uint64_t k) const {
  Digits out(k);
  for (std::uint64_t i = 1; i <= k; ++i) out[i - 1] = digit(i);
  return out;
}

bool DigitString::is_finite() const {
  return kind_ == Kind::Periodic && per_.size() == 1 && per_[0] == 0;
}

std::uint64_t DigitString::support() const {
  if (!is_finite()) throw InvalidArgument("support of an infinite digit string");
  return pre_.size();
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> DigitString::period() const {
  if (kind_ == Kind::Stream) return std::nullopt;
  return std::pair<std::uint64_t, std::uint64_t>{pre_.size(), per_.size()};
}

std::optional<std::uint64_t> DigitString::horizon() const {
  if (kind_ == Kind::Stream) return horizon_;
  return std::nullopt;
}

DigitString DigitString::with_head(const Digits& head) const {
  if (kind_ == Kind::Stream) {
    auto gen = gen_;
    Digits h = head;
    return stream([gen, h](std::uint64_t i) { return i <= h.size() ? h[i - 1] : gen(i); },
                  std::max<std::uint64_t>(horizon_, head.size()), label_ + "*");
  }
  std::uint64_t keep = std::max<std::uint64_t>(pre_.size(), head.size());
  // Grow the preperiod so that the period phase is unchanged.
  Digits pre = prefix(keep);
  std::copy(head.begin(), head.end(), pre.begin());
  DigitString c;
  c.pre_ = std::move(pre);
  c.per_ = per_;
  if (keep > pre_.size()) {
    std::uint64_t o = (keep - pre_.size()) % per_.size();
    std::rotate(c.per_.begin(), c.per_.begin() + static_cast<std::ptrdiff_t>(o), c.per_.end());
  }
  c.normalize();
  return c;
}

std::string format_digits(std::span<const std::uint64_t> digits) {
  bool wide = std::any_of(digits.begin(), digits.end(), [](auto v) { return v > 9; });
  std::string s;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(digits[i]);
  }
  return wide ? "[" + s + "]" : s;
}

std::string DigitString::describe() const {
  if (kind_ == Kind::Stream) return "stream:" + label_;
  if (is_finite()) return pre_.empty() ? "zeros" : "digits:" + format_digits(pre_);
  return "periodic:" + format_digits(pre_) + "|" + format_digits(per_);
}

bool operator==(const DigitString& a, const DigitString& b) {
  auto pa = a.period(), pb = b.period();
  std::uint64_t n;
  if (pa && pb) {
    n = std::max(pa->first, pb->first) + std::lcm(pa->second, pb->second);
  } else {
    n = std::min(a.horizon().value_or(UINT64_MAX), b.horizon().value_or(UINT64_MAX));
  }
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (a.digit(i) != b.digit(i)) return false;
  }
  return true;
}

// ---- NumerationSystem ----

struct NumerationSystem::Cache {
  std::mutex mu;
  std::vector<BigInt> q{1};
  std::vector<BigInt> s{0};  // s[k] = |u_{r_k+1}|
  std::vector<std::vector<BigInt>> tau;
};

NumerationSystem::NumerationSystem(DirectiveWord delta)
    : delta_(std::move(delta)), cache_(std::make_shared<Cache>()) {
  cache_->tau.emplace_back(delta_.alphabet(), BigInt(1));
}

void NumerationSystem::extend(std::uint64_t k) const {
  Cache& c = *cache_;
  while (c.q.size() <= k) {
    std::uint64_t m = c.q.size();
    auto e = delta_.multiplicative(m);
    BigInt s = c.s[m - 1] + BigInt(e.a) * c.q[m - 1];
    BigInt q;
    if (auto j = delta_.jfun(m)) {
      q = s - c.s[*j] + c.q[*j - 1];
    } else {
      q = s + 1;
    }
    std::vector<BigInt> t = c.tau[m - 1];
    const BigInt tx = t[e.x];
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (y != e.x) t[y] += BigInt(e.a) * tx;
    }
    c.s.push_back(std::move(s));
    c.q.push_back(std::move(q));
    c.tau.push_back(std::move(t));
  }
}

BigInt NumerationSystem::q(std::int64_t k) const {
  if (k == -1) return 1;
  if (k < -1) return 0;
  std::lock_guard lock(cache_->mu);
  extend(static_cast<std::uint64_t>(k));
  return cache_->q[static_cast<std::size_t>(k)];
}

BigInt NumerationSystem::u_len_after_run(std::uint64_t k) const {
  std::lock_guard lock(cache_->mu);
  extend(k);
  return cache_->s[k];
}

BigInt NumerationSystem::u_len_run(std::uint64_t k) const {
  if (k == 0) return -1;
  return u_len_after_run(k - 1) + BigInt(delta_.a(k) - 1) * q(static_cast<std::int64_t>(k) - 1);
}

BigInt NumerationSystem::u_len(std::uint64_t m) const {
  if (m == 0) throw InvalidArgument("central words are indexed from 1");
  std::uint64_t k = delta_.run_of(m) - 1;  // r_k < m <= r_{k+1}
  return u_len_after_run(k) + BigInt(m - delta_.r(k) - 1) * q(static_cast<std::int64_t>(k));
}

BigInt NumerationSystem::tau_len(std::uint64_t k, Letter y) const {
  if (y >= delta_.alphabet()) throw InvalidArgument("letter outside the directive alphabet");
  std::lock_guard lock(cache_->mu);
  extend(k);
  return cache_->tau[k][y];
}

std::uint64_t NumerationSystem::index_above(const BigInt& n) const {
  std::lock_guard lock(cache_->mu);
  std::uint64_t k = 0;
  for (;; ++k) {
    extend(k);
    if (cache_->q[k] > n) return k;
  }
}

BigInt NumerationSystem::val(std::span<const std::uint64_t> digits) const {
  if (digits.empty()) return 0;
  std::lock_guard lock(cache_->mu);
  extend(digits.size());
  BigInt v = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i]) v += BigInt(digits[i]) * cache_->q[i];
  }
  return v;
}

BigInt NumerationSystem::val(const DigitString& c, std::uint64_t k) const {
  return val(c.prefix(k));
}

Digits NumerationSystem::rep(const BigInt& n) const {
  if (n < 0) throw InvalidArgument("rep of a negative integer");
  if (n == 0) return {};
  std::uint64_t top = index_above(n);
  Digits out(top, 0);
  BigInt rest = n;
  for (std::uint64_t i = top; i-- > 0;) {
    BigInt qi = q(static_cast<std::int64_t>(i));
    if (rest >= qi) {
      BigInt d = rest / qi;
      rest -= d * qi;
      out[i] = static_cast<std::uint64_t>(d);
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool NumerationSystem::satisfies_ostrowski(std::span<const std::uint64_t> digits) const {
  std::uint64_t len = digits.size();
  for (std::uint64_t k = 1; k <= len; ++k) {
    if (digits[k - 1] > delta_.a(k)) return false;
  }
  for (std::uint64_t k = 1; k <= len; ++k) {
    auto j = delta_.jfun(k);
    if (!j) continue;
    bool all_max = true;
    for (std::uint64_t i = k; i > *j && all_max; --i) all_max = digits[i - 1] == delta_.a(i);
    if (all_max && digits[*j - 1] != 0) return false;
  }
  return true;
}

std::uint64_t NumerationSystem::validation_horizon(const DigitString& c) const {
  auto pc = c.period();
  auto pd = delta_.run_period();
  if (!pc || !pd) {
    std::uint64_t h = c.horizon().value_or(256);
    return std::min<std::uint64_t>(h, 256);
  }
  std::uint64_t l = std::lcm(pc->second, pd->second);
  return std::max(pc->first, pd->first) + 2 * l + delta_.alphabet() + 2;
}

bool NumerationSystem::valid(const DigitString& c, std::optional<std::uint64_t> through) const {
  std::uint64_t k = through.value_or(validation_horizon(c));
  return satisfies_ostrowski(c.prefix(k));
}

}  // namespace epi
