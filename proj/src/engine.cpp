#include "epi/engine.hpp"

#include <algorithm>
#include <numeric>

namespace epi {

namespace {

constexpr std::uint64_t kScanLimit = 1'000'000;
constexpr std::size_t kExplicitLeaf = 4096;

std::size_t to_size(const BigInt& v) { return static_cast<std::size_t>(v); }

// One application of L_x^a, keeping at most limit symbols.
std::vector<Letter> apply_run(Letter x, std::uint64_t a, const std::vector<Letter>& w, std::size_t limit) {
  std::vector<Letter> out;
  out.reserve(std::min(limit, w.size() * 2));
  for (Letter y : w) {
    if (out.size() >= limit) break;
    if (y != x) {
      for (std::uint64_t i = 0; i < a && out.size() < limit; ++i) out.push_back(x);
    }
    if (out.size() < limit) out.push_back(y);
  }
  return out;
}

}  // namespace

FiniteWord l_image(Letter a, const FiniteWord& w) {
  unsigned alpha = std::max<unsigned>(w.alphabet(), a + 1u);
  return FiniteWord(alpha, apply_run(a, 1, w.symbols(), SIZE_MAX));
}

FiniteWord mu_image(const DirectiveWord& delta, std::uint64_t k, const FiniteWord& w) {
  std::vector<Letter> cur = w.symbols();
  unsigned alpha = std::max(w.alphabet(), delta.alphabet());
  for (std::uint64_t m = k; m >= 1; --m) cur = apply_run(delta.letter(m), 1, cur, SIZE_MAX);
  return FiniteWord(alpha, std::move(cur));
}

FiniteWord tau_image(const DirectiveWord& delta, std::uint64_t k, const FiniteWord& w) {
  std::vector<Letter> cur = w.symbols();
  unsigned alpha = std::max(w.alphabet(), delta.alphabet());
  for (std::uint64_t j = k; j >= 1; --j) {
    auto e = delta.multiplicative(j);
    cur = apply_run(e.x, e.a, cur, SIZE_MAX);
  }
  return FiniteWord(alpha, std::move(cur));
}

// ---- WordTower ----

WordTower::WordTower(NumerationSystem sys, std::size_t cap)
    : sys_(std::move(sys)), cap_(cap), cache_(std::make_shared<Cache>()) {}

WordTower::WordTower(DirectiveWord delta, std::size_t cap)
    : WordTower(NumerationSystem(std::move(delta)), cap) {}

void WordTower::require_cap(const BigInt& len, const char* what) const {
  if (len > cap_) {
    throw ResourceLimit(std::string(what) + " of length " + len.str() + " exceeds the explicit-word cap " +
                        std::to_string(cap_));
  }
}

std::shared_ptr<const std::vector<Letter>> WordTower::standard_symbols(std::uint64_t k) const {
  require_cap(sys_.q(static_cast<std::int64_t>(k)), "standard word");
  std::lock_guard lock(cache_->mu);
  auto& s = cache_->s;
  const DirectiveWord& delta = sys_.directive();
  while (s.size() <= k) {
    std::uint64_t m = s.size();
    auto w = std::make_shared<std::vector<Letter>>();
    if (m == 0) {
      w->push_back(delta.x(1));
    } else {
      w->reserve(to_size(sys_.q(static_cast<std::int64_t>(m))));
      auto j = delta.jfun(m);
      std::uint64_t lo = j ? *j : 0;
      for (std::uint64_t i = m; i-- > lo;) {
        std::uint64_t reps = delta.a(i + 1);
        for (std::uint64_t t = 0; t < reps; ++t) w->insert(w->end(), s[i]->begin(), s[i]->end());
      }
      if (j) {
        w->insert(w->end(), s[*j - 1]->begin(), s[*j - 1]->end());
      } else {
        w->push_back(delta.x(m + 1));
      }
    }
    s.push_back(std::move(w));
  }
  return s[k];
}

FiniteWord WordTower::standard(std::uint64_t k) const {
  return FiniteWord(directive().alphabet(), *standard_symbols(k));
}

FiniteWord WordTower::h(std::uint64_t m) const {
  // h_m = s_k for r_k <= m < r_{k+1}.
  std::uint64_t k = directive().run_of(m + 1) - 1;
  return standard(k);
}

FiniteWord WordTower::central(std::uint64_t m) const {
  if (m == 0) throw InvalidArgument("central words are indexed from 1");
  require_cap(sys_.u_len(m), "central word");
  FiniteWord u(directive().alphabet());
  for (std::uint64_t i = m - 1; i-- > 0;) u.append(h(i));
  return u;
}

SignedWord WordTower::t(std::uint64_t k) const {
  const DirectiveWord& delta = directive();
  if (k == 0 || !delta.jfun(k)) return SignedWord{FiniteWord(delta.alphabet()), delta.x(k + 1)};
  FiniteWord u = central(delta.r(k) + 1);
  auto s = standard_symbols(k);
  if (s->size() > u.size() || !std::equal(s->begin(), s->end(), u.symbols().begin())) {
    throw Error("standard word is not a prefix of the central word");
  }
  return SignedWord{u.factor(s->size() + 1, u.size()), std::nullopt};
}

FiniteWord central_word(const WordTower& tower, std::uint64_t m) { return tower.central(m); }
FiniteWord standard_word(const WordTower& tower, std::uint64_t k) { return tower.standard(k); }
SignedWord t_word(const WordTower& tower, std::uint64_t k) { return tower.t(k); }

// ---- prefixes ----

FiniteWord standard_prefix(const NumerationSystem& sys, std::size_t n) {
  const DirectiveWord& delta = sys.directive();
  if (n == 0) return FiniteWord(delta.alphabet());
  // h_{r_K} = s_K has length q_K >= n.
  std::uint64_t big_k = sys.index_above(BigInt(n) - 1);
  std::vector<Letter> w{delta.x(big_k + 1)};
  for (std::uint64_t k = big_k; k >= 1; --k) {
    auto e = delta.multiplicative(k);
    w = apply_run(e.x, e.a, w, n);
  }
  w.resize(n);
  return FiniteWord(delta.alphabet(), std::move(w));
}

FiniteWord prefix_by_rep(const WordTower& tower, const BigInt& n) {
  const NumerationSystem& sys = tower.numeration();
  if (n < 0) throw InvalidArgument("negative prefix length");
  if (n > tower.cap()) throw ResourceLimit("prefix exceeds the explicit-word budget");
  Digits c = sys.rep(n);
  FiniteWord out(tower.directive().alphabet());
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    auto s = tower.standard(i);
    for (std::uint64_t t = 0; t < c[i]; ++t) out.append(s);
  }
  return out;
}

namespace {

struct Emitter {
  const WordTower& tower;
  const NumerationSystem& sys;
  const DirectiveWord& delta;
  BigInt off;
  std::size_t remaining;
  std::vector<Letter>& out;

  void letter(Letter a) {
    if (off > 0) {
      off -= 1;
      return;
    }
    out.push_back(a);
    --remaining;
  }

  void block(std::uint64_t i, std::uint64_t reps) {
    BigInt len = sys.q(static_cast<std::int64_t>(i));
    BigInt total = len * reps;
    if (off >= total) {
      off -= total;
      return;
    }
    auto skip = static_cast<std::uint64_t>(off / len);
    off -= len * skip;
    for (std::uint64_t t = skip; t < reps && remaining > 0; ++t) emit(i);
  }

  void emit(std::uint64_t k) {
    BigInt len = sys.q(static_cast<std::int64_t>(k));
    if (len <= kExplicitLeaf) {
      auto s = tower.standard_symbols(k);
      auto start = static_cast<std::size_t>(off);
      off = 0;
      std::size_t take = std::min(remaining, s->size() - start);
      out.insert(out.end(), s->begin() + static_cast<std::ptrdiff_t>(start),
                 s->begin() + static_cast<std::ptrdiff_t>(start + take));
      remaining -= take;
      return;
    }
    auto j = delta.jfun(k);
    std::uint64_t lo = j ? *j : 0;
    for (std::uint64_t i = k; i-- > lo && remaining > 0;) block(i, delta.a(i + 1));
    if (remaining == 0) return;
    if (j) {
      block(*j - 1, 1);
    } else {
      letter(delta.x(k + 1));
    }
  }
};

}  // namespace

FiniteWord standard_window(const WordTower& tower, const BigInt& offset, std::size_t count) {
  const NumerationSystem& sys = tower.numeration();
  std::vector<Letter> out;
  if (count == 0) return FiniteWord(tower.directive().alphabet());
  if (count > tower.cap()) throw ResourceLimit("window exceeds the explicit-word budget");
  out.reserve(count);
  std::uint64_t k = sys.index_above(offset + count - 1);
  Emitter e{tower, sys, tower.directive(), offset, count, out};
  e.emit(k);
  return FiniteWord(tower.directive().alphabet(), std::move(out));
}

// ---- intercepts ----

BigInt eta(const NumerationSystem& sys, const DigitString& c, std::uint64_t k) {
  const DirectiveWord& delta = sys.directive();
  BigInt head = BigInt(delta.a(k + 1) - c.digit(k + 1)) * sys.q(static_cast<std::int64_t>(k));
  return head + sys.u_len_after_run(k) - sys.val(c, k);
}

CertifiedShift certified_shift(const NumerationSystem& sys, const DigitString& c, std::size_t n) {
  const DirectiveWord& delta = sys.directive();
  BigInt v = 0;
  for (std::uint64_t k = 0; k < kScanLimit; ++k) {
    if (k > 0) v += BigInt(c.digit(k)) * sys.q(static_cast<std::int64_t>(k) - 1);
    std::uint64_t a = delta.a(k + 1);
    std::uint64_t cn = c.digit(k + 1);
    if (cn > a) throw ContractViolation("intercept digit exceeds partial quotient");
    BigInt e = BigInt(a - cn) * sys.q(static_cast<std::int64_t>(k)) + sys.u_len_after_run(k) - v;
    if (e >= n) return {k, v};
  }
  throw HorizonExceeded("no certified prefix within the scan limit");
}

FiniteWord word_from_intercept(const WordTower& tower, const DigitString& c, std::size_t n) {
  const NumerationSystem& sys = tower.numeration();
  if (!sys.valid(c)) throw ContractViolation("intercept violates the Ostrowski conditions");
  auto cs = certified_shift(sys, c, n);
  if (!sys.valid(c, std::max<std::uint64_t>(cs.k + 1, sys.validation_horizon(c)))) {
    throw ContractViolation("intercept violates the Ostrowski conditions");
  }
  return standard_window(tower, cs.shift, n);
}

DigitString shift_intercept(const NumerationSystem& sys, const DigitString& c,
                            std::optional<std::uint64_t> horizon) {
  const DirectiveWord& delta = sys.directive();
  std::uint64_t period = 1;
  std::uint64_t h;
  if (horizon) {
    h = *horizon;
  } else {
    auto pc = c.period();
    auto pd = delta.run_period();
    if (!pc) {
      if (!c.horizon()) throw InvalidArgument("scan horizon required");
      h = *c.horizon() - 1;
    } else {
      std::uint64_t pre = pc->first, per = pc->second;
      if (pd) {
        pre = std::max(pre, pd->first);
        per = std::lcm(per, pd->second);
      }
      period = per;
      h = pre + 2 * per;
    }
  }
  h = std::max<std::uint64_t>(h, 2);
  BigInt v = 0;
  std::uint64_t m = 0;
  for (std::uint64_t k = 1; k <= h; ++k) {
    v += BigInt(c.digit(k)) * sys.q(static_cast<std::int64_t>(k) - 1);
    if (v == sys.q(static_cast<std::int64_t>(k)) - 1) m = k;
  }
  if (m + period >= h) {
    // Carry still running at the horizon: check the left-shift pattern.
    for (Letter a : delta.letters_from(1)) {
      bool match = true;
      for (std::uint64_t k = 1; k <= h && match; ++k) {
        auto e = delta.multiplicative(k);
        match = c.digit(k) == (e.x == a ? 0 : e.a);
      }
      if (match) return DigitString::zeros();
    }
    throw HorizonExceeded("odometer carry does not settle within the scan horizon");
  }
  BigInt target = sys.val(c, m + 1) + 1;
  Digits head = sys.rep(target);
  head.resize(m + 1, 0);
  DigitString out = c.with_head(head);
  if (!sys.satisfies_ostrowski(out.prefix(m + 1 + delta.alphabet() + 1))) {
    throw Unsupported("greedy expansion of the shifted value violates the Ostrowski conditions");
  }
  return out;
}

DecodedIntercept intercept_of(const NumerationSystem& sys, const FiniteWord& prefix) {
  const DirectiveWord& delta = sys.directive();
  for (Letter a : prefix.symbols()) {
    if (a >= delta.alphabet()) throw InvalidInput("letter outside the directive alphabet");
  }
  DecodedIntercept out;
  std::vector<Letter> w = prefix.symbols();
  for (std::uint64_t k = 1;; ++k) {
    auto e = delta.multiplicative(k);
    std::uint64_t ones = 0;
    bool seen_one = false;
    for (std::uint64_t step = 0; step < e.a; ++step) {
      if (w.empty()) return out;
      bool b = w.front() != e.x;
      if (!b && seen_one) throw InvalidInput("desubstitution bits are not of the form 0*1*");
      if (b) {
        seen_one = true;
        ++ones;
        w.insert(w.begin(), e.x);
      }
      // Inverse of L_x on a prefix; a trailing x is ambiguous and dropped.
      std::vector<Letter> next;
      next.reserve(w.size());
      for (std::size_t i = 0; i < w.size();) {
        if (w[i] != e.x) throw InvalidInput("prefix is not an image under L_" + std::to_string(e.x));
        if (i + 1 == w.size()) break;
        if (w[i + 1] != e.x) {
          next.push_back(w[i + 1]);
          i += 2;
        } else {
          next.push_back(e.x);
          i += 1;
        }
      }
      w = std::move(next);
    }
    if (w.size() < 2) return out;
    out.digits.push_back(ones);
    out.certified = out.digits.size();
  }
}

// ---- EpisturmianWord ----

EpisturmianWord::EpisturmianWord(WordTower tower, DigitString intercept)
    : tower_(std::move(tower)), c_(std::move(intercept)), cached_(tower_.directive().alphabet()) {
  if (!tower_.numeration().valid(c_)) throw ContractViolation("intercept violates the Ostrowski conditions");
}

FiniteWord EpisturmianWord::prefix(std::size_t n) const {
  std::lock_guard lock(mu_);
  if (cached_.size() < n) cached_ = word_from_intercept(tower_, c_, std::max(n, 2 * cached_.size()));
  return cached_.prefix(n);
}

}  // namespace epi
