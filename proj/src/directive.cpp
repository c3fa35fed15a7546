#include "epi/directive.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace epi {

std::vector<std::uint64_t> parse_digit_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  bool bracket = text.front() == '[';
  if (bracket) {
    if (text.back() != ']') throw ParseError("unterminated digit list");
    text = text.substr(1, text.size() - 2);
    if (text.empty()) return out;
  }
  if (bracket || text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view item = text.substr(pos, comma - pos);
      if (item.empty() || item.size() > 19) throw ParseError("bad list item");
      std::uint64_t v = 0;
      for (char ch : item) {
        if (ch < '0' || ch > '9') throw ParseError("bad list item: " + std::string(item));
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
      }
      out.push_back(v);
      pos = comma + 1;
    }
    return out;
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw ParseError("not a digit: " + std::string(1, ch));
    out.push_back(static_cast<std::uint64_t>(ch - '0'));
  }
  return out;
}

struct DirectiveWord::Impl {
  enum class Kind { Periodic, Regular, Stream } kind;
  // Periodic letters.
  std::vector<Letter> pre, per;
  // Regular.
  std::vector<Letter> cycle;
  std::vector<std::uint64_t> a_pre, a_per;
  PartialQuotients gen;
  std::string label;
  unsigned alphabet = 0;

  mutable std::mutex mu;
  mutable std::vector<Letter> xs{0};
  mutable std::vector<std::uint64_t> as{0};
  mutable std::vector<std::uint64_t> rs{0};
  mutable std::vector<std::uint64_t> prev_same{0};  // largest j < k with x_j = x_k, 0 if none
  mutable std::vector<std::uint64_t> last_seen;     // per letter

  Letter letter_raw(std::uint64_t n) const {
    if (n <= pre.size()) return pre[n - 1];
    return per[(n - pre.size() - 1) % per.size()];
  }

  std::uint64_t quotient(std::uint64_t k) const {
    std::uint64_t a;
    if (kind == Kind::Stream) {
      a = gen(k);
    } else if (k <= a_pre.size()) {
      a = a_pre[k - 1];
    } else {
      a = a_per[(k - a_pre.size() - 1) % a_per.size()];
    }
    if (a == 0) throw ContractViolation("partial quotient a_" + std::to_string(k) + " is zero");
    return a;
  }

  // Requires mu held.
  void extend_to(std::uint64_t k) const {
    if (last_seen.empty()) last_seen.assign(alphabet, 0);
    while (xs.size() <= k) {
      std::uint64_t next = xs.size();
      Letter x;
      std::uint64_t a;
      if (kind == Kind::Periodic) {
        std::uint64_t start = rs.back() + 1;
        x = letter_raw(start);
        std::uint64_t n = start;
        while (letter_raw(n + 1) == x) ++n;
        a = n - start + 1;
      } else {
        x = cycle[(next - 1) % cycle.size()];
        a = quotient(next);
      }
      xs.push_back(x);
      as.push_back(a);
      rs.push_back(rs.back() + a);
      prev_same.push_back(last_seen[x]);
      last_seen[x] = next;
    }
  }

  void extend_to_position(std::uint64_t n) const {
    while (rs.back() < n) extend_to(xs.size() + std::max<std::size_t>(xs.size() / 2, 8));
  }
};

namespace {

std::uint64_t max_letter(const std::vector<Letter>& w) {
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

}  // namespace

DirectiveWord DirectiveWord::periodic(const FiniteWord& preperiod, const FiniteWord& period) {
  if (period.empty()) throw InvalidArgument("empty period");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Periodic;
  impl->pre = preperiod.symbols();
  impl->per = period.symbols();
  std::set<Letter> distinct(impl->per.begin(), impl->per.end());
  if (distinct.size() < 2) throw InvalidArgument("directive word is eventually constant");
  impl->alphabet = static_cast<unsigned>(std::max(max_letter(impl->pre), max_letter(impl->per)) + 1);
  return DirectiveWord(impl);
}

DirectiveWord DirectiveWord::regular(std::vector<Letter> cycle, std::vector<std::uint64_t> a_pre,
                                     std::vector<std::uint64_t> a_per) {
  if (cycle.size() < 2) throw InvalidArgument("regular directive word needs d >= 2");
  std::set<Letter> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) throw InvalidArgument("cycle letters must be distinct");
  if (a_per.empty()) throw InvalidArgument("empty partial-quotient period");
  for (auto v : a_pre) if (v == 0) throw InvalidArgument("partial quotients must be >= 1");
  for (auto v : a_per) if (v == 0) throw InvalidArgument("partial quotients must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Regular;
  impl->alphabet = static_cast<unsigned>(max_letter(cycle) + 1);
  impl->cycle = std::move(cycle);
  impl->a_pre = std::move(a_pre);
  impl->a_per = std::move(a_per);
  return DirectiveWord(impl);
}

DirectiveWord DirectiveWord::regular(unsigned d, std::vector<std::uint64_t> a_pre,
                                     std::vector<std::uint64_t> a_per) {
  if (d > 256) throw InvalidArgument("alphabet larger than 256 letters");
  std::vector<Letter> cycle(d);
  std::iota(cycle.begin(), cycle.end(), Letter{0});
  return regular(std::move(cycle), std::move(a_pre), std::move(a_per));
}

DirectiveWord DirectiveWord::regular_stream(unsigned d, PartialQuotients a, std::string label) {
  if (d < 2 || d > 256) throw InvalidArgument("regular directive word needs 2 <= d <= 256");
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Stream;
  impl->cycle.resize(d);
  std::iota(impl->cycle.begin(), impl->cycle.end(), Letter{0});
  impl->gen = std::move(a);
  impl->label = std::move(label);
  impl->alphabet = d;
  return DirectiveWord(impl);
}

DirectiveWord DirectiveWord::parse(std::string_view text) {
  auto split_bar = [](std::string_view s) {
    auto bar = s.find('|');
    if (bar == std::string_view::npos) throw ParseError("missing '|' in periodic spec");
    return std::pair{s.substr(0, bar), s.substr(bar + 1)};
  };
  if (text.rfind("periodic:", 0) == 0) {
    auto [pre, per] = split_bar(text.substr(9));
    for (char ch : std::string(pre) + std::string(per)) {
      if (ch < '0' || ch > '9') throw ParseError("directive letters must be single digits");
    }
    if (per.empty()) throw ParseError("empty period");
    auto p = FiniteWord::from_digits(pre, 10);
    auto q = FiniteWord::from_digits(per, 10);
    try {
      return periodic(p, q);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  if (text.rfind("regular:", 0) == 0) {
    std::string_view rest = text.substr(8);
    if (rest.rfind("d=", 0) != 0) throw ParseError("expected d=<d>");
    auto semi = rest.find(";a=");
    if (semi == std::string_view::npos) throw ParseError("expected ;a=<pre>|<per>");
    std::string_view dtext = rest.substr(2, semi - 2);
    if (dtext.empty() || dtext.size() > 3) throw ParseError("bad d");
    unsigned d = 0;
    for (char ch : dtext) {
      if (ch < '0' || ch > '9') throw ParseError("bad d");
      d = d * 10 + static_cast<unsigned>(ch - '0');
    }
    auto [pre, per] = split_bar(rest.substr(semi + 3));
    try {
      return regular(d, parse_digit_list(pre), parse_digit_list(per));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown directive spec: " + std::string(text));
}

unsigned DirectiveWord::alphabet() const { return impl_->alphabet; }

bool DirectiveWord::eventually_periodic() const { return impl_->kind != Impl::Kind::Stream; }

std::string DirectiveWord::describe() const {
  auto join = [](const auto& v, bool commas) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (commas && i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  switch (impl_->kind) {
    case Impl::Kind::Periodic:
      return "periodic:" + join(impl_->pre, false) + "|" + join(impl_->per, false);
    case Impl::Kind::Regular:
      return "regular:cycle=" + join(impl_->cycle, true) + ";a=" + join(impl_->a_pre, true) + "|" +
             join(impl_->a_per, true);
    case Impl::Kind::Stream:
      return "regular:d=" + std::to_string(impl_->cycle.size()) + ";a=" + impl_->label;
  }
  return {};
}

Letter DirectiveWord::letter(std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("letter index is 1-based");
  if (impl_->kind == Impl::Kind::Periodic) return impl_->letter_raw(n);
  return x(run_of(n));
}

std::uint64_t DirectiveWord::run_of(std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("letter index is 1-based");
  std::lock_guard lock(impl_->mu);
  impl_->extend_to_position(n);
  auto it = std::lower_bound(impl_->rs.begin(), impl_->rs.end(), n);
  return static_cast<std::uint64_t>(it - impl_->rs.begin());
}

MultiplicativeEntry DirectiveWord::multiplicative(std::uint64_t k) const {
  if (k == 0) throw InvalidArgument("run index is 1-based");
  std::lock_guard lock(impl_->mu);
  impl_->extend_to(k);
  return {k, impl_->xs[k], impl_->as[k], impl_->rs[k]};
}

Letter DirectiveWord::x(std::uint64_t k) const { return multiplicative(k).x; }
std::uint64_t DirectiveWord::a(std::uint64_t k) const { return multiplicative(k).a; }

std::uint64_t DirectiveWord::r(std::uint64_t k) const {
  if (k == 0) return 0;
  return multiplicative(k).r;
}

std::optional<std::uint64_t> DirectiveWord::pfun(std::uint64_t n) const {
  if (n == 0) throw InvalidArgument("letter index is 1-based");
  std::uint64_t k = run_of(n);
  if (n > r(k - 1) + 1) return n - 1;
  std::lock_guard lock(impl_->mu);
  std::uint64_t j = impl_->prev_same[k];
  if (j == 0) return std::nullopt;
  return impl_->rs[j];
}

std::optional<std::uint64_t> DirectiveWord::jfun(std::uint64_t k) const {
  if (k == 0) throw InvalidArgument("run index is 1-based");
  std::lock_guard lock(impl_->mu);
  impl_->extend_to(k + 1);
  std::uint64_t j = impl_->prev_same[k + 1];
  if (j == 0) return std::nullopt;
  return j;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> DirectiveWord::run_period() const {
  switch (impl_->kind) {
    case Impl::Kind::Stream:
      return std::nullopt;
    case Impl::Kind::Regular:
      return std::pair<std::uint64_t, std::uint64_t>{
          impl_->a_pre.size(), std::lcm<std::uint64_t>(impl_->cycle.size(), impl_->a_per.size())};
    case Impl::Kind::Periodic:
      break;
  }
  std::uint64_t pos0 = impl_->pre.size() + impl_->per.size();
  std::uint64_t k0 = run_of(pos0 + 1) + 1;
  std::uint64_t start = r(k0 - 1) + 1;
  std::uint64_t count = 0;
  while (r(k0 + count - 1) + 1 < start + impl_->per.size()) ++count;
  return std::pair<std::uint64_t, std::uint64_t>{k0 - 1, count};
}

std::optional<unsigned> DirectiveWord::detect_regular(std::uint64_t horizon) const {
  if (horizon < 2) throw InvalidArgument("horizon must be >= 2");
  unsigned d = 0;
  for (std::uint64_t k = 2;; ++k) {
    Letter xk = x(k);
    bool seen = false;
    for (std::uint64_t i = 1; i < k; ++i) seen = seen || x(i) == xk;
    if (seen) {
      if (xk != x(1)) return std::nullopt;
      d = static_cast<unsigned>(k - 1);
      break;
    }
    if (k > impl_->alphabet + 1u) return std::nullopt;
  }
  if (d < 2) return std::nullopt;
  std::uint64_t limit = horizon;
  if (auto rp = run_period()) limit = std::max(limit, rp->first + 2 * rp->second + d);
  for (std::uint64_t k = d + 1; k <= limit; ++k) {
    if (x(k) != x(k - d)) return std::nullopt;
  }
  return d;
}

DirectiveWord DirectiveWord::drop_runs(std::uint64_t j) const {
  if (j == 0) return *this;
  auto impl = std::make_shared<Impl>();
  const Impl& src = *impl_;
  impl->kind = src.kind;
  impl->alphabet = src.alphabet;
  impl->label = src.label;
  switch (src.kind) {
    case Impl::Kind::Periodic: {
      std::uint64_t shift = r(j);
      impl->per = src.per;
      if (shift <= src.pre.size()) {
        impl->pre.assign(src.pre.begin() + static_cast<std::ptrdiff_t>(shift), src.pre.end());
      } else {
        std::uint64_t o = (shift - src.pre.size()) % src.per.size();
        std::rotate(impl->per.begin(), impl->per.begin() + static_cast<std::ptrdiff_t>(o), impl->per.end());
      }
      break;
    }
    case Impl::Kind::Regular: {
      impl->cycle = src.cycle;
      std::rotate(impl->cycle.begin(), impl->cycle.begin() + static_cast<std::ptrdiff_t>(j % src.cycle.size()),
                  impl->cycle.end());
      impl->a_per = src.a_per;
      if (j <= src.a_pre.size()) {
        impl->a_pre.assign(src.a_pre.begin() + static_cast<std::ptrdiff_t>(j), src.a_pre.end());
      } else {
        std::uint64_t o = (j - src.a_pre.size()) % src.a_per.size();
        std::rotate(impl->a_per.begin(), impl->a_per.begin() + static_cast<std::ptrdiff_t>(o), impl->a_per.end());
      }
      break;
    }
    case Impl::Kind::Stream: {
      impl->cycle = src.cycle;
      std::rotate(impl->cycle.begin(), impl->cycle.begin() + static_cast<std::ptrdiff_t>(j % src.cycle.size()),
                  impl->cycle.end());
      auto gen = src.gen;
      impl->gen = [gen, j](std::uint64_t k) { return gen(k + j); };
      impl->label = src.label + ">>" + std::to_string(j);
      break;
    }
  }
  return DirectiveWord(impl);
}

std::vector<Letter> DirectiveWord::letters_from(std::uint64_t n) const {
  std::set<Letter> out;
  if (impl_->kind == Impl::Kind::Periodic) {
    out.insert(impl_->per.begin(), impl_->per.end());
    for (std::uint64_t i = std::max<std::uint64_t>(n, 1); i <= impl_->pre.size(); ++i) out.insert(impl_->pre[i - 1]);
  } else {
    out.insert(impl_->cycle.begin(), impl_->cycle.end());
  }
  return {out.begin(), out.end()};
}

}  // namespace epi
