#include "epi/complexity.hpp"

#include <algorithm>
#include <limits>

#include "epi/kernels.hpp"

namespace epi {

namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase = 0x5bd1e995ULL;
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kMod);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kMod ? s - kMod : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kMod ? s - kMod : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

// Polynomial fingerprints of all length-n windows of w.
class Windows {
 public:
  Windows(std::span<const Letter> w, std::size_t n) : w_(w), n_(n) {
    top_ = 1;
    for (std::size_t i = 0; i < n; ++i) top_ = mulmod(top_, kBase);
    if (w.size() >= n) {
      std::uint64_t h = 0;
      for (std::size_t i = 0; i < n; ++i) h = addmod(mulmod(h, kBase), w[i] + 1u);
      cur_ = h;
    }
  }
  std::size_t count() const { return w_.size() < n_ ? 0 : w_.size() - n_ + 1; }
  std::uint64_t current() const { return cur_; }
  // Advances from window p to p + 1.
  void advance(std::size_t p) {
    cur_ = addmod(mulmod(cur_, kBase), w_[p + n_] + 1u);
    cur_ = submod(cur_, mulmod(top_, w_[p] + 1u));
  }

 private:
  std::span<const Letter> w_;
  std::size_t n_;
  std::uint64_t top_ = 1;
  std::uint64_t cur_ = 0;
};

std::uint64_t fingerprint(std::span<const Letter> w) {
  std::uint64_t h = 0;
  for (Letter a : w) h = addmod(mulmod(h, kBase), a + 1u);
  return h;
}

bool same(std::span<const Letter> w, std::size_t p, std::size_t q, std::size_t n) {
  return kernels::common_prefix(w.subspan(p, n), w.subspan(q, n)) == n;
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceLimit("value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(x);
}

unsigned regular_period(const NumerationSystem& sys) {
  auto d = sys.directive().detect_regular();
  if (!d) throw Unsupported("directive word is not regular: " + sys.directive().describe());
  return *d;
}

Letter type_letter(const NumerationSystem& sys, std::uint64_t k, const DigitString& c) {
  unsigned d = regular_period(sys);
  NumerationSystem shifted(sys.directive().drop_runs(k + 1));
  Digits digits;
  for (std::uint64_t i = k + 2; i + 1 <= k + d; ++i) digits.push_back(c.digit(i));
  std::size_t idx = static_cast<std::size_t>(to_u64(shifted.val(digits)));
  return standard_prefix(shifted, idx + 1)[idx];
}

}  // namespace

std::optional<std::uint64_t> irep_brute(const FiniteWord& prefix, std::size_t n) {
  if (n == 0) throw InvalidArgument("irep requires n >= 1");
  auto w = prefix.view();
  Windows win(w, n);
  std::unordered_map<std::uint64_t, std::uint32_t> head;
  std::vector<std::uint32_t> chain(win.count(), kNone);
  head.reserve(win.count());
  for (std::size_t p = 0; p < win.count(); ++p) {
    if (p > 0) win.advance(p - 1);
    auto [it, fresh] = head.try_emplace(win.current(), static_cast<std::uint32_t>(p));
    if (!fresh) {
      for (std::uint32_t q = it->second; q != kNone; q = chain[q]) {
        if (same(w, q, p, n)) return p;
      }
      chain[p] = it->second;
      it->second = static_cast<std::uint32_t>(p);
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> prep_brute(const FiniteWord& prefix, std::size_t n) {
  if (n == 0) throw InvalidArgument("prep requires n >= 1");
  if (prefix.size() < n) return std::nullopt;
  auto z = kernels::z_array(prefix.view());
  for (std::size_t j = 1; j < z.size(); ++j) {
    if (z[j] >= n) return j;
  }
  return std::nullopt;
}

std::uint64_t factor_count(const NumerationSystem& sys, std::size_t n) {
  std::uint64_t p = 1;
  std::uint64_t j = 1;
  std::size_t letters = 0;
  std::uint64_t letters_at = 0;
  for (std::size_t m = 0; m < n; ++m) {
    while (sys.u_len(j) < m) ++j;
    if (letters_at != j) {
      letters = sys.directive().letters_from(j).size();
      letters_at = j;
    }
    p += letters - 1;
  }
  return p;
}

FiniteWord RauzyGraph::factor(std::uint32_t v) const { return source_.factor(first_[v] + 1, first_[v] + n_); }

std::uint64_t RauzyGraph::hash(std::span<const Letter> w) const { return fingerprint(w); }

std::optional<std::uint32_t> RauzyGraph::find(std::span<const Letter> w) const {
  if (w.size() != n_) return std::nullopt;
  auto it = head_.find(hash(w));
  if (it == head_.end()) return std::nullopt;
  auto src = source_.view();
  for (std::uint32_t v = it->second; v != kNone; v = chain_[v]) {
    if (kernels::common_prefix(src.subspan(first_[v], n_), w) == n_) return v;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> RauzyGraph::left_special() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < in_.size(); ++v) {
    if (in_[v] > 1) out.push_back(v);
  }
  return out;
}

std::vector<std::uint32_t> RauzyGraph::right_special() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < out_.size(); ++v) {
    if (out_[v].size() > 1) out.push_back(v);
  }
  return out;
}

RauzyGraph build_rauzy(FiniteWord source, std::size_t n) {
  if (n == 0) throw InvalidArgument("Rauzy graph order must be >= 1");
  if (source.size() <= n) throw HorizonExceeded("source word shorter than n + 1");
  RauzyGraph g;
  g.n_ = n;
  g.source_ = std::move(source);
  auto w = g.source_.view();
  Windows win(w, n);
  std::vector<std::uint32_t> ids(win.count());
  for (std::size_t p = 0; p < win.count(); ++p) {
    if (p > 0) win.advance(p - 1);
    auto [it, fresh] = g.head_.try_emplace(win.current(), kNone);
    std::uint32_t id = kNone;
    for (std::uint32_t v = it->second; v != kNone; v = g.chain_[v]) {
      if (same(w, g.first_[v], p, n)) {
        id = v;
        break;
      }
    }
    if (id == kNone) {
      id = static_cast<std::uint32_t>(g.first_.size());
      g.first_.push_back(static_cast<std::uint32_t>(p));
      g.chain_.push_back(it->second);
      it->second = id;
    }
    ids[p] = id;
  }
  g.out_.assign(g.first_.size(), {});
  g.in_.assign(g.first_.size(), 0);
  for (std::size_t p = 0; p + 1 < ids.size(); ++p) {
    auto& edges = g.out_[ids[p]];
    Letter a = w[p + n];
    if (std::none_of(edges.begin(), edges.end(), [a](const auto& e) { return e.letter == a; })) {
      edges.push_back({a, ids[p + 1]});
      ++g.in_[ids[p + 1]];
      ++g.edges_;
    }
  }
  for (auto& edges : g.out_) {
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) { return x.letter < y.letter; });
  }

  auto ls = g.left_special();
  auto rs = g.right_special();
  if (ls.size() == 1 && rs.size() == 1) {
    std::size_t limit = g.first_.size() + 1;
    std::uint32_t v = ls[0];
    std::size_t steps = 0;
    while (v != rs[0] && steps < limit && g.out_[v].size() == 1) {
      v = g.out_[v][0].target;
      ++steps;
    }
    g.central_ = steps;
    for (const auto& e : g.out_[rs[0]]) {
      std::uint32_t u = e.target;
      std::size_t len = 1;
      while (u != rs[0] && len < limit && g.out_[u].size() == 1) {
        u = g.out_[u][0].target;
        ++len;
      }
      if (u == rs[0]) g.cycles_.push_back({e.letter, len});
    }
  }
  return g;
}

RauzyGraph rauzy_graph(const NumerationSystem& sys, std::size_t n, std::optional<std::size_t> horizon,
                       std::size_t cap) {
  if (n == 0) throw InvalidArgument("Rauzy graph order must be >= 1");
  std::uint64_t vertices = factor_count(sys, n);
  std::uint64_t edges = factor_count(sys, n + 1);
  std::size_t h = horizon.value_or(4 * n + 16);
  while (true) {
    if (h > cap) throw ResourceLimit("Rauzy graph horizon exceeds budget");
    RauzyGraph g = build_rauzy(standard_prefix(sys, h), n);
    if (g.vertex_count() == vertices && g.edge_count() == edges) return g;
    if (horizon) {
      throw HorizonExceeded("prefix of length " + std::to_string(h) + " holds " +
                            std::to_string(g.vertex_count()) + " of " + std::to_string(vertices) +
                            " factors");
    }
    h *= 2;
  }
}

std::uint64_t irep_rauzy(const RauzyGraph& graph, const FiniteWord& prefix) {
  std::size_t n = graph.order();
  if (prefix.size() < n) throw HorizonExceeded("prefix shorter than the graph order");
  auto start = graph.find(prefix.view().subspan(0, n));
  if (!start) throw ContractViolation("prefix is not in the language of the graph");
  std::vector<bool> seen(graph.vertex_count(), false);
  std::uint32_t v = *start;
  for (std::uint64_t pos = 0;; ++pos) {
    if (seen[v]) return pos;
    seen[v] = true;
    const auto& edges = graph.out(v);
    if (edges.size() == 1) {
      v = edges[0].target;
      continue;
    }
    if (pos + n >= prefix.size()) throw HorizonExceeded("prefix too short for the Rauzy walk");
    Letter a = prefix[pos + n];
    auto it = std::find_if(edges.begin(), edges.end(), [a](const auto& e) { return e.letter == a; });
    if (it == edges.end()) throw ContractViolation("word leaves the Rauzy graph");
    v = it->target;
  }
}

std::uint64_t irep_rauzy(const WordTower& tower, const DigitString& c, std::size_t n, std::size_t budget) {
  RauzyGraph g = rauzy_graph(tower.numeration(), n, std::nullopt, budget);
  FiniteWord t = word_from_intercept(tower, c, g.vertex_count() + n + 1);
  return irep_rauzy(g, t);
}

IntervalIndex interval_of(const NumerationSystem& sys, const BigInt& n) {
  if (n < 1) throw InvalidArgument("interval_of requires n >= 1");
  std::uint64_t k = 0;
  while (sys.u_len_run(k + 1) < n) ++k;
  BigInt first = sys.u_len_after_run(k);
  if (n <= first) return {k, 0};
  BigInt q = sys.q(static_cast<std::int64_t>(k));
  BigInt ell = (n - first + q - 1) / q;
  return {k, static_cast<std::uint64_t>(ell)};
}

BigInt theta(const NumerationSystem& sys, const BigInt& n) {
  auto [k, ell] = interval_of(sys, n);
  return sys.u_len_after_run(k) + BigInt(ell) * sys.q(static_cast<std::int64_t>(k)) - n;
}

std::vector<BigInt> interval_endpoints(const NumerationSystem& sys, std::uint64_t count) {
  std::vector<BigInt> out;
  for (std::uint64_t k = 1; k <= count; ++k) out.push_back(sys.u_len_run(k));
  return out;
}

BlockTable block_table(const NumerationSystem& sys, std::uint64_t k, std::uint64_t ell, const BigInt& th) {
  unsigned d = regular_period(sys);
  const auto& delta = sys.directive();
  std::uint64_t a = delta.a(k + 1);
  if (ell >= a) throw InvalidArgument("subinterval index out of range");
  BigInt qk = sys.q(static_cast<std::int64_t>(k));
  BigInt size = ell == 0 ? sys.q(static_cast<std::int64_t>(k) - 1) : qk;
  if (th < 0 || th >= size) throw InvalidArgument("theta out of range for I_{k,l}");

  std::uint64_t count = 1;
  for (unsigned i = 2; i + 1 <= d; ++i) count *= delta.a(k + i) + 1;
  NumerationSystem shifted(delta.drop_runs(k + 1));
  FiniteWord types = standard_prefix(shifted, static_cast<std::size_t>(count));

  BlockTable table{k, ell, th, {}};
  BigInt left = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Block b;
    b.type = types[i];
    BigInt cycle_y = BigInt(ell) * qk + sys.tau_len(k, b.type);
    b.cuts[0] = left;
    b.cuts[1] = left + BigInt(a - ell - 1) * qk + th + 1;
    b.cuts[2] = left + BigInt(a - ell) * qk;
    b.cuts[3] = b.cuts[2] + th + 1;
    b.cuts[4] = b.cuts[2] + cycle_y;
    left = b.cuts[4];
    table.blocks.push_back(std::move(b));
  }
  return table;
}

BigInt irep_shifted_standard(const NumerationSystem& sys, const BigInt& m, const BigInt& n) {
  unsigned d = regular_period(sys);
  auto [k, ell] = interval_of(sys, n);
  BigInt bound = sys.q(static_cast<std::int64_t>(k + d - 1));
  if (m < 0 || m >= bound) throw InvalidArgument("shift out of range [0, q_{k+d-1})");
  BigInt th = theta(sys, n);
  Digits digits = sys.rep(m);
  digits.resize(k + d - 1, 0);
  DigitString c = DigitString::finite(digits);
  Letter y = type_letter(sys, k, c);

  BigInt left = m - sys.val(c, k + 1);
  BigInt off = m - left;
  BigInt qk = sys.q(static_cast<std::int64_t>(k));
  std::uint64_t a = sys.directive().a(k + 1);
  BigInt next = left + sys.tau_len(k + 1, y);
  if (off <= BigInt(a - ell - 1) * qk + th) return qk;
  if (off < BigInt(a - ell) * qk) return next - m;
  if (off <= BigInt(a - ell) * qk + th) return BigInt(ell) * qk + sys.tau_len(k, y);
  return qk + next - m;
}

CaseAnalysis case_analysis(const NumerationSystem& sys, const DigitString& c, std::uint64_t k) {
  unsigned d = regular_period(sys);
  const auto& delta = sys.directive();
  std::uint64_t a = delta.a(k + 1);
  std::uint64_t ck1 = c.digit(k + 1);
  std::uint64_t ck = k == 0 ? 0 : c.digit(k);
  if (ck1 > a) throw ContractViolation("intercept digit exceeds its partial quotient");

  BigInt qk = sys.q(static_cast<std::int64_t>(k));
  BigInt u0 = sys.u_len_run(k);
  BigInt u1 = sys.u_len_after_run(k);
  BigInt u2 = sys.u_len_run(k + 1);
  auto val = [&](std::uint64_t j) { return sys.val(c, j); };

  CaseAnalysis out;
  out.k = k;
  out.y = type_letter(sys, k, c);
  out.shift = val(k + d - 1);
  BigInt tk = sys.tau_len(k, out.y);
  BigInt tk1 = sys.tau_len(k + 1, out.y);
  // Bounds are clipped to I_k; a raw bound can leave it (e.g. ii.1 when val(c_1..c_k) > q_{k-1}).
  auto clip = [&](BigInt x) { return x < u0 ? u0 : (x > u2 ? u2 : x); };
  auto add = [&](const char* tag, const BigInt& lo, const BigInt& hi, BigInt value) {
    out.ranges.push_back({out.family + "." + tag, clip(lo), clip(hi), std::move(value)});
  };

  if ((0 < ck1 && ck1 + 1 < a) || (ck1 + 1 == a && ck1 > 0 && ck == 0)) {
    out.family = "i";
    BigInt v = val(k + 1);
    add("1", u0, u2 - v, qk);
    add("2", u2 - v, u2 - BigInt(ck1) * qk, tk1 - v);
    add("3", u2 - BigInt(ck1) * qk, u2 + qk - v, BigInt(a - ck1) * qk + tk);
    add("4", u2 + qk - v, u2, qk + tk1 - v);
  } else if (ck1 == a) {
    out.family = "ii";
    BigInt v = val(k);
    add("1", u0, u1 - v, tk);
    add("2", u1 - v, u2, qk + tk - v);
  } else if (ck1 + 1 == a && ck1 > 0) {
    out.family = "iii";
    BigInt v = val(k);
    add("1", u0, u1, qk + tk - v);
    add("2", u1, u1 + qk - v, qk + tk);
    add("3", u1 + qk - v, u2, 2 * qk + tk - v);
  } else {
    bool room = false;
    for (std::uint64_t i = k + 2; i <= k + d; ++i) room = room || c.digit(i) < delta.a(i);
    if (!room) {
      out.family = "v";
      out.shift = val(k + d);
      add("1", u0, u2, qk);
    } else if (ck == 0) {
      out.family = "iv.a";
      BigInt v = k == 0 ? BigInt(0) : val(k - 1);
      add("1", u0, u2 - v, qk);
      add("2", u2 - v, u2, tk1 - v);
    } else if (a == 1) {
      out.family = "iv.b";
      add("1", u0, u2, tk1 - val(k));
    } else {
      out.family = "iv.c";
      BigInt v = val(k);
      add("1", u0, u2 - v, qk);
      add("2", u2 - v, u2, tk1 - v);
    }
  }
  return out;
}

IrepResult irep_regular(const NumerationSystem& sys, const DigitString& c, const BigInt& n) {
  regular_period(sys);
  auto [k, ell] = interval_of(sys, n);
  (void)ell;
  CaseAnalysis ca = case_analysis(sys, c, k);
  for (auto& r : ca.ranges) {
    if (r.lo < n && n <= r.hi) return {r.value, r.id, ca.shift};
  }
  throw ContractViolation("no case range contains n; intercept is not Ostrowski-valid");
}

}  // namespace epi
