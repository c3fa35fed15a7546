#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epi/engine.hpp"
#include "epi/numeration.hpp"
#include "epi/words.hpp"

namespace epi {

// irep(x, n): number of leading length-n windows that are pairwise distinct, so that
// irep + n is the length of the shortest prefix with a repeated length-n factor.
// Absent when no repetition is visible inside the prefix.
std::optional<std::uint64_t> irep_brute(const FiniteWord& prefix, std::size_t n);
// prep(x, n): 0-based position of the first reoccurrence of the length-n prefix.
std::optional<std::uint64_t> prep_brute(const FiniteWord& prefix, std::size_t n);

// Number of factors of length n in the language of c_Delta.
std::uint64_t factor_count(const NumerationSystem& sys, std::size_t n);

class RauzyGraph {
 public:
  struct Edge {
    Letter letter;
    std::uint32_t target;
  };

  std::size_t order() const { return n_; }
  std::size_t horizon() const { return source_.size(); }
  std::size_t vertex_count() const { return first_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<Edge>& out(std::uint32_t v) const { return out_[v]; }
  std::size_t in_degree(std::uint32_t v) const { return in_[v]; }
  // Factor of vertex v.
  FiniteWord factor(std::uint32_t v) const;
  std::optional<std::uint32_t> find(std::span<const Letter> w) const;

  std::vector<std::uint32_t> left_special() const;
  std::vector<std::uint32_t> right_special() const;
  // Edges from the left special vertex to the right special vertex.
  std::size_t central_path() const { return central_; }
  // Length of the cycle leaving the right special vertex along each letter.
  const std::vector<std::pair<Letter, std::size_t>>& cycles() const { return cycles_; }

  friend RauzyGraph build_rauzy(FiniteWord source, std::size_t n);

 private:
  std::size_t n_ = 0;
  FiniteWord source_;
  std::vector<std::uint32_t> first_;  // first occurrence of each vertex
  std::vector<std::vector<Edge>> out_;
  std::vector<std::uint32_t> in_;
  std::size_t edges_ = 0;
  std::size_t central_ = 0;
  std::vector<std::pair<Letter, std::size_t>> cycles_;
  std::unordered_map<std::uint64_t, std::uint32_t> head_;
  std::vector<std::uint32_t> chain_;
  std::uint64_t hash(std::span<const Letter> w) const;
};

// Rauzy graph of the factors of one finite word.
RauzyGraph build_rauzy(FiniteWord source, std::size_t n);

// Rauzy graph of the language of c_Delta. With an explicit horizon the prefix of that length
// must already contain every factor (HorizonExceeded otherwise); without one the horizon doubles
// from 4n until it does, up to the cap.
RauzyGraph rauzy_graph(const NumerationSystem& sys, std::size_t n,
                       std::optional<std::size_t> horizon = std::nullopt,
                       std::size_t cap = std::size_t{1} << 26);

// Walks the graph along a prefix of the word, reading letters only at branching vertices.
std::uint64_t irep_rauzy(const RauzyGraph& graph, const FiniteWord& prefix);
std::uint64_t irep_rauzy(const WordTower& tower, const DigitString& c, std::size_t n,
                         std::size_t budget = std::size_t{1} << 26);

struct IntervalIndex {
  std::uint64_t k = 0;
  std::uint64_t ell = 0;
  friend bool operator==(const IntervalIndex&, const IntervalIndex&) = default;
};

// (k, l) with |u_{r_k+l}| < n <= |u_{r_k+l+1}|.
IntervalIndex interval_of(const NumerationSystem& sys, const BigInt& n);
BigInt theta(const NumerationSystem& sys, const BigInt& n);
// Endpoints |u_{r_k}| for k = 1..count.
std::vector<BigInt> interval_endpoints(const NumerationSystem& sys, std::uint64_t count);

struct Block {
  Letter type = 0;
  // lambda_{i,j} = [cuts[j-1], cuts[j]); cuts[0] = L_i and cuts[4] = L_{i+1}.
  std::array<BigInt, 5> cuts;
};

struct BlockTable {
  std::uint64_t k = 0;
  std::uint64_t ell = 0;
  BigInt theta;
  std::vector<Block> blocks;  // K_d entries
};

// Regular Delta only. theta selects n = |u_{r_k+l+1}| - theta inside I_{k,l}.
BlockTable block_table(const NumerationSystem& sys, std::uint64_t k, std::uint64_t ell,
                       const BigInt& theta = 0);

// irep(T^m(c_Delta), n) for 0 <= m < q_{k+d-1}.
BigInt irep_shifted_standard(const NumerationSystem& sys, const BigInt& m, const BigInt& n);

struct CaseRange {
  std::string id;  // e.g. "iv.a.2"
  BigInt lo;       // exclusive
  BigInt hi;       // inclusive
  BigInt value;
};

struct CaseAnalysis {
  std::uint64_t k = 0;
  std::string family;  // i, ii, iii, iv.a, iv.b, iv.c, v
  Letter y = 0;
  BigInt shift;
  std::vector<CaseRange> ranges;  // tile (|u_{r_k}|, |u_{r_{k+1}}|]
};

// The case of the closed form that applies to interval I_k.
CaseAnalysis case_analysis(const NumerationSystem& sys, const DigitString& c, std::uint64_t k);

struct IrepResult {
  BigInt value;
  std::string case_id;
  BigInt shift;
};

IrepResult irep_regular(const NumerationSystem& sys, const DigitString& c, const BigInt& n);

}  // namespace epi
