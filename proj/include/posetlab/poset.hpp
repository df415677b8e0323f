#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "posetlab/bitset.hpp"
#include "posetlab/errors.hpp"

namespace posetlab {

inline constexpr int kMaxElements = 4096;
inline constexpr int kMaxPatternSize = 8;
inline constexpr std::uint64_t kDefaultExtensionCap = 1'000'000;

// Strict order on {0..n-1}, stored as dense successor and predecessor rows.
// Immutable after construction; all operations below are pure functions.
class FinitePoset {
 public:
  FinitePoset() = default;

  // `above` must already be the row table of a strict order (irreflexive,
  // transitive, antisymmetric); verified.
  static FinitePoset from_closed_rows(std::vector<Bitset> above);

  int size() const { return n_; }
  bool less(int i, int j) const { return above_[static_cast<std::size_t>(i)].test(j); }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  const Bitset& above(int i) const { return above_[static_cast<std::size_t>(i)]; }
  const Bitset& below(int i) const { return below_[static_cast<std::size_t>(i)]; }

  // Relation as a lexicographically sorted pair list.
  std::vector<std::pair<int, int>> pairs() const;
  std::uint64_t pair_count() const;

  bool operator==(const FinitePoset& o) const { return n_ == o.n_ && above_ == o.above_; }

 private:
  int n_ = 0;
  std::vector<Bitset> above_;
  std::vector<Bitset> below_;
};

struct Embedding {
  std::vector<int> map;  // pattern element -> host element, injective
};

// Transitive closure of `pairs` as a strict order. Cycles (including loops)
// raise CycleDetected. With closed=true the input must already be its own
// closure.
FinitePoset from_edges(int n, const std::vector<std::pair<int, int>>& pairs, bool closed = false);

FinitePoset chain(int n);
FinitePoset antichain(int n);
FinitePoset direct_sum(const std::vector<FinitePoset>& parts);
FinitePoset two_plus_two();
FinitePoset three_plus_one();
// Induced restriction to `keep` (renumbered by position in `keep`).
FinitePoset induced(const FinitePoset& p, const std::vector<int>& keep);
// Linear order in which sequence[0] < sequence[1] < ...
FinitePoset chain_order(const std::vector<int>& sequence);

// Cover pairs (Hasse diagram), lexicographically sorted.
std::vector<std::pair<int, int>> transitive_reduction(const FinitePoset& p);

Bitset down_set(const FinitePoset& p, const Bitset& seed);
Bitset up_set(const FinitePoset& p, const Bitset& seed);
Bitset down_set(const FinitePoset& p, const std::vector<int>& seed);
Bitset up_set(const FinitePoset& p, const std::vector<int>& seed);
bool is_initial_segment(const FinitePoset& p, const Bitset& s);
bool is_final_segment(const FinitePoset& p, const Bitset& s);

struct ExtensionCount {
  std::uint64_t count = 0;
  bool truncated = false;  // cap hit; count is then a lower bound equal to cap
};

// Emits linear extensions as element sequences in lexicographic order until
// the cap is reached.
ExtensionCount for_each_linear_extension(const FinitePoset& p, std::uint64_t cap,
                                         const std::function<void(const std::vector<int>&)>& fn);
ExtensionCount count_linear_extensions(const FinitePoset& p,
                                       std::uint64_t cap = kDefaultExtensionCap);
std::vector<std::vector<int>> linear_extensions(const FinitePoset& p,
                                                std::uint64_t cap = kDefaultExtensionCap);

// First induced embedding of `pattern` into `host` in lexicographic search
// order, if any. pattern.size() must be at most kMaxPatternSize.
std::optional<Embedding> embeds_pattern(const FinitePoset& host, const FinitePoset& pattern);

// Block-major numbering: block b occupies a consecutive index range, ranges
// ordered by index element.
FinitePoset lexicographic_sum(const FinitePoset& index, const std::vector<FinitePoset>& blocks);

// True iff p contains q's order (p strengthens q).
bool strengthens(const FinitePoset& p, const FinitePoset& q);

FinitePoset intersect_orders(const std::vector<FinitePoset>& orders);

// k linear extensions whose intersection is exactly p, or nullopt. Exhaustive
// for p.size() <= 10, k <= 3; deterministic first witness.
std::optional<std::vector<std::vector<int>>> realizer_search(const FinitePoset& p, int k);

FinitePoset dual(const FinitePoset& p);

}  // namespace posetlab
