#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "posetlab/omega.hpp"
#include "posetlab/poset.hpp"

namespace posetlab::testing {

using Rng = std::mt19937_64;

// Random strict order: orient random pairs along a random permutation, close.
inline FinitePoset random_poset(Rng& rng, int n, double density = 0.3) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng) < density) pairs.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return from_edges(n, pairs);
}

// Every strict order on n labelled elements, via the three-way choice per
// unordered pair filtered by transitivity.
inline std::vector<FinitePoset> all_strict_orders(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<FinitePoset> out;
  std::size_t total = 1;
  for (std::size_t k = 0; k < slots.size(); ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<Bitset> above(static_cast<std::size_t>(n), Bitset(n));
    for (auto [a, b] : slots) {
      switch (c % 3) {
        case 1: above[static_cast<std::size_t>(a)].set(b); break;
        case 2: above[static_cast<std::size_t>(b)].set(a); break;
        default: break;
      }
      c /= 3;
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      above[static_cast<std::size_t>(i)].for_each([&](int j) {
        if (!above[static_cast<std::size_t>(j)].subset_of(above[static_cast<std::size_t>(i)])) transitive = false;
      });
    if (!transitive) continue;
    out.push_back(FinitePoset::from_closed_rows(std::move(above)));
  }
  return out;
}

inline bool is_strict_relation(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (auto [a, b] : pairs) rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  for (int i = 0; i < n; ++i)
    if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
            !rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
          return false;
  return true;
}

// omega + 1 analog: element 0 is isolated, 1 < 2 < 3 < ... is a chain.
class OmegaPlusOneAnalog final : public OmegaPresentation {
 public:
  bool less(std::uint64_t n, std::uint64_t m) const override { return n >= 1 && n < m; }
  std::optional<std::uint64_t> non_successor_bound(std::uint64_t n) const override {
    if (n == 0) return std::nullopt;  // nothing dominates the isolated point
    return n;
  }
  std::string describe() const override { return "test: omega plus isolated point"; }
};

// The chain omega itself; not expressible through the document grammar.
class OmegaChain final : public OmegaPresentation {
 public:
  bool less(std::uint64_t n, std::uint64_t m) const override { return n < m; }
  std::optional<std::uint64_t> non_successor_bound(std::uint64_t n) const override { return n; }
  std::string describe() const override { return "test: the chain omega"; }
};

// Deliberately intransitive relation for the strict-order failure path.
class IntransitivePresentation final : public OmegaPresentation {
 public:
  bool less(std::uint64_t n, std::uint64_t m) const override {
    return (n == 0 && m == 1) || (n == 1 && m == 2);
  }
  std::optional<std::uint64_t> non_successor_bound(std::uint64_t) const override { return std::nullopt; }
  std::string describe() const override { return "test: intransitive relation"; }
};

// Permutation of [0, n) displaced at most block-1 positions: shuffle within
// consecutive blocks.
inline std::vector<int> block_shuffled_permutation(Rng& rng, int n, int block) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int start = 0; start < n; start += block) {
    int end = std::min(n, start + block);
    std::shuffle(perm.begin() + start, perm.begin() + end, rng);
  }
  return perm;
}

// Intersection of k displacement-bounded permutation orders on N, extended
// beyond the sampled window by the identity.
class PermIntersection final : public OmegaPresentation {
 public:
  PermIntersection(std::vector<std::vector<int>> perms, int displacement)
      : perms_(std::move(perms)), displacement_(displacement) {}

  bool less(std::uint64_t n, std::uint64_t m) const override {
    if (n == m) return false;
    for (const auto& p : perms_)
      if (rank(p, n) >= rank(p, m)) return false;
    return true;
  }
  std::optional<std::uint64_t> non_successor_bound(std::uint64_t n) const override {
    return n + 2 * static_cast<std::uint64_t>(displacement_);
  }
  std::string describe() const override {
    return "test: intersection of " + std::to_string(perms_.size()) + " permutation orders";
  }

 private:
  static std::uint64_t rank(const std::vector<int>& p, std::uint64_t i) {
    return i < p.size() ? static_cast<std::uint64_t>(p[static_cast<std::size_t>(i)]) : i;
  }
  std::vector<std::vector<int>> perms_;
  int displacement_;
};

// Chain A of a_len elements, chain B of b_len elements, a_i below b_j iff
// j >= 2^i. Separates the weakly-uniform and uniform window notions.
inline FinitePoset two_chain_analog(int a_len, int b_len) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < a_len; ++i) pairs.emplace_back(i, i + 1);
  for (int j = 0; j + 1 < b_len; ++j) pairs.emplace_back(a_len + j, a_len + j + 1);
  for (int i = 0; i < a_len; ++i)
    for (int j = 0; j < b_len; ++j)
      if (j >= (1 << i)) pairs.emplace_back(i, a_len + j);
  return from_edges(a_len + b_len, pairs);
}

// Chain of `chain_len` plus one isolated point (the omega + 1 window analog).
inline FinitePoset chain_plus_isolated(int chain_len) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < chain_len; ++i) pairs.emplace_back(i, i + 1);
  return from_edges(chain_len + 1, pairs);
}

}  // namespace posetlab::testing
