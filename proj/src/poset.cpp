#include "posetlab/poset.hpp"

#include <algorithm>
#include <string>

namespace posetlab {

namespace {

std::vector<Bitset> transpose(int n, const std::vector<Bitset>& rows) {
  std::vector<Bitset> cols(static_cast<std::size_t>(n), Bitset(n));
  for (int i = 0; i < n; ++i)
    rows[static_cast<std::size_t>(i)].for_each([&](int j) { cols[static_cast<std::size_t>(j)].set(i); });
  return cols;
}

void check_strict(int n, const std::vector<Bitset>& above) {
  for (int i = 0; i < n; ++i) {
    const Bitset& row = above[static_cast<std::size_t>(i)];
    if (row.test(i)) throw CycleDetected("relation is not irreflexive at " + std::to_string(i));
    row.for_each([&](int j) {
      if (above[static_cast<std::size_t>(j)].test(i))
        throw CycleDetected("antisymmetry violated on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!above[static_cast<std::size_t>(j)].subset_of(row))
        throw MalformedPresentation("relation is not transitive at " + std::to_string(i) + "<" + std::to_string(j));
    });
  }
}

}  // namespace

FinitePoset FinitePoset::from_closed_rows(std::vector<Bitset> above) {
  FinitePoset p;
  p.n_ = static_cast<int>(above.size());
  check_strict(p.n_, above);
  p.below_ = transpose(p.n_, above);
  p.above_ = std::move(above);
  return p;
}

std::vector<std::pair<int, int>> FinitePoset::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    above_[static_cast<std::size_t>(i)].for_each([&](int j) { out.emplace_back(i, j); });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t FinitePoset::pair_count() const {
  std::uint64_t c = 0;
  for (int i = 0; i < n_; ++i) c += static_cast<std::uint64_t>(above_[static_cast<std::size_t>(i)].count());
  return c;
}

FinitePoset from_edges(int n, const std::vector<std::pair<int, int>>& pairs, bool closed) {
  if (n < 0 || n > kMaxElements)
    throw IndexOutOfRange("element count " + std::to_string(n) + " outside [0, " + std::to_string(kMaxElements) + "]");
  std::vector<Bitset> direct(static_cast<std::size_t>(n), Bitset(n));
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw IndexOutOfRange("pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0.." + std::to_string(n - 1));
    if (i == j) throw CycleDetected("input pairs imply " + std::to_string(i) + "<" + std::to_string(i));
    direct[static_cast<std::size_t>(i)].set(j);
  }

  // Kahn toposort for cycle detection, then closure by row OR in reverse
  // topological order.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    direct[static_cast<std::size_t>(i)].for_each([&](int j) { ++indeg[static_cast<std::size_t>(j)]; });
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int i = 0; i < n; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) queue.push_back(i);
  while (!queue.empty()) {
    int v = queue.front();
    queue.erase(queue.begin());
    order.push_back(v);
    direct[static_cast<std::size_t>(v)].for_each([&](int j) {
      if (--indeg[static_cast<std::size_t>(j)] == 0) queue.push_back(j);
    });
  }
  if (static_cast<int>(order.size()) != n) throw CycleDetected("input pairs contain a cycle");

  std::vector<Bitset> above(static_cast<std::size_t>(n), Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    Bitset& row = above[static_cast<std::size_t>(v)];
    direct[static_cast<std::size_t>(v)].for_each([&](int j) {
      row.set(j);
      row |= above[static_cast<std::size_t>(j)];
    });
  }
  if (closed && above != direct)
    throw std::invalid_argument("closed=true but input pairs are not transitively closed");
  return FinitePoset::from_closed_rows(std::move(above));
}

FinitePoset chain(int n) {
  std::vector<Bitset> above(static_cast<std::size_t>(n), Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) above[static_cast<std::size_t>(i)].set(j);
  return FinitePoset::from_closed_rows(std::move(above));
}

FinitePoset antichain(int n) {
  return FinitePoset::from_closed_rows(std::vector<Bitset>(static_cast<std::size_t>(n), Bitset(n)));
}

FinitePoset direct_sum(const std::vector<FinitePoset>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.size();
  std::vector<Bitset> above(static_cast<std::size_t>(n), Bitset(n));
  int base = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.size(); ++i)
      p.above(i).for_each([&](int j) { above[static_cast<std::size_t>(base + i)].set(base + j); });
    base += p.size();
  }
  return FinitePoset::from_closed_rows(std::move(above));
}

FinitePoset two_plus_two() { return direct_sum({chain(2), chain(2)}); }
FinitePoset three_plus_one() { return direct_sum({chain(3), chain(1)}); }

FinitePoset induced(const FinitePoset& p, const std::vector<int>& keep) {
  int m = static_cast<int>(keep.size());
  std::vector<Bitset> above(static_cast<std::size_t>(m), Bitset(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (p.less(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]))
        above[static_cast<std::size_t>(a)].set(b);
  return FinitePoset::from_closed_rows(std::move(above));
}

FinitePoset chain_order(const std::vector<int>& sequence) {
  int n = static_cast<int>(sequence.size());
  std::vector<Bitset> above(static_cast<std::size_t>(n), Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) above[static_cast<std::size_t>(sequence[static_cast<std::size_t>(a)])].set(sequence[static_cast<std::size_t>(b)]);
  return FinitePoset::from_closed_rows(std::move(above));
}

std::vector<std::pair<int, int>> transitive_reduction(const FinitePoset& p) {
  std::vector<std::pair<int, int>> covers;
  int n = p.size();
  for (int i = 0; i < n; ++i) {
    p.above(i).for_each([&](int j) {
      // i covers j unless some k sits strictly between.
      Bitset between = p.above(i);
      between &= p.below(j);
      if (between.none()) covers.emplace_back(i, j);
    });
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

Bitset down_set(const FinitePoset& p, const Bitset& seed) {
  Bitset out = seed;
  seed.for_each([&](int a) { out |= p.below(a); });
  return out;
}

Bitset up_set(const FinitePoset& p, const Bitset& seed) {
  Bitset out = seed;
  seed.for_each([&](int a) { out |= p.above(a); });
  return out;
}

namespace {
Bitset seed_bits(int n, const std::vector<int>& seed) {
  Bitset b(n);
  for (int a : seed) {
    if (a < 0 || a >= n) throw IndexOutOfRange("seed element " + std::to_string(a) + " outside poset");
    b.set(a);
  }
  return b;
}
}  // namespace

Bitset down_set(const FinitePoset& p, const std::vector<int>& seed) { return down_set(p, seed_bits(p.size(), seed)); }
Bitset up_set(const FinitePoset& p, const std::vector<int>& seed) { return up_set(p, seed_bits(p.size(), seed)); }

bool is_initial_segment(const FinitePoset& p, const Bitset& s) {
  bool ok = true;
  s.for_each([&](int a) {
    if (!p.below(a).subset_of(s)) ok = false;
  });
  return ok;
}

bool is_final_segment(const FinitePoset& p, const Bitset& s) {
  bool ok = true;
  s.for_each([&](int a) {
    if (!p.above(a).subset_of(s)) ok = false;
  });
  return ok;
}

namespace {

struct ExtensionWalker {
  const FinitePoset& p;
  std::uint64_t cap;
  const std::function<void(const std::vector<int>&)>* fn;
  std::vector<int> prefix;
  Bitset used;
  ExtensionCount result;

  explicit ExtensionWalker(const FinitePoset& poset, std::uint64_t c,
                           const std::function<void(const std::vector<int>&)>* f)
      : p(poset), cap(c), fn(f), used(poset.size()) {}

  bool run(int depth) {  // returns false once the cap is hit
    int n = p.size();
    if (depth == n) {
      ++result.count;
      if (fn) (*fn)(prefix);
      return result.count < cap;
    }
    for (int v = 0; v < n; ++v) {
      if (used.test(v)) continue;
      // v is placeable iff all its predecessors are already placed.
      if (!p.below(v).subset_of(used)) continue;
      used.set(v);
      prefix.push_back(v);
      bool go = run(depth + 1);
      prefix.pop_back();
      used.reset(v);
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

ExtensionCount for_each_linear_extension(const FinitePoset& p, std::uint64_t cap,
                                         const std::function<void(const std::vector<int>&)>& fn) {
  if (cap < 1) throw std::invalid_argument("extension cap must be at least 1");
  ExtensionWalker w(p, cap, &fn);
  w.result.truncated = !w.run(0);
  return w.result;
}

ExtensionCount count_linear_extensions(const FinitePoset& p, std::uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("extension cap must be at least 1");
  ExtensionWalker w(p, cap, nullptr);
  w.result.truncated = !w.run(0);
  return w.result;
}

std::vector<std::vector<int>> linear_extensions(const FinitePoset& p, std::uint64_t cap) {
  std::vector<std::vector<int>> out;
  for_each_linear_extension(p, cap, [&](const std::vector<int>& seq) { out.push_back(seq); });
  return out;
}

namespace {

struct EmbedSearch {
  const FinitePoset& host;
  const FinitePoset& pattern;
  std::vector<int> map;
  Bitset taken;

  EmbedSearch(const FinitePoset& h, const FinitePoset& q) : host(h), pattern(q), taken(h.size()) {}

  bool extend(int k) {
    if (k == pattern.size()) return true;
    for (int cand = 0; cand < host.size(); ++cand) {
      if (taken.test(cand)) continue;
      bool fits = true;
      for (int a = 0; a < k; ++a) {
        int ha = map[static_cast<std::size_t>(a)];
        if (pattern.less(a, k) != host.less(ha, cand) || pattern.less(k, a) != host.less(cand, ha)) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      map.push_back(cand);
      taken.set(cand);
      if (extend(k + 1)) return true;
      taken.reset(cand);
      map.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> embeds_pattern(const FinitePoset& host, const FinitePoset& pattern) {
  if (pattern.size() > kMaxPatternSize)
    throw PatternTooLarge("pattern has " + std::to_string(pattern.size()) + " elements, limit is " +
                          std::to_string(kMaxPatternSize));
  if (pattern.size() > host.size()) return std::nullopt;
  EmbedSearch s(host, pattern);
  if (!s.extend(0)) return std::nullopt;
  return Embedding{std::move(s.map)};
}

FinitePoset lexicographic_sum(const FinitePoset& index, const std::vector<FinitePoset>& blocks) {
  if (static_cast<int>(blocks.size()) != index.size())
    throw ArityMismatch("index has " + std::to_string(index.size()) + " elements but " +
                        std::to_string(blocks.size()) + " blocks given");
  std::vector<int> base(blocks.size() + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() == 0) throw EmptyBlock("block " + std::to_string(b) + " is empty");
    base[b + 1] = base[b] + blocks[b].size();
  }
  int n = base.back();
  if (n > kMaxElements) throw IndexOutOfRange("lexicographic sum exceeds element cap");
  std::vector<Bitset> above(static_cast<std::size_t>(n), Bitset(n));
  for (int a = 0; a < index.size(); ++a) {
    const auto& blk = blocks[static_cast<std::size_t>(a)];
    for (int x = 0; x < blk.size(); ++x) {
      Bitset& row = above[static_cast<std::size_t>(base[static_cast<std::size_t>(a)] + x)];
      blk.above(x).for_each([&](int y) { row.set(base[static_cast<std::size_t>(a)] + y); });
      index.above(a).for_each([&](int b) {
        for (int y = base[static_cast<std::size_t>(b)]; y < base[static_cast<std::size_t>(b) + 1]; ++y) row.set(y);
      });
    }
  }
  return FinitePoset::from_closed_rows(std::move(above));
}

bool strengthens(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) throw SizeMismatch("posets have different element counts");
  for (int i = 0; i < p.size(); ++i)
    if (!q.above(i).subset_of(p.above(i))) return false;
  return true;
}

FinitePoset intersect_orders(const std::vector<FinitePoset>& orders) {
  if (orders.empty()) throw SizeMismatch("intersection of an empty order list");
  int n = orders.front().size();
  for (const auto& o : orders)
    if (o.size() != n) throw SizeMismatch("posets have different element counts");
  std::vector<Bitset> above(static_cast<std::size_t>(n), Bitset(n));
  for (int i = 0; i < n; ++i) {
    above[static_cast<std::size_t>(i)] = orders.front().above(i);
    for (std::size_t k = 1; k < orders.size(); ++k) above[static_cast<std::size_t>(i)] &= orders[k].above(i);
  }
  return FinitePoset::from_closed_rows(std::move(above));
}

namespace {

// Shared helpers for the realizer search: candidate orders are kept as
// transitively closed row tables so conflicts surface immediately.
void add_closed_edge(std::vector<Bitset>& rows, int x, int y) {
  Bitset highs = rows[static_cast<std::size_t>(y)];
  highs.set(y);
  for (int a = 0; a < static_cast<int>(rows.size()); ++a)
    if (a == x || rows[static_cast<std::size_t>(a)].test(x)) rows[static_cast<std::size_t>(a)] |= highs;
}

std::vector<int> total_order_sequence(const std::vector<Bitset>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::vector<int> key(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    seq[static_cast<std::size_t>(i)] = i;
    key[static_cast<std::size_t>(i)] = n - rows[static_cast<std::size_t>(i)].count();
  }
  std::sort(seq.begin(), seq.end(),
            [&](int a, int b) { return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)]; });
  return seq;
}

std::vector<Bitset> rows_of(const FinitePoset& p) {
  std::vector<Bitset> rows;
  rows.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) rows.push_back(p.above(i));
  return rows;
}

// Deterministic greedy pass: the lexicographically first extension, then per
// further order the extension that reverses every still-unsplit pair it can.
std::optional<std::vector<std::vector<int>>> realizer_greedy(const FinitePoset& p, int k,
                                                             const std::vector<std::pair<int, int>>& free_pairs) {
  std::vector<std::vector<int>> orders;
  std::vector<int> first;
  for_each_linear_extension(p, 1, [&](const std::vector<int>& seq) { first = seq; });
  orders.push_back(first);
  std::vector<int> pos(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) pos[static_cast<std::size_t>(first[static_cast<std::size_t>(i)])] = i;

  std::vector<bool> split(free_pairs.size(), false);
  for (int round = 1; round < k; ++round) {
    std::vector<Bitset> rows = rows_of(p);
    for (std::size_t e = 0; e < free_pairs.size(); ++e) {
      if (split[e]) continue;
      auto [x, y] = free_pairs[e];
      int lo = pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(y)] ? x : y;
      int hi = lo == x ? y : x;
      // want hi below lo this round; skip when already forced the other way
      if (rows[static_cast<std::size_t>(lo)].test(hi)) continue;
      add_closed_edge(rows, hi, lo);
    }
    // orient whatever is still free along the first extension
    for (std::size_t e = 0; e < free_pairs.size(); ++e) {
      auto [x, y] = free_pairs[e];
      if (!rows[static_cast<std::size_t>(x)].test(y) && !rows[static_cast<std::size_t>(y)].test(x)) {
        int lo = pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(y)] ? x : y;
        int hi = lo == x ? y : x;
        add_closed_edge(rows, lo, hi);
      }
    }
    std::vector<int> seq = total_order_sequence(rows);
    std::vector<int> rpos(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) rpos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
    for (std::size_t e = 0; e < free_pairs.size(); ++e) {
      auto [x, y] = free_pairs[e];
      bool first_dir = pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(y)];
      bool this_dir = rpos[static_cast<std::size_t>(x)] < rpos[static_cast<std::size_t>(y)];
      if (first_dir != this_dir) split[e] = true;
    }
    orders.push_back(seq);
  }
  for (bool b : split)
    if (!b) return std::nullopt;
  std::vector<FinitePoset> as_orders;
  for (const auto& seq : orders) as_orders.push_back(chain_order(seq));
  if (!(intersect_orders(as_orders) == p)) return std::nullopt;
  return orders;
}

// Complete search: assign a direction vector to each incomparable pair, most
// constrained pair first, with transitive closure propagating decisions.
struct RealizerSearch {
  const FinitePoset& p;
  int k;
  std::vector<std::pair<int, int>> free_pairs;
  std::vector<bool> done;
  std::vector<std::vector<Bitset>> above;
  std::uint64_t nodes = 0;
  static constexpr std::uint64_t kNodeCap = 20'000'000;

  RealizerSearch(const FinitePoset& poset, int kk, std::vector<std::pair<int, int>> pairs)
      : p(poset), k(kk), free_pairs(std::move(pairs)), done(free_pairs.size(), false) {
    above.assign(static_cast<std::size_t>(k), rows_of(p));
  }

  // admissible direction vectors for pair e under the current closures;
  // bit i set means order i takes y < x
  std::vector<int> options(std::size_t e) const {
    auto [x, y] = free_pairs[e];
    int fixed_mask = 0, fixed_dir = 0;
    for (int i = 0; i < k; ++i) {
      if (above[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)].test(y)) fixed_mask |= 1 << i;
      if (above[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)].test(x)) {
        fixed_mask |= 1 << i;
        fixed_dir |= 1 << i;
      }
    }
    std::vector<int> out;
    for (int vec = 1; vec < (1 << k) - 1; ++vec)
      if ((vec & fixed_mask) == (fixed_dir & fixed_mask)) out.push_back(vec);
    return out;
  }

  void apply(std::size_t e, int vec) {
    auto [x, y] = free_pairs[e];
    for (int i = 0; i < k; ++i) {
      auto& rows = above[static_cast<std::size_t>(i)];
      if (vec & (1 << i)) {
        if (!rows[static_cast<std::size_t>(y)].test(x)) add_closed_edge(rows, y, x);
      } else {
        if (!rows[static_cast<std::size_t>(x)].test(y)) add_closed_edge(rows, x, y);
      }
    }
  }

  bool solve(std::optional<std::vector<std::vector<int>>>& out) {
    if (++nodes > kNodeCap) throw SearchBoundExceeded("realizer search exceeded its node budget");
    std::size_t best = free_pairs.size();
    std::vector<int> best_opts;
    for (std::size_t e = 0; e < free_pairs.size(); ++e) {
      if (done[e]) continue;
      std::vector<int> opts = options(e);
      if (best == free_pairs.size() || opts.size() < best_opts.size()) {
        best = e;
        best_opts = std::move(opts);
        if (best_opts.empty() || best_opts.size() == 1) break;
      }
    }
    if (best == free_pairs.size()) {
      std::vector<std::vector<int>> orders;
      for (int i = 0; i < k; ++i) orders.push_back(total_order_sequence(above[static_cast<std::size_t>(i)]));
      out = std::move(orders);
      return true;
    }
    if (best_opts.empty()) return false;
    done[best] = true;
    for (int vec : best_opts) {
      auto saved = above;
      apply(best, vec);
      if (solve(out)) return true;
      above = std::move(saved);
    }
    done[best] = false;
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> realizer_search(const FinitePoset& p, int k) {
  if (p.size() > 10 || k > 3 || k < 1)
    throw SearchBoundExceeded("realizer_search supports n <= 10 and 1 <= k <= 3");
  std::vector<std::pair<int, int>> free_pairs;
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (!p.comparable(x, y)) free_pairs.emplace_back(x, y);
  if (free_pairs.empty()) {
    std::vector<int> seq;
    if (p.size() > 0)
      for_each_linear_extension(p, 1, [&](const std::vector<int>& s) { seq = s; });
    return std::vector<std::vector<int>>(static_cast<std::size_t>(k), seq);
  }
  if (k == 1) return std::nullopt;  // a single linear extension only realizes total orders
  if (auto greedy = realizer_greedy(p, k, free_pairs)) return greedy;
  RealizerSearch s(p, k, free_pairs);
  std::optional<std::vector<std::vector<int>>> out;
  s.solve(out);
  return out;
}

FinitePoset dual(const FinitePoset& p) {
  std::vector<Bitset> above;
  above.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) above.push_back(p.below(i));
  return FinitePoset::from_closed_rows(std::move(above));
}

}  // namespace posetlab
