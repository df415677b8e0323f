#include "posetlab/structure.hpp"

#include <algorithm>
#include <map>

namespace posetlab {

HeightProfile levels(const FinitePoset& p) {
  int n = p.size();
  HeightProfile prof;
  prof.height.assign(static_cast<std::size_t>(n), -1);

  Bitset remaining(n);
  for (int i = 0; i < n; ++i) remaining.set(i);
  int level = 0;
  while (remaining.any()) {
    std::vector<int> cur;
    remaining.for_each([&](int x) {
      Bitset pred = p.below(x);
      pred &= remaining;
      if (pred.none()) cur.push_back(x);
    });
    for (int x : cur) {
      prof.height[static_cast<std::size_t>(x)] = level;
      remaining.reset(x);
    }
    prof.levels.push_back(std::move(cur));
    ++level;
  }
  prof.poset_height = level;

  // Cross-check against longest-chain heights; peel order is topological.
  std::vector<int> chain_height(static_cast<std::size_t>(n), 0);
  for (const auto& lvl : prof.levels)
    for (int x : lvl) {
      int h = 0;
      p.below(x).for_each([&](int z) { h = std::max(h, chain_height[static_cast<std::size_t>(z)] + 1); });
      chain_height[static_cast<std::size_t>(x)] = h;
    }
  if (chain_height != prof.height) throw std::logic_error("level peeling and longest-chain heights disagree");
  return prof;
}

std::vector<int> konig_chain(const FinitePoset& p) {
  HeightProfile prof = levels(p);
  if (prof.poset_height == 0) return {};
  std::vector<int> chain;
  int cur = prof.levels.back().front();
  chain.push_back(cur);
  for (int a = prof.poset_height - 2; a >= 0; --a) {
    int pick = -1;
    for (int y : prof.levels[static_cast<std::size_t>(a)])
      if (p.less(y, cur)) {
        pick = y;
        break;
      }
    if (pick < 0) throw std::logic_error("level element without a predecessor one level down");
    chain.push_back(pick);
    cur = pick;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

namespace {

// Pointwise weak thresholds: t[a] is the least level v such that every
// element of level a is strictly below every element of height > v, with y
// ranging over the whole window. Always a <= t[a] <= H-1.
std::vector<int> weak_thresholds(const FinitePoset& p, const HeightProfile& prof, int upto) {
  std::vector<int> t(static_cast<std::size_t>(upto), 0);
  int n = p.size();
  std::vector<int> s(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int best = prof.height[static_cast<std::size_t>(x)];
    for (int z = 0; z < n; ++z)
      if (!p.less(x, z)) best = std::max(best, prof.height[static_cast<std::size_t>(z)]);
    s[static_cast<std::size_t>(x)] = best;
  }
  for (int a = 0; a < upto; ++a) {
    int v = a;
    for (int x : prof.levels[static_cast<std::size_t>(a)]) v = std::max(v, s[static_cast<std::size_t>(x)]);
    t[static_cast<std::size_t>(a)] = v;
  }
  return t;
}

}  // namespace

UniformityWitness uniformity(const FinitePoset& p, int boundary) {
  HeightProfile prof = levels(p);
  int h = prof.poset_height;
  if (boundary < 0 || boundary > h)
    throw BoundaryTooLarge("boundary " + std::to_string(boundary) + " outside [0, " + std::to_string(h) + "]");
  UniformityWitness w;
  if (boundary == 0) {
    w.kind = UniformityKind::uniform;
    return w;
  }
  w.weak_thresholds = weak_thresholds(p, prof, boundary);

  w.weak_margin = boundary;
  for (int a = 0; a < boundary; ++a)
    if (w.weak_thresholds[static_cast<std::size_t>(a)] > h - 2) {
      w.weak_margin = a;
      break;
    }
  int ucap = std::min(boundary, h - 1);
  w.uniform_margin = w.weak_margin;
  int run = 0;
  for (int a = 0; a < w.weak_margin; ++a) {
    run = std::max(run, w.weak_thresholds[static_cast<std::size_t>(a)]);
    if (run >= ucap) {
      w.uniform_margin = a;
      break;
    }
  }

  if (w.uniform_margin >= boundary - 1) {
    w.kind = UniformityKind::uniform;
    w.margin = w.uniform_margin;
    int acc = 0;
    for (int a = 0; a < w.uniform_margin; ++a) {
      acc = std::max(acc, w.weak_thresholds[static_cast<std::size_t>(a)]);
      w.phi.push_back(acc);
    }
  } else if (w.weak_margin >= boundary - 1) {
    w.kind = UniformityKind::weakly_uniform;
    w.margin = w.weak_margin;
    w.phi.assign(w.weak_thresholds.begin(), w.weak_thresholds.begin() + w.weak_margin);
  } else {
    w.kind = UniformityKind::none;
    w.margin = w.weak_margin;
    w.phi.assign(w.weak_thresholds.begin(), w.weak_thresholds.begin() + w.weak_margin);
  }
  return w;
}

HMinimalReport h_minimal_check(const FinitePoset& p, int boundary) {
  HeightProfile prof = levels(p);
  int h = prof.poset_height;
  HMinimalReport rep;
  if (p.size() == 0) {
    if (boundary != 0) throw BoundaryTooLarge("empty poset admits only boundary 0");
    rep.weakly_uniform = rep.h_minimal = rep.levels_majorized = rep.agree = true;
    return rep;
  }
  if (boundary < 0 || boundary > h - 1)
    throw BoundaryTooLarge("boundary must leave the top level outside the quantifiers");

  std::vector<int> t = weak_thresholds(p, prof, boundary);
  rep.weakly_uniform = true;
  for (int a = 0; a < boundary; ++a)
    if (t[static_cast<std::size_t>(a)] > h - 2) rep.weakly_uniform = false;

  rep.h_minimal = true;
  for (int x = 0; x < p.size() && rep.h_minimal; ++x) {
    if (prof.height[static_cast<std::size_t>(x)] >= boundary) continue;
    for (int z : prof.levels.back())
      if (z != x && !p.less(x, z)) {
        rep.h_minimal = false;
        rep.h_minimal_witness = x;
        break;
      }
  }

  rep.levels_majorized = true;
  for (int a = 0; a < boundary && rep.levels_majorized; ++a) {
    bool found = false;
    for (int y = 0; y < p.size() && !found; ++y) {
      bool dominates = true;
      for (int x : prof.levels[static_cast<std::size_t>(a)])
        if (x != y && !p.less(x, y)) {
          dominates = false;
          break;
        }
      found = dominates;
    }
    if (!found) {
      rep.levels_majorized = false;
      rep.unmajorized_level = a;
    }
  }

  rep.agree = rep.weakly_uniform == (rep.h_minimal && rep.levels_majorized);
  return rep;
}

Ordinal min_extension_type(const HeightProfile& profile) {
  return Ordinal(static_cast<std::uint64_t>(profile.height.size()));
}

Ordinal min_extension_type(const LayeredPresentation& layered) {
  if (!layered.level_finite) throw LevelInfinite("layered presentation must be level-finite");
  LimitPart lp = limit_part(layered.height);
  for (const Ordinal& rh : layered.res_heights) {
    if (rh < lp.limit || rh >= layered.height)
      throw std::invalid_argument("res element height outside [limit part, height)");
  }
  return add(lp.limit, Ordinal(static_cast<std::uint64_t>(layered.res_heights.size())));
}

SpectrumReport spectrum_finite(const FinitePoset& p, std::uint64_t cap) {
  SpectrumReport rep;
  rep.min_type = Ordinal(static_cast<std::uint64_t>(p.size()));
  rep.extensions = count_linear_extensions(p, cap);
  rep.single_type = true;  // all linear extensions of a finite poset share one type
  return rep;
}

namespace {

bool subset_uniform(const Bitset& row, const Bitset& s) {
  if (!row.intersects(s)) return true;
  Bitset inter = row;
  inter &= s;
  return inter == s;
}

// Smallest module containing `seed`: any outside element separating two
// members must join.
Bitset module_closure(const FinitePoset& p, Bitset seed) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int z = 0; z < p.size(); ++z) {
      if (seed.test(z)) continue;
      if (!subset_uniform(p.above(z), seed) || !subset_uniform(p.below(z), seed)) {
        seed.set(z);
        changed = true;
      }
    }
  }
  return seed;
}

struct ModNode {
  enum class Kind { leaf, parallel, series, prime };
  Kind kind = Kind::leaf;
  std::vector<int> elems;  // ascending, in original numbering
  std::vector<ModNode> children;
};

std::vector<std::vector<int>> split_components(const FinitePoset& q, bool by_comparability) {
  int n = q.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int parts = 0;
  for (int seed = 0; seed < n; ++seed) {
    if (comp[static_cast<std::size_t>(seed)] >= 0) continue;
    std::vector<int> stack{seed};
    comp[static_cast<std::size_t>(seed)] = parts;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (comp[static_cast<std::size_t>(u)] >= 0 || u == v) continue;
        bool edge = by_comparability ? q.comparable(u, v) : !q.comparable(u, v);
        if (edge) {
          comp[static_cast<std::size_t>(u)] = parts;
          stack.push_back(u);
        }
      }
    }
    ++parts;
  }
  std::vector<std::vector<int>> out(static_cast<std::size_t>(parts));
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  return out;
}

ModNode build_tree(const FinitePoset& p, const std::vector<int>& elems) {
  ModNode node;
  node.elems = elems;
  if (elems.size() <= 1) return node;
  FinitePoset q = induced(p, elems);
  int n = q.size();

  auto lift = [&](const std::vector<int>& local) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(elems[static_cast<std::size_t>(v)]);
    return out;
  };

  std::vector<std::vector<int>> comps = split_components(q, true);
  if (comps.size() > 1) {
    node.kind = ModNode::Kind::parallel;
    for (auto& c : comps) node.children.push_back(build_tree(p, lift(c)));
    return node;
  }

  std::vector<std::vector<int>> blocks = split_components(q, false);
  if (blocks.size() > 1) {
    // Incomparability components of a connected poset line up in a chain.
    std::sort(blocks.begin(), blocks.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
      return q.less(a.front(), b.front());
    });
    node.kind = ModNode::Kind::series;
    for (auto& c : blocks) node.children.push_back(build_tree(p, lift(c)));
    return node;
  }

  node.kind = ModNode::Kind::prime;
  // Children of a prime node: grow the maximal proper module around each
  // element; proper modules of a prime quotient never straddle two children.
  std::vector<bool> assigned(static_cast<std::size_t>(n), false);
  for (int x = 0; x < n; ++x) {
    if (assigned[static_cast<std::size_t>(x)]) continue;
    Bitset cur(n);
    cur.set(x);
    for (int y = 0; y < n; ++y) {
      if (cur.test(y)) continue;
      Bitset seed = cur;
      seed.set(y);
      Bitset grown = module_closure(q, seed);
      if (grown.count() < n) cur = grown;
    }
    std::vector<int> local = cur.to_vector();
    for (int v : local) assigned[static_cast<std::size_t>(v)] = true;
    node.children.push_back(build_tree(p, lift(local)));
  }
  return node;
}

void collect_modules(const ModNode& node, std::vector<std::vector<int>>& out) {
  out.push_back(node.elems);
  if (node.kind == ModNode::Kind::parallel) {
    std::size_t k = node.children.size();
    if (k > 24) throw TooLargeForExhaustive("parallel node with too many siblings to list all unions");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      if (std::popcount(mask) < 2 || std::popcount(mask) == static_cast<int>(k)) continue;
      std::vector<int> u;
      for (std::size_t c = 0; c < k; ++c)
        if (mask & (std::uint64_t{1} << c))
          u.insert(u.end(), node.children[c].elems.begin(), node.children[c].elems.end());
      std::sort(u.begin(), u.end());
      out.push_back(std::move(u));
    }
  } else if (node.kind == ModNode::Kind::series) {
    std::size_t k = node.children.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;  // the node itself
        std::vector<int> u;
        for (std::size_t c = i; c <= j; ++c)
          u.insert(u.end(), node.children[c].elems.begin(), node.children[c].elems.end());
        std::sort(u.begin(), u.end());
        out.push_back(std::move(u));
      }
  }
  for (const auto& c : node.children) collect_modules(c, out);
}

void sort_family(std::vector<std::vector<int>>& fam) {
  std::sort(fam.begin(), fam.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

}  // namespace

std::vector<std::vector<int>> autonomous_subsets(const FinitePoset& p, bool proper_only, AutonomousMode mode) {
  int n = p.size();
  std::vector<std::vector<int>> fam;
  if (mode == AutonomousMode::exhaustive) {
    if (n > 24) throw TooLargeForExhaustive("exhaustive autonomous-set scan supports n <= 24");
    std::vector<std::uint32_t> up(static_cast<std::size_t>(n), 0), dn(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (p.less(i, j)) dn[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
        if (p.less(j, i)) up[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
      }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      auto m = static_cast<std::uint32_t>(mask);
      bool ok = true;
      for (int z = 0; z < n && ok; ++z) {
        if (m & (std::uint32_t{1} << z)) continue;
        std::uint32_t a = up[static_cast<std::size_t>(z)] & m;
        std::uint32_t b = dn[static_cast<std::size_t>(z)] & m;
        ok = (a == 0 || a == m) && (b == 0 || b == m);
      }
      if (!ok) continue;
      std::vector<int> set;
      for (int i = 0; i < n; ++i)
        if (m & (std::uint32_t{1} << i)) set.push_back(i);
      fam.push_back(std::move(set));
    }
  } else {
    if (n == 0) {
      fam.push_back({});
    } else {
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
      ModNode root = build_tree(p, all);
      collect_modules(root, fam);
      fam.push_back({});
      for (int i = 0; i < n; ++i) fam.push_back({i});
    }
  }
  sort_family(fam);
  if (proper_only) {
    std::vector<std::vector<int>> keep;
    for (auto& s : fam)
      if (s.size() >= 2 && static_cast<int>(s.size()) < n) keep.push_back(std::move(s));
    fam = std::move(keep);
  }
  return fam;
}

FinitePoset powerset_tower(int k) {
  if (k < 1 || k > 3) throw TowerTooTall("powerset tower supports 1 <= k <= 3 levels");
  // Level t stores masks over the previous level's elements.
  std::vector<std::vector<std::uint32_t>> level_masks;
  std::vector<int> level_base;
  int next_id = 0;
  std::vector<int> level_size;
  for (int t = 0; t < k; ++t) {
    int prev = t == 0 ? 0 : level_size[static_cast<std::size_t>(t - 1)];
    std::vector<std::uint32_t> masks;
    if (t == 0) {
      masks = {0, 0};  // the 2-antichain; masks unused at level 0
    } else {
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << prev); ++m) masks.push_back(m);
      std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
      });
    }
    level_base.push_back(next_id);
    level_size.push_back(static_cast<int>(masks.size()));
    next_id += static_cast<int>(masks.size());
    level_masks.push_back(std::move(masks));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int t = 1; t < k; ++t)
    for (int j = 0; j < level_size[static_cast<std::size_t>(t)]; ++j) {
      std::uint32_t m = level_masks[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
      for (int i = 0; i < level_size[static_cast<std::size_t>(t - 1)]; ++i)
        if (m & (std::uint32_t{1} << i))
          pairs.emplace_back(level_base[static_cast<std::size_t>(t - 1)] + i, level_base[static_cast<std::size_t>(t)] + j);
    }
  for (int s = 0; s < k; ++s)
    for (int t = s + 2; t < k; ++t)
      for (int i = 0; i < level_size[static_cast<std::size_t>(s)]; ++i)
        for (int j = 0; j < level_size[static_cast<std::size_t>(t)]; ++j)
          pairs.emplace_back(level_base[static_cast<std::size_t>(s)] + i, level_base[static_cast<std::size_t>(t)] + j);
  return from_edges(next_id, pairs);
}

int antichain_rank(const FinitePoset& p) {
  int n = p.size();
  if (n > 16) throw TooLarge("antichain rank enumeration supports n <= 16");
  std::vector<std::uint32_t> comp(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.comparable(i, j)) comp[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto m = static_cast<std::uint32_t>(mask);
    bool anti = true;
    for (int i = 0; i < n && anti; ++i)
      if ((m & (std::uint32_t{1} << i)) && (comp[static_cast<std::size_t>(i)] & m)) anti = false;
    if (anti) best = std::max(best, std::popcount(m));
  }
  return best;
}

}  // namespace posetlab
