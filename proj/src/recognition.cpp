#include "posetlab/recognition.hpp"

#include <algorithm>
#include <numeric>

namespace posetlab {

bool QuasiOrder::total() const { return !incomparable_pair().has_value(); }

std::optional<std::pair<int, int>> QuasiOrder::incomparable_pair() const {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!le(x, y) && !le(y, x)) return std::make_pair(x, y);
  return std::nullopt;
}

QuasiOrder QuasiOrder::intersect(const QuasiOrder& a, const QuasiOrder& b) {
  QuasiOrder q;
  q.n = a.n;
  q.leq = a.leq;
  for (int x = 0; x < q.n; ++x) q.leq[static_cast<std::size_t>(x)] &= b.leq[static_cast<std::size_t>(x)];
  return q;
}

QuasiOrder pred_quasiorder(const FinitePoset& p) {
  QuasiOrder q;
  q.n = p.size();
  q.leq.assign(static_cast<std::size_t>(q.n), Bitset(q.n));
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (p.below(x).subset_of(p.below(y))) q.leq[static_cast<std::size_t>(x)].set(y);
  return q;
}

QuasiOrder succ_quasiorder(const FinitePoset& p) {
  QuasiOrder q;
  q.n = p.size();
  q.leq.assign(static_cast<std::size_t>(q.n), Bitset(q.n));
  for (int x = 0; x < q.n; ++x)
    for (int y = 0; y < q.n; ++y)
      if (p.above(y).subset_of(p.above(x))) q.leq[static_cast<std::size_t>(x)].set(y);
  return q;
}

namespace {

constexpr int kExhaustiveWitnessLimit = 64;

// Lexicographically first induced 2+2 as (a,b,c,d) with a<b, c<d.
std::optional<Embedding> find_two_plus_two(const FinitePoset& p) {
  int n = p.size();
  if (n <= kExhaustiveWitnessLimit) return embeds_pattern(p, two_plus_two());
  // Large hosts: derive a witness from a pred-incomparable pair.
  QuasiOrder pred = pred_quasiorder(p);
  auto bad = pred.incomparable_pair();
  if (!bad) return std::nullopt;
  auto [x, y] = *bad;
  int z1 = -1, z2 = -1;
  for (int z = 0; z < n && z1 < 0; ++z)
    if (p.less(z, x) && !p.less(z, y)) z1 = z;
  for (int z = 0; z < n && z2 < 0; ++z)
    if (p.less(z, y) && !p.less(z, x)) z2 = z;
  // {z1 < x, z2 < y} is induced 2+2 whenever x,y are pred-incomparable.
  return Embedding{{z1, x, z2, y}};
}

// Lexicographically first induced 3+1 as (u,v,w,t) with u<v<w, t isolated.
std::optional<Embedding> find_three_plus_one(const FinitePoset& p) {
  int n = p.size();
  if (n <= kExhaustiveWitnessLimit) return embeds_pattern(p, three_plus_one());
  // Large hosts: a 3+1 exists iff some t has a 3-chain inside its
  // incomparability neighbourhood; scan t ascending, chain lexicographically.
  for (int t = 0; t < n; ++t) {
    Bitset inc(n);
    inc.fill_all();
    inc.subtract(p.above(t));
    inc.subtract(p.below(t));
    inc.reset(t);
    for (int u = inc.next(0); u >= 0; u = inc.next(u + 1)) {
      Bitset mids = p.above(u);
      mids &= inc;
      for (int v = mids.next(0); v >= 0; v = mids.next(v + 1)) {
        Bitset tops = p.above(v);
        tops &= inc;
        int w = tops.next(0);
        if (w >= 0) return Embedding{{u, v, w, t}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RecognitionCertificate is_interval_order(const FinitePoset& p) {
  RecognitionCertificate cert;
  QuasiOrder pred = pred_quasiorder(p);
  cert.quasiorder_pair = pred.incomparable_pair();
  cert.quasiorder_route = !cert.quasiorder_pair.has_value();
  cert.witness = find_two_plus_two(p);
  cert.pattern_route = !cert.witness.has_value();
  if (cert.pattern_route != cert.quasiorder_route)
    throw std::logic_error("interval-order routes disagree");
  cert.verdict = cert.pattern_route;
  if (!cert.verdict) cert.pattern = "2+2";
  return cert;
}

RecognitionCertificate is_semiorder(const FinitePoset& p) {
  RecognitionCertificate cert;
  QuasiOrder both = QuasiOrder::intersect(pred_quasiorder(p), succ_quasiorder(p));
  cert.quasiorder_pair = both.incomparable_pair();
  cert.quasiorder_route = !cert.quasiorder_pair.has_value();
  cert.witness = find_two_plus_two(p);
  if (cert.witness) {
    cert.pattern = "2+2";
  } else if ((cert.witness = find_three_plus_one(p))) {
    cert.pattern = "3+1";
  }
  cert.pattern_route = !cert.witness.has_value();
  if (cert.pattern_route != cert.quasiorder_route)
    throw std::logic_error("semiorder routes disagree");
  cert.verdict = cert.pattern_route;
  return cert;
}

bool is_threshold(const FinitePoset& p) {
  QuasiOrder pred = pred_quasiorder(p);
  QuasiOrder succ = succ_quasiorder(p);
  return pred.total() && succ.total() && pred.leq == succ.leq;
}

namespace {

// Chains of distinct pred-sets (by inclusion) and succ-sets (by reverse
// inclusion) give the canonical endpoints: left = number of pred-sets
// strictly below, right = number of succ-sets strictly above.
std::vector<int> pred_ranks(const FinitePoset& p) {
  int n = p.size();
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int r = 0;
    Bitset seen(n);  // marks a representative per counted set
    for (int y = 0; y < n; ++y)
      if (p.below(y).subset_of(p.below(x)) && p.below(y) != p.below(x)) {
        bool fresh = true;
        seen.for_each([&](int z) {
          if (p.below(z) == p.below(y)) fresh = false;
        });
        if (fresh) {
          seen.set(y);
          ++r;
        }
      }
    rank[static_cast<std::size_t>(x)] = r;
  }
  return rank;
}

std::vector<int> succ_ranks(const FinitePoset& p) {
  int n = p.size();
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int r = 0;
    Bitset seen(n);
    for (int y = 0; y < n; ++y)
      if (p.above(x).subset_of(p.above(y)) && p.above(y) != p.above(x)) {
        bool fresh = true;
        seen.for_each([&](int z) {
          if (p.above(z) == p.above(y)) fresh = false;
        });
        if (fresh) {
          seen.set(y);
          ++r;
        }
      }
    rank[static_cast<std::size_t>(x)] = r;
  }
  return rank;
}

}  // namespace

IntervalAssignment interval_representation(const FinitePoset& p) {
  RecognitionCertificate cert = is_interval_order(p);
  if (!cert.verdict) throw NotIntervalOrder("poset has an induced 2+2");
  std::vector<int> left = pred_ranks(p);
  std::vector<int> right = succ_ranks(p);
  IntervalAssignment ia;
  for (int x = 0; x < p.size(); ++x) {
    if (left[static_cast<std::size_t>(x)] > right[static_cast<std::size_t>(x)])
      throw std::logic_error("canonical interval endpoints crossed");
    ia.endpoint.emplace_back(left[static_cast<std::size_t>(x)], right[static_cast<std::size_t>(x)]);
  }
  return ia;
}

FinitePoset order_from_intervals(const IntervalAssignment& ia) {
  int n = static_cast<int>(ia.endpoint.size());
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && ia.endpoint[static_cast<std::size_t>(x)].second < ia.endpoint[static_cast<std::size_t>(y)].first)
        pairs.emplace_back(x, y);
  return from_edges(n, pairs);
}

PsiRepresentation psi_representation(const FinitePoset& p, bool require_order_reversing) {
  RecognitionCertificate interval = is_interval_order(p);
  if (!interval.verdict) throw NotIntervalOrder("poset has an induced 2+2");
  RecognitionCertificate semi = is_semiorder(p);
  if (require_order_reversing && !semi.verdict)
    throw NotSemiorder("order-reversing Psi needs a semiorder");

  QuasiOrder base = semi.verdict ? QuasiOrder::intersect(pred_quasiorder(p), succ_quasiorder(p))
                                 : pred_quasiorder(p);
  int n = p.size();
  PsiRepresentation rep;
  rep.order.resize(static_cast<std::size_t>(n));
  std::iota(rep.order.begin(), rep.order.end(), 0);
  // Total order inside the (total) quasi-order, ties broken by element index.
  std::stable_sort(rep.order.begin(), rep.order.end(), [&](int a, int b) {
    if (base.strictly(a, b)) return true;
    if (base.strictly(b, a)) return false;
    return a < b;
  });
  rep.position.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) rep.position[static_cast<std::size_t>(rep.order[static_cast<std::size_t>(k)])] = k;
  rep.cut.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    int x = rep.order[static_cast<std::size_t>(k)];
    // Psi(k) = positions of the strict successors of x; a final segment of K.
    int cut = n;
    p.above(x).for_each([&](int y) { cut = std::min(cut, rep.position[static_cast<std::size_t>(y)]); });
    rep.cut[static_cast<std::size_t>(k)] = cut;
    if (cut <= k) throw std::logic_error("Psi(k) contains k");
    for (int pos = cut; pos < n; ++pos)
      if (!p.less(x, rep.order[static_cast<std::size_t>(pos)]))
        throw std::logic_error("Psi(k) is not a final segment of K");
  }
  rep.order_reversing = semi.verdict;
  if (rep.order_reversing)
    for (int k = 0; k + 1 < n; ++k)
      if (rep.cut[static_cast<std::size_t>(k)] > rep.cut[static_cast<std::size_t>(k + 1)])
        throw std::logic_error("Psi is not order reversing on a semiorder");
  return rep;
}

FinitePoset order_from_psi(const PsiRepresentation& rep) {
  int n = static_cast<int>(rep.order.size());
  return from_edges(n, relation_from_psi(n, rep.position, rep.cut));
}

std::vector<std::pair<int, int>> relation_from_psi(int n, const std::vector<int>& position,
                                                   const std::vector<int>& cut) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (position[static_cast<std::size_t>(y)] >= cut[static_cast<std::size_t>(position[static_cast<std::size_t>(x)])])
        pairs.emplace_back(x, y);
  return pairs;
}

}  // namespace posetlab
