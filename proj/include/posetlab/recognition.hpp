#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

// Reflexive transitive relation table; houses <=_pred, <=_succ and their
// intersection.
struct QuasiOrder {
  int n = 0;
  std::vector<Bitset> leq;  // leq[x] = {y : x <= y}

  bool le(int x, int y) const { return leq[static_cast<std::size_t>(x)].test(y); }
  bool strictly(int x, int y) const { return le(x, y) && !le(y, x); }
  bool total() const;
  // Lexicographically first pair with neither x<=y nor y<=x, if any.
  std::optional<std::pair<int, int>> incomparable_pair() const;

  static QuasiOrder intersect(const QuasiOrder& a, const QuasiOrder& b);
};

// x <=_pred y iff every strict predecessor of x is a strict predecessor of y.
QuasiOrder pred_quasiorder(const FinitePoset& p);
// x <=_succ y iff every strict successor of y is a strict successor of x.
QuasiOrder succ_quasiorder(const FinitePoset& p);

struct RecognitionCertificate {
  bool verdict = false;
  bool pattern_route = false;     // no forbidden pattern embeds
  bool quasiorder_route = false;  // the relevant quasi-order is total
  std::string pattern;            // "2+2" or "3+1" on a negative verdict
  std::optional<Embedding> witness;
  std::optional<std::pair<int, int>> quasiorder_pair;  // violating pair on a negative verdict
};

// Interval order: no induced 2+2, equivalently <=_pred total. Both routes are
// evaluated and must agree.
RecognitionCertificate is_interval_order(const FinitePoset& p);
// Semiorder: additionally no induced 3+1, equivalently pred-and-succ total.
RecognitionCertificate is_semiorder(const FinitePoset& p);
// Threshold order: <=_pred and <=_succ total and equal as relations.
bool is_threshold(const FinitePoset& p);

// Closed intervals on the integer chain 0..2n-1 with x < y iff x's interval
// lies entirely strictly before y's.
struct IntervalAssignment {
  std::vector<std::pair<int, int>> endpoint;  // (left, right), left <= right
};

IntervalAssignment interval_representation(const FinitePoset& p);  // NotIntervalOrder
FinitePoset order_from_intervals(const IntervalAssignment& ia);

// K is the chain of all elements listed by `order`; Psi(k) is the final
// segment of positions [cut[k], n).
struct PsiRepresentation {
  std::vector<int> order;     // position -> element
  std::vector<int> position;  // element -> position
  std::vector<int> cut;       // per position; cut[k] > k always
  bool order_reversing = false;
};

PsiRepresentation psi_representation(const FinitePoset& p, bool require_order_reversing = false);
FinitePoset order_from_psi(const PsiRepresentation& rep);
// Relation induced by arbitrary h / Psi data: x < y iff pos[y] lands in the
// final segment [cut[pos[x]], positions). Used to exercise the strict-order
// claim for representations that were not built from a poset.
std::vector<std::pair<int, int>> relation_from_psi(int n, const std::vector<int>& position,
                                                   const std::vector<int>& cut);

}  // namespace posetlab
