#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/poset.hpp"
#include "posetlab/structure.hpp"

namespace posetlab {

// Nondecreasing positive sequence a_n given by a finite prefix and a closed
// tail, either eventually constant or affine s*n + t.
struct JacoRule {
  std::vector<std::uint64_t> prefix;
  std::uint64_t slope = 0;   // s
  std::uint64_t offset = 1;  // t; constant tails have slope 0

  static JacoRule constant(std::uint64_t c, std::vector<std::uint64_t> prefix = {});
  static JacoRule affine(std::uint64_t s, std::uint64_t t, std::vector<std::uint64_t> prefix = {});

  std::uint64_t at(std::uint64_t n) const;
  void validate() const;  // positive and nondecreasing, else MalformedPresentation
  std::string describe() const;
};

// Countable poset on N with decidable comparability and finite, fully
// window-determined down-sets. All presentations here are contained in the
// natural order: less(n, m) implies n < m.
class OmegaPresentation {
 public:
  virtual ~OmegaPresentation() = default;
  virtual bool less(std::uint64_t n, std::uint64_t m) const = 0;
  // Largest index that may fail to lie above n; everything beyond it is a
  // strict successor of n. Absent when the presentation offers no bound.
  virtual std::optional<std::uint64_t> non_successor_bound(std::uint64_t n) const = 0;
  // True for the closed rule classes whose certificates extend to all of
  // omega by the threshold argument.
  virtual bool closed_form_tail() const { return false; }
  // Every element has a strict upper bound supplied by the rule itself.
  virtual bool rule_gives_upper_bounds() const { return false; }
  virtual std::string describe() const = 0;
};

enum class PresOrdering { lt, gt, incomparable, equal };
PresOrdering comparability(const OmegaPresentation& pres, std::uint64_t n, std::uint64_t m);

class JacoComplement final : public OmegaPresentation {
 public:
  explicit JacoComplement(JacoRule rule);
  // Skips validation; only for exercising failure paths in tests.
  static JacoComplement unchecked(JacoRule rule);

  bool less(std::uint64_t n, std::uint64_t m) const override;
  std::optional<std::uint64_t> non_successor_bound(std::uint64_t n) const override;
  bool closed_form_tail() const override { return true; }
  bool rule_gives_upper_bounds() const override { return true; }
  std::string describe() const override;
  const JacoRule& rule() const { return rule_; }

 private:
  JacoComplement() = default;
  JacoRule rule_;
};

// Lexicographic sum along the Jaco complement of `index_rule`, block at
// position i being blocks[i mod blocks.size()]; element numbering is
// block-major.
class LexSumOmega final : public OmegaPresentation {
 public:
  LexSumOmega(std::vector<FinitePoset> block_cycle, JacoRule index_rule);

  bool less(std::uint64_t n, std::uint64_t m) const override;
  std::optional<std::uint64_t> non_successor_bound(std::uint64_t n) const override;
  bool closed_form_tail() const override { return true; }
  bool rule_gives_upper_bounds() const override { return true; }
  std::string describe() const override;

  std::pair<std::uint64_t, int> locate(std::uint64_t e) const;  // (position, offset)
  std::uint64_t block_start(std::uint64_t position) const;
  const FinitePoset& block_at(std::uint64_t position) const;

 private:
  std::vector<FinitePoset> blocks_;
  JacoRule index_;
  std::uint64_t cycle_total_ = 0;
  std::vector<std::uint64_t> cycle_starts_;
};

// Strengthening of a lower presentation by finitely many extra pairs, closed
// transitively. Construction rejects cycles; containment in the natural
// order is checked by sandwich_check, not here.
class Sandwich final : public OmegaPresentation {
 public:
  Sandwich(std::shared_ptr<const OmegaPresentation> lower,
           std::vector<std::pair<std::uint64_t, std::uint64_t>> extra);

  bool less(std::uint64_t n, std::uint64_t m) const override;
  std::optional<std::uint64_t> non_successor_bound(std::uint64_t n) const override;
  bool closed_form_tail() const override { return lower_->closed_form_tail(); }
  bool rule_gives_upper_bounds() const override { return lower_->rule_gives_upper_bounds(); }
  std::string describe() const override;
  const OmegaPresentation& lower() const { return *lower_; }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& extra_pairs() const { return extra_; }

 private:
  std::shared_ptr<const OmegaPresentation> lower_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> extra_;
  std::vector<std::uint64_t> nodes_;          // endpoints, sorted
  std::vector<std::vector<bool>> node_reach_;  // closure over nodes
  bool reaches(std::uint64_t n, std::uint64_t m) const;
};

// Induced strict order on [0, N); transitivity of the presentation is
// verified on the window.
FinitePoset truncate(const OmegaPresentation& pres, int window);

enum class Verdict { pass, fail, verified_up_to };

struct OmegaCertificate {
  Verdict verdict = Verdict::fail;
  std::uint64_t window = 0;
  bool for_all_omega = false;
  std::string reason;
  // m(n) table for minimal-type, x -> y table for purity, x -> |P \ up x|
  // for the Jonsson check.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> table;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample;
  std::optional<std::array<std::uint64_t, 3>> bad_triple;
  std::optional<std::uint64_t> witness_element;
  std::vector<std::uint64_t> sequence;  // purity cofinal sequence
  bool passed() const { return verdict != Verdict::fail; }
};

// Irreflexivity, antisymmetry and transitivity on the window; closed-form
// rules are certified for all of omega by the threshold argument.
OmegaCertificate strict_order_check(const OmegaPresentation& pres, int window);

// Witness table m(n): least level m such that every element of height at
// most n lies below every element of height at least m. Entries are emitted
// only for levels whose bounds fall inside the window.
OmegaCertificate minimal_type_certify(const OmegaPresentation& pres, int window);

// |P \ up x| per element, exact via the presentation bound.
OmegaCertificate jonsson_countable_check(const OmegaPresentation& pres, int window);

// Purity table: least y above x with P \ up x contained in down y, plus the
// increasing cofinal sequence x_{a+1} = y(x_a).
OmegaCertificate purity_certify(const OmegaPresentation& pres, int window);

// Sandwich shape: the lower order is a semiorder with no maximal element,
// the presentation contains it, and the natural order contains the
// presentation.
OmegaCertificate sandwich_check(const OmegaPresentation& pres, int window);

}  // namespace posetlab
