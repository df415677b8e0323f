#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetlab/ordinal.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

struct HeightProfile {
  std::vector<int> height;              // per element
  std::vector<std::vector<int>> levels;  // levels[a] sorted ascending
  int poset_height = 0;                  // least empty level index
};

// Min-peeling levels; heights are cross-checked against the longest-chain
// computation.
HeightProfile levels(const FinitePoset& p);

// Chain meeting every level, one element per level, ascending; length equals
// the poset height.
std::vector<int> konig_chain(const FinitePoset& p);

enum class UniformityKind { uniform, weakly_uniform, none };

// Window semantics: quantifiers run over elements of height below `boundary`;
// the top window level never certifies anything (it stands in for the
// unknown tail of the infinite poset). phi covers [0, margin).
struct UniformityWitness {
  UniformityKind kind = UniformityKind::none;
  std::vector<int> phi;
  int margin = 0;
  // diagnostics: pointwise weak thresholds and both margins
  std::vector<int> weak_thresholds;
  int weak_margin = 0;
  int uniform_margin = 0;
};

UniformityWitness uniformity(const FinitePoset& p, int boundary);

struct HMinimalReport {
  bool weakly_uniform = false;
  bool h_minimal = false;
  bool levels_majorized = false;
  bool agree = false;  // weakly_uniform == (h_minimal && levels_majorized)
  std::optional<int> h_minimal_witness;   // element whose complement reaches the top level
  std::optional<int> unmajorized_level;
};

// Window form of the weakly-uniform characterisation; boundary must leave the
// top level outside the quantifiers (boundary < poset height).
HMinimalReport h_minimal_check(const FinitePoset& p, int boundary);

// Least linear-extension type of a level-finite well-founded poset:
// limit part of the height plus the size of the top remainder.
Ordinal min_extension_type(const HeightProfile& profile);

struct LayeredPresentation {
  Ordinal height;
  std::vector<Ordinal> res_heights;  // heights of the elements at or above the limit part
  bool level_finite = true;
};

Ordinal min_extension_type(const LayeredPresentation& layered);

struct SpectrumReport {
  Ordinal min_type;
  ExtensionCount extensions;
  bool single_type = true;
};

SpectrumReport spectrum_finite(const FinitePoset& p, std::uint64_t cap = kDefaultExtensionCap);

enum class AutonomousMode { exhaustive, fast };

// All autonomous subsets (modules), each sorted ascending, the list sorted by
// (size, content). proper_only drops the empty set, singletons and the full
// set. Exhaustive mode scans every subset (n <= 24); fast mode materialises
// the modular decomposition tree.
std::vector<std::vector<int>> autonomous_subsets(const FinitePoset& p, bool proper_only,
                                                 AutonomousMode mode = AutonomousMode::fast);

// Levels Q_0 (a 2-antichain), Q_{i+1} = powerset of Q_i; membership pairs
// between consecutive levels, all pairs between levels two or more apart,
// then closure. k is the number of levels, at most 3.
FinitePoset powerset_tower(int k);

// Height of the empty antichain in the poset of antichains under reverse
// inclusion; equals the maximum antichain size. n <= 16.
int antichain_rank(const FinitePoset& p);

}  // namespace posetlab
