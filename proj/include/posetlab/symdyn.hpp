#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

// Either a substitution system (rules prolongable from the seed) or an
// explicit eventually periodic word prefix . repeat^omega.
struct WordSystem {
  struct Substitution {
    std::map<char, std::string> rules;
    char seed;
  };
  struct Literal {
    std::string prefix;
    std::string repeat;
  };
  std::variant<Substitution, Literal> def;

  static WordSystem substitution(std::map<char, std::string> rules, char seed);
  static WordSystem literal(std::string prefix, std::string repeat);
};

// Length-L prefix of the fixed point (or of the literal word).
std::string generate(const WordSystem& system, int length);

// All distinct contiguous blocks of length 1..maxlen.
std::set<std::string> factors(const std::string& word, int maxlen);

struct RecurrenceProfile {
  struct Entry {
    int length = 0;
    int r = 0;                       // least window size covering all factors of this length
    bool unbounded_evidence = false;  // R kept growing across prefix doublings
    bool edge_flagged = false;        // prefix shorter than 20 * length
  };
  std::vector<Entry> entries;
};

RecurrenceProfile recurrence_profile(const std::string& word, int maxlen);

struct FactorPoset {
  std::vector<std::string> factor;  // sorted by (length, lex); poset elements
  FinitePoset order;                // strict factor order
};

// `fs` must be closed under taking contiguous blocks.
FactorPoset factor_poset(const std::set<std::string>& fs);

struct FactorMinimalType {
  bool pass = false;
  std::vector<std::pair<int, int>> table;  // (n, m(n)) in level units
  int margin = 0;  // the table is total for n < margin; beyond it the window has no room
  std::optional<std::pair<std::string, std::string>> witness;  // (short, long missing it)
};

// Window form of the minimal-type test on a factor poset: m(n) is the least
// m such that every factor of length at most n+1 is a proper factor of every
// factor of length at least m+1. The top two levels are excluded from
// positive claims.
FactorMinimalType minimal_type_window_check(const FactorPoset& fp);

}  // namespace posetlab
