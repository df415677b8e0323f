#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/omega.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/symdyn.hpp"

namespace posetlab {

// Poset document: {"n": int, "pairs": [[i,j], ...], "closed": bool}
FinitePoset read_poset(const std::string& text);
FinitePoset read_poset_file(const std::string& path);
std::string write_poset(const FinitePoset& p, bool closed = true);

// Hasse diagram as a DOT digraph, edges oriented from lower to higher cover.
std::string to_dot(const FinitePoset& p);

// Presentation document:
//   {"kind":"jaco_complement","rule":{"prefix":[...],"tail":{"const":c}}}
//   {"kind":"jaco_complement","rule":{"prefix":[...],"tail":{"affine":[s,t]}}}
//   {"kind":"lex_sum_omega","blocks":[<poset doc>...],"index_rule":{...}}
//   {"kind":"sandwich","lower":<presentation doc>,"extra_pairs":[[i,j],...]}
std::shared_ptr<const OmegaPresentation> read_presentation(const std::string& text);
std::shared_ptr<const OmegaPresentation> read_presentation_file(const std::string& path);

// Word-system document:
//   {"alphabet":["0","1"],"rules":{"0":"01","1":"0"},"seed":"0"}
//   {"literal":{"prefix":"1","repeat":"0"}}
WordSystem read_word_system(const std::string& text);
WordSystem read_word_system_file(const std::string& path);

// Line-oriented report: `key: value` lines closed by a final `verdict:` line.
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;
  std::string verdict;

  void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
  std::string render() const;
  static Report parse(const std::string& text);
};

// FNV-1a digest of the raw input bytes, as fixed-width hex.
std::string digest(const std::string& bytes);

std::string read_file(const std::string& path);

}  // namespace posetlab
