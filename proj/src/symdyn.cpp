#include "posetlab/symdyn.hpp"

#include <algorithm>

namespace posetlab {

WordSystem WordSystem::substitution(std::map<char, std::string> rules, char seed) {
  WordSystem w;
  w.def = Substitution{std::move(rules), seed};
  return w;
}

WordSystem WordSystem::literal(std::string prefix, std::string repeat) {
  WordSystem w;
  w.def = Literal{std::move(prefix), std::move(repeat)};
  return w;
}

std::string generate(const WordSystem& system, int length) {
  if (length < 1) throw std::invalid_argument("prefix length must be positive");
  if (const auto* lit = std::get_if<WordSystem::Literal>(&system.def)) {
    if (lit->prefix.empty() && lit->repeat.empty()) throw NotProlongable("literal word is empty");
    std::string out = lit->prefix.substr(0, static_cast<std::size_t>(length));
    if (lit->repeat.empty() && static_cast<int>(out.size()) < length)
      throw NotProlongable("literal word ends before the requested prefix");
    while (static_cast<int>(out.size()) < length)
      out += lit->repeat.substr(0, std::min(lit->repeat.size(),
                                            static_cast<std::size_t>(length) - out.size()));
    return out;
  }
  const auto& sub = std::get<WordSystem::Substitution>(system.def);
  auto it = sub.rules.find(sub.seed);
  if (it == sub.rules.end() || it->second.empty() || it->second[0] != sub.seed)
    throw NotProlongable("rule(seed) must begin with the seed symbol");
  for (const auto& [sym, image] : sub.rules)
    if (image.empty()) throw NotProlongable("empty image for symbol " + std::string(1, sym));

  std::string cur(1, sub.seed);
  while (static_cast<int>(cur.size()) < length) {
    std::string next;
    next.reserve(cur.size() * 2);
    for (char c : cur) {
      auto r = sub.rules.find(c);
      if (r == sub.rules.end()) throw NotProlongable("no rule for symbol " + std::string(1, c));
      next += r->second;
      if (static_cast<int>(next.size()) >= length) break;
    }
    if (next.size() <= cur.size())
      throw NotProlongable("substitution does not grow from the seed");
    cur = std::move(next);
  }
  return cur.substr(0, static_cast<std::size_t>(length));
}

std::set<std::string> factors(const std::string& word, int maxlen) {
  if (maxlen < 1 || maxlen > static_cast<int>(word.size()))
    throw PrefixTooShort("maxlen must lie in [1, word length]");
  std::set<std::string> out;
  for (int len = 1; len <= maxlen; ++len)
    for (std::size_t i = 0; i + static_cast<std::size_t>(len) <= word.size(); ++i)
      out.insert(word.substr(i, static_cast<std::size_t>(len)));
  return out;
}

namespace {

// Least window size W such that every in-prefix window of length W contains
// every length-len factor of the prefix.
int recurrence_value(const std::string& word, int len) {
  int best = len;
  std::set<std::string> fs;
  for (std::size_t i = 0; i + static_cast<std::size_t>(len) <= word.size(); ++i)
    fs.insert(word.substr(i, static_cast<std::size_t>(len)));
  for (const std::string& f : fs) {
    std::vector<int> occ;
    for (std::size_t i = 0; i + f.size() <= word.size(); ++i)
      if (word.compare(i, f.size(), f) == 0) occ.push_back(static_cast<int>(i));
    int need = occ.front() + len;                                    // leading edge
    need = std::max(need, static_cast<int>(word.size()) - occ.back());  // trailing edge
    for (std::size_t k = 0; k + 1 < occ.size(); ++k)
      need = std::max(need, occ[k + 1] - occ[k] + len - 1);
    best = std::max(best, need);
  }
  return best;
}

}  // namespace

RecurrenceProfile recurrence_profile(const std::string& word, int maxlen) {
  if (maxlen < 1 || maxlen > static_cast<int>(word.size()))
    throw PrefixTooShort("maxlen must lie in [1, word length]");
  RecurrenceProfile prof;
  int L = static_cast<int>(word.size());
  for (int len = 1; len <= maxlen; ++len) {
    RecurrenceProfile::Entry e;
    e.length = len;
    e.edge_flagged = L < 20 * len;
    e.r = recurrence_value(word, len);
    // Growth across three prefix doublings counts as unbounded evidence.
    if (L / 8 >= len) {
      int r1 = recurrence_value(word.substr(0, static_cast<std::size_t>(L / 8)), len);
      int r2 = recurrence_value(word.substr(0, static_cast<std::size_t>(L / 4)), len);
      int r3 = recurrence_value(word.substr(0, static_cast<std::size_t>(L / 2)), len);
      e.unbounded_evidence = r1 < r2 && r2 < r3 && r3 < e.r && e.r >= L / 2;
    }
    prof.entries.push_back(e);
  }
  for (std::size_t k = 0; k + 1 < prof.entries.size(); ++k)
    if (prof.entries[k].r > prof.entries[k + 1].r)
      throw std::logic_error("recurrence values must be nondecreasing in the length");
  return prof;
}

namespace {

bool proper_factor(const std::string& s, const std::string& t) {
  return s.size() < t.size() && t.find(s) != std::string::npos;
}

}  // namespace

FactorPoset factor_poset(const std::set<std::string>& fs) {
  FactorPoset fp;
  fp.factor.assign(fs.begin(), fs.end());
  std::sort(fp.factor.begin(), fp.factor.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const std::string& f : fp.factor) {
    if (f.empty()) throw NotFactorClosed("the empty word is not a factor");
    if (f.size() >= 2) {
      if (!fs.count(f.substr(0, f.size() - 1)) || !fs.count(f.substr(1)))
        throw NotFactorClosed("factor set misses a block of " + f);
    }
  }
  int n = static_cast<int>(fp.factor.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (proper_factor(fp.factor[static_cast<std::size_t>(i)], fp.factor[static_cast<std::size_t>(j)]))
        pairs.emplace_back(i, j);
  fp.order = from_edges(n, pairs, true);
  return fp;
}

FactorMinimalType minimal_type_window_check(const FactorPoset& fp) {
  FactorMinimalType out;
  if (fp.factor.empty()) throw MarginTooSmall("factor poset is empty");
  int maxlen = static_cast<int>(fp.factor.back().size());
  if (maxlen < 3) throw MarginTooSmall("need factors of length at least 3 for a margin");
  // The m-search stops two levels short of the top; a claim checked at
  // length m+1 settles every longer stored factor because factor
  // containment propagates upward. The table covers n < margin.
  int usable = maxlen - 2;

  std::vector<std::vector<const std::string*>> by_len(static_cast<std::size_t>(maxlen + 1));
  for (const std::string& f : fp.factor) by_len[f.size()].push_back(&f);

  auto missing_from = [&](int len, const std::string& s) -> const std::string* {
    for (const std::string* t : by_len[static_cast<std::size_t>(len)])
      if (t->find(s) == std::string::npos) return t;
    return nullptr;
  };

  int m = 0;
  for (int n = 0; n + 1 <= usable; ++n) {
    m = std::max(m, n + 1);  // m(n) is nondecreasing and exceeds n
    int found = -1;
    for (; m + 1 <= usable; ++m) {
      bool ok = true;
      for (int slen = 1; slen <= n + 1 && ok; ++slen)
        for (const std::string* s : by_len[static_cast<std::size_t>(slen)])
          if (missing_from(m + 1, *s) != nullptr) {
            ok = false;
            break;
          }
      if (ok) {
        found = m;
        break;
      }
    }
    if (found < 0) break;  // no room left below the margin
    out.table.emplace_back(n, found);
  }
  out.margin = static_cast<int>(out.table.size());
  out.pass = !out.table.empty();
  if (!out.pass) {
    // Witness at n = 0: a letter missing from the longest stored factor
    // lacking it; negatives may use the top levels.
    for (const std::string* s : by_len[1]) {
      const std::string* worst = nullptr;
      for (int tlen = maxlen; tlen > 1; --tlen)
        if (const std::string* t = missing_from(tlen, *s)) {
          worst = t;
          break;
        }
      if (worst) {
        out.witness = std::make_pair(*s, *worst);
        break;
      }
    }
  }
  return out;
}

}  // namespace posetlab
