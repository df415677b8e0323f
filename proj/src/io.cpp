#include "posetlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace posetlab {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  return j;
}

FinitePoset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs"))
    throw ParseError("poset document needs fields n and pairs");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j.at("pairs")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("pairs must be two-element arrays");
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  bool closed = j.value("closed", false);
  return from_edges(n, pairs, closed);
}

JacoRule rule_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tail")) throw ParseError("rule document needs a tail field");
  std::vector<std::uint64_t> prefix;
  if (j.contains("prefix"))
    for (const auto& e : j.at("prefix")) prefix.push_back(e.get<std::uint64_t>());
  const json& tail = j.at("tail");
  if (tail.contains("const")) return JacoRule::constant(tail.at("const").get<std::uint64_t>(), std::move(prefix));
  if (tail.contains("affine")) {
    const auto& a = tail.at("affine");
    if (!a.is_array() || a.size() != 2) throw ParseError("affine tail must be [slope, offset]");
    return JacoRule::affine(a[0].get<std::uint64_t>(), a[1].get<std::uint64_t>(), std::move(prefix));
  }
  throw ParseError("tail must be {\"const\": c} or {\"affine\": [s, t]}");
}

std::shared_ptr<const OmegaPresentation> presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("presentation document needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "jaco_complement") return std::make_shared<JacoComplement>(rule_from_json(j.at("rule")));
  if (kind == "lex_sum_omega") {
    std::vector<FinitePoset> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(poset_from_json(b));
    return std::make_shared<LexSumOmega>(std::move(blocks), rule_from_json(j.at("index_rule")));
  }
  if (kind == "sandwich") {
    auto lower = presentation_from_json(j.at("lower"));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> extra;
    for (const auto& e : j.at("extra_pairs")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("extra_pairs must be two-element arrays");
      extra.emplace_back(e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>());
    }
    return std::make_shared<Sandwich>(std::move(lower), std::move(extra));
  }
  throw ParseError("unknown presentation kind: " + kind);
}

}  // namespace

FinitePoset read_poset(const std::string& text) { return poset_from_json(parse_json(text)); }

FinitePoset read_poset_file(const std::string& path) { return read_poset(read_file(path)); }

std::string write_poset(const FinitePoset& p, bool closed) {
  json j;
  j["n"] = p.size();
  json pairs = json::array();
  for (auto [a, b] : p.pairs()) pairs.push_back(json::array({a, b}));
  j["pairs"] = pairs;
  j["closed"] = closed;
  return j.dump(2) + "\n";
}

std::string to_dot(const FinitePoset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  for (int i = 0; i < p.size(); ++i) out << "  " << i << ";\n";
  for (auto [a, b] : transitive_reduction(p)) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::shared_ptr<const OmegaPresentation> read_presentation(const std::string& text) {
  return presentation_from_json(parse_json(text));
}

std::shared_ptr<const OmegaPresentation> read_presentation_file(const std::string& path) {
  return read_presentation(read_file(path));
}

WordSystem read_word_system(const std::string& text) {
  json j = parse_json(text);
  if (j.contains("literal")) {
    const json& lit = j.at("literal");
    return WordSystem::literal(lit.value("prefix", std::string{}), lit.value("repeat", std::string{}));
  }
  if (!j.contains("rules") || !j.contains("seed")) throw ParseError("word system needs rules and seed");
  std::map<char, std::string> rules;
  for (const auto& [key, value] : j.at("rules").items()) {
    if (key.size() != 1) throw ParseError("rule symbols must be single characters");
    rules[key[0]] = value.get<std::string>();
  }
  std::string seed = j.at("seed").get<std::string>();
  if (seed.size() != 1) throw ParseError("seed must be a single character");
  if (j.contains("alphabet"))
    for (const auto& s : j.at("alphabet"))
      if (s.get<std::string>().size() != 1) throw ParseError("alphabet symbols must be single characters");
  return WordSystem::substitution(std::move(rules), seed[0]);
}

WordSystem read_word_system_file(const std::string& path) { return read_word_system(read_file(path)); }

std::string Report::render() const {
  std::ostringstream out;
  for (const auto& [k, v] : fields) out << k << ": " << v << "\n";
  out << "verdict: " << verdict << "\n";
  return out.str();
}

Report Report::parse(const std::string& text) {
  Report rep;
  std::istringstream in(text);
  std::string line;
  bool saw_verdict = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(": ");
    if (colon == std::string::npos) throw ParseError("report line without a key: " + line);
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 2);
    if (key == "verdict") {
      rep.verdict = value;
      saw_verdict = true;
    } else {
      if (saw_verdict) throw ParseError("fields after the verdict line");
      rep.add(key, value);
    }
  }
  if (!saw_verdict) throw ParseError("report has no verdict line");
  return rep;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace posetlab
