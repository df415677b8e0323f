#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "posetlab/io.hpp"
#include "posetlab/ordinal.hpp"
#include "posetlab/recognition.hpp"
#include "posetlab/structure.hpp"

namespace {

using namespace posetlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string table_line(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i].first) + ":" + std::to_string(t[i].second);
  }
  return out;
}

struct Emit {
  Report report;
  bool timings = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int finish(const std::string& verdict) {
    if (timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      report.add("timing_ms", std::to_string(ms));
    }
    report.verdict = verdict;
    std::cout << report.render();
    return verdict == "fail" ? kExitFail : kExitPass;
  }
};

int run_analyze(const std::string& path, const std::string& check, std::uint64_t cap, int boundary,
                const std::string& mode, bool proper_only, const std::string& format, bool timings) {
  std::string text = read_file(path);
  FinitePoset p = read_poset(text);
  if (format == "dot") {
    std::cout << to_dot(p);
    return kExitPass;
  }
  Emit e;
  e.timings = timings;
  e.report.add("subcommand", "analyze");
  e.report.add("input", path);
  e.report.add("digest", digest(text));
  e.report.add("check", check);
  e.report.add("n", std::to_string(p.size()));

  if (check == "interval" || check == "semiorder") {
    RecognitionCertificate cert = check == "interval" ? is_interval_order(p) : is_semiorder(p);
    e.report.add("route_pattern", cert.pattern_route ? "pass" : "fail");
    e.report.add("route_quasiorder", cert.quasiorder_route ? "pass" : "fail");
    if (cert.witness) {
      e.report.add("witness_pattern", cert.pattern);
      e.report.add("witness_elements", join_ints(cert.witness->map));
    }
    if (cert.quasiorder_pair)
      e.report.add("quasiorder_pair", std::to_string(cert.quasiorder_pair->first) + " " +
                                          std::to_string(cert.quasiorder_pair->second));
    return e.finish(cert.verdict ? "pass" : "fail");
  }
  if (check == "threshold") {
    return e.finish(is_threshold(p) ? "pass" : "fail");
  }
  if (check == "levels") {
    HeightProfile prof = levels(p);
    e.report.add("height", std::to_string(prof.poset_height));
    e.report.add("heights", join_ints(prof.height));
    e.report.add("konig_chain", join_ints(konig_chain(p)));
    return e.finish("complete");
  }
  if (check == "extensions") {
    ExtensionCount c = count_linear_extensions(p, cap);
    e.report.add("count", std::to_string(c.count));
    e.report.add("truncated", c.truncated ? "true" : "false");
    return e.finish("complete");
  }
  if (check == "autonomous") {
    AutonomousMode m = mode == "exhaustive" ? AutonomousMode::exhaustive : AutonomousMode::fast;
    auto fam = autonomous_subsets(p, proper_only, m);
    e.report.add("mode", mode);
    e.report.add("count", std::to_string(fam.size()));
    for (const auto& s : fam) e.report.add("set", join_ints(s));
    return e.finish("complete");
  }
  if (check == "antichain-rank") {
    e.report.add("rank", std::to_string(antichain_rank(p)));
    return e.finish("complete");
  }
  if (check == "spectrum") {
    SpectrumReport rep = spectrum_finite(p, cap);
    e.report.add("min_type", rep.min_type.to_string());
    e.report.add("extension_count", std::to_string(rep.extensions.count));
    e.report.add("truncated", rep.extensions.truncated ? "true" : "false");
    e.report.add("single_type", rep.single_type ? "true" : "false");
    return e.finish("complete");
  }
  if (check == "uniformity") {
    UniformityWitness w = uniformity(p, boundary);
    e.report.add("boundary", std::to_string(boundary));
    e.report.add("kind", w.kind == UniformityKind::uniform       ? "uniform"
                         : w.kind == UniformityKind::weakly_uniform ? "weakly_uniform"
                                                                    : "none");
    e.report.add("margin", std::to_string(w.margin));
    e.report.add("phi", join_ints(w.phi));
    return e.finish(w.kind == UniformityKind::none ? "fail" : "pass");
  }
  throw ParseError("unknown analyze check: " + check);
}

int run_presentation(const std::string& label, const std::string& source_text,
                     std::shared_ptr<const OmegaPresentation> pres, const std::string& check,
                     int window, int boundary, bool timings) {
  Emit e;
  e.timings = timings;
  e.report.add("subcommand", label);
  e.report.add("input", pres->describe());
  e.report.add("digest", digest(source_text));
  e.report.add("check", check);
  e.report.add("window", std::to_string(window));

  auto emit_cert = [&](const OmegaCertificate& cert, const char* table_key) {
    if (!cert.reason.empty()) e.report.add("reason", cert.reason);
    if (!cert.table.empty()) e.report.add(table_key, table_line(cert.table));
    if (cert.counterexample)
      e.report.add("counterexample", std::to_string(cert.counterexample->first) + " " +
                                         std::to_string(cert.counterexample->second));
    if (cert.bad_triple)
      e.report.add("bad_triple", std::to_string((*cert.bad_triple)[0]) + " " +
                                     std::to_string((*cert.bad_triple)[1]) + " " +
                                     std::to_string((*cert.bad_triple)[2]));
    if (cert.witness_element) e.report.add("witness_element", std::to_string(*cert.witness_element));
    if (!cert.sequence.empty()) e.report.add("cofinal_sequence", join_u64(cert.sequence));
    if (cert.verdict == Verdict::pass)
      return e.finish(cert.for_all_omega ? "pass" : "pass_window");
    if (cert.verdict == Verdict::verified_up_to)
      return e.finish("verified_up_to(" + std::to_string(cert.window) + ")");
    return e.finish("fail");
  };

  if (check == "strict-order") return emit_cert(strict_order_check(*pres, window), "table");
  if (check == "minimal-type") return emit_cert(minimal_type_certify(*pres, window), "m_table");
  if (check == "jonsson") return emit_cert(jonsson_countable_check(*pres, window), "complement_sizes");
  if (check == "purity") return emit_cert(purity_certify(*pres, window), "purity_table");
  if (check == "sandwich") return emit_cert(sandwich_check(*pres, window), "table");
  if (check == "uniformity") {
    FinitePoset w = truncate(*pres, window);
    UniformityWitness uw = uniformity(w, boundary);
    e.report.add("boundary", std::to_string(boundary));
    e.report.add("kind", uw.kind == UniformityKind::uniform       ? "uniform"
                          : uw.kind == UniformityKind::weakly_uniform ? "weakly_uniform"
                                                                      : "none");
    e.report.add("margin", std::to_string(uw.margin));
    e.report.add("phi", join_ints(uw.phi));
    return e.finish(uw.kind == UniformityKind::none ? "fail" : "pass");
  }
  throw ParseError("unknown presentation check: " + check);
}

JacoRule rule_from_flags(const std::string& tail, const std::string& prefix_csv) {
  std::vector<std::uint64_t> prefix;
  if (!prefix_csv.empty()) {
    std::istringstream in(prefix_csv);
    std::string tok;
    while (std::getline(in, tok, ',')) prefix.push_back(std::stoull(tok));
  }
  auto colon = tail.find(':');
  if (colon == std::string::npos) throw ParseError("tail must be const:C or affine:S,T");
  std::string kind = tail.substr(0, colon);
  std::string args = tail.substr(colon + 1);
  if (kind == "const") return JacoRule::constant(std::stoull(args), std::move(prefix));
  if (kind == "affine") {
    auto comma = args.find(',');
    if (comma == std::string::npos) throw ParseError("affine tail needs S,T");
    return JacoRule::affine(std::stoull(args.substr(0, comma)), std::stoull(args.substr(comma + 1)),
                            std::move(prefix));
  }
  throw ParseError("tail must be const:C or affine:S,T");
}

int run_word(const std::string& path, const std::string& check, int prefix_len, int maxlen,
             const std::string& format, const std::string& out_poset, bool timings) {
  std::string text = read_file(path);
  WordSystem sys = read_word_system(text);
  std::string word = generate(sys, prefix_len);

  if (check == "factors" || check == "minimal-type" || check == "factor-poset") {
    if (maxlen < 1) throw ParseError("--maxlen is required for this check");
  }

  if (format == "dot" || !out_poset.empty()) {
    FactorPoset fp = factor_poset(factors(word, maxlen));
    if (!out_poset.empty()) {
      std::ofstream out(out_poset);
      out << write_poset(fp.order);
    }
    if (format == "dot") {
      std::cout << to_dot(fp.order);
      return kExitPass;
    }
  }

  Emit e;
  e.timings = timings;
  e.report.add("subcommand", "word");
  e.report.add("input", path);
  e.report.add("digest", digest(text));
  e.report.add("check", check);
  e.report.add("prefix_length", std::to_string(prefix_len));

  if (check == "generate") {
    e.report.add("word", word);
    return e.finish("complete");
  }
  if (check == "factors" || check == "factor-poset") {
    auto fs = factors(word, maxlen);
    e.report.add("maxlen", std::to_string(maxlen));
    e.report.add("count", std::to_string(fs.size()));
    std::string line;
    for (const auto& f : fs) {
      if (!line.empty()) line += " ";
      line += f;
    }
    e.report.add("factors", line);
    return e.finish("complete");
  }
  if (check == "recurrence") {
    RecurrenceProfile prof = recurrence_profile(word, maxlen);
    e.report.add("maxlen", std::to_string(maxlen));
    for (const auto& entry : prof.entries) {
      std::string v = std::to_string(entry.r);
      if (entry.unbounded_evidence) v += " unbounded-evidence";
      if (entry.edge_flagged) v += " edge-flagged";
      e.report.add("r_" + std::to_string(entry.length), v);
    }
    return e.finish("complete");
  }
  if (check == "minimal-type") {
    FactorPoset fp = factor_poset(factors(word, maxlen));
    FactorMinimalType mt = minimal_type_window_check(fp);
    e.report.add("maxlen", std::to_string(maxlen));
    e.report.add("margin", std::to_string(mt.margin));
    std::string tab;
    for (std::size_t i = 0; i < mt.table.size(); ++i) {
      if (i) tab += ",";
      tab += std::to_string(mt.table[i].first) + ":" + std::to_string(mt.table[i].second);
    }
    e.report.add("m_table", tab);
    if (mt.witness) e.report.add("witness", mt.witness->first + " " + mt.witness->second);
    return e.finish(mt.pass ? "pass" : "fail");
  }
  throw ParseError("unknown word check: " + check);
}

int run_ord(const std::string& op, const std::string& a_text, const std::string& b_text) {
  Ordinal a = Ordinal::parse(a_text);
  if (op == "limitpart") {
    LimitPart lp = limit_part(a);
    std::cout << "limit: " << lp.limit.to_string() << "\n";
    std::cout << "remainder: " << lp.remainder << "\n";
    return kExitPass;
  }
  Ordinal b = Ordinal::parse(b_text);
  if (op == "compare") {
    auto c = compare(a, b);
    std::cout << (c < 0 ? "less" : c > 0 ? "greater" : "equal") << "\n";
    return kExitPass;
  }
  if (op == "add") {
    std::cout << add(a, b).to_string() << "\n";
    return kExitPass;
  }
  if (op == "natsum") {
    std::cout << natural_sum(a, b).to_string() << "\n";
    return kExitPass;
  }
  throw ParseError("unknown ord operation: " + op);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posetlab: finite checks for order-theoretic structure"};
  app.require_subcommand(1);

  // analyze
  std::string an_file, an_check, an_mode = "fast", an_format = "report";
  std::uint64_t an_cap = kDefaultExtensionCap;
  int an_boundary = 0;
  bool an_proper = false, an_timings = false;
  auto* analyze = app.add_subcommand("analyze", "checks on a finite poset file");
  analyze->add_option("file", an_file, "poset document")->required();
  analyze->add_option("--check", an_check,
                      "interval|semiorder|threshold|levels|extensions|autonomous|antichain-rank|spectrum|uniformity")
      ->required();
  analyze->add_option("--cap", an_cap, "linear extension cap");
  analyze->add_option("--boundary", an_boundary, "uniformity boundary level");
  analyze->add_option("--mode", an_mode, "autonomous mode: fast|exhaustive");
  analyze->add_flag("--proper-only", an_proper, "drop trivial autonomous sets");
  analyze->add_option("--format", an_format, "report|dot");
  analyze->add_flag("--timings", an_timings, "append a timing line");

  // jaco
  std::string j_prefix, j_tail, j_check;
  int j_window = 0, j_boundary = 0;
  bool j_timings = false;
  auto* jaco = app.add_subcommand("jaco", "checks on a Jaco-complement rule");
  jaco->add_option("--prefix", j_prefix, "comma-separated rule prefix");
  jaco->add_option("--tail", j_tail, "const:C or affine:S,T")->required();
  jaco->add_option("--window", j_window, "window size")->required();
  jaco->add_option("--check", j_check, "strict-order|minimal-type|jonsson|purity|sandwich|uniformity")
      ->required();
  jaco->add_option("--boundary", j_boundary, "uniformity boundary level");
  jaco->add_flag("--timings", j_timings, "append a timing line");

  // omega
  std::string o_pres, o_check;
  int o_window = 0, o_boundary = 0;
  bool o_timings = false;
  auto* omega = app.add_subcommand("omega", "checks on a presentation document");
  omega->add_option("--pres", o_pres, "presentation document")->required();
  omega->add_option("--window", o_window, "window size")->required();
  omega->add_option("--check", o_check, "strict-order|minimal-type|jonsson|purity|sandwich|uniformity")
      ->required();
  omega->add_option("--boundary", o_boundary, "uniformity boundary level");
  omega->add_flag("--timings", o_timings, "append a timing line");

  // word
  std::string w_file, w_check, w_format = "report", w_out;
  int w_prefix = 0, w_maxlen = 0;
  bool w_timings = false;
  auto* word = app.add_subcommand("word", "checks on a substitution or literal word");
  word->add_option("--system", w_file, "word-system document")->required();
  word->add_option("--prefix", w_prefix, "generated prefix length")->required();
  word->add_option("--check", w_check, "generate|factors|recurrence|minimal-type|factor-poset")->required();
  word->add_option("--maxlen", w_maxlen, "maximum factor length");
  word->add_option("--format", w_format, "report|dot");
  word->add_option("--out-poset", w_out, "write the factor poset as a poset document");
  word->add_flag("--timings", w_timings, "append a timing line");

  // ord
  std::string ord_op, ord_a, ord_b;
  auto* ord = app.add_subcommand("ord", "ordinal arithmetic in Cantor normal form");
  ord->add_option("op", ord_op, "compare|add|natsum|limitpart")->required();
  ord->add_option("a", ord_a, "first ordinal")->required();
  ord->add_option("b", ord_b, "second ordinal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*analyze)
      return run_analyze(an_file, an_check, an_cap, an_boundary, an_mode, an_proper, an_format,
                         an_timings);
    if (*jaco) {
      auto pres = std::make_shared<JacoComplement>(rule_from_flags(j_tail, j_prefix));
      std::string source = "jaco --prefix " + j_prefix + " --tail " + j_tail;
      return run_presentation("jaco", source, pres, j_check, j_window, j_boundary, j_timings);
    }
    if (*omega) {
      std::string text = read_file(o_pres);
      return run_presentation("omega", text, read_presentation(text), o_check, o_window, o_boundary,
                              o_timings);
    }
    if (*word) return run_word(w_file, w_check, w_prefix, w_maxlen, w_format, w_out, w_timings);
    if (*ord) {
      if (ord_op != "limitpart" && ord_b.empty()) throw ParseError("this ord operation needs two arguments");
      return run_ord(ord_op, ord_a, ord_b);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
