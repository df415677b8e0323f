#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "posetlab/io.hpp"
#include "posetlab/recognition.hpp"
#include "support.hpp"

using namespace posetlab;
using posetlab::testing::Rng;
using posetlab::testing::random_poset;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "posetlab_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_scratch(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  fs::path out_path = scratch_dir() / "stdout.txt";
  std::string cmd = std::string(POSETLAB_BIN) + " " + args + " > " + out_path.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = read_file(out_path.string());
  return r;
}

}  // namespace

TEST_CASE("poset document round trip") {
  Rng rng(101);
  for (int it = 0; it < 30; ++it) {
    FinitePoset p = random_poset(rng, 1 + static_cast<int>(rng() % 10));
    CHECK(read_poset(write_poset(p)) == p);
  }
  CHECK(read_poset(R"({"n":3,"pairs":[[0,1],[1,2]],"closed":false})").pairs().size() == 3);
  CHECK_THROWS_AS(read_poset("not json"), ParseError);
  CHECK_THROWS_AS(read_poset(R"({"n":3})"), ParseError);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(chain(3));
  CHECK(dot == "digraph hasse {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n}\n");
  CHECK(to_dot(from_edges(0, {})) == "digraph hasse {\n}\n");
}

TEST_CASE("presentation documents") {
  auto jaco = read_presentation(R"({"kind":"jaco_complement","rule":{"prefix":[1,2],"tail":{"const":4}}})");
  CHECK(jaco->less(0, 2));
  CHECK_FALSE(jaco->less(2, 6));  // a_2 = 4, threshold 6

  auto affine = read_presentation(R"({"kind":"jaco_complement","rule":{"tail":{"affine":[1,1]}}})");
  CHECK(affine->less(2, 6));

  auto lex = read_presentation(
      R"({"kind":"lex_sum_omega","blocks":[{"n":2,"pairs":[]}],"index_rule":{"tail":{"const":1}}})");
  CHECK(lex->less(0, 4));

  auto sand = read_presentation(
      R"({"kind":"sandwich","lower":{"kind":"jaco_complement","rule":{"tail":{"const":1}}},"extra_pairs":[[0,1]]})");
  CHECK(sand->less(0, 1));

  CHECK_THROWS_AS(read_presentation(R"({"kind":"mystery"})"), ParseError);
  CHECK_THROWS_AS(read_presentation(R"({"kind":"jaco_complement","rule":{"tail":{"const":0}}})"),
                  MalformedPresentation);
}

TEST_CASE("word system documents") {
  WordSystem fib = read_word_system(R"({"alphabet":["0","1"],"rules":{"0":"01","1":"0"},"seed":"0"})");
  CHECK(generate(fib, 8) == "01001010");
  WordSystem lit = read_word_system(R"({"literal":{"prefix":"1","repeat":"0"}})");
  CHECK(generate(lit, 4) == "1000");
  CHECK_THROWS_AS(read_word_system(R"({"rules":{"ab":"a"},"seed":"a"})"), ParseError);
}

TEST_CASE("report format round trips") {
  Report rep;
  rep.add("subcommand", "analyze");
  rep.add("witness_elements", "0 1 2 3");
  rep.verdict = "fail";
  Report back = Report::parse(rep.render());
  CHECK(back.fields == rep.fields);
  CHECK(back.verdict == "fail");

  CHECK_THROWS_AS(Report::parse("no colon line\n"), ParseError);
  CHECK_THROWS_AS(Report::parse("key: value\n"), ParseError);  // missing verdict
}

TEST_CASE("digest is stable") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("posetlab") == digest("posetlab"));
  CHECK(digest("a") != digest("b"));
}

TEST_CASE("cli analyze semiorder fails on 2+2 with a reusable witness") {
  fs::path file = write_scratch("two_two.poset", write_poset(two_plus_two()));
  CliResult r = run_cli("analyze " + file.string() + " --check semiorder");
  CHECK(r.exit_code == 1);
  Report rep = Report::parse(r.out);
  CHECK(rep.verdict == "fail");
  std::string elems;
  for (const auto& [k, v] : rep.fields)
    if (k == "witness_elements") elems = v;
  REQUIRE(!elems.empty());
  std::vector<int> map;
  for (std::size_t pos = 0; pos < elems.size();) {
    std::size_t next = elems.find(' ', pos);
    map.push_back(std::stoi(elems.substr(pos, next - pos)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  CHECK(induced(two_plus_two(), map) == two_plus_two());  // witness re-verifies

  // identical invocations give byte-identical reports
  CliResult again = run_cli("analyze " + file.string() + " --check semiorder");
  CHECK(again.out == r.out);
}

TEST_CASE("cli jaco minimal type") {
  CliResult r = run_cli("jaco --tail const:1 --window 200 --check minimal-type");
  CHECK(r.exit_code == 0);
  Report rep = Report::parse(r.out);
  CHECK(rep.verdict == "pass");
  std::string table;
  for (const auto& [k, v] : rep.fields)
    if (k == "m_table") table = v;
  REQUIRE(!table.empty());
  // every entry reads n:n+2
  std::size_t pos = 0;
  while (pos < table.size()) {
    std::size_t colon = table.find(':', pos);
    std::size_t comma = table.find(',', colon);
    long n = std::stol(table.substr(pos, colon - pos));
    long m = std::stol(table.substr(colon + 1, comma - colon - 1));
    CHECK(m == n + 2);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
}

TEST_CASE("cli ord and dot and errors") {
  CHECK(run_cli("ord natsum w+1 w").out == "w*2+1\n");
  CHECK(run_cli("ord add 1 w").out == "w\n");
  CHECK(run_cli("ord compare w 5").out == "greater\n");
  CHECK(run_cli("ord limitpart w*2+3").out == "limit: w*2\nremainder: 3\n");

  fs::path file = write_scratch("chain.poset", write_poset(chain(3)));
  CliResult dot = run_cli("analyze " + file.string() + " --check levels --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out == to_dot(chain(3)));

  CHECK(run_cli("analyze /nonexistent.poset --check semiorder").exit_code == 2);
  CHECK(run_cli("analyze").exit_code == 2);
  CHECK(run_cli("ord add w").exit_code == 2);
  CHECK(run_cli("ord add w 0+w").exit_code == 2);
}

TEST_CASE("cli word checks") {
  fs::path fib = write_scratch("fib.json", R"({"rules":{"0":"01","1":"0"},"seed":"0"})");
  CliResult gen = run_cli("word --system " + fib.string() + " --prefix 8 --check generate");
  Report rep = Report::parse(gen.out);
  CHECK(rep.verdict == "complete");
  bool saw = false;
  for (const auto& [k, v] : rep.fields)
    if (k == "word") {
      CHECK(v == "01001010");
      saw = true;
    }
  CHECK(saw);

  CliResult mt = run_cli("word --system " + fib.string() + " --prefix 2000 --check minimal-type --maxlen 8");
  CHECK(mt.exit_code == 0);
  CHECK(Report::parse(mt.out).verdict == "pass");

  fs::path lone = write_scratch("lone.json", R"({"literal":{"prefix":"1","repeat":"0"}})");
  CliResult bad = run_cli("word --system " + lone.string() + " --prefix 2000 --check minimal-type --maxlen 8");
  CHECK(bad.exit_code == 1);
  CHECK(Report::parse(bad.out).verdict == "fail");
}

TEST_CASE("cli omega subcommand") {
  fs::path pres = write_scratch("sandwich.json",
      R"({"kind":"sandwich","lower":{"kind":"jaco_complement","rule":{"tail":{"const":1}}},"extra_pairs":[[0,1]]})");
  CliResult ok = run_cli("omega --pres " + pres.string() + " --window 80 --check sandwich");
  CHECK(ok.exit_code == 0);
  CHECK(Report::parse(ok.out).verdict == "pass");

  fs::path bad = write_scratch("bad_sandwich.json",
      R"({"kind":"sandwich","lower":{"kind":"jaco_complement","rule":{"tail":{"const":1}}},"extra_pairs":[[1,0]]})");
  CliResult fail = run_cli("omega --pres " + bad.string() + " --window 80 --check sandwich");
  CHECK(fail.exit_code == 1);
  Report rep = Report::parse(fail.out);
  CHECK(rep.verdict == "fail");
  std::string pair;
  for (const auto& [k, v] : rep.fields)
    if (k == "counterexample") pair = v;
  CHECK(pair == "1 0");

  CliResult uni = run_cli("omega --pres " + pres.string() + " --window 40 --check uniformity --boundary 15");
  CHECK(uni.exit_code == 0);

  CliResult strict = run_cli("jaco --tail affine:1,1 --window 300 --check strict-order");
  CHECK(strict.exit_code == 0);
  CHECK(Report::parse(strict.out).verdict == "pass");
}

TEST_CASE("cli word exports") {
  fs::path fib = write_scratch("fib2.json", R"({"rules":{"0":"01","1":"0"},"seed":"0"})");
  CliResult dot = run_cli("word --system " + fib.string() +
                          " --prefix 200 --check factor-poset --maxlen 2 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph hasse {", 0) == 0);

  fs::path out = scratch_dir() / "factors.poset";
  CliResult exported = run_cli("word --system " + fib.string() +
                               " --prefix 200 --check factor-poset --maxlen 2 --out-poset " + out.string());
  CHECK(exported.exit_code == 0);
  FinitePoset fp = read_poset_file(out.string());
  CHECK(fp.size() == 5);  // 0, 1, 00, 01, 10
  CHECK(fp.pairs().size() == 5);
}
