#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wordlab/cli.hpp"

using namespace wordlab;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
  json doc;  // parsed envelope when out is JSON
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out.front() == '{') r.doc = json::parse(r.out);
  return r;
}

}  // namespace

TEST_CASE("group info emits the envelope") {
  const RunResult r = run({"group", "info", "S3"});
  REQUIRE(r.code == 0);
  REQUIRE(r.doc.is_object());
  CHECK(r.doc["tool"] == "wordlab");
  CHECK(r.doc.contains("version"));
  CHECK(r.doc["command"].is_array());
  CHECK(r.doc["elapsed_ms"].is_number());
  const json& p = r.doc["payload"];
  CHECK(p["group"] == "S3");
  CHECK(p["order"] == 6);
  CHECK(p["num_classes"] == 3);
  CHECK(p["classes"].size() == 3);
}

TEST_CASE("payloads are byte-identical across runs") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"--group", "A5", "--word", "[x1,x2]", "rational"},
        std::vector<std::string>{"--group", "S4", "chartab"},
        std::vector<std::string>{"--group", "S3", "verify", "ra", "--D", "3A",
                                 "--C", "3A", "--e", "1"}}) {
    const RunResult a = run(args);
    const RunResult b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.doc["payload"].dump() == b.doc["payload"].dump());
  }
}

TEST_CASE("verdict commands use exit code 1 for false") {
  const RunResult r = run({"--group", "A5", "check", "power-closed",
                           "--class-union", "1A,5A"});
  CHECK(r.code == 1);
  CHECK(r.doc["payload"]["power_closed"] == false);
  CHECK(r.doc["payload"]["witness"]["e"] == 2);

  const RunResult ok = run({"--group", "A5", "check", "power-closed",
                            "--class-union", "1A,3A"});
  CHECK(ok.code == 0);
  CHECK(ok.doc["payload"]["power_closed"] == true);
  CHECK(ok.doc["payload"]["conjugation_closed"] == true);
}

TEST_CASE("usage problems use exit code 2") {
  CHECK(run({"group", "info", "NOSUCH"}).code == 2);
  CHECK(run({"nosuchcommand"}).code == 2);
  CHECK(run({"--group", "S3", "word", "eval"}).code == 2);  // missing --assign
  CHECK(run({"--group", "S3", "--word", "x1^", "word", "image"}).code == 2);
  CHECK(run({"--group", "S3", "chartab", "--lift", "--mod-p"}).code == 2);
  CHECK(run({"word", "image"}).code == 2);  // no group at all
  CHECK(run({"--group", "S3", "--gens-file", "/dev/null", "group", "info"}).code == 2);
}

TEST_CASE("order cap refuses oversized closures") {
  CHECK(run({"--order-cap", "50", "group", "info", "A5"}).code == 2);
  CHECK(run({"--order-cap", "60", "group", "info", "A5"}).code == 0);
}

TEST_CASE("budget refusal uses exit code 3") {
  const RunResult r = run({"--group", "A5", "--word", "[x1,x2,x3]", "--budget",
                           "1000", "word", "image"});
  CHECK(r.code == 3);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("budget env variable is the default and the flag overrides it") {
  setenv("WORDLAB_BUDGET", "1000", 1);
  CHECK(run({"--group", "A5", "--word", "[x1,x2,x3]", "word", "image"}).code == 3);
  CHECK(run({"--group", "A5", "--word", "[x1,x2,x3]", "--budget", "300000",
             "word", "image"}).code == 0);
  setenv("WORDLAB_BUDGET", "junk", 1);
  CHECK(run({"group", "list"}).code == 2);
  unsetenv("WORDLAB_BUDGET");
  CHECK(run({"group", "list"}).code == 0);
}

TEST_CASE("word eval resolves cycle-notation assignments") {
  const RunResult r = run({"--group", "S3", "--word", "[x1,x2]", "word", "eval",
                           "--assign", "x1=(0 1)", "--assign", "x2=(0 2)"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["payload"]["value"]["order"] == 3);
  CHECK(run({"--group", "S3", "--word", "[x1,x2]", "word", "eval", "--assign",
             "x1=(0 1)", "--assign", "x2=(0 9)"}).code == 2);
}

TEST_CASE("word image and verbal payloads") {
  const RunResult img = run({"--group", "C4", "--word", "x1^2", "word", "image"});
  REQUIRE(img.code == 0);
  CHECK(img.doc["payload"]["m"] == 2);

  const RunResult verbal = run({"--group", "D4", "--word", "x1^2", "word", "verbal"});
  REQUIRE(verbal.code == 0);
  CHECK(verbal.doc["payload"]["order"] == 2);
  CHECK(verbal.doc["payload"]["normal"] == true);
}

TEST_CASE("rational against weak mode") {
  const RunResult full = run({"--group", "S3", "--word", "[x1,x2]", "rational"});
  REQUIRE(full.code == 0);
  CHECK(full.doc["payload"]["mode"] == "full");
  CHECK(full.doc["payload"]["holds"] == true);
  CHECK(full.doc["payload"]["element_order_variant_holds"] == true);

  const RunResult weak =
      run({"--group", "S3", "--word", "[x1,x2]", "rational", "--mode", "weak"});
  REQUIRE(weak.code == 0);
  CHECK(weak.doc["payload"]["mode"] == "weak");
  CHECK(weak.doc["payload"]["m"] == 3);
}

TEST_CASE("chartab payloads carry degrees and class metadata") {
  const RunResult lift = run({"--group", "A5", "chartab"});
  REQUIRE(lift.code == 0);
  CHECK(lift.doc["payload"]["degrees"] == json({1, 3, 3, 4, 5}));
  CHECK(lift.doc["payload"]["classes"].size() == 5);
  CHECK(lift.doc["payload"]["characters"][0]["values"][0]["re"] == 1.0);

  const RunResult modp = run({"--group", "S3", "chartab", "--mod-p"});
  REQUIRE(modp.code == 0);
  CHECK(modp.doc["payload"]["p"] == 7);
  CHECK(modp.doc["payload"]["zeta"] == 3);
}

TEST_CASE("verify subcommands") {
  const RunResult ra = run({"--group", "A5", "verify", "ra", "--D", "5A", "--C",
                            "5B", "--e", "2"});
  REQUIRE(ra.code == 0);
  CHECK(ra.doc["payload"]["holds"] == true);
  CHECK(ra.doc["payload"]["D_e"] == "5B");

  const RunResult bad_class =
      run({"--group", "A5", "verify", "ra", "--D", "7A", "--C", "5B", "--e", "1"});
  CHECK(bad_class.code == 2);

  const RunResult cor = run({"verify", "corollary", "--exponents", "1,1",
                             "--groups", "S3,Q8"});
  REQUIRE(cor.code == 0);
  CHECK(cor.doc["payload"]["aggregate"] == true);
  CHECK(cor.doc["payload"]["word"] == "[x1,x2]");

  const RunResult con =
      run({"--group", "S3", "--word", "[x1,x2]", "verify", "concise"});
  REQUIRE(con.code == 0);
  CHECK(con.doc["payload"]["all_pass"] == true);
  CHECK(con.doc["payload"]["m"] == 3);
}

TEST_CASE("fam bound check over the cli") {
  const RunResult ok =
      run({"--group", "S3", "--word", "[x1,x2]", "check", "fam-bound"});
  CHECK(ok.code == 0);
  CHECK(ok.doc["payload"]["holds"] == true);

  const RunResult over =
      run({"--group", "Q8", "--word", "[x1,x2]", "check", "fam-bound"});
  CHECK(over.code == 1);
  CHECK(over.doc["payload"]["bound"] == 1);

  CHECK(run({"--group", "S3", "--word", "x1^2", "check", "fam-bound"}).code == 2);
}

TEST_CASE("generator files load groups") {
  const auto path = std::filesystem::temp_directory_path() / "wordlab_klein.gens";
  {
    std::ofstream f(path);
    f << "# klein four\n(0 1)\n\n(2 3)\n";
  }
  const RunResult r = run({"--gens-file", path.string(), "group", "info"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["payload"]["order"] == 4);
  CHECK(r.doc["payload"]["abelian"] == true);
  CHECK(r.doc["payload"]["group"] == "wordlab_klein");
  std::filesystem::remove(path);

  CHECK(run({"--gens-file", "/nonexistent/x.gens", "group", "info"}).code == 2);
}

TEST_CASE("table format has no envelope") {
  const RunResult r = run({"--format", "table", "group", "info", "S3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("elapsed") == std::string::npos);
  CHECK(r.out.find("order: 6") != std::string::npos);
  CHECK(r.doc.is_null());
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"group", "--help"}).code == 0);
}

TEST_CASE("group list names the whole catalog") {
  const RunResult r = run({"group", "list"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["payload"]["catalog"].size() == 18);
}

TEST_CASE("conflicting group sources are rejected") {
  CHECK(run({"--group", "S3", "group", "info", "S4"}).code == 2);
}
