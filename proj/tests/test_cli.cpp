#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "process.hpp"

using testing::run_cli;
using testing::source_path;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs from the corpus directory so reported source names are stable.
testing::Output in_corpus(const std::string& args) {
    return run_cli(args, "cd '" + source_path("corpus") + "' &&");
}

}  // namespace

TEST_CASE("check on the login corpus matches the golden text and JSON") {
    const auto text = in_corpus("check login.spec");
    CHECK(text.status == 0);
    CHECK(text.out == slurp(source_path("tests/golden/login.check.txt")));

    const auto json = in_corpus("check login.spec --json");
    CHECK(json.status == 0);
    CHECK(json.out == slurp(source_path("tests/golden/login.check.json")));
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["status"] == "pass");
    CHECK(doc["checks"].size() == 12);
}

TEST_CASE("matrix and kat subcommands") {
    const auto m = in_corpus("matrix login.spec --triple correct_pw_succeeds");
    CHECK(m.status == 0);
    CHECK(m.out == slurp(source_path("tests/golden/login.matrix.txt")));

    const auto mj = in_corpus("matrix login.spec --triple correct_pw_succeeds --json");
    const auto doc = nlohmann::json::parse(mj.out);
    REQUIRE(doc["checks"].size() == 1);
    const auto& results = doc["checks"][0]["results"];
    CHECK(results.size() == 10);
    CHECK(results[0]["exegesis"] == "total-correctness");
    CHECK(results[0]["verdict"] == "valid");
    CHECK(results[9]["exegesis"] == "demonic-total-correctness");
    CHECK(results[9]["verdict"] == "invalid");
    CHECK(doc["checks"][0]["witness"]["from_state"] == "pw=correct, outcome=pending");

    const auto k = in_corpus("kat login.spec --equation atc_equation --json");
    CHECK(k.status == 0);
    const auto kd = nlohmann::json::parse(k.out);
    CHECK(kd["checks"][0]["verdict"] == "holds");
    CHECK(kd["checks"][0]["correspondence"]["agrees"] == true);

    CHECK(in_corpus("matrix login.spec --triple nope").status == 2);
    CHECK(in_corpus("kat login.spec --equation wrong_pw_fails").status == 2);
}

TEST_CASE("laws sweep output") {
    const auto ex = run_cli("laws --exhaustive --max-size 2");
    CHECK(ex.status == 0);
    CHECK(ex.out == slurp(source_path("tests/golden/laws.exhaustive2.txt")));

    const auto j = nlohmann::json::parse(run_cli("laws --exhaustive --max-size 2 --json").out);
    CHECK(j["models_per_law"] == 264);
    CHECK(j["laws"].size() == 18);
    CHECK(j["status"] == "pass");

    const auto r = run_cli("laws --random --samples 200 --seed 42 --size 5");
    CHECK(r.status == 0);
    CHECK(r.out.find("summary: PASS (18 laws, 200 models each)") != std::string::npos);
}

TEST_CASE("random sweeps are byte-deterministic") {
    const auto a = run_cli("laws --random --samples 1000 --seed 7 --json");
    const auto b = run_cli("laws --random --samples 1000 --seed 7 --json --threads 1");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
    const auto c = run_cli("laws --random --samples 1000 --seed 7 --json", "EXEGETE_SIMD=scalar");
    CHECK(a.out == c.out);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("laws --exhaustive --max-size 1 --inject-fault dwp-as-dwlp").status == 1);
    CHECK(run_cli("check " + source_path("tests/data/failing.spec")).status == 1);
    CHECK(run_cli("check " + source_path("tests/data/unknown_var.spec")).status == 2);
    CHECK(run_cli("check " + source_path("tests/data/bad_syntax.spec")).status == 2);
    CHECK(run_cli("check /nonexistent.spec").status == 2);
    CHECK(run_cli("laws --exhaustive --max-size 5").status == 2);
    CHECK(run_cli("laws --exhaustive --random").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("--help").status == 0);
    CHECK(in_corpus("check login.spec").status == 0);
    CHECK(run_cli("check " + source_path("corpus/login.spec"), "EXEGETE_MAX_STATES=4").status == 2);
}

TEST_CASE("fault injection output names the minimal counterexample") {
    const auto f = run_cli("laws --exhaustive --max-size 2 --inject-fault dwp-as-dwlp");
    CHECK(f.status == 1);
    CHECK(f.out.find("FAIL  demonic-implies-angelic") != std::string::npos);
    CHECK(f.out.find("|S|=1 r={} b={0} c={}") != std::string::npos);
}
