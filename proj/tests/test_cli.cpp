#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PERMCF_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args, int expected_code) {
  const auto r = run("--json " + args);
  CHECK(r.code == expected_code);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema") == 1);
  return j;
}

}  // namespace

TEST_CASE("stats") {
  const auto j = run_json("stats 597126843", 0);
  CHECK(j["status"] == "ok");
  CHECK(j["stats"]["exc"] == 4);
  CHECK(j["stats"]["niae"] == 4);
  CHECK(j["stats"]["iefp"] == 2);
  CHECK(j["monomial"] == "a*c*d^2*g^2*h*l^2*p^3*r^3*s*t*u*w^2");
  CHECK(j["profiles"].size() == 9);
  CHECK(run("stats 1134").code == 2);
}

TEST_CASE("path and unpath") {
  const auto j = run_json("path 597126843", 0);
  CHECK(j["steps"][5]["label"] == "u*w^2");
  const auto back = run_json("unpath '" + j["path"].get<std::string>() + "'", 0);
  CHECK(back["permutation"] == "597126843");
  const auto err = run_json("unpath 'U[c^0 d^0] D[h^1 l^0]'", 2);
  CHECK(err["status"] == "error");
  CHECK(err["error"].get<std::string>().find("step 2") != std::string::npos);
}

TEST_CASE("expand") {
  const auto j = run_json("expand -n 5 --default 1", 0);
  CHECK(j["moments"] == nlohmann::json({"1", "1", "2", "6", "24", "120"}));
  const auto sym = run_json("expand -n 2", 0);
  CHECK(sym["moments"][2] == "p*r + u^2");
  const auto set = run_json("expand -n 4 --default 1 --set u=0", 0);
  CHECK(set["moments"] == nlohmann::json({"1", "0", "1", "2", "9"}));
  const auto col = run_json("expand -n 1 --colors 2", 0);
  CHECK(col["moments"][1] == "u1 + u2");
  const auto z = run_json("expand -n 2 --default 1 --z-mult 2", 0);
  CHECK(z["moments"][2] == "8");
  CHECK(run("expand -n 9").code == 2);
  CHECK(run("expand -n 9 --max-order 9").code == 0);
  CHECK(run("expand --set u").code == 2);
  CHECK(run("expand --symbolic --default 1").code == 2);
}

TEST_CASE("catalog") {
  CHECK(run_json("catalog compare derangements -n 8", 0)["status"] == "ok");
  const auto show = run_json("catalog show euler-type-B", 0);
  CHECK(show["assignment"]["u"] == "x + 1");
  CHECK(run_json("catalog list", 0)["entries"].size() >= 35);
  CHECK(run("catalog show nothing").code == 2);
  CHECK(run("catalog compare qt-poisson -n 4").code == 2);
}

TEST_CASE("compare-seq reports the first mismatch") {
  const std::string der = std::string(PERMCF_TEST_DIR) + "/../data/bfiles/A000166.txt";
  CHECK(run_json("compare-seq " + der + " --default 1 --set u=0", 0)["status"] == "ok");
  const auto bad = run_json("compare-seq " + der + " --default 1", 1);
  CHECK(bad["status"] == "mismatch");
  CHECK(bad["mismatch"]["index"] == 1);
  CHECK(bad["mismatch"]["expected"] == "0");
  CHECK(bad["mismatch"]["actual"] == "1");
}

TEST_CASE("hankel, classify, orthopoly") {
  const auto h = run_json("hankel -n 3 --default 1 --closed-form", 0);
  CHECK(h["hankel"][2]["determinant"] == "4");
  CHECK(h["hankel"][3]["agree"] == true);
  const auto c = run_json("classify --set p=0", 0);
  CHECK(c["support"] == "OneAtom");
  const auto bad = run_json("classify --set c=-3", 0);
  CHECK(bad["verdict"] == "NotMomentSequence");
  CHECK(bad["support"].is_null());
  const auto o = run_json("orthopoly -n 2 --default 1 --check", 0);
  CHECK(o["polynomials"][2] == "X^2 - 4*X + 2");
  CHECK(run("orthopoly -n 3 --catalog al-salam-chihara --check").code == 0);
}

TEST_CASE("verify and arrangements") {
  CHECK(run("verify main -n 5").code == 0);
  CHECK(run("verify colored -n 3 -k 2").code == 0);
  CHECK(run("verify arrangements -n 4 -k 2").code == 0);
  const auto conj = run_json("verify conjectures -n 3 -k 2", 1);
  CHECK(conj["summary"]["C1"] == "verified up to bound");
  CHECK(conj["summary"]["C5"] == "counterexample found");
  const auto cnt = run_json("arrangements count -k 2 -n 4", 0);
  CHECK(cnt["counts"][4]["permanent"] == "65");
  const auto en = run_json("arrangements enumerate -k 2 -n 2", 0);
  CHECK(en["arrangements"].size() == 5);
  const auto av = run_json("arrangements avoid -k 2 -n 3 --pattern 312", 0);
  CHECK(av["avoiders"][3]["count"] == 14);
  CHECK(run("arrangements enumerate -k -1 -n 2").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("").code == 2);
}
