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

Run adeq(const std::string& args) {
  const std::string cmd = std::string(ADEQ_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

nlohmann::json report(const std::string& args) { return nlohmann::json::parse(adeq("--json " + args).out); }

}  // namespace

TEST_CASE("roots") {
  CHECK(report("roots A2")["data"]["count"] == 3);
  CHECK(report("roots A2")["data"]["marks"] == nlohmann::json({1, 1, 1}));
  CHECK(report("roots E6")["data"]["count"] == 36);
  const auto d4 = report("roots D4");
  CHECK(d4["data"]["count"] == 12);
  CHECK(d4["data"]["highest_root"] == nlohmann::json({1, 2, 1, 1}));
  CHECK(adeq("roots X9").code == 2);
}

TEST_CASE("mckay-verify") {
  for (auto [type, order] : {std::pair{"A1", 2}, {"D4", 8}, {"E8", 120}}) {
    const auto r = report(std::string("mckay-verify ") + type);
    CHECK(r["data"]["order"] == order);
    CHECK(r["data"]["sum_delta_squared"] == order);
    CHECK(r["exit_code"] == 0);
  }
}

TEST_CASE("check-rep") {
  CHECK(adeq("check-rep " + data("a2_rep.json") + " " + data("a2_theta.json")).code == 0);
  const auto bad = adeq("check-rep " + data("a2_rep_perturbed.json") + " --theta " + data("a2_theta.json"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("[FAIL] " + data("a2_rep_perturbed.json") + ": node relation 0: [[1]]") != std::string::npos);
  CHECK(adeq("check-rep " + data("empty_rep.json") + " " + data("a2_theta.json")).code == 0);
  const auto malformed = adeq("check-rep " + data("bad_rep.json") + " " + data("a2_theta.json"));
  CHECK(malformed.code == 2);
  CHECK(malformed.out.find("$.psi.0[0][0]") != std::string::npos);
}

TEST_CASE("batch check-rep keeps input order") {
  const auto r = report("check-rep " + data("a2_rep_perturbed.json") + " " + data("a2_rep.json") + " " +
                        data("empty_rep.json") + " --theta " + data("a2_theta.json"));
  REQUIRE(r["data"]["files"].size() == 3);
  CHECK(r["data"]["files"][0]["file"] == data("a2_rep_perturbed.json"));
  CHECK(r["data"]["files"][0]["exit_code"] == 1);
  CHECK(r["data"]["files"][1]["exit_code"] == 0);
  CHECK(r["data"]["files"][2]["exit_code"] == 0);
  CHECK(r["exit_code"] == 1);
}

TEST_CASE("exc-locus") {
  CHECK(adeq("exc-locus " + data("generic_theta.json")).code == 0);
  CHECK(adeq("exc-locus " + data("coincident_theta.json")).code == 1);
  const auto dbl = report("exc-locus " + data("a1_double_root_theta.json"));
  CHECK(dbl["data"]["locus"][0]["multiplicity"] == 2);
  CHECK(dbl["data"]["generic"] == false);
}

TEST_CASE("sheaf commands") {
  CHECK(adeq("roundtrip " + data("a2_rep.json")).code == 0);
  CHECK(adeq("roundtrip " + data("a2_jordan_rep.json")).code == 0);
  CHECK(adeq("roundtrip " + data("empty_rep.json")).code == 0);
  const auto s = report("sheafify " + data("a2_rep.json"));
  CHECK(s["data"]["sheaf_data"]["nodes"]["1"]["points"][0]["partition"] == nlohmann::json({1}));
  const auto m = report("matrixify " + data("a2_sheaf.json"));
  CHECK(m["data"]["representation"]["dims"]["0"] == 1);
  CHECK(adeq("sheafify " + data("a2_rep_perturbed.json")).code == 0);
}

TEST_CASE("monad-check agrees with check-rep") {
  CHECK(adeq("monad-check " + data("a2_rep.json") + " --lambda 1,0,-1").code == 0);
  const auto bad = report("monad-check " + data("a2_rep_perturbed.json") + " --lambda 1,0,-1");
  CHECK(bad["exit_code"] == 1);
  CHECK(bad["data"]["z2_blocks"]["0"] == nlohmann::json::parse(R"([["1"]])"));
  for (const auto& v : bad["verdicts"]) {
    if (v["check"] != "b o a = 0") CHECK(v["pass"] == true);
  }
}

TEST_CASE("quiver-dot and determinism") {
  const auto a = adeq("quiver-dot E6 --flavor extended");
  CHECK(a.code == 0);
  CHECK(a.out.rfind("digraph \"extended_E6\"", 0) == 0);
  CHECK(a.out == adeq("quiver-dot E6 --flavor extended").out);
  CHECK(adeq("--seed 3 mckay-verify E7").out == adeq("--seed 3 mckay-verify E7").out);
  CHECK(adeq("quiver-dot A2 --flavor bogus").code == 2);
  CHECK(adeq("").code == 2);
}

TEST_CASE("theta-validate and nondeg") {
  CHECK(adeq("theta-validate " + data("a2_theta.json")).code == 0);
  CHECK(adeq("nondeg " + data("a2_rep.json")).code == 0);
  CHECK(adeq("nondeg " + data("a2_finite_rep.json")).code == 1);
  CHECK(adeq("nondeg " + data("missing.json")).code == 2);
}
