// End-to-end checks of the installed CLI binary (path injected by CMake).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef FRACPERIOD_CLI_PATH
#error "FRACPERIOD_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

RunResult run_cli(const std::string& args, const std::string& workdir) {
  const std::string out_file = workdir + "/stdout.txt";
  const std::string cmd = "cd " + shell_quote(workdir) + " && " +
                          shell_quote(FRACPERIOD_CLI_PATH) + " " + args +
                          " > stdout.txt 2> stderr.txt";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.stdout_text = ss.str();
  return r;
}

std::string make_tmpdir() {
  char tmpl[] = "/tmp/fracperiod_cli_XXXXXX";
  const char* dir = mkdtemp(tmpl);
  REQUIRE(dir != nullptr);
  return dir;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  const auto dir = make_tmpdir();
  CHECK(run_cli("", dir).exit_code == 2);
  CHECK(run_cli("nonsense", dir).exit_code == 2);
  CHECK(run_cli("specfun eval --fn nosuch --args 1", dir).exit_code == 2);
  CHECK(run_cli("fracop apply --op integral --alpha 1.5 --signal sin "
                "--t-end 1 --n 100 --out x.csv",
                dir).exit_code == 2);  // alpha out of (0,1)
  CHECK(run_cli("specfun eval --fn gamma --args 1 2 3", dir).exit_code == 2);
}

TEST_CASE("specfun eval prints values") {
  const auto dir = make_tmpdir();
  const auto r = run_cli("specfun eval --fn gamma --args 5", dir);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("value = 24") != std::string::npos);

  const auto ml = run_cli("specfun eval --fn mlf --args 1 1 1 --tol 1e-14",
                          dir);
  CHECK(ml.exit_code == 0);
  CHECK(ml.stdout_text.find("2.7182818284") != std::string::npos);
  CHECK(ml.stdout_text.find("converged = yes") != std::string::npos);
}

TEST_CASE("fracop apply emits the documented CSV schema") {
  const auto dir = make_tmpdir();
  const auto r = run_cli(
      "fracop apply --op integral --alpha 0.5 --signal const:1 "
      "--t-end 1 --n 1000 --out out.csv",
      dir);
  REQUIRE(r.exit_code == 0);
  const std::string csv = slurp(dir + "/out.csv");
  CHECK(csv.rfind("t,value\n", 0) == 0);

  // final value ~ 2/sqrt(pi) = 1.1283791670955126
  std::istringstream lines(csv);
  std::string line, last;
  while (std::getline(lines, line)) {
    if (!line.empty()) last = line;
  }
  const double final_value = std::stod(last.substr(last.find(',') + 1));
  CHECK(final_value == doctest::Approx(1.1283791670955126).epsilon(2e-4));
}

TEST_CASE("periodicity lemmas certifies sin via its kernel moments") {
  const auto dir = make_tmpdir();
  const auto r = run_cli(
      "periodicity lemmas --signal sin --period 6.283185307 --alpha 0.5 "
      "--n-max 5",
      dir);
  REQUIRE(r.exit_code == 0);
  CHECK(r.stdout_text.find("is not T-periodic") != std::string::npos);

  const auto js = run_cli(
      "periodicity lemmas --signal sin --period 6.283185307 --alpha 0.5 "
      "--n-max 5 --format json",
      dir);
  REQUIRE(js.exit_code == 0);
  const auto j = nlohmann::json::parse(js.stdout_text);
  CHECK(j["certified_not_T_periodic"].get<bool>());
  REQUIRE(j["kernel_moments"].is_array());
  REQUIRE(j["kernel_moments"].size() == 5);
  // at least one |moment| > 0.1
  bool big = false;
  for (const auto& m : j["kernel_moments"]) {
    if (std::abs(m.get<double>()) > 0.1) big = true;
  }
  CHECK(big);
}

TEST_CASE("fracop output feeds periodicity scan") {
  const auto dir = make_tmpdir();
  REQUIRE(run_cli("fracop apply --op integral --alpha 0.5 --signal sin "
                  "--t-end 25.132741228718345 --n 8192 --out frac.csv",
                  dir).exit_code == 0);
  const auto scan = run_cli(
      "periodicity scan --in frac.csv --t-lo 1 --t-hi 10 --steps 200 "
      "--out scan.csv",
      dir);
  REQUIRE(scan.exit_code == 0);
  const std::string csv = slurp(dir + "/scan.csv");
  CHECK(csv.rfind("T_tilde,sup_defect,l2_defect,window_lo,window_hi\n", 0) ==
        0);
  // minimum defect of I^0.5 sin stays clearly positive
  std::istringstream lines(csv);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  const auto c1 = first.find(',');
  const auto c2 = first.find(',', c1 + 1);
  const double min_defect = std::stod(first.substr(c1 + 1, c2 - c1 - 1));
  CHECK(min_defect > 0.1);

  const auto js = run_cli(
      "periodicity scan --in frac.csv --t-lo 1 --t-hi 10 --steps 50 "
      "--out scan.json --format json",
      dir);
  REQUIRE(js.exit_code == 0);
  const auto j = nlohmann::json::parse(slurp(dir + "/scan.json"));
  CHECK(j.is_array());
  CHECK(j.size() == 50);
}

TEST_CASE("laplace check passes at its default tolerance") {
  const auto dir = make_tmpdir();
  const auto r = run_cli(
      "laplace check --alpha 0.5 --period 6.283185307179586 "
      "--s-grid 0.5 1 2 5",
      dir);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.rfind("s,numeric,closed,abs_diff\n", 0) == 0);

  const auto js = run_cli(
      "laplace check --alpha 0.25 --period 6.283185307179586 "
      "--s-grid 1 2 --format json",
      dir);
  CHECK(js.exit_code == 0);
  const auto j = nlohmann::json::parse(js.stdout_text);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["abs_diff"].get<double>() <= 1e-6);
}

TEST_CASE("polynomial registry signal feeds the fractional operators") {
  // cD^0.5 t = t^0.5 / Gamma(1.5), so the final node of poly:1 on [0,1]
  // is 1/Gamma(1.5) = 1.1283791670955126
  const auto dir = make_tmpdir();
  REQUIRE(run_cli("fracop apply --op caputo --alpha 0.5 --signal poly:1 "
                  "--t-end 1 --n 500 --out p.csv",
                  dir).exit_code == 0);
  std::istringstream lines(slurp(dir + "/p.csv"));
  std::string line, last;
  while (std::getline(lines, line)) {
    if (!line.empty()) last = line;
  }
  const double final_value = std::stod(last.substr(last.find(',') + 1));
  CHECK(final_value == doctest::Approx(1.1283791670955126).epsilon(1e-9));
}

TEST_CASE("solve writes trajectory, sidecar and certificate") {
  const auto dir = make_tmpdir();
  const auto r = run_cli(
      "solve --alpha 0.5 --rhs linear:-1 --u0 1 --t-end 10 --n 1024 "
      "--out traj.csv --certify 0.5 5 50",
      dir);
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(dir + "/traj.csv").rfind("t,u\n", 0) == 0);
  const auto meta = nlohmann::json::parse(slurp(dir + "/traj.csv.meta.json"));
  CHECK(meta["alpha"].get<double>() == 0.5);
  CHECK(meta["scheme"].get<std::string>() == "fractional-abm");
  CHECK(meta["corrector_iterations"].get<int>() == 2);
  const std::string cert = slurp(dir + "/traj.csv.certify.csv");
  CHECK(cert.rfind("T_tilde,", 0) == 0);
}

TEST_CASE("config file feeds defaults, flags take precedence") {
  const auto dir = make_tmpdir();
  {
    std::ofstream cfg(dir + "/fracperiod.toml");
    cfg << "# settings\n";
    cfg << "corrector_sweeps = 3\n";
    cfg << "default_n = 64\n";
  }
  // default_n from config: trajectory has 65 rows + header
  const auto r = run_cli(
      "solve --alpha 0.5 --rhs linear:-1 --u0 1 --t-end 1 --out t.csv", dir);
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(slurp(dir + "/t.csv"));
  std::size_t rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 66);  // header + 65 nodes
  const auto meta = nlohmann::json::parse(slurp(dir + "/t.csv.meta.json"));
  CHECK(meta["corrector_iterations"].get<int>() == 3);

  // explicit flag wins over the config value
  const auto r2 = run_cli(
      "solve --alpha 0.5 --rhs linear:-1 --u0 1 --t-end 1 --n 32 --out s.csv",
      dir);
  REQUIRE(r2.exit_code == 0);
  std::istringstream lines2(slurp(dir + "/s.csv"));
  rows = 0;
  while (std::getline(lines2, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 34);  // header + 33 nodes

  // unknown keys are rejected
  {
    std::ofstream cfg(dir + "/bad.toml");
    cfg << "no_such_key = 1\n";
  }
  CHECK(run_cli("--config bad.toml specfun eval --fn gamma --args 1", dir)
            .exit_code == 2);
}

TEST_CASE("identical argv produces byte-identical outputs") {
  const auto dir1 = make_tmpdir();
  const auto dir2 = make_tmpdir();
  const std::string args =
      "solve --alpha 0.5 --rhs paper-example --u0 0 --t-end 6.283185307179586 "
      "--n 512 --out run.csv --certify 1 5 25";
  REQUIRE(run_cli(args, dir1).exit_code == 0);
  REQUIRE(run_cli(args, dir2).exit_code == 0);
  CHECK(slurp(dir1 + "/run.csv") == slurp(dir2 + "/run.csv"));
  CHECK(slurp(dir1 + "/run.csv.meta.json") == slurp(dir2 + "/run.csv.meta.json"));
  CHECK(slurp(dir1 + "/run.csv.certify.csv") ==
        slurp(dir2 + "/run.csv.certify.csv"));
}
