#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "locc/schmidt.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

int g_run_counter = 0;

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string err_path =
        "/tmp/locc_cli_err_" + std::to_string(g_run_counter++) + ".txt";
    std::string cmd = env.empty() ? std::string() : env + " ";
    cmd += std::string(LOCC_CLI_PATH) + " " + args + " 2>" + err_path;

    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
        r.out.append(buf, n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    std::ifstream ef(err_path);
    std::ostringstream es;
    es << ef.rdbuf();
    r.err = es.str();
    std::remove(err_path.c_str());
    return r;
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

const std::string kStateA = "'{\"coeffs\": [0.45, 0.39, 0.16]}'";
const std::string kStateB = "'{\"coeffs\": [0.5, 0.3, 0.2]}'";

} // namespace

TEST_CASE("entropy subcommand prints twelve decimals") {
    const RunResult r = run_cli("entropy " + kStateA);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1.471215431070\n");

    CHECK(run_cli("entropy '{\"coeffs\": [0.5, 0.5]}'").out ==
          "1.000000000000\n");
    CHECK(run_cli("entropy '{\"coeffs\": [0.25, 0.25, 0.25, 0.25]}'").out ==
          "2.000000000000\n");
}

TEST_CASE("entropy subcommand reads files and emits json") {
    const std::string path = "/tmp/locc_cli_state.json";
    {
        std::ofstream f(path);
        f << "{\"coeffs\": [0.45, 0.39, 0.16]}";
    }
    const RunResult r = run_cli("entropy --file " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1.471215431070\n");

    const RunResult j = run_cli("--format json entropy --file " + path);
    CHECK(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(near(parsed["entropy_bits"].get<double>(), 1.4712154310700942,
               1e-9));
    std::remove(path.c_str());
}

TEST_CASE("input errors exit 2 with a machine-readable name") {
    const RunResult none = run_cli("entropy");
    CHECK(none.exit_code == 2);
    CHECK(none.err.find("InvalidJson") == 0);

    const RunResult bad = run_cli("entropy 'not json'");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("InvalidJson") == 0);

    const RunResult sum = run_cli("entropy '{\"coeffs\": [0.5, 0.4]}'");
    CHECK(sum.exit_code == 2);
    CHECK(sum.err.find("NotNormalizable") == 0);

    const RunResult neg =
        run_cli("entropy '{\"coeffs\": [1.2, -0.2]}'");
    CHECK(neg.exit_code == 2);
    CHECK(neg.err.find("NegativeCoefficient") == 0);

    const RunResult cfg = run_cli("--entropy-tol 0 entropy " + kStateA);
    CHECK(cfg.exit_code == 2);
}

TEST_CASE("classify subcommand") {
    const RunResult r = run_cli(
        "classify " + kStateA +
        " '{\"coeffs\": [0.49, 0.33676028, 0.17323972]}'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "classification: Incomparable\n"
                   "witness_ab: 2\n"
                   "witness_ba: 1\n");

    const RunResult j = run_cli("--format json classify " + kStateB + " " +
                                kStateA);
    CHECK(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["classification"] == "Incomparable");

    const RunResult ord = run_cli(
        "classify '{\"coeffs\": [0.4, 0.35, 0.25]}' " + kStateB);
    CHECK(ord.out.find("classification: AtoB\n") == 0);
}

TEST_CASE("find-partner subcommand reproduces the reference root") {
    const RunResult r = run_cli("--format json find-partner " + kStateA +
                                " --beta1 0.49");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    const auto coeffs = parsed["partner"]["coeffs"];
    REQUIRE(coeffs.size() == 3);
    const double beta2 = coeffs[1].get<double>();
    CHECK(beta2 > 0.33676028);
    CHECK(beta2 < 0.33676030);
    CHECK(std::fabs(parsed["entropy_residual_bits"].get<double>()) <= 1e-12);
    CHECK(parsed["classification"] == "Incomparable");

    // The printed coefficients round-trip: the partner state is valid input
    // whose entropy agrees with the original to the search tolerance.
    const RunResult ent =
        run_cli("--format json entropy '" + parsed["partner"].dump() + "'");
    CHECK(ent.exit_code == 0);
    CHECK(near(nlohmann::json::parse(ent.out)["entropy_bits"].get<double>(),
               1.4712154310700942, 1e-11));

    const RunResult plain =
        run_cli("find-partner " + kStateA + " --beta1 0.49");
    CHECK(plain.exit_code == 0);
    double p1 = 0.0, p2 = 0.0, p3 = 0.0;
    REQUIRE(std::sscanf(plain.out.c_str(), "partner: %lf %lf %lf", &p1, &p2,
                        &p3) == 3);
    CHECK(near(p1, 0.49, 1e-12));
    CHECK(near(p2, 0.33676029181068889, 1e-10));
    CHECK(near(p3, 0.17323970818931111, 1e-10));
    CHECK(plain.out.find("classification: Incomparable\n") !=
          std::string::npos);
    CHECK(plain.out.find("iterations: ") != std::string::npos);
}

TEST_CASE("find-partner infeasible pins exit 3 and explain the bound") {
    const RunResult r = run_cli("find-partner " + kStateB + " --beta1 0.52");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("Infeasible") == 0);
    CHECK(r.err.find("below the target") != std::string::npos);

    CHECK(run_cli("find-partner " + kStateA + " --beta1 0.3").exit_code == 3);
    CHECK(run_cli("find-partner " + kStateA + " --beta1 0.45").exit_code ==
          3);
}

TEST_CASE("family subcommand emits the pinned CSV schema") {
    const RunResult r =
        run_cli("family " + kStateA + " --lo 0.46 --hi 0.49 --steps 31");
    CHECK(r.exit_code == 0);

    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "beta1,beta2,beta3,entropy_residual_bits,differing_coeffs,"
                  "classification");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find(",3,Incomparable") != std::string::npos);
    }
    CHECK(rows == 31);
}

TEST_CASE("family subcommand skips infeasible grid points") {
    const RunResult r =
        run_cli("family " + kStateB + " --lo 0.51 --hi 0.6 --steps 10");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line); // header
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 1);
}

TEST_CASE("family subcommand empty range exits 3") {
    const RunResult r =
        run_cli("family " + kStateA + " --lo 0.45 --hi 0.45 --steps 1");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("EmptyRange") == 0);
}

TEST_CASE("lift and reduce round-trip through the CLI") {
    const RunResult lifted = run_cli("--format json lift " + kStateA + " " +
                                     kStateB + " --kappa 0.6");
    CHECK(lifted.exit_code == 0);
    const auto lj = nlohmann::json::parse(lifted.out);

    const RunResult reduced =
        run_cli("--format json reduce '" + lj["a"].dump() + "' '" +
                lj["b"].dump() + "'");
    CHECK(reduced.exit_code == 0);
    const auto rj = nlohmann::json::parse(reduced.out);
    CHECK(rj["shared_index"].get<int>() == 1);
    const std::vector<double> expect_a = {0.45, 0.39, 0.16};
    const std::vector<double> expect_b = {0.5, 0.3, 0.2};
    for (int i = 0; i < 3; ++i) {
        CHECK(near(rj["a"]["coeffs"][i].get<double>(), expect_a[i], 1e-12));
        CHECK(near(rj["b"]["coeffs"][i].get<double>(), expect_b[i], 1e-12));
    }

    const RunResult no_share = run_cli("reduce " + kStateA + " " + kStateB);
    CHECK(no_share.exit_code == 2);
    CHECK(no_share.err.find("NoSharedCoefficient") == 0);
}

TEST_CASE("verify subcommand runs suites and reports checks") {
    const RunResult t1 =
        run_cli("verify --suite theorem1 --trials 25 --seed 7");
    CHECK(t1.exit_code == 0);
    CHECK(t1.out == "suite theorem1: PASS (75 checks, 0 failures)\n");

    const RunResult t2 =
        run_cli("verify --suite theorem2 --trials 40 --seed 5");
    CHECK(t2.exit_code == 0);
    CHECK(t2.out == "suite theorem2: PASS (200 checks, 0 failures)\n");

    const RunResult sc = run_cli("verify --suite schur --trials 50 --seed 2");
    CHECK(sc.exit_code == 0);
    CHECK(sc.out == "suite schur: PASS (100 checks, 0 failures)\n");

    const RunResult red =
        run_cli("verify --suite reduction --trials 6 --seed 3");
    CHECK(red.exit_code == 0);
    CHECK(red.out == "suite reduction: PASS (6 checks, 0 failures)\n");

    const RunResult eq5 = run_cli("verify --suite eq5 --trials grid");
    CHECK(eq5.exit_code == 0);
    CHECK(eq5.out == "suite eq5: PASS (693889 checks, 0 failures)\n");

    const RunResult unknown = run_cli("verify --suite bogus");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("verify is deterministic for a fixed seed") {
    const std::string args = "verify --suite theorem2 --trials 30 --seed 11";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    // The environment variable is the fallback seed.
    const RunResult via_env = run_cli("verify --suite theorem2 --trials 30",
                                      "SCHMIDT_LOCC_SEED=11");
    CHECK(via_env.out == first.out);

    // And an explicit flag wins over it.
    const RunResult flag_wins = run_cli(args, "SCHMIDT_LOCC_SEED=99");
    CHECK(flag_wins.out == first.out);
}
