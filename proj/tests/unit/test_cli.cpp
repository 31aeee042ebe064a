#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nlgs/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args, const std::string& workdir) {
    const std::string out = workdir + "/stdout.txt";
    const std::string cmd = std::string(NLGS_CLI_PATH) + " " + args + " > " + out + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    std::ifstream is(out);
    std::stringstream ss;
    ss << is.rdbuf();
    r.stdout_text = ss.str();
    return r;
}

std::string fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("nlgs_cli_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("solve: ILW ground state via the command line") {
    const std::string dir = fresh_dir("solve_ilw");
    RunResult r = run_cli("--out " + dir + " --no-timestamp solve --op ilw --mu 0.6366 --alpha 1", dir);
    CHECK(r.exit_code == 0);

    const auto j = nlohmann::json::parse(slurp(fs::path(dir) / "solve_result.json"));
    CHECK(j["converged"] == true);
    CHECK(j["residual_sup"].get<double>() <= 1e-10);
    CHECK(j["profile_ref"] == "profile.csv");

    nlgs::Profile q = nlgs::read_profile_csv_file((fs::path(dir) / "profile.csv").string());
    double dist = 0.0;
    for (int i = 0; i < q.size(); ++i)
        dist = std::max(dist, std::abs(q.values[i] - 1.0 / std::cosh(q.grid.node(i))));
    CHECK(dist <= 1e-4);  // mu = 0.6366 is 2/pi only to 5 digits, so the profile is a near-sech
}

TEST_CASE("solve: supercritical alpha exits with code 2") {
    const std::string dir = fresh_dir("solve_bad");
    RunResult r = run_cli("--out " + dir + " solve --op frac --s 0.3 --alpha 10", dir);
    CHECK(r.exit_code == 2);
}

TEST_CASE("solve: unknown operator exits with code 2") {
    const std::string dir = fresh_dir("solve_badop");
    RunResult r = run_cli("--out " + dir + " solve --op banana", dir);
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify: single gr-identity check") {
    const std::string dir = fresh_dir("verify_gr");
    RunResult r = run_cli("--out " + dir + " --no-timestamp verify --only gr-identity --tau 2", dir);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(fs::path(dir) / "verification_report.json"));
    CHECK(j["schema"] == 1);
    CHECK(j["overall_pass"] == true);
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["name"] == "gr-identity-tau-2");
    CHECK(j["checks"][0]["pass"] == true);
    CHECK(j["checks"][0]["paper_anchor"].get<std::string>().size() > 0);
}

TEST_CASE("verify: funk-hecke sweep produces one check per degree") {
    const std::string dir = fresh_dir("verify_fh");
    RunResult r = run_cli("--out " + dir + " --no-timestamp verify --only funk-hecke --lmax 10", dir);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(fs::path(dir) / "verification_report.json"));
    REQUIRE(j["checks"].size() == 12);  // l = 0..10 plus the multiplicity row
    int fh_rows = 0;
    for (const auto& row : j["checks"]) {
        CHECK(row["pass"] == true);
        if (row["name"].get<std::string>().rfind("funk-hecke-", 0) == 0) ++fh_rows;
    }
    CHECK(fh_rows == 11);
}

TEST_CASE("verify: default run passes every check and lists a full suite") {
    const std::string dir = fresh_dir("verify_all");
    RunResult r = run_cli("--out " + dir + " --no-timestamp verify", dir);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(fs::path(dir) / "verification_report.json"));
    CHECK(j["overall_pass"] == true);
    CHECK(j["checks"].size() >= 20);
    for (const auto& row : j["checks"]) {
        CHECK(row["pass"] == true);
        CHECK(row["paper_anchor"].get<std::string>().size() > 0);
    }
    // companion zonal-spectrum report
    const auto s = nlohmann::json::parse(slurp(fs::path(dir) / "sphere_report.json"));
    REQUIRE(s["funk_hecke"].size() == 11);
    CHECK(s["funk_hecke"][3]["l"] == 3);
    CHECK(s["funk_hecke"][3]["abs_error"].get<double>() <= 1e-12);
    REQUIRE(s["bs_eigenvalues"].size() == 6);
    CHECK(s["bs_eigenvalues"][1]["parity"] == -1);
}

TEST_CASE("verify: unknown group exits with code 2") {
    const std::string dir = fresh_dir("verify_bad");
    RunResult r = run_cli("--out " + dir + " verify --only no-such-check", dir);
    CHECK(r.exit_code == 2);
}

TEST_CASE("constants: sweep CSV has the four columns and tight route agreement") {
    const std::string dir = fresh_dir("constants");
    RunResult r = run_cli("--out " + dir + " constants --theta-min 0.4 --theta-max 2.8 --steps 12", dir);
    CHECK(r.exit_code == 0);
    std::ifstream is(fs::path(dir) / "constants.csv");
    std::string header;
    std::getline(is, header);
    CHECK(header == "# theta,closed_constant,quadrature_constant,el_residual");
    int rows = 0;
    double prev_theta = 0.0;
    std::string line;
    while (std::getline(is, line)) {
        ++rows;
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');
        const double theta = std::stod(cell);
        CHECK(theta > prev_theta);
        prev_theta = theta;
        std::getline(ss, cell, ',');
        const double closed = std::stod(cell);
        std::getline(ss, cell, ',');
        const double quad = std::stod(cell);
        CHECK(std::abs(closed - quad) <= 1e-8 * closed);
    }
    CHECK(rows == 13);
}

TEST_CASE("constants: invalid range exits with code 2") {
    const std::string dir = fresh_dir("constants_bad");
    CHECK(run_cli("--out " + dir + " constants --theta-min 2.0 --theta-max 1.0", dir).exit_code == 2);
    CHECK(run_cli("--out " + dir + " constants --theta-min 0.5 --theta-max 3.5", dir).exit_code == 2);
}

TEST_CASE("spectrum: ILW linearization at sech certifies one zero mode") {
    const std::string dir = fresh_dir("spectrum");
    RunResult r = run_cli("--out " + dir + " --num-points 512 spectrum --op ilw --profile sech", dir);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(fs::path(dir) / "spectral_report.json"));
    CHECK(j["zero_modes"].size() == 1);
    CHECK(j["nondegeneracy"]["status"] == "pass");
    CHECK(j["nondegeneracy"]["kernel_overlap"].get<double>() >= 0.999);
    // eigenvalue CSV exists with index,eigenvalue rows
    std::ifstream is(fs::path(dir) / "eigenvalues.csv");
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 512);
}

TEST_CASE("continue: tiny branch emits CSV, profiles, and a manifest") {
    const std::string dir = fresh_dir("continue");
    RunResult r = run_cli("--out " + dir + " continue --alpha 1 --s-to 0.9 --steps 2", dir);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(fs::path(dir) / "branch_manifest.json"));
    CHECK(j["completed"] == true);
    REQUIRE(j["points"].size() == 3);
    for (const auto& p : j["points"]) {
        CHECK(p["residual"].get<double>() <= 1e-8);
        CHECK(p["even_gap"].get<double>() > 0.0);
        CHECK(fs::exists(fs::path(dir) / p["profile_ref"].get<std::string>()));
    }
    CHECK(run_cli("--out " + dir + " continue --alpha 10 --s-to 0.3 --steps 2", dir).exit_code == 2);
}

TEST_CASE("determinism: identical config and seed give byte-identical reports") {
    const std::string dir1 = fresh_dir("det1");
    const std::string dir2 = fresh_dir("det2");
    const std::string args = " --no-timestamp --seed 777 verify --only ilw-sharp";
    CHECK(run_cli("--out " + dir1 + args, dir1).exit_code == 0);
    CHECK(run_cli("--out " + dir2 + args, dir2).exit_code == 0);
    CHECK(slurp(fs::path(dir1) / "verification_report.json") ==
          slurp(fs::path(dir2) / "verification_report.json"));
    CHECK(slurp(fs::path(dir1) / "verification_report.json").size() > 0);
}

TEST_CASE("worker count does not change the bytes") {
    const std::string dir1 = fresh_dir("thr1");
    const std::string dir2 = fresh_dir("thr2");
    const std::string args = " constants --theta-min 0.5 --theta-max 2.5 --steps 8";
    CHECK(std::system(("NLGS_THREADS=1 " + std::string(NLGS_CLI_PATH) + " --out " + dir1 + args +
                       " > /dev/null 2>&1").c_str()) == 0);
    CHECK(std::system(("NLGS_THREADS=4 " + std::string(NLGS_CLI_PATH) + " --out " + dir2 + args +
                       " > /dev/null 2>&1").c_str()) == 0);
    CHECK(slurp(fs::path(dir1) / "constants.csv") == slurp(fs::path(dir2) / "constants.csv"));
    CHECK(slurp(fs::path(dir1) / "constants.csv").size() > 0);
}

TEST_CASE("config file values are overridden by flags") {
    const std::string dir = fresh_dir("config");
    {
        std::ofstream cfg(fs::path(dir) / "run.ini");
        cfg << "num-points=256\nout=" << dir << "\nno-timestamp=true\n";
    }
    RunResult r = run_cli("--config " + dir + "/run.ini --num-points 512 spectrum --op ilw --profile sech",
                          dir);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(fs::path(dir) / "spectral_report.json"));
    CHECK(j["config"]["grid"]["N"] == 512);  // flag wins over the config file
}
