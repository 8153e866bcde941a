#include <array>
#include <cstdio>
#include <sstream>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LIEALG_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli show prints the bracket table") {
    const auto r = run_cli("show extended_galilei");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[p1, kg1] = -1*m"));
    CHECK(contains(r.output, "dimension: 11"));

    const auto so3 = run_cli("show so3");
    CHECK(so3.exit_code == 0);
    int brackets = 0;
    for (std::size_t at = so3.output.find("["); at != std::string::npos;
         at = so3.output.find("[", at + 1))
        ++brackets;
    CHECK(brackets == 3);

    const auto missing = run_cli("show missing.alg");
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "error"));
}

TEST_CASE("cli check validates catalog entries and rejects corrupted files") {
    CHECK(run_cli("check poincare").exit_code == 0);
    CHECK(contains(run_cli("check poincare").output, "valid"));
    CHECK(run_cli("check extended_poincare_hbar").exit_code == 0);

    // [a,b] = c, [a,c] = a leaves [[c,a],b] = -c unbalanced
    const std::string path = "/tmp/liealg_broken.json";
    std::ofstream out(path);
    out << R"({"name":"broken","generators":["a","b","c"],"brackets":[
      {"left":"a","right":"b","terms":[{"coeff":"1","gen":"c"}]},
      {"left":"a","right":"c","terms":[{"coeff":"1","gen":"a"}]}]})";
    out.close();
    const auto broken = run_cli("check " + path);
    CHECK(broken.exit_code == 1);
    CHECK(contains(broken.output, "jacobi violated"));
}

TEST_CASE("cli casimir goldens") {
    const auto poi = run_cli("casimir poincare --degree 2");
    CHECK(poi.exit_code == 0);
    CHECK(poi.output == "h^2 - p1^2 - p2^2 - p3^2\n");

    const auto gal = run_cli("casimir extended_galilei --degree 1");
    CHECK(gal.exit_code == 0);
    CHECK(gal.output == "m\n");

    const auto so3 = run_cli("casimir so3 --degree 2");
    CHECK(so3.exit_code == 0);
    CHECK(so3.output == "j1^2 + j2^2 + j3^2\n");

    const auto capped = run_cli("casimir so3 --degree 9");
    CHECK(capped.exit_code == 2);

    // the cap is configurable upward
    const auto raised = run_cli("--degree-cap 6 casimir so3 --degree 6");
    CHECK(raised.exit_code == 0);
    CHECK(contains(raised.output, "j1^6"));

    const auto serialized = run_cli("casimir extended_galilei --degree 1 --json");
    CHECK(serialized.exit_code == 0);
    CHECK(contains(serialized.output, "\"algebra\": \"extended_galilei\""));
    CHECK(contains(serialized.output, "\"degree\": 1"));
    CHECK(contains(serialized.output, "\"new\": false"));
    CHECK(contains(serialized.output, "\"m\""));
}

TEST_CASE("cli contract chain") {
    const auto match = run_cli(
        "contract extended_poincare_hbar --scale J=0,P=1,K=1,Hbar=0,M=2 "
        "--compare extended_galilei --map KP=KG,Hbar=H");
    CHECK(match.exit_code == 0);
    CHECK(match.output == "MATCH\n");

    const auto diverging = run_cli("contract poincare --scale H=1,P=0,K=0,J=0");
    CHECK(diverging.exit_code == 3);
    CHECK(contains(diverging.output, "kp1"));

    const auto unchanged = run_cli("contract poincare --scale all=0");
    CHECK(unchanged.exit_code == 0);
    CHECK(contains(unchanged.output, "[p1, kp1] = -1*h"));

    const auto mismatch = run_cli(
        "contract poincare --scale all=0 --compare galilei --map KP=KG");
    CHECK(mismatch.exit_code == 1);
    CHECK(mismatch.output == "MISMATCH\n");
}

TEST_CASE("cli show prints the tensor-basis table") {
    const auto t4 = run_cli("show poincare_lorentz4");
    CHECK(t4.exit_code == 0);
    CHECK(contains(t4.output, "[m01, m02] = -1*j12"));
    CHECK(contains(t4.output, "[p1, m01] = -1*p0"));
}

TEST_CASE("cli rank and catalog") {
    const auto rank = run_cli("rank poincare");
    CHECK(rank.exit_code == 0);
    CHECK(rank.output == "2\n");
    CHECK(run_cli("--seed 7 rank extended_galilei").output == "3\n");

    const std::string path = "/tmp/liealg_rank_so3.json";
    CHECK(run_cli("show so3 --export " + path).exit_code == 0);
    CHECK(run_cli("rank " + path).output == "1\n");

    const auto cat = run_cli("catalog");
    CHECK(cat.exit_code == 0);
    CHECK(contains(cat.output, "extended_poincare 11"));

    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli casimir --new and --scale-file") {
    const auto fresh = run_cli("casimir poincare --degree 4 --new");
    CHECK(fresh.exit_code == 0);
    // exactly one fresh quartic generator; leading term is h^2*j1^2
    CHECK(fresh.output.rfind("h^2*j1^2", 0) == 0);
    CHECK(fresh.output.find('\n') == fresh.output.size() - 1);

    const std::string path = "/tmp/liealg_scaling.json";
    std::ofstream out(path);
    out << R"({"algebra":"extended_poincare_hbar","exponents":{
      "j1":0,"j2":0,"j3":0,"p1":1,"p2":1,"p3":1,"kp1":1,"kp2":1,"kp3":1,"hbar":0,"m":2}})";
    out.close();
    const auto match = run_cli("contract extended_poincare_hbar --scale-file " + path +
                               " --compare extended_galilei --map KP=KG,Hbar=H");
    CHECK(match.exit_code == 0);
    CHECK(match.output == "MATCH\n");

    CHECK(run_cli("contract extended_poincare_hbar").exit_code == 2);
}

TEST_CASE("cli verify-paper is deterministic and reports pass") {
    const auto a = run_cli("verify-paper --report /tmp/liealg_report_a.txt");
    CHECK(a.exit_code == 0);
    const auto b = run_cli("--format report verify-paper --report /tmp/liealg_report_b.txt");
    CHECK(b.exit_code == 0);
    std::ifstream fa("/tmp/liealg_report_a.txt"), fb("/tmp/liealg_report_b.txt");
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().find("summary pass=") != std::string::npos);
    CHECK(sa.str().find("fail=0") != std::string::npos);
    // structured stdout format mirrors the report file
    CHECK(b.output == sa.str());
    CHECK(contains(sa.str(), "appendix.typo.j1.k3"));
    CHECK(contains(sa.str(), "appendix.typo.j2.k3"));
    CHECK(contains(sa.str(), "appendix.sign.hbar"));
}

TEST_CASE("cli output is deterministic and exports round-trip") {
    const auto a = run_cli("show extended_poincare_hbar");
    const auto b = run_cli("show extended_poincare_hbar");
    CHECK(a.output == b.output);

    const std::string path = "/tmp/liealg_export_so3.json";
    CHECK(run_cli("show so3 --export " + path).exit_code == 0);
    const auto shown = run_cli("show " + path);
    CHECK(shown.exit_code == 0);
    CHECK(contains(shown.output, "[j1, j2] = 1*j3"));
}
