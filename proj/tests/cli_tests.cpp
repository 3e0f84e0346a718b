#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "sympsmith_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path out = work_dir() / ("out" + std::to_string(counter));
    fs::path err = work_dir() / ("err" + std::to_string(counter));
    ++counter;
    std::string cmd = std::string(SYMPSMITH_CLI_PATH) + " " + args + " > " + out.string() +
                      " 2> " + err.string();
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

std::string write_file(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream f(p);
    f << content;
    return p.string();
}

}  // namespace

TEST_CASE("decompose on simple inputs") {
    auto id = write_file("id.txt", "4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    RunResult r = run("decompose " + id);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("d: 1 1") != std::string::npos);

    auto d6 = write_file("d6.txt", "2 2\n6 0\n0 1/6\n");
    RunResult r6 = run("decompose " + d6);
    CHECK(r6.exit_code == 0);
    CHECK(r6.out.find("d: 6") != std::string::npos);
}

TEST_CASE("decompose error contract") {
    auto bad = write_file("bad.txt", "2 2\n1 0 0 1/0\n");
    CHECK(run("decompose " + bad).exit_code == 2);

    auto nonsymp = write_file("nonsymp.txt", "2 2\n2 0\n0 2\n");
    RunResult r = run("decompose " + nonsymp);
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("defect") != std::string::npos);

    auto odd = write_file("odd.txt", "3 3\n1 0 0\n0 1 0\n0 0 1\n");
    CHECK(run("decompose " + odd).exit_code == 3);

    CHECK(run("decompose /nonexistent/file").exit_code == 2);
}

TEST_CASE("snf subcommand") {
    auto m = write_file("snfin.txt", "2 2\n4 6\n2 8\n");
    RunResult r = run("snf " + m);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("divisors: 2 10") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    auto zero = write_file("zero.txt", "2 2\n0 0\n0 0\n");
    RunResult rz = run("snf " + zero);
    CHECK(rz.exit_code == 0);
    CHECK(rz.out.find("divisors: 0 0") != std::string::npos);

    auto rational = write_file("rat.txt", "2 2\n1/2 0\n0 2\n");
    CHECK(run("snf " + rational).exit_code == 2);
}

TEST_CASE("gen is deterministic and feeds the pipeline") {
    RunResult a = run("gen 2 --seed 11 --kind spq --length 12 --dmax 30");
    RunResult b = run("gen 2 --seed 11 --kind spq --length 12 --dmax 30");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("gen 2 --seed 12 --kind spq --length 12 --dmax 30");
    CHECK(a.out != c.out);

    RunResult z = run("gen 3 --seed 5 --kind spz --length 20");
    CHECK(z.exit_code == 0);
    CHECK(z.out == run("gen 3 --seed 5 --kind spz --length 20").out);

    // spz output is integral symplectic: trivial invariant
    auto zpath = write_file("spz.txt", z.out);
    RunResult dz = run("decompose " + zpath);
    CHECK(dz.exit_code == 0);
    CHECK(dz.out.find("d: 1 1 1") != std::string::npos);
}

TEST_CASE("verify accepts the emitted witness and rejects tampering") {
    RunResult gen = run("gen 2 --seed 303 --kind spq --length 10 --dmax 40");
    auto gpath = write_file("pipeline_g.txt", gen.out);
    RunResult dec = run("decompose --json " + gpath);
    CHECK(dec.exit_code == 0);
    auto jpath = write_file("pipeline_dec.json", dec.out);

    RunResult ok = run("verify " + gpath + " " + jpath);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    auto j = nlohmann::json::parse(dec.out);
    j["sigma"][0][0] = "123456789";
    auto tampered = write_file("tampered.json", j.dump());
    RunResult bad = run("verify " + gpath + " " + tampered);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);

    // zero/negative divisors in a tampered file fail cleanly, not crash
    auto j2 = nlohmann::json::parse(dec.out);
    j2["d"][0] = "-2";
    auto negd = write_file("negd.json", j2.dump());
    RunResult nd = run("verify " + gpath + " " + negd);
    CHECK(nd.exit_code == 1);
    CHECK(nd.out.find("divisors-positive: FAIL") != std::string::npos);

    // wrong-dimension pair: decomposition of a 2x2 against a 4x4 matrix
    auto small = write_file("small.txt", "2 2\n1 0\n0 1\n");
    RunResult sdec = run("decompose --json " + small);
    auto sj = write_file("small.json", sdec.out);
    CHECK(run("verify " + gpath + " " + sj).exit_code == 2);

    CHECK(run("verify " + gpath + " /nonexistent.json").exit_code == 2);
}

TEST_CASE("local subcommand") {
    auto g = write_file("locg.txt", "4 4\n2 0 0 0\n0 6 0 0\n0 0 1/2 0\n0 0 0 1/6\n");
    RunResult r = run("local " + g + " --primes 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3: 1 0") != std::string::npos);

    RunResult s = run("local " + g + " --support");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("2: 1 1") != std::string::npos);
    CHECK(s.out.find("3: 1 0") != std::string::npos);

    CHECK(run("local " + g + " --primes 4").exit_code == 2);
    CHECK(run("local " + g).exit_code == 2);

    auto id = write_file("locid.txt", "2 2\n1 0\n0 1\n");
    RunResult rid = run("local " + id + " --primes 2,3,5");
    CHECK(rid.exit_code == 0);
    CHECK(rid.out.find("5: 0") != std::string::npos);
}

TEST_CASE("coset-eq subcommand") {
    auto g = write_file("ceq_g.txt", "2 2\n6 0\n0 1/6\n");
    RunResult same = run("coset-eq " + g + " " + g);
    CHECK(same.exit_code == 0);
    CHECK(same.out.find("equal: yes") != std::string::npos);

    auto id = write_file("ceq_id.txt", "2 2\n1 0\n0 1\n");
    RunResult diff = run("coset-eq " + id + " " + g);
    CHECK(diff.exit_code == 1);
    CHECK(diff.out.find("equal: no") != std::string::npos);

    auto bad = write_file("ceq_bad.txt", "2 2\n1 0\n0\n");
    CHECK(run("coset-eq " + id + " " + bad).exit_code == 2);
}

TEST_CASE("words in text mode") {
    auto g = write_file("wt.txt", "2 2\n1/2 0\n0 2\n");
    RunResult r = run("decompose --words " + g);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("sigma word") != std::string::npos);
    CHECK(r.out.find("weyl_swap") != std::string::npos);
}

TEST_CASE("json outputs are valid json") {
    auto g = write_file("jg.txt", "2 2\n6 0\n0 1/6\n");
    RunResult r = run("decompose --json --locals --words " + g);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["d"][0] == "6");
    CHECK(j.contains("locals"));
    CHECK(j.contains("words"));
    CHECK(j["verification"].size() == 8);

    RunResult s = run("snf --json " + write_file("jsnf.txt", "2 2\n4 6\n2 8\n"));
    auto js = nlohmann::json::parse(s.out);
    CHECK(js["divisors"][1] == "10");

    RunResult c = run("coset-eq --json " + g + " " + g);
    CHECK(nlohmann::json::parse(c.out)["equal"] == true);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate x").exit_code == 2);
    CHECK(run("decompose").exit_code == 2);
    CHECK(run("gen 0").exit_code == 2);
    CHECK(run("gen 2 --kind bogus").exit_code == 2);
}
