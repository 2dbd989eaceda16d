#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

// end-to-end tests through the installed binary; SRGLAB_BIN is injected by
// the build system

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path outfile = fs::temp_directory_path() / ("srglab_out_" + std::to_string(counter++));
    std::string cmd = std::string(SRGLAB_BIN) + " " + args + " > " + outfile.string() + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    fs::remove(outfile);
    return r;
}

fs::path tmp(const std::string& name) { return fs::temp_directory_path() / name; }

} // namespace

TEST_CASE("build and verify the two small family graphs") {
    auto l33 = tmp("cli_l33.srg");
    RunResult b = run("build l33 -o " + l33.string());
    CHECK(b.exit_code == 0);

    std::ifstream in(l33);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) lines++;
    CHECK(lines == 19); // header + 18 edges

    RunResult v = run("verify " + l33.string());
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("\"pass\":false") == std::string::npos);

    auto bh = tmp("cli_bh.srg");
    CHECK(run("build bh -o " + bh.string()).exit_code == 0);
    CHECK(run("verify " + bh.string()).exit_code == 0);
}

TEST_CASE("verification failure exits 1, missing file exits 2") {
    auto l33 = tmp("cli_l33_broken.srg");
    run("build l33 -o " + l33.string());
    // swap one edge for a non-edge, keeping the format valid
    std::ifstream in(l33);
    std::stringstream ss;
    ss << in.rdbuf();
    in.close();
    std::string text = ss.str();
    size_t pos = text.find("0 6\n");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 4, "0 5\n");
    std::ofstream out(l33, std::ios::binary);
    out << text;
    out.close();

    RunResult v = run("verify " + l33.string());
    CHECK(v.exit_code == 1);
    CHECK(v.out.find("\"pass\":false") != std::string::npos);

    CHECK(run("verify /nonexistent/file.srg").exit_code == 2);
}

TEST_CASE("malformed graph file exits 2") {
    auto bad = tmp("cli_bad.srg");
    std::ofstream out(bad, std::ios::binary);
    out << "srg v=9 k=4 lambda=1 mu=2\n5 5\n";
    out.close();
    CHECK(run("verify " + bad.string()).exit_code == 2);
}

TEST_CASE("scan prints the three solutions") {
    RunResult r = run("scan --max-n 1000000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(1,1) (2,2) (4,3)") != std::string::npos);
}

TEST_CASE("profile on the 81-vertex graph reports (1,0,36,8)") {
    auto bh = tmp("cli_bh2.srg");
    run("build bh -o " + bh.string());
    RunResult r = run("profile " + bh.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"m\":\"1 0 36 8 \"") != std::string::npos);
    CHECK(r.out.find("profile_solve_match") != std::string::npos);
}

TEST_CASE("gram rank check on the 81-vertex graph") {
    auto bh = tmp("cli_bh3.srg");
    run("build bh -o " + bh.string());
    RunResult r = run("gram " + bh.string() + " --vertex 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"rank\":\"20\"") != std::string::npos);
}

TEST_CASE("sigma image serialization on the rook graph") {
    auto l33 = tmp("cli_l33s.srg");
    run("build l33 -o " + l33.string());
    RunResult r = run("sigma " + l33.string() + " --vertex 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"image\":\"0 2 1 6 8 7 3 5 4\"") != std::string::npos);
}

TEST_CASE("cap search, verification, and equivalence through the CLI") {
    auto four = tmp("cli_four.cap");
    RunResult f = run("cap find --dim 2 --target 4 -o " + four.string());
    CHECK(f.exit_code == 0);
    CHECK(run("cap verify " + four.string()).exit_code == 0);

    // no 5-cap exists in the projective plane of order 3
    CHECK(run("cap find --dim 2 --target 5").exit_code == 1);

    auto bh = tmp("cli_bh4.srg");
    run("build bh -o " + bh.string());
    auto bhcap = tmp("cli_bh.cap");
    CHECK(run("extract-cap " + bh.string() + " -o " + bhcap.string()).exit_code == 0);
    auto ten = tmp("cli_ten.cap");
    CHECK(run("cap find --dim 3 --target 10 -o " + ten.string()).exit_code == 0);
    RunResult eq = run("cap equiv " + ten.string() + " " + bhcap.string());
    CHECK(eq.exit_code == 0);
}

TEST_CASE("identical seeds give byte-identical reports") {
    auto bh = tmp("cli_bh5.srg");
    run("build bh -o " + bh.string());
    RunResult a = run("linearize " + bh.string() + " --seed 9");
    RunResult b = run("linearize " + bh.string() + " --seed 9");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult c = run("cap find --dim 3 --target 10 --seed 3");
    RunResult d = run("cap find --dim 3 --target 10 --seed 3");
    CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("build nosuch -o /tmp/x.srg").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("build games end to end") {
    auto games = tmp("cli_games.srg");
    RunResult b = run("build games -o " + games.string());
    CHECK(b.exit_code == 0);
    CHECK(b.out.find("\"edges\":\"40824\"") != std::string::npos);
    CHECK(run("verify " + games.string()).exit_code == 0);
}

TEST_CASE("pipeline rejects the 81-vertex graph at the parameter stage") {
    auto bh = tmp("cli_bh6.srg");
    run("build bh -o " + bh.string());
    RunResult r = run("pipeline " + bh.string() + " --out-dir " +
                      tmp("cli_pipe_reject").string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("pipeline_params") != std::string::npos);
    CHECK(r.out.find("\"pass\":false") != std::string::npos);
}
