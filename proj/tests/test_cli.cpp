// Golden tests for the command-line tool. The binary path arrives as the
// last command-line argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string g_bin;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_bin + " " + args + " 2>/tmp/ttone_cli_err.txt";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string first_line(const std::string& s) {
    auto pos = s.find('\n');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

} // namespace

TEST_CASE("gen emits stable graph6") {
    auto r = run("gen --name petersen");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "IheA@GUAo\n");
    auto k4 = run("gen --name complete:4");
    CHECK(k4.out == "C~\n");
    auto el = run("gen --name path:3 --format edgelist");
    CHECK(el.out == "0 1\n1 2\n");
    CHECK(run("gen --name nope").exit_code == 2);
}

TEST_CASE("exact prints index plus witness") {
    auto r = run("exact --name petersen --t 2");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "6");
    CHECK(r.out.find("t 2\nk 6\n") != std::string::npos);

    auto n = run("exact --name complete:4 --t 2 --no-witness");
    CHECK(n.out == "9\n");

    // node limits exit 3
    CHECK(run("exact --name petersen --t 2 --node-limit 3").exit_code == 3);
}

TEST_CASE("color then verify round-trips with exit 0") {
    auto col = run("color --name petersen --strategy t1_6d4");
    REQUIRE(col.exit_code == 0);
    std::ofstream("/tmp/ttone_cli_doc.txt") << col.out;
    auto ver = run("verify --name petersen --coloring /tmp/ttone_cli_doc.txt --t 2");
    CHECK(ver.exit_code == 0);
    CHECK(ver.out.empty());

    // Corrupt one label: nonzero exit and a printed violation.
    std::string bad = col.out;
    auto pos = bad.find("e 0 ");
    REQUIRE(pos != std::string::npos);
    auto eol = bad.find('\n', pos);
    bad.replace(pos, eol - pos, "e 0 1 2");
    std::string bad2 = bad;
    pos = bad2.find("e 1 ");
    eol = bad2.find('\n', pos);
    bad2.replace(pos, eol - pos, "e 1 1 2");
    std::ofstream("/tmp/ttone_cli_bad.txt") << bad2;
    auto verbad = run("verify --name petersen --coloring /tmp/ttone_cli_bad.txt");
    CHECK(verbad.exit_code == 1);
    CHECK(!verbad.out.empty());

    // Wrong tone expectation: input error.
    CHECK(run("verify --name petersen --coloring /tmp/ttone_cli_doc.txt --t 3").exit_code == 2);
}

TEST_CASE("bounds output is machine parseable") {
    auto kv = run("bounds --name petersen --t 2 --format kv");
    CHECK(kv.exit_code == 0);
    CHECK(kv.out == "lower_tdelta 6\ncc2 13\ngeneral_t 24\nt1_6d4 14\n");
    auto table = run("bounds --name petersen --t 2");
    CHECK(table.out.find("cc2") != std::string::npos);
}

TEST_CASE("classify output") {
    auto r = run("classify --name fig2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("cubic true\n") != std::string::npos);
    CHECK(r.out.find("k4_minus_e_free true\n") != std::string::npos);
}

TEST_CASE("hypothesis violations exit 1") {
    CHECK(run("color --name petersen --strategy clawfree_subcubic").exit_code == 1);
    CHECK(run("color --name complete:4 --strategy sp_subcubic").exit_code == 1);
}

TEST_CASE("search scans") {
    auto r = run("search --family cubic --max-n 8 --forbid k4me --t 2 --threshold 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());

    auto all = run("search --max-n 6 --threshold 0");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("C~\t9\texact") != std::string::npos);

    // Stream input via file.
    std::ofstream("/tmp/ttone_cli_stream.g6") << "IheA@GUAo\n";
    auto s = run("search --g6-file /tmp/ttone_cli_stream.g6 --threshold 0");
    CHECK(s.exit_code == 0);
    CHECK(first_line(s.out).find("\t6\texact") != std::string::npos);
}

TEST_CASE("mutually exclusive inputs are enforced") {
    CHECK(run("classify --name petersen --graph6 C~").exit_code != 0);
    CHECK(run("classify").exit_code == 2);
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    g_bin = argv[argc - 1];
    return ctx.run();
}

TEST_CASE("environment node limit applies by default") {
    std::string cmd = "TTONE_NODE_LIMIT=3 " + g_bin + " exact --name petersen --t 2 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
    // An explicit flag overrides the environment.
    std::string cmd2 = "TTONE_NODE_LIMIT=3 " + g_bin + " exact --name complete:4 --t 2 --node-limit 1000000 >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
}

TEST_CASE("exact strategy through the color subcommand") {
    auto r = run("color --name cycle:9 --strategy exact");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("k 5\n") != std::string::npos);
}

TEST_CASE("classify reports unknown outerplanarity for multigraphs") {
    std::ofstream("/tmp/ttone_cli_par.el") << "0 1\n0 1\n";
    auto r = run("classify --edgelist /tmp/ttone_cli_par.el");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("outerplanar unknown\n") != std::string::npos);
    CHECK(r.out.find("series_parallel_subcubic true\n") != std::string::npos);
}
