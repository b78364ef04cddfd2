#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace eqlc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "eqlc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "eqlc_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string data_line(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty() && line.front() != '#') return line;
    return {};
}

}  // namespace

TEST_CASE("gen") {
    const Run e = run({"gen", "euler", "3", "3"});
    CHECK(e.code == 0);
    const std::string bits = data_line(e.out);
    REQUIRE(bits.size() == 27);
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') ones.push_back(i);
    CHECK(ones == std::vector<std::size_t>{2, 4, 5, 10, 17, 22, 23, 25});

    const Run c = run({"gen", "euler-complement", "3", "2"});
    const std::string cb = data_line(c.out);
    CHECK(cb.size() == 9);
    CHECK(std::count(cb.begin(), cb.end(), '1') == 4);

    const Run x = run({"gen", "xzlh", "5", "2", "--f", "2", "--b", "0", "--g", "2"});
    CHECK(x.code == 0);
    CHECK(data_line(x.out).size() == 25);
    CHECK(data_line(x.out).front() == '1');

    CHECK(run({"gen", "xzlh", "5", "2", "--f", "2"}).code == 2);
    CHECK(run({"gen", "euler", "4", "2"}).code == 2);
    CHECK(run({"gen", "banana", "3", "2"}).code == 2);
    CHECK(run({"--out", "/nonexistent-dir/x.txt", "gen", "euler", "3", "2"}).code == 2);
}

TEST_CASE("gen to file then lc from file") {
    const auto path = scratch("s53.txt");
    REQUIRE(run({"--out", path.string(), "gen", "euler", "5", "3"}).code == 0);
    const Run lc = run({"lc", "--in", path.string()});
    CHECK(lc.code == 0);
    CHECK(lc.out.find("lc_gcd=120\n") != std::string::npos);
    CHECK(lc.out.find("lc_bm=120\n") != std::string::npos);
    CHECK(lc.out.find("agree=yes") != std::string::npos);

    const auto zero = scratch("zero.txt");
    std::ofstream(zero) << "000000000\n";
    const Run z = run({"lc", "--in", zero.string()});
    CHECK(z.code == 0);
    CHECK(z.out.find("lc_gcd=0\n") != std::string::npos);

    CHECK(run({"lc", "euler", "3", "2"}).out.find("lc_gcd=8\n") != std::string::npos);
    CHECK(run({"--format", "table", "lc", "euler", "3", "2"}).out.find("closed form") != std::string::npos);
}

TEST_CASE("klc methods") {
    const Run all = run({"klc", "euler", "3", "3", "--method", "all", "--k-max", "8"});
    CHECK(all.code == 0);
    CHECK(all.out.find("k=2 lc=20 method=brute") != std::string::npos);
    CHECK(all.out.find("k=6 lc=8 method=brute") != std::string::npos);
    CHECK(all.out.find("# cross-check: consistent") != std::string::npos);

    const Run formula = run({"--format", "table", "klc", "euler", "5", "3", "--method", "formula"});
    CHECK(formula.code == 0);
    CHECK(formula.out.find("8..39         100") != std::string::npos);
    CHECK(formula.out.find("40            20") != std::string::npos);

    const Run coset = run({"klc", "euler", "5", "3", "--method", "coset"});
    CHECK(coset.code == 0);
    CHECK(coset.out.find("k=40 lc=20 method=coset") != std::string::npos);
    CHECK(coset.out.find("k=8 lo=100 hi=120 method=bound") != std::string::npos);
    CHECK(coset.out.find("# skipped divisor") != std::string::npos);

    // brute force at 125 is refused by the budget
    const Run brute = run({"klc", "euler", "5", "3", "--method", "brute"});
    CHECK(brute.code == 3);
    CHECK(brute.err.find("pattern_budget") != std::string::npos);

    // all: brute is skipped, the rest still cross-checks
    const Run all53 = run({"klc", "euler", "5", "3"});
    CHECK(all53.code == 0);
    CHECK(all53.out.find("# brute skipped") != std::string::npos);
    CHECK(all53.out.find("k=8 lc=100 method=formula") != std::string::npos);

    CHECK(run({"klc", "euler", "3", "3", "--method", "guess"}).code == 2);
    CHECK(run({"klc", "euler", "7", "2", "--method", "formula"}).code == 2);
    CHECK(run({"--coset-dim-limit", "10", "klc", "euler", "3", "3", "--method", "coset"}).code == 0);
    CHECK(run({"--workers", "0", "klc", "euler", "3", "2"}).code == 2);
}

TEST_CASE("klc output does not depend on workers") {
    const Run a = run({"--workers", "1", "klc", "euler-complement", "5", "2", "--method", "brute", "--k-max", "6"});
    const Run b = run({"--workers", "4", "klc", "euler-complement", "5", "2", "--method", "brute", "--k-max", "6"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("environment overrides") {
    setenv("EQLC_PATTERN_BUDGET", "10", 1);
    const Run r = run({"klc", "euler", "3", "3", "--method", "brute"});
    unsetenv("EQLC_PATTERN_BUDGET");
    CHECK(r.code == 3);
    CHECK(run({"klc", "euler", "3", "3", "--method", "brute"}).code == 0);
}

TEST_CASE("classes") {
    const Run c = run({"classes", "3", "3"});
    CHECK(c.code == 0);
    CHECK(c.out.find("5: 4 23\n") != std::string::npos);
    CHECK(run({"classes", "3", "3", "--generator", "11"}).out == c.out);
    CHECK(run({"classes", "3", "3", "--generator", "2"}).code == 2);
    const Run g = run({"classes", "5", "2", "--f", "4", "--generator", "2"});
    CHECK(g.code == 0);
    CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 20);
}

TEST_CASE("verify") {
    const Run v = run({"verify", "--suite", "p3r3"});
    CHECK(v.code == 0);
    CHECK(v.out.find("FAIL") == std::string::npos);
    CHECK(v.out.find("suite p3r3: ") != std::string::npos);

    // a corrupted golden table turns into exit code 1
    const auto dir = scratch("golden");
    std::filesystem::create_directories(dir);
    for (const auto& entry : std::filesystem::directory_iterator(EQLC_TEST_GOLDEN_DIR))
        std::filesystem::copy_file(entry.path(), dir / entry.path().filename(), std::filesystem::copy_options::overwrite_existing);
    std::ofstream(dir / "p3r3_euler.txt") << "# p=3 r=3 family=euler\n0 24\n1 23\n";
    const Run bad = run({"verify", "--suite", "p3r3", "--golden-dir", dir.string()});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL p3r3") != std::string::npos);

    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
