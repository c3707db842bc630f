#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "besselbounds/cli/commands.hpp"
#include "besselbounds/cli/verify.hpp"

using namespace besselbounds::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "besselbounds");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("format_real and csv_row") {
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(1e-300) == "1e-300");
    CHECK(format_real(1.0 / 3.0) == "0.33333333333333331");
    CHECK(csv_row({1.5, std::int64_t{3}, std::string("geometric"), std::monostate{}}) ==
          "1.5,3,geometric,\n");
    CHECK(csv_row({std::nan(""), 2.0}) == ",2\n");
    CHECK(csv_header({"a", "b"}) == "a,b\n");
}

TEST_CASE("GridSpec parsing and counts") {
    const GridSpec g = GridSpec::parse("0:150:0.015", GridVar::Nu, 100.0);
    CHECK(g.count() == 10001);
    CHECK(g.at(10000) == doctest::Approx(150.0).epsilon(1e-15));
    CHECK(GridSpec::parse("2:2:1", GridVar::X, 0.0).count() == 1);
    CHECK_THROWS_AS(GridSpec::parse("0:1:0", GridVar::Nu, 0.0), UsageError);
    CHECK_THROWS_AS(GridSpec::parse("0:1:-1", GridVar::Nu, 0.0), UsageError);
    CHECK_THROWS_AS(GridSpec::parse("3:1:1", GridVar::Nu, 0.0), UsageError);
    CHECK_THROWS_AS(GridSpec::parse("0:1e8:1", GridVar::Nu, 0.0), UsageError);
    CHECK_THROWS_AS(GridSpec::parse("0:1", GridVar::Nu, 0.0), UsageError);
    CHECK_THROWS_AS(GridSpec::parse("a:b:c", GridVar::Nu, 0.0), UsageError);
}

TEST_CASE("figure presets follow the caption grids") {
    const GridSpec f1 = figure_grid(1);
    CHECK(f1.var == GridVar::Nu);
    CHECK(f1.start == 0.0);
    CHECK(f1.stop == 150.0);
    CHECK(f1.step == 0.015);
    CHECK(f1.fixed_other == 100.0);
    CHECK(f1.count() == 10001);

    const GridSpec f2 = figure_grid(2);
    CHECK(f2.stop == 200.0);
    CHECK(f2.step == 0.01);
    CHECK(f2.fixed_other == 50.0);
    CHECK(f2.count() == 20001);
    CHECK(kFigure2Eps == 0.01);

    const GridSpec f3 = figure_grid(3);
    CHECK(f3.var == GridVar::X);
    CHECK(f3.stop == 100.0);
    CHECK(f3.count() == 10001);
    CHECK_THROWS_AS(figure_grid(4), UsageError);
}

TEST_CASE("ratio rows") {
    const Result r = invoke({"ratio", "--nu", "0", "--x", "0"});
    CHECK(r.code == kExitOk);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == "nu,x,amos_lower,amos_upper,exp_lower,exp_upper,oracle");
    CHECK(l[1] == "0,0,0,0,,,0");

    const Result g = invoke({"ratio", "--x", "10", "--grid", "0:20:0.5"});
    CHECK(g.code == kExitOk);
    CHECK(lines(g.out).size() == 42);
}

TEST_CASE("hsum rows") {
    const auto zero = lines(invoke({"hsum", "--nu", "0", "--x", "0"}).out);
    REQUIRE(zero.size() == 2);
    CHECK(zero[1] == "0,0,geometric,0,0,,,0,0");

    const auto far = lines(invoke({"hsum", "--nu", "300", "--x", "50"}).out);
    REQUIRE(far.size() == 2);
    CHECK(far[1].rfind("300,50,geometric,", 0) == 0);
    CHECK(far[1].find(",,,") != std::string::npos);

    const auto near = lines(invoke({"hsum", "--nu", "0", "--x", "50"}).out);
    CHECK(near[1].rfind("0,50,two_regime,", 0) == 0);
}

TEST_CASE("scaled-bessel rows") {
    const Result r = invoke({"scaled-bessel", "--grid", "0:3:0.5"});
    CHECK(r.code == kExitOk);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 8);
    CHECK(l[0] == "x,oracle,asymptotic,lower,upper,fallback_flag");
    CHECK(l[1] == "0,1,,1,1,1");
    CHECK(l[4].back() == '1');  // x = 1.5
    CHECK(l[5].back() == '0');  // x = 2
}

TEST_CASE("skellam subcommands") {
    const auto pmf = lines(invoke({"skellam", "pmf", "--l1", "1", "--l2", "1", "--n", "0"}).out);
    REQUIRE(pmf.size() == 2);
    CHECK(pmf[1].find("0.3085083225536709") != std::string::npos);

    const Result conc = invoke({"skellam", "concentration", "--lambda", "25", "--nu", "0"});
    CHECK(conc.code == kExitOk);
    CHECK(lines(conc.out).size() == 2);

    for (const char* sub : {"pmf-bounds", "tail", "hazard"}) {
        CAPTURE(sub);
        CHECK(invoke({"skellam", sub, "--lambda", "5", "--grid", "0:10:1"}).code == kExitOk);
    }
    CHECK(invoke({"skellam", "pmf", "--l1", "-1", "--l2", "1", "--n", "0"}).code == kExitUsage);
    CHECK(invoke({"skellam", "tail", "--lambda", "0", "--n", "0"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"ratio", "--bogus"}).code == kExitUsage);
    CHECK(invoke({"ratio", "--x", "10", "--grid", "0:1:0"}).code == kExitUsage);
    CHECK(invoke({"ratio", "--x", "10", "--grid", "5:1:1"}).code == kExitUsage);
    CHECK(invoke({"ratio", "--nu", "-1", "--x", "1"}).code == kExitUsage);
    CHECK(invoke({"--figure", "7"}).code == kExitUsage);
    CHECK_FALSE(invoke({"ratio", "--bogus"}).err.empty());
    CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("identical flags give identical bytes") {
    const std::vector<std::string> args = {"hsum", "--x", "50", "--grid", "0:120:0.37"};
    const Result a = invoke(args);
    const Result b = invoke(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);

    const std::filesystem::path dir = BESSELBOUNDS_TEST_TMPDIR;
    const auto path = dir / "test_cli_ratio.csv";
    CHECK(invoke({"ratio", "--x", "7", "--grid", "0:30:0.1", "--out", path.string()}).code == kExitOk);
    const std::string first = slurp(path);
    CHECK(invoke({"ratio", "--x", "7", "--grid", "0:30:0.1", "--out", path.string()}).code == kExitOk);
    CHECK(first == slurp(path));
    CHECK(first == invoke({"ratio", "--x", "7", "--grid", "0:30:0.1"}).out);
}

TEST_CASE("verify") {
    const std::filesystem::path dir = BESSELBOUNDS_TEST_TMPDIR;
    const auto report = dir / "test_cli_verify.json";
    const Result ok = invoke({"verify", "--report", report.string()});
    CHECK(ok.code == kExitOk);
    const std::string json = slurp(report);
    CHECK(json.find("\"passed\": true") != std::string::npos);

    CHECK(invoke({"verify", "--perturb", "0.5"}).code == kExitVerifyFailed);
    CHECK(invoke({"verify", "--grid", "5:1:1"}).code == kExitUsage);
    CHECK(invoke({"verify", "--preset", "nope"}).code == kExitUsage);
}

TEST_CASE("run_verification reports violations from the perturb hook") {
    VerifyOptions o;
    o.perturb = 0.9;
    const SweepReport r = run_verification(o);
    CHECK_FALSE(r.passed());
    CHECK(r.max_relative_slack > 0.0);
    CHECK(r.points_checked > 0);
}
