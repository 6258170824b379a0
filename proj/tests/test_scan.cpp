#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zlab/scan.hpp"

using namespace zlab;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ZLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string data_section(const std::string& csv) {
    // strip '#' meta lines, keep header + rows
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') out += line + "\n";
    return out;
}

} // namespace

TEST_CASE("double formatting round-trips") {
    for (double v : {1.0, -0.1, pi, 1e-300, 123456789.123456789, 0.962964972193617926}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("scan table structure") {
    ScanTable t;
    t.columns = {"a", "b"};
    t.meta["k"] = "v";
    t.add_row({1.0, std::string("x")});
    CHECK_THROWS_AS(t.add_row({1.0}), domain_error);
    std::ostringstream os;
    t.write_csv(os);
    CHECK(os.str() == "# k = v\na,b\n1,x\n");
}

TEST_CASE("cli: factorize") {
    auto r = run_cli("factorize 12 --mode distinct --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count\": 3") != std::string::npos);
    auto r2 = run_cli("factorize 97 --mode with_repeats --format json");
    CHECK(r2.out.find("\"count\": 1") != std::string::npos);
}

TEST_CASE("cli: zeros in [0,30]") {
    auto r = run_cli("zeros --range 0:30");
    CHECK(r.code == 0);
    const std::string data = data_section(r.out);
    CHECK(std::count(data.begin(), data.end(), '\n') == 4);  // header + 3 zeros
    CHECK(data.find("14.134725") != std::string::npos);
}

TEST_CASE("cli: transition scan has positive minimum") {
    auto r = run_cli("transition --case 4 --sigma 0.75 --t 0:50:0.05");
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') >= 1001);
    // meta carries the grid minimum
    const auto pos = r.out.find("# min_p = ");
    REQUIRE(pos != std::string::npos);
    const double mn = std::stod(r.out.substr(pos + 10));
    CHECK(mn > 0.0);
}

TEST_CASE("cli: determinism across thread counts") {
    const auto a = run_cli("transition --case 4 --sigma 0.75 --t 0:10:0.25 --threads 1");
    const auto b = run_cli("transition --case 4 --sigma 0.75 --t 0:10:0.25 --threads 4");
    CHECK(a.out == b.out);
}

TEST_CASE("cli: csv and json carry identical value strings") {
    const auto c = run_cli("eval --kind zeta --s 0.5+14.134725i --format csv");
    const auto j = run_cli("eval --kind zeta --s 0.5+14.134725i --format json");
    // extract the data row from csv
    const std::string data = data_section(c.out);
    const auto nl = data.find('\n');
    std::string row = data.substr(nl + 1);
    row.pop_back();  // trailing newline
    const auto comma = row.find(',');
    const std::string re = row.substr(0, comma), im = row.substr(comma + 1);
    CHECK(j.out.find(re) != std::string::npos);
    CHECK(j.out.find(im) != std::string::npos);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("eval --kind zeta --s 1").code == 3);       // pole
    CHECK(run_cli("nonsense-subcommand").code == 2);          // usage
    CHECK(run_cli("eval --kind zeta --s 2").code == 0);
}

TEST_CASE("cli: green and theta-zeta single rows") {
    auto r = run_cli("green --case 4 --x 3.14159265358979 --t 0 --sigma 2 --format csv");
    CHECK(r.code == 0);
    CHECK(data_section(r.out).find("0.822467") != std::string::npos);
    auto tz = run_cli("theta-zeta --s 2");
    CHECK(tz.code == 0);
    CHECK(data_section(tz.out).find("-0.7853981633974") != std::string::npos);
}

TEST_CASE("cli: partition product route and capital-G normalization") {
    auto r = run_cli("partition --stat fermi --beta 2:2:1 --method direct_product");
    CHECK(r.code == 0);
    CHECK(data_section(r.out).find("0.60869921804") != std::string::npos);
    auto g = run_cli("green --case 1 --x 2 --t 1 --sigma 0 --over-2pi");
    CHECK(g.code == 0);
    CHECK(data_section(g.out).find("0.15915494309") != std::string::npos);  // 1/(2 pi)
}

TEST_CASE("cli: qseries exact integers") {
    auto r = run_cli("qseries --model ramanujan_tau --order 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("-1472") != std::string::npos);
    CHECK(r.out.find("4830") != std::string::npos);
}
