#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prozeta/cli.hpp"
#include "prozeta/zeta.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace prozeta;

namespace {
struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("zeta subcommand prints the closed form") {
    Run r = cli({"zeta", "--m", "1", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1 + q^4 t^2) / ((1-q^5 t^2)(1-q^6 t^3)(1-q^8 t^4))\n");

    Run latex = cli({"zeta", "--m", "2", "--n", "2", "--format", "latex"});
    CHECK(latex.code == 0);
    CHECK(latex.out.find("\\frac{1+p^{18-7s}}") != std::string::npos);

    Run prime = cli({"dstar", "--m", "1", "--prime", "2"});
    CHECK(prime.code == 0);
    CHECK(prime.out.find("1 + 16 t^2") != std::string::npos);
}

TEST_CASE("json output round-trips through the serialisation") {
    Run r = cli({"zeta", "--m", "2", "--n", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("query").at("command") == "zeta");
    RationalFnQT f = RationalFnQT::from_json(j.at("result").at("zeta").dump());
    CHECK(f == local_zeta(2, 2));
}

TEST_CASE("identical invocations produce identical bytes") {
    std::vector<std::string> args{"scan", "--m-max", "6", "--n-max", "4", "--format", "csv"};
    Run a = cli(args);
    Run b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.substr(0, 44) == "m,n,alpha_num,alpha_den,alpha_decimal,regime");
}

TEST_CASE("verify subcommands report and exit cleanly") {
    Run fe = cli({"verify", "fn-eq", "--m", "1", "--n", "3"});
    CHECK(fe.code == 0);
    CHECK(fe.out.find("sign=+1") != std::string::npos);

    Run ds = cli({"verify", "dstar", "--m", "2"});
    CHECK(ds.code == 0);

    Run gr = cli({"verify", "grenham", "--n", "3"});
    CHECK(gr.code == 0);

    Run oc = cli({"verify", "oracle", "--m", "1", "--n", "2", "--depth", "6"});
    CHECK(oc.code == 0);

    Run cs = cli({"verify", "c-set", "--m-max", "10", "--n-max", "10"});
    CHECK(cs.code == 0);

    Run all = cli({"verify", "all", "--m-max", "2", "--n-max", "3", "--depth", "6"});
    CHECK(all.code == 0);
    CHECK(all.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("oracle subcommand prints coefficients") {
    Run r = cli({"oracle", "--m", "1", "--n", "2", "--depth", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("a[p^2] = q^4 + q^5") != std::string::npos);
    CHECK(r.out.find("cone sum matches closed form") != std::string::npos);
}

TEST_CASE("params and abscissa and fm subcommands") {
    Run p = cli({"params", "--m", "2", "--n", "2"});
    CHECK(p.code == 0);
    CHECK(p.out.find("A_1 = 19  B_1 = 7") != std::string::npos);
    CHECK(p.out.find("fe_a = 25  fe_b = -9") != std::string::npos);

    Run a = cli({"abscissa", "--m", "2", "--n", "3", "--format", "json"});
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("result").at("alpha").at("num") == 14);
    CHECK(j.at("result").at("alpha").at("den") == 3);
    CHECK(j.at("result").at("regime") == "C0");

    Run f = cli({"fm", "--m", "2"});
    CHECK(f.code == 0);
    CHECK(f.out == "f_2 = -3 t^4 - 2 t^3 + 21 t^2 + 2 t + 6\n");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(cli({"zeta", "--bogus"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"verify", "unknown-claim"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"zeta", "--m", "0", "--n", "2"}).code == 2);  // precondition violation
}

TEST_CASE("--out writes the payload to a file") {
    const std::string path = "cli_out_test.txt";
    Run r = cli({"zeta", "--m", "1", "--n", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "(1 + q^4 t^2) / ((1-q^5 t^2)(1-q^6 t^3)(1-q^8 t^4))\n");
    std::remove(path.c_str());
}
