#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "berez/oracle.hpp"
#include "berez/serialize.hpp"

using namespace berez;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/berez_cli_test.out";
    const std::string err_path = "/tmp/berez_cli_test.err";
    const std::string cmd =
        std::string(BEREZ_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

std::string write_doc(const std::string& name, const Json& doc) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
    return path;
}

Json diag23_doc() {
    return supermatrix_to_json(diag_supermatrix(EigenData{{Rational(2)}, {Rational(3)}}, 2));
}

} // namespace

TEST_CASE("invariants on a generic document: exit 0 and the expected report") {
    const auto path = write_doc("diag23.json", diag23_doc());
    const auto r = run_cli("invariants --input " + path);
    REQUIRE(r.exit_code == 0);
    const Json report = Json::parse(r.out);
    CHECK(report["p"] == 1);
    CHECK(report["q"] == 1);
    CHECK(!report.contains("skipped"));

    // c = [1, -1, 3, -9] in term-list form.
    const Json& c = report["c"];
    REQUIRE(c.size() == 4);
    CHECK(c[0][0]["coeff"] == "1/1");
    CHECK(c[1][0]["coeff"] == "-1/1");
    CHECK(c[2][0]["coeff"] == "3/1");
    CHECK(c[3][0]["coeff"] == "-9/1");

    // Q = 1 + 3z, P = 1 + 2z.
    CHECK(report["Q"][1][0]["coeff"] == "3/1");
    CHECK(report["P"][1][0]["coeff"] == "2/1");

    CHECK(report["ber_classical"] == report["ber_traces"]);
    CHECK(report["ber_classical"][0]["coeff"] == "2/3");

    // gamma map includes both tails.
    CHECK(report["gamma"]["-1"][0]["coeff"] == "-1/9");
    CHECK(report["gamma"]["2"][0]["coeff"] == "3/1");
}

TEST_CASE("reports are byte-deterministic") {
    const auto path = write_doc("diag23b.json", diag23_doc());
    const auto first = run_cli("invariants --input " + path);
    const auto second = run_cli("invariants --input " + path);
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
}

TEST_CASE("report scalars round trip bit-exactly") {
    const auto path = write_doc("diag23c.json", diag23_doc());
    const auto r = run_cli("invariants --input " + path);
    REQUIRE(r.exit_code == 0);
    const Json report = Json::parse(r.out);
    const int n = report["generators"].get<int>();
    for (const auto& key : {"s", "c", "P", "Q"}) {
        for (const auto& scalar : report[key]) {
            const auto parsed = element_from_json(scalar, n);
            CHECK(element_to_json(parsed).dump() == scalar.dump());
        }
    }
    for (const auto& [k, scalar] : report["gamma"].items()) {
        const auto parsed = element_from_json(scalar, n);
        CHECK(element_to_json(parsed).dump() == scalar.dump());
    }
}

TEST_CASE("degenerate document: exit 3 with the failed precondition named") {
    const auto identity21 = Supermatrix::identity(Dims{2, 1}, GrassmannElement::zero(2));
    const auto path = write_doc("identity21.json", supermatrix_to_json(identity21));
    const auto r = run_cli("invariants --input " + path);
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("denominator Hankel body singular") != std::string::npos);
    // The partial report still carries what was computable.
    const Json report = Json::parse(r.out);
    CHECK(report.contains("skipped"));
    CHECK(report["skipped"].contains("P"));
    CHECK(report.contains("c"));
    CHECK(report.contains("ber_classical"));
}

TEST_CASE("malformed document: exit 2 with the reason") {
    Json doc = diag23_doc();
    doc["entries"][0][1] = Json::parse(R"([{"coeff":"1/1","monomial":[2,2]}])");
    const auto path = write_doc("malformed.json", doc);
    const auto r = run_cli("invariants --input " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("non-increasing monomial") != std::string::npos);

    const auto missing = run_cli("invariants --input /tmp/does_not_exist.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("ber subcommand agrees across methods") {
    const auto path = write_doc("diag23d.json", diag23_doc());
    const auto both = run_cli("ber --input " + path + " --method both");
    REQUIRE(both.exit_code == 0);
    const Json report = Json::parse(both.out);
    CHECK(report["agree"] == true);
    CHECK(report["ber_classical"][0]["coeff"] == "2/3");

    const auto classical_only = run_cli("ber --input " + path + " --method classical");
    REQUIRE(classical_only.exit_code == 0);
    const Json c_report = Json::parse(classical_only.out);
    CHECK(c_report.contains("ber_classical"));
    CHECK(!c_report.contains("ber_traces"));
    CHECK(!c_report.contains("agree"));
}

TEST_CASE("minpoly subcommand reports an exactly zero residual") {
    const auto path = write_doc("diag23e.json", diag23_doc());
    const auto r = run_cli("minpoly --input " + path);
    REQUIRE(r.exit_code == 0);
    const Json report = Json::parse(r.out);
    CHECK(report["residual_is_zero"] == true);
    for (const auto& row : report["annihilation_residual"])
        for (const auto& entry : row) CHECK(entry == Json::array());
    CHECK(report["min_poly"].size() == 3); // degree p + q = 2
}

TEST_CASE("verify battery passes and is stable") {
    const auto r = run_cli("verify --seed 42");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    const auto again = run_cli("verify --seed 42");
    CHECK(again.out == r.out);
}

TEST_CASE("verify on the identity matrix skips the non-generic checks") {
    const auto identity21 = Supermatrix::identity(Dims{2, 1}, GrassmannElement::zero(2));
    const auto path = write_doc("identity21v.json", supermatrix_to_json(identity21));
    const auto r = run_cli("verify --input " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("SKIP") != std::string::npos);
    CHECK(r.out.find("denominator Hankel body singular") != std::string::npos);
    CHECK(r.out.find("PASS\tinput\tberezinian_multiplicative") != std::string::npos);
    CHECK(r.out.find("PASS\tinput\tsupertrace_cyclicity") != std::string::npos);
}

TEST_CASE("selftest reports the injected fault and exits 1") {
    const auto r = run_cli("selftest --seed 42");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL\tselftest-corrupted-c2\thankel_vanishing") != std::string::npos);
}

TEST_CASE("unknown and incomplete invocations fail cleanly") {
    CHECK(run_cli("invariants").exit_code != 0); // --input required
    CHECK(run_cli("frobnicate").exit_code != 0);
}
