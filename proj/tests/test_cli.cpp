#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

struct CliResult {
    int exit_code = -1;
    std::string out;
};

static CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(WEDDERKIT_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

TEST_CASE("rank subcommand") {
    CliResult r = run_cli("rank metacyclic 7 3 0 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("rank Z(U(ZG)) = 0") != std::string::npos);

    CliResult r31 = run_cli("rank metacyclic 31 5 0 2");
    CHECK(r31.exit_code == 0);
    CHECK(r31.out.find("= 3 (oracle: #real - #rational = 3)") != std::string::npos);
}

TEST_CASE("wedderburn flags the C19xC9 twisting") {
    CliResult r = run_cli("wedderburn metacyclic 19 9 0 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("twist_trivial=false") != std::string::npos);
}

TEST_CASE("idempotents on a twisted component exits 3") {
    CliResult r = run_cli("idempotents metacyclic 19 9 0 7");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("unsupported") != std::string::npos);
}

TEST_CASE("validation errors exit 2") {
    CliResult r = run_cli("rank metacyclic 5 2 0 2");
    CHECK(r.exit_code == 2);
    CliResult r2 = run_cli("rank cyclic notanumber");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("oracle output") {
    CliResult r = run_cli("oracle metacyclic 7 3 0 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"rational_classes\": 3") != std::string::npos);
    CHECK(r.out.find("\"partition_of_unity\": true") != std::string::npos);
}

TEST_CASE("central-basis and byte-stable output") {
    CliResult a = run_cli("central-basis cyclic 5 --json");
    CliResult b = run_cli("central-basis cyclic 5 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("wedderkit-cert/1") != std::string::npos);
}

TEST_CASE("unit-generators certificate verify round-trip and tampering") {
    CliResult gen = run_cli("unit-generators metacyclic 7 3 0 2 --json");
    REQUIRE(gen.exit_code == 0);
    std::string path = "/tmp/wedderkit_cert_test.json";
    {
        std::ofstream out(path);
        out << gen.out;
    }
    CliResult ok = run_cli("verify " + path);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("certificate verified") != std::string::npos);

    // perturb one coefficient
    std::string tampered = gen.out;
    auto pos = tampered.find("\"coeff\": \"");
    REQUIRE(pos != std::string::npos);
    tampered.insert(pos + 10, "7");
    std::string bad_path = "/tmp/wedderkit_cert_bad.json";
    {
        std::ofstream out(bad_path);
        out << tampered;
    }
    CliResult bad = run_cli("verify " + bad_path);
    CHECK(bad.exit_code == 4);
    CHECK(bad.out.find("REJECTED") != std::string::npos);
}

TEST_CASE("exceptional D6 needs --bicyclic") {
    CliResult no = run_cli("unit-generators metacyclic 3 2 0 2");
    CHECK(no.exit_code == 3);
    CliResult yes = run_cli("unit-generators metacyclic 3 2 0 2 --bicyclic");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("3 bicyclic") != std::string::npos);
}

TEST_CASE("matrix-units subcommand") {
    CliResult r = run_cli("matrix-units metacyclic 7 3 0 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("9 matrix units") != std::string::npos);
}

TEST_CASE("precision environment override") {
    CliResult r = run_cli("central-basis cyclic 5 --precision 64");
    CHECK(r.exit_code == 0);
    // WEDDERKIT_PRECISION takes precedence over the flag
    std::string cmd = "WEDDERKIT_PRECISION=40 " + std::string(WEDDERKIT_CLI_PATH) +
                      " central-basis cyclic 5 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::string out;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2); // 40 bits is below the contract minimum
}
