#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tx/constructions.hpp"
#include "tx/textio.hpp"

#ifndef TX_BINARY
#error "TX_BINARY must point at the tx executable"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& input = {}, bool withStderr = true) {
    std::string cmd;
    if (!input.empty()) {
        std::string path = "tx_cli_input.txt";
        std::ofstream(path) << input;
        cmd = std::string(TX_BINARY) + " " + args + " < " + path;
    } else {
        cmd = std::string(TX_BINARY) + " " + args;
    }
    cmd += withStderr ? " 2>&1" : " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string example(const std::string& name) {
    Run r = run("example --name " + name);
    REQUIRE(r.code == 0);
    return r.out;
}

}  // namespace

TEST_CASE("example and sig through stdin") {
    Run r = run("sig -", example("g4"));
    CHECK(r.code == 0);
    CHECK(r.out == "sig=8 rsig=2\n");
    CHECK(run("order --bound 4 -", example("id:3")).out == "Finite(1)\n");
    CHECK(run("order --bound 4 -", example("g4")).out == "Finite(2)\n");
    CHECK(run("sync-level -", example("T:3")).out == "level=2\n");
    CHECK(run("orient -", example("piR:4")).out == "Reversing\n");
}

TEST_CASE("parse round trips the text format") {
    std::string t = example("U:4");
    Run r = run("parse -", t);
    CHECK(r.code == 0);
    CHECK(r.out == t);
}

TEST_CASE("orbit lengths grow for T") {
    Run r = run("orbit --class 1,2 --steps 2 -", example("T:3"));
    CHECK(r.code == 0);
    CHECK(r.out == "[1,2] length=2\n[1,2,2] length=3\n[1,2,2,2] length=4\n");
}

TEST_CASE("membership and partition") {
    CHECK(run("member --r 3 -", example("g4")).out == "O_{4,3}=true\nTO_{4,3}=true\n");
    Run m1 = run("member --r 1 -", example("g4"));
    CHECK(m1.code == 0);
    CHECK(m1.out.find("O_{4,1}=false") != std::string::npos);
    CHECK(run("partition --n 7 --sigs 1,5").out == "{1,2,4,5} {3,6}\n");
}

TEST_CASE("json envelope") {
    Run r = run("--json sig -", example("g4"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "sig");
    CHECK(j["result"]["sig"] == 8);
    CHECK(j["result"]["rsig"] == 2);
    CHECK(j.contains("inputs"));
    CHECK(j.contains("bounds"));
    CHECK(j.contains("elapsed_ms"));
    // Diagnostics go to stderr; stdout stays valid JSON.
    Run e = run("--json parse -", "nonsense\n", false);
    CHECK(e.code == 1);
    auto je = nlohmann::json::parse(e.out);
    CHECK(je["result"].contains("error"));
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("sig").code == 2);
    CHECK(run("order --bound x -", example("g4")).code == 2);
    Run bad = run("parse -", "TRANSDUCER n=2 r=0 states=s initial=-\ns 0 -> s : 0\n");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("line 3") != std::string::npos);
    CHECK(run("member --r 9 -", example("g4")).code == 1);
    CHECK(run("realize --r 1 -", example("g4")).code == 1);
    CHECK(run("verify --suite F-relations --jobs 2").code == 0);
    CHECK(run("verify --suite nope").code != 0);
}

TEST_CASE("realize, invert and product compose to the identity") {
    std::string a = run("realize --r 3 -", example("g4")).out;
    REQUIRE(a.rfind("TRANSDUCER", 0) == 0);
    std::ofstream("tx_cli_a.txt") << a;
    Run inv = run("invert tx_cli_a.txt");
    REQUIRE(inv.code == 0);
    std::ofstream("tx_cli_b.txt") << inv.out;
    Run prod = run("product --minimize tx_cli_a.txt tx_cli_b.txt");
    CHECK(prod.code == 0);
    Run core = run("core -", prod.out);
    CHECK(core.code == 0);
    tx::ParsedMachine c = tx::parse_transducer(core.out);
    CHECK(tx::same_table(c.m, tx::identity(4)));
}
