#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "linord/lclass.hpp"
#include "linord/parse.hpp"
#include "linord/relation.hpp"
#include "linord/report.hpp"

using namespace linord;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(LINORD_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli: relation verdicts map to exit codes") {
    const Run r = run("rel --class le:n:2 \"z*3\" \"(z+1)*3\"");
    CHECK(r.code == 2);
    CHECK(r.out.rfind("Fails", 0) == 0);
    CHECK(run("rel --class le:n:2 \"z*3\" \"z+1+z*2\"").code == 0);
    CHECK(run("rel --embed w z").code == 0);
    CHECK(run("rel --convex \"w+1\" w").code == 2);
    CHECK(run("rel --bi --class fin z z").code == 0);
    CHECK(run("rel \"z*w\" \"w*w\"").code == 3);
}

TEST_CASE("cli: ccs witness json") {
    const Run r = run("ccs le:n:3 --witness");
    CHECK(r.code == 2);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "Fails");
    CHECK(j["indexOrder"] == "2");
    CHECK(j["family"]["inner"] == "3");
    CHECK(normalize(parse_term(j["sum"].get<std::string>())) == Term::fin(4));
    CHECK(verify_ccs_witness(ClassId::le_n(3), witness_from_json(j)).is_holds());
}

TEST_CASE("cli: emitted witnesses re-validate") {
    for (const char* cls : {"le:n:2", "le:n:5", "lt:ord:w*2", "lt:ord:w^2+w", "custom:zeta-omega"}) {
        const auto j = nlohmann::json::parse(run(std::string("ccs ") + cls + " --witness").out);
        CHECK(verify_ccs_witness(parse_class(cls), witness_from_json(j)).is_holds());
    }
    const auto j = nlohmann::json::parse(run("rel --json --class le:n:2 \"z*3\" \"z+1+z*2\"").out);
    CHECK(j["verdict"] == "Holds");
    CHECK(j.contains("pieces"));
    CHECK(j["embedding"].is_null());
    CHECK(verify_relation_witness(ClassId::le_n(2), parse_term("z*3"), parse_term("z+1+z*2"), witness_from_json(j))
              .is_holds());
    const auto c = nlohmann::json::parse(run("--json coloured --class fin a,b a,c,b").out);
    CHECK(c["embedding"] == nlohmann::json::array({0, 2}));
}

TEST_CASE("cli: other subcommands") {
    const Run r = run("rank \"zpow(2)\"");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    CHECK(run("iso \"w*+w\" z").code == 0);
    CHECK(run("member scat q").code == 2);
    CHECK(run("ccs one").code == 0);
    CHECK(run("ccs-search le:n:2 --budget 100").code == 2);
    CHECK(run("e1 \"5;1\" \"7;1\"").code == 0);
    CHECK(run("construct cong w q").out == "(1+z*w+1)*q\n");
    CHECK(run("gen ishuffle 0 1").out == "ishuffle(0,1)\n");
    CHECK(run("normalize \"3+w\"").out == "w\n");
}

TEST_CASE("cli: usage and parse errors exit 1") {
    const Run r = run("rel \"z++\" 1");
    CHECK(r.code == 1);
    CHECK(r.out.find("column 3") != std::string::npos);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("rel --class nope w w").code == 1);
}

TEST_CASE("cli: transitivity probe over a corpus file") {
    const std::string path = "cli_corpus.txt";
    std::ofstream(path) << "z*3\nz+1+z*2\n(z+1)*3\n";
    const Run r = run("probe-transitivity --class le:n:2 --corpus " + path);
    CHECK(r.code == 2);
    CHECK(r.out.find("1 violating triple") != std::string::npos);
    CHECK(run("probe-transitivity --class fin --corpus " + path).code == 0);
}
