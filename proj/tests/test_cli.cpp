#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "folkit/errors.hpp"
#include "folkit/parser.hpp"
#include "folkit/verify.hpp"

using namespace folkit;

// These tests run from the build directory (ctest default): the binary is
// ./folkit and the corpus sits at ../cases.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(full.c_str(), "r");
    REQUIRE(p != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), p)) out += buf.data();
    int status = pclose(p);
    return RunResult{WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("invariants command emits the versioned schema and exact values") {
    auto r = run("./folkit invariants ../cases/cusp.fol");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("folkit-report/1") != std::string::npos);
    CHECK(r.out.find("\"nu\": 1") != std::string::npos);
    CHECK(r.out.find("\"dicritical\": false") != std::string::npos);
    CHECK(r.out.find("\"milnor\": 2") != std::string::npos);

    auto rad = run("./folkit invariants ../cases/radial.fol");
    CHECK(rad.exit_code == 0);
    CHECK(rad.out.find("\"dicritical\": true") != std::string::npos);
}

TEST_CASE("byte-stable output") {
    auto a = run("./folkit resolve ../cases/cusp.fol");
    auto b = run("./folkit resolve ../cases/cusp.fol");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"complete\": true") != std::string::npos);
}

TEST_CASE("dot output for a reduced field is a single-node graph") {
    auto r = run("./folkit resolve --format dot ../cases/linear_saddle_minus1.fol");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("digraph") != std::string::npos);
    CHECK(r.out.find("->") == std::string::npos); // no edges
}

TEST_CASE("separatrices and tower commands") {
    auto s = run("./folkit separatrices --format table ../cases/cusp.fol");
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("1 separatrices") != std::string::npos);

    auto t = run("./folkit tower --format table ../cases/cusp.fol");
    CHECK(t.exit_code == 0);
    CHECK(t.out.find("delta=3") != std::string::npos);

    // dicritical enumeration is a computational refusal: exit 3
    auto d = run("./folkit separatrices ../cases/radial.fol");
    CHECK(d.exit_code == 3);
}

TEST_CASE("exit code 2 on malformed input") {
    auto r = run("echo 'name = broken' > /tmp/folkit_broken.fol && "
                 "./folkit invariants /tmp/folkit_broken.fol");
    CHECK(r.exit_code == 2);
    auto m = run("./folkit invariants /tmp/does_not_exist.fol");
    CHECK(m.exit_code == 2);
}

TEST_CASE("verify on one corpus case exits 0") {
    auto r = run("./folkit verify --format table ../cases/linear_node_q.fol");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("identities hold") != std::string::npos);
}

TEST_CASE("case files validate on load") {
    CHECK_THROWS_AS(parse_case_text("vars = x, y\nfield = x\n", "inline"),
                    ValidationError);
    SourceCase sc = parse_case_text(
        "name = t\nvars = x, y\nfield = x, 2*y\ncurve = y\n", "inline");
    auto recs = verify_case(sc, VerifyConfig{});
    CHECK(!recs.empty());
    for (const auto& r : recs) CHECK(r.pass);
}
