#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "cli.hpp"
#include "stems/calculators.hpp"

#include "support/subprocess.hpp"

using namespace stems;
using testsupport::calculator_path;
using testsupport::run_command;

TEST_CASE("expression parser: accepted forms") {
    VirtualRep u = cli::parse_rep("-z(1)", Group::SO2);
    CHECK_EQ(u.mult_of(Irreducible::z(1)), -1);

    u = cli::parse_rep("2*sigma(1)-delta", Group::O2);
    CHECK_EQ(u.mult_of(Irreducible::sigma(1)), 2);
    CHECK_EQ(u.mult_of(Irreducible::delta()), -1);

    u = cli::parse_rep(" - z( 1 ) + 3 * z(2) ", Group::Spin2);
    CHECK_EQ(u.mult_of(Irreducible::z(1)), -1);
    CHECK_EQ(u.mult_of(Irreducible::z(2)), 3);

    u = cli::parse_rep("W(5)", Group::SO3);
    CHECK_EQ(u.mult_of(Irreducible::w(5)), 1);

    u = cli::parse_rep("V(2)+2*W(3)-W(5)", Group::SU2);
    CHECK_EQ(u.mult_of(Irreducible::v(2)), 1);
    CHECK_EQ(u.mult_of(Irreducible::w(3)), 2);
    CHECK_EQ(u.mult_of(Irreducible::w(5)), -1);

    u = cli::parse_rep("h(3)+delta-2*sigma(2)", Group::Pin2);
    CHECK_EQ(u.mult_of(Irreducible::h(3)), 1);
    CHECK_EQ(u.mult_of(Irreducible::delta()), 1);
    CHECK_EQ(u.mult_of(Irreducible::sigma(2)), -2);

    CHECK(cli::parse_rep("0", Group::O2).is_zero());
    CHECK(cli::parse_rep("  0  ", Group::SU2).is_zero());

    // summands may repeat and cancel
    CHECK(cli::parse_rep("z(4)-z(4)", Group::SO2).is_zero());
}

TEST_CASE("expression parser: rejected forms carry positions") {
    auto expect_fail = [](const std::string& text, Group g, std::size_t at) {
        try {
            cli::parse_rep(text, g);
            FAIL("expected a parse error for: ", text);
        } catch (const cli::ParseError& e) {
            CHECK_EQ(e.position, at);
            CHECK(std::string(e.what()).find("position") != std::string::npos);
        }
    };

    expect_fail("", Group::SO2, 0);
    expect_fail("z", Group::SO2, 1);           // missing '('
    expect_fail("z(", Group::SO2, 2);          // missing number
    expect_fail("z(2", Group::SO2, 3);         // missing ')'
    expect_fail("q(1)", Group::SO2, 0);        // no such irreducible
    expect_fail("z(2)", Group::SO3, 0);        // wrong catalog
    expect_fail("delta", Group::SU2, 0);       // wrong catalog
    expect_fail("W(4)", Group::SO3, 0);        // even label
    expect_fail("z(1)+", Group::SO2, 5);       // dangling operator
    expect_fail("z(1)z(2)", Group::SO2, 4);    // missing operator
    expect_fail("0*z(1)", Group::SO2, 1);      // a leading 0 must stand alone
    expect_fail("z(1234567)", Group::SO2, 2);  // number too large
    expect_fail("0+z(1)", Group::SO2, 1);
    expect_fail("2z(1)", Group::SO2, 1);       // missing '*'
}

TEST_CASE("degree range parser") {
    CHECK_EQ(cli::parse_degrees("0..8"), std::pair<int, int>(0, 8));
    CHECK_EQ(cli::parse_degrees("-3..3"), std::pair<int, int>(-3, 3));
    CHECK_EQ(cli::parse_degrees("-10..-2"), std::pair<int, int>(-10, -2));
    CHECK_THROWS_AS(cli::parse_degrees("5"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_degrees("a..b"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_degrees("3..x"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_degrees("3..3.5"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_degrees(".."), std::invalid_argument);
}

TEST_CASE("json serialization: schema and values") {
    VirtualRep u = cli::parse_rep("W(5)", Group::SO3);
    nlohmann::json j = cli::answer_to_json(stems::stems(u), 0, 8);

    CHECK_EQ(j.size(), 5u);
    CHECK(j.contains("group"));
    CHECK(j.contains("rep"));
    CHECK(j.contains("range"));
    CHECK(j.contains("blocks"));
    CHECK(j.contains("table"));

    CHECK_EQ(j["group"], "so3");
    CHECK_EQ(j["rep"], "W(5)");
    CHECK_EQ(j["range"], nlohmann::json({1, 5}));

    REQUIRE(j["blocks"].is_array());
    CHECK_EQ(j["blocks"].size(), 7u);
    const auto& cyclic = j["blocks"][0];
    CHECK_EQ(cyclic["block"], "cyclic");
    REQUIRE(cyclic["lines"].is_array());
    CHECK_EQ(cyclic["lines"].size(), 4u);
    for (const auto& ln : cyclic["lines"]) {
        CHECK_EQ(ln.size(), 4u);
        CHECK(ln.contains("start"));
        CHECK(ln.contains("step"));
        CHECK(ln.contains("mult"));
        CHECK(ln.contains("label"));
    }
    // the generic tail line is infinite, serialized as a string
    bool saw_inf = false, saw_int = false;
    for (const auto& ln : cyclic["lines"]) {
        if (ln["mult"].is_string()) {
            CHECK_EQ(ln["mult"], "inf");
            saw_inf = true;
        } else {
            CHECK(ln["mult"].is_number_integer());
            saw_int = true;
        }
    }
    CHECK(saw_inf);
    CHECK(saw_int);
    CHECK(cyclic["corrections"].is_array());

    REQUIRE(j["table"].is_array());
    CHECK_EQ(j["table"].size(), 9u);
    CHECK_EQ(j["table"][0]["degree"], 0);
    CHECK_EQ(j["table"][0]["dim"], 4);
    CHECK_EQ(j["table"][1]["dim"], "inf");
    CHECK_EQ(j["table"][2]["dim"], 0);
}

TEST_CASE("json serialization: corrections carry degree and amount") {
    VirtualRep u = cli::parse_rep("2*delta-sigma(1)", Group::O2);
    nlohmann::json j = cli::answer_to_json(stems::stems(u), -2, 6);
    const auto& corr = j["blocks"][0]["corrections"];
    REQUIRE_EQ(corr.size(), 1u);
    CHECK_EQ(corr[0]["degree"], 1);
    CHECK_EQ(corr[0]["amount"], 1);
}

TEST_CASE("table rendering") {
    VirtualRep u = cli::parse_rep("-z(1)", Group::SO2);
    std::string out = cli::render_table(stems::stems(u), -3, 3, true);
    CHECK(out.find("# group so2  rep -z(1)  range [-2,0]") != std::string::npos);
    CHECK(out.find("degree\tdim\n") != std::string::npos);
    CHECK(out.find("1\tinf\n") != std::string::npos);
    CHECK(out.find("-1\t0\n") != std::string::npos);
    CHECK(out.find("block cyclic\n") != std::string::npos);
    CHECK(out.find("line start=-1 step=2 mult=1 label=C_1") != std::string::npos);
    CHECK(out.find("line start=1 step=2 mult=inf label=generic_tail") != std::string::npos);
    CHECK(out.find("correction degree=-1 amount=1") != std::string::npos);

    // empty blocks are marked
    VirtualRep w5 = cli::parse_rep("W(5)", Group::SO3);
    std::string so3_out = cli::render_table(stems::stems(w5), 0, 2, true);
    CHECK(so3_out.find("block isolated:D4\n  (empty)\n") != std::string::npos);
    CHECK(so3_out.find("block dihedral\n") != std::string::npos);

    // without the flag there is no block breakdown
    std::string plain = cli::render_table(stems::stems(w5), 0, 2, false);
    CHECK_EQ(plain.find("block "), std::string::npos);
}

TEST_CASE("binary: table output and exit codes") {
    std::string bin = calculator_path();

    auto ok = run_command(bin + " --group so2 --rep='-z(1)' --degrees=-3..3");
    CHECK_EQ(ok.exit_code, 0);
    CHECK(ok.output.find("1\tinf") != std::string::npos);

    // usage problems exit with 1
    CHECK_EQ(run_command(bin).exit_code, 1);
    CHECK_EQ(run_command(bin + " --group so9 --rep=0 --degrees 0..1").exit_code, 1);
    CHECK_EQ(run_command(bin + " --group so2 --rep='z(' --degrees 0..1").exit_code, 1);
    CHECK_EQ(run_command(bin + " --group so2 --rep='z(1)' --degrees 1..0").exit_code, 1);
    CHECK_EQ(run_command(bin + " --group so2 --rep='z(1)' --degrees nope").exit_code, 1);
    CHECK_EQ(run_command(bin + " --group o2 --rep=delta --degrees 0..1 --format yaml").exit_code, 1);

    auto parse_err = run_command(bin + " --group so3 --rep='z(2)' --degrees 0..1");
    CHECK_EQ(parse_err.exit_code, 1);
    CHECK(parse_err.output.find("catalog") != std::string::npos);

    CHECK_EQ(run_command(bin + " --help").exit_code, 0);
}

TEST_CASE("binary: json output round-trips the library answer") {
    std::string bin = calculator_path();

    auto res = run_command(bin + " --group su2 --rep='V(2)' --degrees 0..8 --format json");
    REQUIRE_EQ(res.exit_code, 0);
    nlohmann::json got = nlohmann::json::parse(res.output);

    VirtualRep u = cli::parse_rep("V(2)", Group::SU2);
    nlohmann::json want = cli::answer_to_json(stems::stems(u), 0, 8);
    CHECK_EQ(got, want);
}

TEST_CASE("binary: suspension shifts the table") {
    std::string bin = calculator_path();

    auto moved = run_command(bin + " --group o2 --rep='delta-sigma(1)' --degrees 2..10 --shift 2 --format json");
    REQUIRE_EQ(moved.exit_code, 0);
    nlohmann::json got = nlohmann::json::parse(moved.output);

    VirtualRep u = cli::parse_rep("delta-sigma(1)", Group::O2);
    nlohmann::json want = cli::answer_to_json(stems::stems(u).shifted(2), 2, 10);
    CHECK_EQ(got, want);
}

TEST_CASE("binary: oracle check passes on the supported groups") {
    std::string bin = calculator_path();
    const char* cases[] = {
        " --group so2 --rep='-z(1)' --degrees=-5..5 --check-oracle",
        " --group spin2 --rep='z(2)-3*z(5)' --degrees=-10..6 --check-oracle",
        " --group o2 --rep='2*delta-sigma(1)' --degrees=-4..9 --check-oracle",
        " --group pin2 --rep='sigma(2)+h(3)-delta' --degrees=-6..12 --check-oracle",
        " --group so3 --rep='W(5)-W(3)' --degrees=-8..12 --check-oracle",
        " --group su2 --rep='V(4)+W(3)' --degrees=-8..16 --check-oracle",
    };
    for (const char* args : cases) {
        auto res = run_command(bin + args);
        CHECK_EQ(res.exit_code, 0);
        CHECK(res.output.find("# oracle agreement") != std::string::npos);
    }
}

TEST_CASE("binary: a corrupted oracle is detected") {
    std::string bin = calculator_path();
    auto res = run_command(
        bin + " --group o2 --rep='delta-sigma(1)' --degrees 0..8 --check-oracle --inject-oracle-fault");
    CHECK_EQ(res.exit_code, 2);
    CHECK(res.output.find("oracle mismatch") != std::string::npos);
}

TEST_CASE("binary: undersized truncation is a usage error") {
    std::string bin = calculator_path();
    auto res = run_command(bin + " --group so2 --rep='z(70)' --degrees 0..4 --check-oracle");
    CHECK_EQ(res.exit_code, 1);
    CHECK(res.output.find("--smax") != std::string::npos);
    CHECK_EQ(run_command(bin + " --group so2 --rep='z(70)' --degrees 0..4 --check-oracle --smax 80")
                 .exit_code,
             0);
}
