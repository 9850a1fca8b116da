#include "homwb/dsl/lexer.hpp"
#include "homwb/dsl/report.hpp"
#include "homwb/dsl/spec.hpp"
#include "homwb/dsl/workbench.hpp"
#include "homwb/error.hpp"
#include "homwb/random.hpp"

#include <doctest.h>

#include <filesystem>

using namespace homwb;
using namespace homwb::dsl;

namespace {

int parse_error_column(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.column();
    }
    return -1;
}

int parse_error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

const char* kRich = R"(# a little of everything
complex D = {012}
complex C = skeleton D 1
complex V = {0}
complex S = {(a b), (b c), (a c)}
pair (D, C)
map r : (C, empty) -> (C, empty) = {0->1, 1->2, 2->0}
compose rr = r . r
triple T = (D, C, V)
prism P = (D, C)
complex U = {01}
complex W = {12, 02}
square Q = (C; U, W)
filtration F on D = [V, C, D]
window 0..2
coeff Z/2
flavor core,homotopy,cd
validate
)";

} // namespace

TEST_CASE("small examples") {
    const WorkbenchSpec s = parse("complex S1 = {01,12,02}\nfiltration F on S1 = skeletal\ncellular S1 skeletal Z\n");
    REQUIRE(s.statements.size() == 3);
    const auto& c = std::get<ComplexStmt>(s.statements[0]);
    CHECK(c.name == "S1");
    CHECK(SimplicialComplex::from_simplices(c.simplices).size() == 6);
    CHECK(std::get<FiltrationStmt>(s.statements[1]).skeletal);
    CHECK(s.command().kind == CommandStmt::Kind::Cellular);
    CHECK(s.command().coeff == 0);
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_WITH_AS(parse("complex B = {0 1}\nvalidate\n"), "line 1, column 16: expected '}', found '1'", ParseError);
    CHECK(parse_error_line("complex A = {0}\npair (A, Q)\nvalidate\n") == 2);
    CHECK(parse_error_column("complex A = {0}\npair (A, Q)\nvalidate\n") == 10);
    CHECK(parse_error_line("complex A = {01}\ncomplex B = {0}\nmap f : (A, empty) -> (B, empty) = {1->1}\nvalidate\n") == 3);
    CHECK(parse_error_line("complex D = {012}\nfiltration F on D = [D]\nvalidate\n") == 2);
    CHECK(parse_error_line("complex A = {0}\n") == 2);
    CHECK(parse_error_line("complex A = {0}\nvalidate\nvalidate\n") == 3);
    CHECK(parse_error_line("complex empty = {0}\nvalidate\n") == 1);
    CHECK(parse_error_line("complex A = {0}\ncoeff Z/1\nvalidate\n") == 2);
    CHECK(parse_error_line("complex A = {0} ~\nvalidate\n") == 1);
    CHECK(parse_error_line("complex A = {00}\nvalidate\n") == 1);
}

TEST_CASE("lexer details") {
    const auto toks = lex_line("end-algebra on (X, Y)", 1);
    CHECK(toks[0].text == "end-algebra");
    CHECK(lex_line("a -> b", 1)[1].text == "->");
    CHECK(lex_line("0..2", 1)[1].text == "..");
    CHECK(strip_comment("validate # trailing") == "validate ");
    CHECK_THROWS_AS(lex_line("a $ b", 4), ParseError);
}

TEST_CASE("coefficient and window syntax") {
    CHECK(parse_coefficient("Z") == 0);
    CHECK(parse_coefficient("Z/6") == 6);
    CHECK(parse_coefficient("Zmod4") == 4);
    CHECK(parse_coefficient("Zmod<3>") == 3);
    CHECK_THROWS_AS(parse_coefficient("Q"), InputError);
    CHECK_THROWS_AS(parse_coefficient("Z/1"), InputError);
    CHECK(coefficient_text(0) == "Z");
    CHECK(coefficient_text(6) == "Z/6");
    CHECK(parse_window("0..3") == DegreeWindow{0, 3});
    CHECK_THROWS_AS(parse_window("3..0"), InputError);
}

TEST_CASE("printing is canonical and round trips") {
    const WorkbenchSpec s = parse(kRich);
    const std::string printed = print(s);
    CHECK(parse(printed) == s);
    CHECK(print(parse(printed)) == printed);
}

TEST_CASE("property: random specs round trip and run deterministically") {
    random::Rng rng(91);
    const CommandStmt::Kind kinds[] = {CommandStmt::Kind::Validate, CommandStmt::Kind::Cellular,
                                       CommandStmt::Kind::Spectral, CommandStmt::Kind::EndAlgebra};
    for (int trial = 0; trial < 24; ++trial) {
        const WorkbenchSpec s = random::spec(rng, kinds[trial % 4]);
        const std::string text = print(s);
        const WorkbenchSpec back = parse(text);
        CHECK_MESSAGE(back == s, text);
        CHECK(print(back) == text);
        const Report a = run(back, text);
        const Report b = run(parse(text), text);
        CHECK(a.to_json() == b.to_json());
        CHECK(a.exit_code != 2);
        CHECK(a.input_digest == digest(text));
    }
}

TEST_CASE("reports") {
    CHECK(Report{}.to_json() == "{\n  \"results\": []\n}\n");
    CHECK(digest("") == "cbf29ce484222325");

    const std::string text = "complex P = {0}\npair (P, empty)\ncoeff Z/4\n"
                             "sequent s: [x:h0(P,empty)] top |- exists y:h0(P,empty). y + y = x\nsequent\n";
    const Report r = run(parse(text), text);
    CHECK(r.exit_code == 1);
    const Json j = Json::parse(r.to_json());
    CHECK(j["status"] == "fail");
    CHECK(j["counterexamples"][0]["assignment"][0]["value"] == "1");
    CHECK(j["counterexamples"][0]["assignment"][0]["sort"] == "h0(P,empty)");

    const std::string point = "complex P = {0}\npair (P, empty)\ncoeff Z/2\nwindow 0..0\nvalidate\n";
    const Report v = run(parse(point), point);
    CHECK(v.exit_code == 0);
    const Json jv = Json::parse(v.to_json());
    CHECK(jv["summary"]["instances"] == 4);
    CHECK(jv["summary"]["semantic_failures"] == 0);

    const std::string cell = "complex S1 = {01,12,02}\ncellular S1 skeletal Z\n";
    const Json jc = Json::parse(run(parse(cell), cell).to_json());
    REQUIRE(jc["results"].size() == 2);
    CHECK(jc["results"][0]["rank"] == 1);
    CHECK(jc["results"][1]["rank"] == 1);

    RunOptions o;
    o.modulus = 3;
    const Json jo = Json::parse(run(parse(cell), cell, o).to_json());
    CHECK(jo["coefficients"] == "Z/3");

    CHECK_THROWS_AS(emit_report(r, "/nonexistent/dir/out.json"), InputError);
    const auto path = std::filesystem::temp_directory_path() / "homwb_report_test.json";
    emit_report(r, path.string());
    CHECK(std::filesystem::file_size(path) == r.to_json().size());
    std::filesystem::remove(path);
}

TEST_CASE("precondition failures exit with 2") {
    const std::string text = "complex P = {0}\npair (P, empty)\nsequent s: [x:h0(P,empty)] top |- x = x\nsequent\n";
    const Report r = run(parse(text), text);
    CHECK(r.exit_code == 2);
    CHECK_FALSE(r.notes.empty());
}
