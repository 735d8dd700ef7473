#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcft/block_diag.hpp"
#include "lcft/bpz_closed_form.hpp"
#include "lcft/cli_io.hpp"
#include "lcft/errors.hpp"
#include "lcft/verify.hpp"
#include "test_support.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace lcft;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("JSON round trip") {
    for (int p = 2; p <= 5; ++p) {
        json meta = {{"tolerance", "1e-05"}, {"note", "x"}};
        TableDocument d = make_document(prefusion_matrices(p), meta);
        std::string text = to_json(d);
        TableDocument back = parse_document(text);
        CHECK(back == d);
        CHECK(to_json(back) == text);
    }
}

TEST_CASE("fixtures are in canonical layout") {
    for (const char* name : {"prefusion_p2.json", "fusion_p2.json", "prefusion_p3.json", "fusion_p3.json"}) {
        std::string raw = slurp(test::fixture(name));
        CHECK(to_json(parse_document(raw)) == raw);
    }
}

TEST_CASE("canonical output is deterministic and carries no floats") {
    std::string a = to_json(make_document(closed_table(3, Stage::post)));
    std::string b = to_json(make_document(closed_table(3, Stage::post)));
    CHECK(a == b);
    CHECK(a.find('.') == std::string::npos);
    CHECK(a.find("\"weight_num\": 5") != std::string::npos);
    CHECK(a.find("\"weight_den\": 12") != std::string::npos);
}

TEST_CASE("malformed documents") {
    std::string good = to_json(make_document(prefusion_matrices(2)));
    CHECK_THROWS_AS(parse_document("{"), malformed_table);
    CHECK_THROWS_AS(parse_document("[]"), malformed_table);
    std::string bad_sigma = good;
    bad_sigma.replace(bad_sigma.find("\"sigma\": 2"), 10, "\"sigma\": 7");
    CHECK_THROWS_AS(parse_document(bad_sigma), malformed_table);
    std::string bad_method = good;
    bad_method.replace(bad_method.find("blockdiag"), 9, "magic");
    CHECK_THROWS_AS(parse_document(bad_method), malformed_table);
    json j = json::parse(good);
    j["matrices"].erase(0);
    CHECK_THROWS_AS(parse_document(j.dump()), malformed_table);
    j = json::parse(good);
    j["matrices"][0][0][0] = 0.5;
    CHECK_THROWS_AS(parse_document(j.dump()), malformed_table);
}

TEST_CASE("text rendering") {
    std::string t = render_text(prefusion_matrices(2));
    std::istringstream in(t);
    std::string title, header, rule, row;
    std::getline(in, title);
    std::getline(in, header);
    std::getline(in, rule);
    CHECK(title == "p=2 method=blockdiag stage=pre");
    CHECK(header.substr(0, 1) == "x");
    CHECK(header.find("[-1/8]") != std::string::npos);
    CHECK(header.find("[~0]") != std::string::npos);
    CHECK(rule.find_first_not_of("-+") == std::string::npos);
    for (int i = 0; i < 4; ++i) std::getline(in, row);
    CHECK(row.find("4[0]+4[1]-[~0]") != std::string::npos);
}

TEST_CASE("LaTeX rendering") {
    std::string t = render_latex(prefusion_matrices(3));
    CHECK(t.rfind("\\begin{tabular}{c|cccccccc}", 0) == 0);
    CHECK(t.find("-\\left[\\tilde{0}\\right]") != std::string::npos);
    CHECK(t.find("\\end{tabular}") != std::string::npos);
}

TEST_CASE("tolerance from the environment") {
    ::unsetenv("LCFT_FUSION_TOL");
    CHECK(tolerance_from_env(1e-5) == 1e-5);
    ::setenv("LCFT_FUSION_TOL", "1e-7", 1);
    CHECK(tolerance_from_env(1e-5) == 1e-7);
    ::setenv("LCFT_FUSION_TOL", "abc", 1);
    CHECK_THROWS_AS(tolerance_from_env(1e-5), invalid_parameter);
    ::setenv("LCFT_FUSION_TOL", "-1", 1);
    CHECK_THROWS_AS(tolerance_from_env(1e-5), invalid_parameter);
    ::unsetenv("LCFT_FUSION_TOL");
}

TEST_CASE("verify suite") {
    VerifyOptions opt;
    opt.fixture_dir = LCFT_FIXTURE_DIR;
    std::vector<CheckResult> r = run_verify(2, 4, opt);
    for (const CheckResult& c : r) {
        CAPTURE(c.p);
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    for (std::size_t i = 1; i < r.size(); ++i)
        CHECK((r[i - 1].p < r[i].p || (r[i - 1].p == r[i].p && r[i - 1].name < r[i].name)));
    int golden = 0;
    for (const CheckResult& c : r) golden += c.name == "golden";
    CHECK(golden == 2);
    CHECK_THROWS_AS(run_verify(1, 3, opt), invalid_parameter);
    opt.fixture_dir = "/nonexistent";
    auto bad = run_verify(2, 2, opt);
    bool golden_failed = false;
    for (const CheckResult& c : bad)
        if (c.name == "golden") golden_failed = !c.pass;
    CHECK(golden_failed);
}
