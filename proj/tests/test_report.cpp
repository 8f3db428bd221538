#include "mslope/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

using namespace mslope;

namespace {

MontesinosExpression expr(std::initializer_list<Fraction> fs) {
    return MontesinosExpression{std::vector<Fraction>(fs)};
}

// split a csv line, honouring the quoting of expression fields
std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("expression parsing") {
    CHECK(parse_expression("1/2,1/3,-2/3") ==
          expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)}));
    CHECK(parse_expression(" M( 1/2 , 1/3 , -2/3 ) ") ==
          expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)}));
    CHECK(parse_expression("1/-2,1/3,1/3") ==
          expr({Fraction(-1, 2), Fraction(1, 3), Fraction(1, 3)}));
    // integers and infinities parse; validation rejects them later
    CHECK(parse_expression("2,1/3").tangles[0] == Fraction(2));
    CHECK(parse_expression("1/0,1/3").tangles[0].is_infinity());
    CHECK_THROWS_AS(validate(parse_expression("2,1/3,1/5")), std::invalid_argument);
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset_of = [](const std::string& text) -> size_t {
        try {
            parse_expression(text);
        } catch (const ParseError& e) {
            return e.offset;
        }
        return static_cast<size_t>(-1);
    };
    CHECK(offset_of("1/2,1/3,xyz") == 8);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("1/2,,1/3") == 4);
    CHECK(offset_of("M(1/2,1/3,1/7") == 13);
    CHECK(offset_of("1/2,1/3,1/5 tail") == 12);
    CHECK_THROWS_WITH_AS(parse_expression("1/2,1/3,xyz"),
                         doctest::Contains("expected a number at offset 8"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_expression("M(1/2,1/3,1/7"),
                         doctest::Contains("expected ')'"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_expression("1/2,1/3,1/5 tail"),
                         doctest::Contains("unexpected character 't'"), std::runtime_error);
}

TEST_CASE("json report for the worked example") {
    auto r = analyze(parse_expression("1/2,1/3,-2/3"));
    CHECK(r.bounds_verified);
    auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["expression"] == "1/2,1/3,-2/3");
    REQUIRE(j["tangles"].size() == 3);
    CHECK(j["tangles"][0]["fraction"] == "1/2");
    CHECK(j["tangles"][0]["continued_fraction"] == "[0,2]");
    CHECK(j["tangles"][2]["fraction"] == "-2/3");
    CHECK(j["tangles"][2]["continued_fraction"] == "[0,-1,-2]");
    CHECK(j["knot_class"] == "knot_one_even_denominator");
    CHECK(j["restricted"]["kind"] == "mixed");
    CHECK(j["restricted"]["expression"] == "1/2,1/3,-2/3");
    CHECK(j["C_plus"] == 8);
    CHECK(j["C_minus"] == 0);
    CHECK(j["twist_Gamma_inc"] == -10);
    CHECK(j["twist_Gamma_dec"] == 6);
    CHECK(j["twist_Gamma_s"] == -10);
    CHECK(j["slope_lower"] == 0);
    CHECK(j["slope_upper"] == 16);
    CHECK(j["bounds_verified"] == true);
    CHECK(j["crossing_number"] == 8);
    CHECK(j["diameter_bound"] == 16);
    CHECK(j["systems"]["Gamma_inc"] ==
          "<1/0>--<1>--<1/2> ; <1/0>--<1>--<1/2>--<1/3> ; <0>--<-1/2>--<-2/3>");
    CHECK(j["systems"]["Gamma_dec"] == "<0>--<1/2> ; <0>--<1/3> ; <1/0>--<-1>--<-2/3>");
    CHECK(j["systems"]["Gamma_s"] ==
          "<1/0>--<1>--<1/2> ; <1/0>--<1>--<1/2>--<1/3> ; <1/0>--<0>--<-1/2>--<-2/3>");

    // field order is part of the format
    std::string text = to_json(r);
    CHECK(text.find("\"expression\"") < text.find("\"tangles\""));
    CHECK(text.find("\"tangles\"") < text.find("\"knot_class\""));
    CHECK(text.find("\"C_plus\"") < text.find("\"C_minus\""));
    CHECK(text.find("\"slope_lower\"") < text.find("\"slope_upper\""));
    CHECK(text.find("\"bounds_verified\"") < text.find("\"crossing_number\""));

    CHECK_THROWS_AS(analyze(parse_expression("1/2,1/2,1/3")), std::invalid_argument);
}

TEST_CASE("csv report") {
    CHECK(csv_header() ==
          "expression,knot_class,restricted_kind,restricted_expression,C_plus,C_minus,"
          "twist_Gamma_inc,twist_Gamma_dec,twist_Gamma_s,slope_lower,slope_upper,"
          "bounds_verified,crossing_number,diameter_bound");
    CHECK(csv_fields(csv_header()).size() == 14);

    auto r = analyze(parse_expression("1/2,1/3,-2/3"));
    std::string row = to_csv_row(r);
    CHECK(row ==
          "\"1/2,1/3,-2/3\",knot_one_even_denominator,mixed,\"1/2,1/3,-2/3\","
          "8,0,-10,6,-10,0,16,true,8,16");
    auto fields = csv_fields(row);
    REQUIRE(fields.size() == 14);
    CHECK(fields[0] == "1/2,1/3,-2/3");
    CHECK(fields[4] == "8");
    CHECK(fields[11] == "true");
}

TEST_CASE("plain report") {
    auto r = analyze(parse_expression("3/2,1/3,1/3"));
    std::string text = to_plain(r);
    CHECK(text.find("expression       M(3/2,1/3,1/3)") != std::string::npos);
    CHECK(text.find("restricted       all_positive  M(1/2,1/3,4/3)") != std::string::npos);
    CHECK(text.find("C+=9  C-=0  total=9") != std::string::npos);
    CHECK(text.find("slope_bounds     [0, 18]  diameter=18") != std::string::npos);
    CHECK(text.find("bounds_verified  true") != std::string::npos);
    CHECK(text.find("Gamma_s") != std::string::npos);
}

TEST_CASE("rendering batches") {
    std::vector<AnalysisReport> rs = {analyze(parse_expression("1/2,1/3,-2/3")),
                                      analyze(parse_expression("3/2,1/3,1/3"))};
    auto j = nlohmann::json::parse(render_reports(rs, ReportFormat::Json));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[1]["expression"] == "3/2,1/3,1/3");
    // a single report still renders as a one element array
    auto one = nlohmann::json::parse(
        render_reports({analyze(parse_expression("1/2,1/3,-2/3"))}, ReportFormat::Json));
    CHECK(one.is_array());
    CHECK(one.size() == 1);

    std::string csv = render_reports(rs, ReportFormat::Csv);
    size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 3);
    CHECK(csv.rfind(csv_header(), 0) == 0);

    std::string plain = render_reports(rs, ReportFormat::Plain);
    CHECK(plain.find("M(1/2,1/3,-2/3)") != std::string::npos);
    CHECK(plain.find("M(3/2,1/3,1/3)") != std::string::npos);

    CHECK(parse_format("json") == ReportFormat::Json);
    CHECK(parse_format("csv") == ReportFormat::Csv);
    CHECK(parse_format("plain") == ReportFormat::Plain);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("splitmix64 reference stream") {
    SplitMix64 g0(0);
    CHECK(g0.next() == 0xE220A8397B1DCDAFULL);
    SplitMix64 g1(1);
    CHECK(g1.next() == 0x910A2DEC89025CC1ULL);
    CHECK(g1.next() == 0xBEEB8DA1658EEC67ULL);
    CHECK(g1.next() == 0xF893A2EEFB32555EULL);

    SplitMix64 a(9000), b(9000);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    for (int i = 0; i < 200; ++i) {
        i64 v = a.uniform(-7, 5);
        CHECK(v >= -7);
        CHECK(v <= 5);
    }
    CHECK(a.uniform(3, 3) == 3);
}

TEST_CASE("random expressions are valid knots") {
    SplitMix64 rng(42);
    RandomParams p;
    CHECK(random_expression(rng, p).str() == "-5/2,-22/9,2/5,8/3,32/9");
    CHECK(random_expression(rng, p).str() == "-19/6,-25/9,2/11,-13/5,34/11");
    CHECK(random_expression(rng, p).str() == "27/7,-21/11,27/8");
    CHECK(random_expression(rng, p).str() == "-17/6,5/7,-10/3,-16/5");

    SplitMix64 r1(7), r2(7);
    for (int i = 0; i < 50; ++i) {
        auto e = random_expression(r1, p);
        CHECK(e == random_expression(r2, p));
        CAPTURE(e.str());
        CHECK_NOTHROW(validate(e));
        CHECK(is_knot(e) != KnotClass::Link);
        CHECK(e.tangles.size() >= 3);
        CHECK(e.tangles.size() <= 6);
        for (const auto& f : e.tangles) {
            CHECK(f.den() <= 12);
            CHECK(Fraction(-4) <= f);
            CHECK(f <= Fraction(4));
            CHECK_FALSE(f.is_integer());
        }
    }
    RandomParams bad;
    bad.tangles_min = 2;
    CHECK_THROWS_AS(random_expression(rng, bad), std::invalid_argument);
}

TEST_CASE("verification harness") {
    std::vector<MontesinosExpression> es = {
        expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)}),
        expr({Fraction(3, 2), Fraction(1, 3), Fraction(1, 3)}),
        expr({Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)}),  // link: shallow checks only
        expr({Fraction(-1, 2), Fraction(1, 3), Fraction(1, 7)}),
    };
    auto vr = verify_expressions(es);
    CHECK(vr.checked == 4);
    CHECK(vr.failures == 0);
    CHECK(vr.messages.empty());

    auto deep = verify_expressions({es[0], es[1]}, true);
    CHECK(deep.checked == 2);
    CHECK(deep.failures == 0);

    // malformed input surfaces as a counted failure, not an exception
    auto bad = verify_expressions({expr({Fraction(1, 2), Fraction(1, 3)})});
    CHECK(bad.checked == 1);
    CHECK(bad.failures == 1);
    REQUIRE(bad.messages.size() == 1);
    CHECK(bad.messages[0].find("at least 3") != std::string::npos);
}

TEST_CASE("random verification stays clean") {
    SplitMix64 rng(2026);
    RandomParams p;
    std::vector<MontesinosExpression> es;
    for (int i = 0; i < 40; ++i) es.push_back(random_expression(rng, p));
    auto vr = verify_expressions(es);
    CHECK(vr.checked == 40);
    CHECK(vr.failures == 0);
}
