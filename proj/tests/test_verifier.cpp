#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "commspec/json_io.hpp"
#include "commspec/spec_parse.hpp"
#include "commspec/verifier.hpp"

using namespace commspec;

namespace {

std::vector<VerificationCase> filtered(const std::string& needle) {
    std::vector<VerificationCase> out;
    for (auto& c : default_suite())
        if (c.id.find(needle) != std::string::npos) out.push_back(std::move(c));
    return out;
}

} // namespace

TEST_CASE("group spec grammar") {
    CHECK(parse_group_spec("QD:16").family == Family::Quasidihedral);
    CHECK(parse_group_spec("QD:16").params == std::vector<long long>{16});
    CHECK(parse_group_spec("PQ:3:7").family == Family::SemidirectPQ);
    CHECK(parse_group_spec("PQ:3:7").params == std::vector<long long>{3, 7});
    CHECK(parse_group_spec("F20").family == Family::F20);
    CHECK(parse_group_spec("HB:2:2").params == std::vector<long long>{2, 2});

    auto prod = parse_group_spec("D:6 x Z:3");
    REQUIRE(prod.family == Family::Product);
    CHECK(prod.factors[0].family == Family::Dihedral);
    CHECK(prod.factors[1].family == Family::Cyclic);

    // left-associative
    auto triple = parse_group_spec("D:6 x Z:3 x Z:2");
    REQUIRE(triple.family == Family::Product);
    CHECK(triple.factors[0].family == Family::Product);
    CHECK(triple.factors[1].family == Family::Cyclic);
    CHECK(triple.to_string() == "D:6 x Z:3 x Z:2");

    // whitespace-insensitive around 'x'
    CHECK(parse_group_spec("D:6x Z:3").to_string() == "D:6 x Z:3");
    CHECK(parse_group_spec("D:6xZ:3").to_string() == "D:6 x Z:3");
    CHECK(parse_group_spec("  QD:16  ").to_string() == "QD:16");
}

TEST_CASE("grammar errors carry a byte offset") {
    for (const char* bad : {"D:7", "D:4", "Q:10", "Q:4", "QD:12", "QD:8", "XX:3", "D:6 x", "x D:6",
                            "", "D", "D:", "D:abc", "F20:3", "HB:2", "Z:99999999999999999999"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_group_spec(bad), std::invalid_argument);
        try {
            parse_group_spec(bad);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("offset") != std::string::npos);
        }
    }
    // offset points at the failing atom
    try {
        parse_group_spec("D:6 x QD:12");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
    }
}

TEST_CASE("default suite composition") {
    auto cases = default_suite();
    CHECK(cases.size() >= 40);

    std::set<std::string> ids;
    for (const auto& c : cases) CHECK(ids.insert(c.id).second); // unique ids

    // exactly one expected-non-integral case: S4
    int non_integral = 0;
    for (const auto& c : cases)
        if (!c.expect_integral) ++non_integral;
    CHECK(non_integral == 1);

    // all seven toroidal groups present
    for (const char* id : {"toroidal/D14", "toroidal/D16", "toroidal/Q16", "toroidal/QD16",
                           "toroidal/D6xZ3", "toroidal/A4xZ2", "toroidal/Z7sZ3"})
        CHECK(ids.count(id) == 1);

    // complement-planar list present
    for (const char* id : {"complement/D6", "complement/D8", "complement/Q8"}) CHECK(ids.count(id) == 1);

    // every planar-list group covered
    for (const char* id : {"planar/D6", "planar/D8", "planar/D10", "planar/D12", "planar/Q8",
                           "planar/Q12", "planar/Z2xD8", "planar/Z2xQ8", "planar/M16", "planar/Z4sZ4",
                           "planar/D8cZ4", "planar/SG16_3", "planar/A4", "planar/A5", "planar/S4",
                           "planar/SL23", "planar/Sz2"})
        CHECK(ids.count(id) == 1);
}

TEST_CASE("empty case list gives an empty report") {
    auto report = run_suite({});
    CHECK(report.total == 0);
    CHECK(report.matched == 0);
    CHECK(report.all_match());
    CHECK(report_to_json(report)["summary"]["total"] == 0);
}

TEST_CASE("planar and complement subsets all match") {
    auto report = run_suite(filtered("complement/"));
    REQUIRE(report.total == 3);
    CHECK(report.all_match());

    auto planar16 = run_suite(filtered("planar/Z"));
    REQUIRE(planar16.total == 3); // Z2xD8, Z2xQ8, Z4sZ4
    CHECK(planar16.all_match());
    for (const auto& c : planar16.cases) {
        CHECK(c.center_order == 4);
        CHECK(c.clique_sizes == std::vector<int>{4, 4, 4});
    }
}

TEST_CASE("the S4 case verifies the literal polynomial and non-integrality") {
    auto report = run_suite(filtered("S4"));
    REQUIRE(report.total == 1);
    const auto& c = report.cases[0];
    CHECK(c.match);
    CHECK(c.order == 24);
    CHECK_FALSE(c.ac);
    CHECK_FALSE(c.clique_sizes.has_value());
    REQUIRE(c.brute.has_value());
    CHECK_FALSE(c.brute->is_integral);
    CHECK(c.brute->eigenvalues == std::vector<EigenEntry>{{1, 7}, {-1, 10}});
}

TEST_CASE("errata cases record the display defect") {
    auto report = run_suite(filtered("PQ3_7"));
    REQUIRE(report.total == 1);
    CHECK(report.cases[0].match);
    CHECK(report.cases[0].errata);
    CHECK(report.cases[0].display_defect_confirmed);
}

TEST_CASE("a wrong prediction is reported as a mismatch, not an exception") {
    VerificationCase bogus;
    bogus.id = "bogus/Q8";
    bogus.group = "Q:8";
    bogus.method = VerifyMethod::Both;
    bogus.predicted = spec_quaternion(3); // Q12 spectrum against Q8
    auto report = run_suite({bogus});
    REQUIRE(report.total == 1);
    CHECK_FALSE(report.cases[0].match);
    CHECK(report.cases[0].error.empty());
    CHECK_FALSE(report.all_match());
}

TEST_CASE("build failures are recorded per case") {
    VerificationCase broken;
    broken.id = "broken/over-cap";
    broken.group = "Z:100000";
    broken.method = VerifyMethod::CharPoly;
    auto report = run_suite({broken});
    REQUIRE(report.total == 1);
    CHECK_FALSE(report.cases[0].match);
    CHECK_FALSE(report.cases[0].error.empty());
}

TEST_CASE("reports are deterministic and jobs do not change results") {
    auto cases = filtered("sweep/D");
    auto r1 = run_suite(cases, 1);
    auto r2 = run_suite(cases, 2);
    CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());
    // runtimes are excluded from the default JSON form
    CHECK(report_to_json(r1).dump().find("runtime") == std::string::npos);
    CHECK(report_to_json(r1, true).dump().find("runtime_ms") != std::string::npos);
}

TEST_CASE("spectrum and table JSON shapes") {
    auto g = build_group(parse_group_spec("Q:8"));
    auto j = table_to_json(g);
    CHECK(j["order"] == 8);
    CHECK(j["identity"] == 0);
    CHECK(j["mul"].size() == 64);
    CHECK(j["labels"].size() == 8);
    CHECK(j["family"] == "Q:8");

    auto cg = build_commuting_graph(g);
    auto gj = graph_to_json(cg);
    CHECK(gj["vertices"].size() == 6);
    CHECK(gj["edges"].size() == 3);

    auto s = clique_union_spectrum({6, 2, 2, 2, 2});
    auto sj = spectrum_to_json(s);
    CHECK(sj["integral"] == true);
    CHECK(sj["residual"] == Json::array({1}));
    CHECK(sj["eigenvalues"][0]["value"] == 5);
    CHECK(sj["eigenvalues"][0]["multiplicity"] == 1);
    CHECK(sj["eigenvalues"][2]["value"] == -1);
    CHECK(sj["eigenvalues"][2]["multiplicity"] == 9);
}
