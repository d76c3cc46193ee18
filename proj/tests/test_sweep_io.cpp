#include <doctest.h>

#include <stdexcept>
#include <string>

#include "scrollres/sweep.hpp"

using namespace scrollres;

TEST_CASE("single-point sweep reproduces the genus 19 example") {
    const std::vector<RegionRecord> records = sweep_region(11, 11, 1, 1);
    REQUIRE(records.size() == 1);
    const RegionRecord& r = records[0];
    CHECK(r.k == 11);
    CHECK(r.rho == 1);
    CHECK(r.g == 19);
    CHECK(r.f == 9);
    CHECK(r.beta1 == 44);
    CHECK(r.degN1 == 56);
    CHECK(r.l0 == 1);
    CHECK(r.l1 == 30);
    CHECK(r.l2 == 13);
    CHECK(r.conic4 == 104);
    CHECK(r.verdict == VerdictTag::unbalanced_N1);
}

TEST_CASE("boundary and degenerate sweeps") {
    const std::vector<RegionRecord> boundary = sweep_region(6, 6, 0, 0);
    REQUIRE(boundary.size() == 1);
    CHECK(boundary[0].conic4 == 0);
    CHECK(boundary[0].verdict == VerdictTag::balanced_N1_boundary);

    CHECK(sweep_region(5, 4, 0, 0).empty());   // inverted k range
    CHECK(sweep_region(6, 6, 3, 1).empty());   // inverted rho range
    CHECK_THROWS_AS(sweep_region(3, 6, 0, 0), std::invalid_argument);
}

TEST_CASE("records outside the theorem regime carry zeroed bundle fields") {
    const std::vector<RegionRecord> records = sweep_region(4, 7, -2, 6);
    CHECK(records.size() == 4 * 9);
    std::int64_t previous_k = 0, previous_rho = 0;
    bool first = true;
    for (const RegionRecord& r : records) {
        if (!first)
            CHECK((r.k > previous_k || (r.k == previous_k && r.rho > previous_rho)));
        first = false;
        previous_k = r.k;
        previous_rho = r.rho;

        CHECK(r.g == 2 * r.k - r.rho - 2);
        CHECK(r.f == r.g - r.k + 1);
        CHECK(r.l0 + r.l1 + r.l2 == r.beta1);
        CHECK(r.l1 + 2 * r.l2 == r.degN1);
        if (r.rho >= r.k - 3) {
            CHECK(r.verdict == VerdictTag::out_of_hypothesis);
            CHECK(r.beta1 == 0);
        }
        if (r.rho < 0) {
            CHECK(r.verdict == VerdictTag::conjectural_balanced);
            CHECK(r.beta1 == 0);
        }
    }
}

TEST_CASE("CSV emission is bit-exact") {
    const std::vector<RegionRecord> one = sweep_region(11, 11, 1, 1);
    CHECK(emit_table(one, TableFormat::csv) ==
          "k,rho,g,f,beta1,degN1,l0,l1,l2,conic4,verdict\n"
          "11,1,19,9,44,56,1,30,13,104,unbalanced_N1\n");
    CHECK(emit_table({}, TableFormat::csv) ==
          "k,rho,g,f,beta1,degN1,l0,l1,l2,conic4,verdict\n");
}

TEST_CASE("JSON emission") {
    CHECK(emit_table({}, TableFormat::json) == "[]\n");
    const std::string doc = emit_table(sweep_region(11, 11, 1, 1), TableFormat::json);
    CHECK(doc.find("\"k\": 11") != std::string::npos);
    CHECK(doc.find("\"l2\": 13") != std::string::npos);
    CHECK(doc.find("\"verdict\": \"unbalanced_N1\"") != std::string::npos);
}

TEST_CASE("CSV round-trips losslessly") {
    const std::vector<RegionRecord> records = sweep_region(4, 18, -3, 9);
    CHECK(parse_table_csv(emit_table(records, TableFormat::csv)) == records);
}

TEST_CASE("CSV parser rejects malformed input") {
    CHECK_THROWS_AS(parse_table_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_table_csv("k,rho\n"), std::invalid_argument);
    const std::string header = "k,rho,g,f,beta1,degN1,l0,l1,l2,conic4,verdict\n";
    CHECK(parse_table_csv(header).empty());
    CHECK_THROWS_AS(parse_table_csv(header + "11,1,19,9,44,56,1,30,13,104\n"),
                    std::invalid_argument);  // missing field
    CHECK_THROWS_AS(parse_table_csv(header + "11,1,19,9,44,56,1,30,13,104,nonsense\n"),
                    std::invalid_argument);  // unknown verdict
    CHECK_THROWS_AS(parse_table_csv(header + "x,1,19,9,44,56,1,30,13,104,unbalanced_N1\n"),
                    std::invalid_argument);  // bad integer
    CHECK_THROWS_AS(parse_table_csv(header + "11,1,19,9,44,56,1,30,13,104,unbalanced_N1"),
                    std::invalid_argument);  // missing final newline
}

TEST_CASE("SVG region picture") {
    const std::vector<RegionRecord> records = sweep_region(4, 12, 0, 8);
    const std::string svg = emit_region_svg(records, 12);

    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>\n") == svg.size() - 7);

    // the unbalanced example point and the boundary point, correctly filled
    CHECK(svg.find("fill=\"#d62728\" stroke=\"#333333\"><title>(k,rho)=(11,1) "
                   "unbalanced_N1</title>") != std::string::npos);
    CHECK(svg.find("fill=\"#ff7f0e\" stroke=\"#333333\"><title>(k,rho)=(6,0) "
                   "balanced_N1_boundary</title>") != std::string::npos);
    // (7,4) sits on the line g = k+1
    CHECK(svg.find("fill=\"#9e9e9e\" stroke=\"#333333\"><title>(k,rho)=(7,4) "
                   "out_of_hypothesis</title>") != std::string::npos);

    // legend mentions every tag
    for (const char* tag : {"unbalanced_N1", "balanced_N1", "balanced_N1_boundary",
                            "conjectural_balanced", "out_of_hypothesis"})
        CHECK(svg.find(tag) != std::string::npos);

    // conic and line are drawn
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);

    // byte-deterministic
    CHECK(emit_region_svg(records, 12) == svg);

    CHECK_THROWS_AS(emit_region_svg({}, 12), std::invalid_argument);
}
