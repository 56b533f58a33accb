#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vectcoh/verify.hpp"

using namespace vectcoh;

TEST_CASE("report structure and exit semantics") {
    ReportDocument rep;
    rep.command = "demo";
    rep.catalog_hash = "abc";
    rep.assume("assumption");
    rep.add("check one", "anchor", true);
    rep.info("note", "anchor", {{"k", "v"}});
    CHECK(rep.all_passed());
    rep.add("check two", "anchor", false, {{"why", "because"}});
    CHECK(!rep.all_passed());
    CHECK(rep.failures() == 1);
    auto j = rep.to_json();
    CHECK(j["result"] == "fail");
    CHECK(j["checks"].size() == 3);
    CHECK(rep.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    SymbolSpace sp = SymbolSpace::parse("n=3,delta=3");
    ReportDocument a = report_derive_conditions(sp);
    ReportDocument b = report_derive_conditions(sp);
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));
    CHECK(a.to_text() == b.to_text());

    ReportDocument c = verify_exemptions();
    ReportDocument d = verify_exemptions();
    CHECK(c.to_json().dump(2) == d.to_json().dump(2));
}

TEST_CASE("worker fan-out does not change the report") {
    VerifyOptions one;
    one.workers = 1;
    VerifyOptions four;
    four.workers = 4;
    CHECK(verify_table1(one).to_json().dump() == verify_table1(four).to_json().dump());
}

TEST_CASE("catalog report addresses entries by key") {
    ReportDocument rep = report_catalog("C[l,l+4]");
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].id == "C[l,l+4]");
    CHECK(rep.all_passed());
    ReportDocument missing = report_catalog("C[bogus]");
    CHECK(!missing.all_passed());
}
