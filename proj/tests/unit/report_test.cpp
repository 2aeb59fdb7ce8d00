#include <gtest/gtest.h>

#include "json.hpp"
#include "projkernel/report.hpp"

using namespace projkernel;

namespace {

IdentityReport sample_report()
{
    IdentityReport report;
    report.tool_version = "1.2.3";
    report.config = {{"L", "400"}, {"rule", "trapezoid"}};
    IdentityEntry ok;
    ok.name = "first";
    ok.equation = "Eq 3.3";
    ok.parameters = {{"a", 2.0}};
    ok.lhs_summary = "0.5";
    ok.rhs_summary = "0.5001";
    ok.residual = 1e-4;
    ok.tolerance = 1e-3;
    IdentityEntry bad = ok;
    bad.name = "second";
    bad.residual = 2e-3;
    bad.flags = {"noncausal_input"};
    report.entries = {ok, bad};
    return report;
}

} // namespace

TEST(IdentityEntry, VerdictIsResidualWithinTolerance)
{
    IdentityEntry e;
    e.residual = 1.0;
    e.tolerance = 1.0;
    EXPECT_TRUE(e.passed());
    e.residual = std::nextafter(1.0, 2.0);
    EXPECT_FALSE(e.passed());
}

TEST(IdentityReport, SummaryCounts)
{
    const IdentityReport report = sample_report();
    EXPECT_FALSE(report.all_passed());
    EXPECT_EQ(report.failure_count(), 1u);
    EXPECT_TRUE(IdentityReport{}.all_passed());
}

TEST(IdentityReport, JsonCarriesEveryField)
{
    const nlohmann::json doc = nlohmann::json::parse(sample_report().to_json());
    EXPECT_EQ(doc["version"], "1.2.3");
    EXPECT_EQ(doc["config"]["L"], "400");
    EXPECT_EQ(doc["summary"]["failures"], 1);
    EXPECT_EQ(doc["summary"]["passed"], false);
    ASSERT_EQ(doc["entries"].size(), 2u);
    const auto& first = doc["entries"][0];
    EXPECT_EQ(first["identity"], "first");
    EXPECT_EQ(first["equation"], "Eq 3.3");
    EXPECT_EQ(first["parameters"]["a"], 2.0);
    EXPECT_EQ(first["lhs"], "0.5");
    EXPECT_EQ(first["rhs"], "0.5001");
    EXPECT_EQ(first["residual"], 1e-4);
    EXPECT_EQ(first["tolerance"], 1e-3);
    EXPECT_EQ(first["verdict"], "pass");
    EXPECT_FALSE(first.contains("flags"));
    EXPECT_EQ(doc["entries"][1]["verdict"], "fail");
    EXPECT_EQ(doc["entries"][1]["flags"][0], "noncausal_input");
}

TEST(IdentityReport, Deterministic)
{
    EXPECT_EQ(sample_report().to_json(), sample_report().to_json());
    EXPECT_EQ(sample_report().to_json(0).find('\n'), std::string::npos);
}
