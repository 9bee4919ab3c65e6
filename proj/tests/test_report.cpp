#include "qfano/fixtures.hpp"
#include "qfano/report.hpp"
#include "qfano/selftest.hpp"

#include <gtest/gtest.h>

using namespace qfano;

TEST(ReportJSON, X12Fields) {
    const auto r = make_report(analyze(fixture("X12").shape, 20));
    const auto j = to_json(r);
    EXPECT_EQ(j["fano_index"], 13);
    EXPECT_EQ(j["a3"], "1/210");
    EXPECT_EQ(j["genus"], 4);
    std::vector<int> idx;
    for (const auto& b : j["basket"])
        for (int c = 0; c < b["count"].get<int>(); ++c) idx.push_back(b["r"]);
    EXPECT_EQ(idx, (std::vector<int>{2, 3, 3, 5, 7}));
    EXPECT_EQ(j["hilbert"].size(), 21U);
}

TEST(ReportJSON, RoundTripAllFixtures) {
    for (const auto& f : fixtures()) {
        const auto r = make_report(analyze(f.shape));
        const auto text = to_json(r).dump();
        EXPECT_EQ(report_from_json(Json::parse(text)), r) << f.name;
        EXPECT_EQ(to_json(report_from_json(Json::parse(text))).dump(), text);
    }
}

TEST(TranscriptJSON, StableAndParsable) {
    for (auto id : {sarkisov::CaseId::NG, sarkisov::CaseId::P2, sarkisov::CaseId::P3, sarkisov::CaseId::P5, sarkisov::CaseId::P7}) {
        const auto text = to_json(sarkisov::run_case(id)).dump(2);
        EXPECT_EQ(Json::parse(text).dump(2), text);
    }
    const auto p5 = to_json(sarkisov::run_case(sarkisov::CaseId::P5));
    ASSERT_EQ(p5["final"].size(), 1U);
    EXPECT_EQ(p5["final"][0]["target"], "P(1,1,2,3)");
    EXPECT_EQ(p5["final"][0]["canonical_threshold"], "1/2");
    EXPECT_EQ(p5["final"][0]["second_contraction"]["delta"], 7);
    EXPECT_EQ(p5["final"][0]["second_contraction"]["b"], "9");
}

TEST(NormalFormJSON, Fields) {
    const auto j = to_json(nf::normalize(nf::parse("x5*x7 + x4^3 + x6^2 + x3^2*x6 + x3^4")));
    EXPECT_EQ(j["class"], "A");
    EXPECT_EQ(j["lambda"], "3/4");
    EXPECT_EQ(j["steps"].size(), 1U);
}

TEST(SelfTest, FirstDifference) {
    EXPECT_EQ(first_difference("a\nb\n", "a\nb\n"), "");
    EXPECT_EQ(first_difference("a\nb\n", "a\nc\n"), "line 2:\n- b\n+ c");
    EXPECT_EQ(first_difference("a\n", "a\nx\n"), "line 2:\n- <end of file>\n+ x");
}

TEST(SelfTest, BasketFaultDetected) {
    const auto res = run_selftest(QFANO_GOLDEN_DIR, Fault::Basket);
    EXPECT_FALSE(res.ok());
    bool flagged = false;
    for (const auto& c : res.checks)
        if (c.name == "invariants X12") flagged = !c.ok;
    EXPECT_TRUE(flagged);
}

TEST(SelfTest, CleanRunPasses) {
    const auto res = run_selftest(QFANO_GOLDEN_DIR);
    for (const auto& c : res.checks) EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
}
