#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "semdiff/ad_diff.hpp"
#include "semdiff/history.hpp"

using namespace semdiff;
using testing::fixture;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("semdiff_history_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("verdict construction") {
    CHECK(verdict_from(true, true).value == VerdictValue::Equivalent);
    CHECK(verdict_from(true, false).value == VerdictValue::LeftRefinesRight);
    CHECK(verdict_from(false, true).value == VerdictValue::RightRefinesLeft);
    CHECK(verdict_from(false, false).value == VerdictValue::Incomparable);
    CHECK(verdict_from(true, true, 3).bound == 3u);
    CHECK(mirrored(verdict_from(true, false)).value == VerdictValue::RightRefinesLeft);
    CHECK(mirrored(verdict_from(false, false)).value == VerdictValue::Incomparable);
    CHECK(symbol(VerdictValue::Equivalent) == "==");
    CHECK(symbol(VerdictValue::LeftRefinesRight) == ">");
    CHECK(symbol(VerdictValue::RightRefinesLeft) == "<");
    CHECK(symbol(VerdictValue::Incomparable) == "<>");
    CHECK(describe(verdict_from(true, true, 3)) == "EQUIVALENT (bounded k=3)");
    CHECK(describe(verdict_from(false, false)) == "INCOMPARABLE");
}

TEST_CASE("activity history over the four versions") {
    const std::vector<std::string> files = {fixture("adv1.ad"), fixture("adv2.ad"), fixture("adv3.ad"),
                                            fixture("adv4.ad")};
    const auto report = history_report(files, ModelKind::ActivityDiagram);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].verdict.value == VerdictValue::Incomparable);
    CHECK(report.rows[1].verdict.value == VerdictValue::RightRefinesLeft);
    CHECK(report.rows[2].verdict.value == VerdictValue::Incomparable);
    CHECK(report.rows[2].forward == 1);
    // Derived by running addiff(ad.v4, ad.v3) on the fixtures.
    CHECK(report.rows[2].backward == ad::addiff(testing::fixture_ad("adv4.ad"), testing::fixture_ad("adv3.ad"))
                                         .witnesses.size());
    CHECK(report.rows[1].backward == 0);
    for (const auto& row : report.rows) {
        CHECK(row.verdict == verdict_from(row.forward == 0, row.backward == 0));
        CHECK_FALSE(row.verdict.bounded());
    }
}

TEST_CASE("class diagram history") {
    const auto report = history_report({fixture("cd1v1.cd"), fixture("cd1v2.cd")}, ModelKind::ClassDiagram);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].verdict.value == VerdictValue::Incomparable);
    CHECK(report.rows[0].verdict.bound == 3u);
    CHECK(report.rows[0].forward >= 1);
    CHECK(report.rows[0].backward >= 1);
    CHECK(report.rows[0].forward <= 10);

    const auto same = history_report({fixture("cd5v1.cd"), fixture("cd5v1.cd")}, ModelKind::ClassDiagram);
    REQUIRE(same.rows.size() == 1);
    CHECK(same.rows[0].verdict.value == VerdictValue::Equivalent);
    CHECK(same.rows[0].forward == 0);
    CHECK(same.rows[0].backward == 0);
}

TEST_CASE("palindromic histories mirror their verdicts") {
    const std::vector<std::string> files = {fixture("adv1.ad"), fixture("adv2.ad"), fixture("adv3.ad"),
                                            fixture("adv4.ad"), fixture("adv3.ad"), fixture("adv2.ad"),
                                            fixture("adv1.ad")};
    const auto report = history_report(files, ModelKind::ActivityDiagram);
    REQUIRE(report.rows.size() == 6);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& there = report.rows[i];
        const auto& back = report.rows[5 - i];
        CHECK(back.verdict == mirrored(there.verdict));
        CHECK(back.forward == there.backward);
        CHECK(back.backward == there.forward);
    }
}

TEST_CASE("text and JSON reports") {
    const auto report = history_report({fixture("adv2.ad"), fixture("adv3.ad")}, ModelKind::ActivityDiagram);
    const auto text = history_text(report);
    CHECK(text.find("RIGHT_REFINES_LEFT (<)") != std::string::npos);
    CHECK(text.starts_with("from"));
    const auto j = history_json(report);
    CHECK(j["kind"] == "ad");
    CHECK(j["bound"].is_null());
    CHECK(j["rows"][0]["verdict"] == "RIGHT_REFINES_LEFT");
    CHECK(j["rows"][0]["symbol"] == "<");
    CHECK(j["rows"][0]["forward"] == 4);

    const auto cd = history_report({fixture("cd5v1.cd"), fixture("cd5v2.cd")}, ModelKind::ClassDiagram);
    CHECK(history_json(cd)["bound"] == 3);
    CHECK(history_text(cd).find("k=3") != std::string::npos);
}

TEST_CASE("history errors name the offending file") {
    CHECK_THROWS_AS(history_report({fixture("adv1.ad")}, ModelKind::ActivityDiagram), InputError);
    CHECK_THROWS_WITH_AS(history_report({fixture("adv1.ad"), fixture("cd1v1.cd")}, ModelKind::ActivityDiagram),
                         doctest::Contains("cd1v1.cd"), InputError);
    const auto broken = write_temp("broken.ad", "activity A {\n  start -> ;\n}\n");
    CHECK_THROWS_WITH_AS(history_report({fixture("adv1.ad"), broken}, ModelKind::ActivityDiagram),
                         doctest::Contains((broken + ":2:").c_str()), InputError);
    CHECK_THROWS_WITH_AS(history_report({fixture("adv1.ad"), "/nonexistent/x.ad"}, ModelKind::ActivityDiagram),
                         doctest::Contains("/nonexistent/x.ad"), InputError);
}
