#include <gtest/gtest.h>

#include <rhythmbool/tables.hpp>

#include <fstream>
#include <sstream>

using namespace rhythmbool;

namespace {

// plain json: object comparison ignores key order, arrays stay ordered
nlohmann::json load_golden(const std::string& id) {
    std::string name = "table_" + id;
    name[name.find('.')] = '_';
    std::ifstream in(std::string(RB_GOLDEN_DIR) + "/" + name + ".json");
    EXPECT_TRUE(in.good()) << "missing golden file for " << id;
    return nlohmann::json::parse(in);
}

TEST(TableTest, EveryTableMatchesItsGoldenFile) {
    for (const std::string& id : table_ids()) {
        nlohmann::json generated = nlohmann::json::parse(make_table(id).dump());
        EXPECT_EQ(generated, load_golden(id)) << "table " << id;
    }
}

TEST(TableTest, UnknownIdIsRejected) {
    EXPECT_THROW(make_table("9.9"), std::invalid_argument);
    EXPECT_THROW(render_table(ordered_json{{"table", "9.9"}}, TableFormat::text),
                 std::invalid_argument);
}

TEST(TableTest, RowCounts) {
    EXPECT_EQ(make_table("4.2").at("rows").size(), 8u);
    EXPECT_EQ(make_table("4.3").at("rows").size(), 3u);  // n = 3..5
    EXPECT_EQ(make_table("4.4").at("rows").size(), 4u);  // n = 3..6
    EXPECT_EQ(make_table("4.5").at("rows").size(), 4u);
    EXPECT_EQ(make_table("5.1").at("rows").size(), 4u);
    EXPECT_EQ(make_table("5.2").at("rows").size(), 6u);
}

TEST(TableTest, ThreeBitRowsHoldKnownValues) {
    ordered_json t = make_table("4.2");
    const auto& row = t.at("rows").at(3);  // (0,1,1)
    EXPECT_EQ(row.at("vector"), (ordered_json{0, 1, 1}));
    EXPECT_EQ(row.at("onsets"), (ordered_json{1, 2}));
    EXPECT_EQ(row.at("averaged_onsets"), (ordered_json{0, 1}));
    EXPECT_EQ(row.at("average"), (ordered_json{1, 1, 0}));
}

TEST(TableTest, PolynomialRowsRoundTripThroughTheSchema) {
    for (const std::string& id : {"4.3", "4.4", "4.5"}) {
        ordered_json t = make_table(id);
        for (const auto& row : t.at("rows")) {
            AnfPoly p = poly_from_json(row);
            EXPECT_EQ(detail::basis_letter(p.basis()),
                      t.at("basis").get<std::string>());
            EXPECT_EQ(to_json(p), row);
        }
    }
}

TEST(TableTest, FamilyCountsPartitionHalfTheSpace) {
    ordered_json t = make_table("5.2");
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    for (const auto& row : t.at("rows")) {
        std::uint64_t c = row.at("count").get<std::uint64_t>();
        EXPECT_EQ(row.at("members").size(), c);
        counts.push_back(c);
        total += c;
    }
    EXPECT_EQ(counts, (std::vector<std::uint64_t>{1, 2, 4, 8, 16, 1}));
    EXPECT_EQ(total, 32u);
    EXPECT_EQ(t.at("total").get<std::uint64_t>(), 32u);
}

TEST(TableTest, SingletonFamilyMemberIsTheOriginVector) {
    ordered_json t = make_table("5.2");
    const auto& last = t.at("rows").at(5);
    EXPECT_EQ(last.at("pair"), (ordered_json{{"a", 0}, {"b", 0}}));
    EXPECT_EQ(last.at("members").at(0).dump(),
              "{\"-2\":0,\"-1\":0,\"0\":1,\"1\":0,\"2\":0,\"3\":0}");
}

// ===== rendering ============================================================

TEST(RenderTest, ThreeBitTextLayout) {
    std::string text = render_table(make_table("4.2"), TableFormat::text);
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "vector   onsets   averaged_onsets  average");
    std::getline(lines, line);
    EXPECT_EQ(line, "(0,0,0)  ()       ()               (0,0,0)");
    for (int skip = 0; skip < 4; ++skip) std::getline(lines, line);
    EXPECT_EQ(line, "(1,0,0)  (0)      (0)              (1,0,0)");
}

TEST(RenderTest, CsvQuotesCellsContainingCommas) {
    std::string csv = render_table(make_table("4.2"), TableFormat::csv);
    EXPECT_NE(csv.find("\"(0,1,1)\",\"(1,2)\",\"(0,1)\",\"(1,1,0)\""),
              std::string::npos);
    std::string pairs = render_table(make_table("5.1"), TableFormat::csv);
    EXPECT_NE(pairs.find("3,\"(0,0) (0,1) (-1,1)\""), std::string::npos);
}

TEST(RenderTest, PolynomialTextUsesCanonicalStrings) {
    std::string text = render_table(make_table("4.5"), TableFormat::text);
    EXPECT_NE(text.find("3  1+y_1+y_{-1}y_0+y_{-1}y_1"), std::string::npos);
    std::string csv = render_table(make_table("4.3"), TableFormat::csv);
    EXPECT_NE(csv.find("3,v_0+v_0v_2+v_1v_2\n"), std::string::npos);
}

TEST(RenderTest, FamilyTextEndsWithTheTotalRow) {
    std::string text = render_table(make_table("5.2"), TableFormat::text);
    EXPECT_NE(text.find("(-2,3)  1      (1,0,0,0,0,1)"), std::string::npos);
    EXPECT_NE(text.find("\ntotal   32\n"), std::string::npos);
    // csv keeps pure columns: no summary row
    std::string csv = render_table(make_table("5.2"), TableFormat::csv);
    EXPECT_EQ(csv.find("total"), std::string::npos);
}

TEST(RenderTest, JsonRenderingIsTheDocument) {
    ordered_json t = make_table("5.1");
    EXPECT_EQ(render_table(t, TableFormat::json), t.dump(2) + "\n");
}

TEST(RenderTest, OutputIsByteStable) {
    for (const std::string& id : table_ids())
        for (TableFormat f : {TableFormat::text, TableFormat::json, TableFormat::csv})
            EXPECT_EQ(render_table(make_table(id), f),
                      render_table(make_table(id), f));
}

TEST(RenderTest, FormatNames) {
    EXPECT_EQ(table_format_from_name("text"), TableFormat::text);
    EXPECT_EQ(table_format_from_name("json"), TableFormat::json);
    EXPECT_EQ(table_format_from_name("csv"), TableFormat::csv);
    EXPECT_THROW(table_format_from_name("xml"), std::invalid_argument);
}

}  // namespace
