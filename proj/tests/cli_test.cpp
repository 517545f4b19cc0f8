#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <rhythmbool/jsonio.hpp>
#include <rhythmbool/tables.hpp>
#include <rhythmbool/theory.hpp>

using namespace rhythmbool;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// stdout + exit code of one CLI invocation; stderr is dropped
RunResult run(const std::string& args) {
    const std::string cmd = std::string(RB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json golden(const std::string& id) {
    std::string name = "table_" + id;
    name[name.find('.')] = '_';
    std::ifstream in(std::string(RB_GOLDEN_DIR) + "/" + name + ".json");
    EXPECT_TRUE(in.good());
    return nlohmann::json::parse(in);
}

// ===== eval =================================================================

TEST(CliEvalTest, EightBeatExample) {
    RunResult r = run("eval \"(0,0,1,1,0,0,0,1)\" --n 8");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("onsets            (2,3,7)"), std::string::npos);
    EXPECT_NE(r.out.find("proper            no"), std::string::npos);
    EXPECT_NE(r.out.find("averaged onsets   (0,2,5)"), std::string::npos);
    EXPECT_NE(r.out.find("average           (1,0,1,0,0,1,0,0)"), std::string::npos);
    EXPECT_NE(r.out.find("support           {0,2,5}"), std::string::npos);
}

TEST(CliEvalTest, FixedPointsAndKnownRow) {
    EXPECT_NE(run("eval \"(0,0,0)\" --n 3").out.find("average           (0,0,0)"),
              std::string::npos);
    EXPECT_NE(run("eval \"(1,0,1)\" --n 3").out.find("average           (0,1,1)"),
              std::string::npos);
}

TEST(CliEvalTest, JsonOutput) {
    RunResult r = run("eval \"(1,0,1)\" --n 3 --format json");
    EXPECT_EQ(r.code, 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("onsets"), (nlohmann::json{0, 2}));
    EXPECT_EQ(j.at("proper"), nlohmann::json(true));
    EXPECT_EQ(j.at("average"), (nlohmann::json{0, 1, 1}));
    EXPECT_EQ(j.at("support"), (nlohmann::json{1, 2}));
}

TEST(CliEvalTest, SingleOnsetHasNoPropernessDecision) {
    RunResult r = run("eval \"(0,1,0,0)\" --n 4 --format json");
    EXPECT_EQ(r.code, 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("proper").is_null());
    EXPECT_EQ(j.at("average"), (nlohmann::json{0, 1, 0, 0}));
}

// ===== poly =================================================================

TEST(CliPolyTest, ClosedFormKnownString) {
    RunResult r = run("poly --n 3 --method closed --basis y");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1+y_1+y_{-1}y_0+y_{-1}y_1\n");
}

TEST(CliPolyTest, EnumeratedKnownString) {
    EXPECT_EQ(run("poly --n 3 --method enumerate --basis v").out,
              "v_0+v_0v_2+v_1v_2\n");
}

TEST(CliPolyTest, AllMethodsAgreeAfterBasisConversion) {
    for (int n = 3; n <= 8; ++n) {
        const std::string tail = " --n " + std::to_string(n) + " --basis y";
        const std::string closed = run("poly --method closed" + tail).out;
        EXPECT_EQ(run("poly --method recurrence" + tail).out, closed) << n;
        EXPECT_EQ(run("poly --method enumerate" + tail).out, closed) << n;
    }
}

TEST(CliPolyTest, JsonMatchesTheLibraryPolynomial) {
    RunResult r = run("poly --n 4 --method enumerate --basis w --format json");
    EXPECT_EQ(r.code, 0);
    AnfPoly parsed = poly_from_json(ordered_json::parse(r.out));
    EXPECT_EQ(parsed, in_basis(derived_bav0(Modulus(4)), VarBasis::w));
}

// ===== verify ===============================================================

TEST(CliVerifyTest, PassingSweepExitsZero) {
    RunResult r = run("verify balanced --n 3..10");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("balanced n=3  pass  ones=4  inputs=8"), std::string::npos);
    EXPECT_NE(r.out.find("balanced n=10  pass  ones=512  inputs=1024"),
              std::string::npos);
}

TEST(CliVerifyTest, SingleModulusRuns) {
    RunResult r = run("verify parental --n 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "parental n=6  pass  pairs=6\n");
}

TEST(CliVerifyTest, JsonReportListsEveryModulus) {
    RunResult r = run("verify commute --n 3..6 --format json");
    EXPECT_EQ(r.code, 0);
    nlohmann::json arr = nlohmann::json::parse(r.out);
    ASSERT_EQ(arr.size(), 4u);
    for (const auto& rep : arr) {
        EXPECT_TRUE(rep.at("passed").get<bool>());
        EXPECT_TRUE(rep.at("counterexample").is_null());
    }
}

TEST(CliVerifyTest, WorkerCountDoesNotChangeTheTextReport) {
    const std::string args = "verify closed-form --n 3..10";
    EXPECT_EQ(run(args + " --jobs 4").out, run(args).out);
}

// ===== tables ===============================================================

TEST(CliTablesTest, JsonMatchesTheGoldenFiles) {
    for (const std::string& id : table_ids()) {
        RunResult r = run("tables " + id + " --format json");
        EXPECT_EQ(r.code, 0);
        EXPECT_EQ(nlohmann::json::parse(r.out), golden(id)) << "table " << id;
    }
}

TEST(CliTablesTest, TextHeaderAndCsvHeader) {
    EXPECT_EQ(run("tables 4.2").out.substr(0, 43),
              "vector   onsets   averaged_onsets  average\n");
    EXPECT_EQ(run("tables 4.2 --format csv").out.substr(0, 38),
              "vector,onsets,averaged_onsets,average\n");
}

TEST(CliTablesTest, RepeatedRunsAreByteIdentical) {
    for (const std::string& id : table_ids())
        for (const std::string& fmt : {"text", "json", "csv"}) {
            const std::string args = "tables " + id + " --format " + fmt;
            EXPECT_EQ(run(args).out, run(args).out) << args;
        }
}

// ===== exit codes ===========================================================

TEST(CliExitCodeTest, UsageErrorsReturnTwo) {
    EXPECT_EQ(run("").code, 2);                            // missing subcommand
    EXPECT_EQ(run("eval \"(0,1)\" --n 3").code, 2);        // length mismatch
    EXPECT_EQ(run("eval \"(0,1,1)\"").code, 2);            // missing --n
    EXPECT_EQ(run("verify typo --n 4").code, 2);           // unknown check
    EXPECT_EQ(run("verify balanced --n 3..x").code, 2);    // malformed range
    EXPECT_EQ(run("verify recurrence --n 3").code, 2);     // below minimum
    EXPECT_EQ(run("poly --n 5 --basis q").code, 2);        // unknown basis
    EXPECT_EQ(run("poly --n 5..8").code, 2);               // range where single
    EXPECT_EQ(run("tables 9.9").code, 2);                  // unknown table
    EXPECT_EQ(run("eval \"(1,0,1)\" --n 3 --format csv").code, 2);
}

TEST(CliExitCodeTest, ExhaustiveBoundsReturnThree) {
    EXPECT_EQ(run("verify closure --n 3..12").code, 3);
    EXPECT_EQ(run("verify balanced --n 30").code, 3);
    EXPECT_EQ(run("poly --n 30 --method enumerate").code, 3);
}

TEST(CliExitCodeTest, HelpExitsZero) {
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("poly --help").code, 0);
}

}  // namespace
