#include "cli_support.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace finframe;
using namespace finframe::testing;

namespace {
const std::string exe = FINFRAME_CLI_PATH;
const std::string data_dir = FINFRAME_DATA_DIR;
} // namespace

TEST(Cli, GenWritesFileAndReportsBounds) {
    TempDir tmp;
    const auto r = run_cli(exe, {"gen", "--dim", "2", "--count", "4", "--seed", "7", "--out", tmp.file("f.json")});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind("Created a frame with lower bound A = ", 0), 0u);
    const Frame f = new_frame(read_matrix(tmp.file("f.json")));
    EXPECT_EQ(f.synthesis_matrix(), random_frame(2, 4, 7).synthesis_matrix());
}

TEST(Cli, GenIsByteDeterministic) {
    TempDir tmp;
    ASSERT_EQ(run_cli(exe, {"gen", "--dim", "3", "--count", "5", "--seed", "1", "--out", tmp.file("a.json")}).exit_code, 0);
    ASSERT_EQ(run_cli(exe, {"gen", "--dim", "3", "--count", "5", "--seed", "1", "--out", tmp.file("b.json")}).exit_code, 0);
    EXPECT_EQ(read_text_file(tmp.file("a.json")), read_text_file(tmp.file("b.json")));
    ASSERT_EQ(run_cli(exe, {"gen", "--dim", "3", "--count", "5", "--seed", "1", "--out", tmp.file("c.csv")}).exit_code, 0);
    EXPECT_EQ(read_matrix(tmp.file("c.csv")), read_matrix(tmp.file("a.json")));
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run_cli(exe, {"gen", "--dim", "4", "--count", "3"}).exit_code, 2);
    EXPECT_EQ(run_cli(exe, {"gen", "--dim", "x"}).exit_code, 2);
    EXPECT_EQ(run_cli(exe, {}).exit_code, 2);
    EXPECT_EQ(run_cli(exe, {"frobnicate"}).exit_code, 2);
    EXPECT_EQ(run_cli(exe, {"stability", "--dim", "3", "--m1", "2", "--m2", "4"}).exit_code, 2);
    EXPECT_EQ(run_cli(exe, {"--help"}).exit_code, 0);
}

TEST(Cli, IoErrorsExitOne) {
    EXPECT_EQ(run_cli(exe, {"bounds", "/nonexistent/frame.json"}).exit_code, 1);
    TempDir tmp;
    write_text_file(tmp.file("bad.json"), "{\"rows\":2}");
    EXPECT_EQ(run_cli(exe, {"bounds", tmp.file("bad.json")}).exit_code, 1);
}

TEST(Cli, DomainErrorsExitThree) {
    TempDir tmp;
    write_text_file(tmp.file("rank1.csv"), "1,2,3\n1,2,3\n");
    EXPECT_EQ(run_cli(exe, {"bounds", tmp.file("rank1.csv")}).exit_code, 3);
    EXPECT_EQ(run_cli(exe, {"gram", data_dir + "/d1.json", data_dir + "/d3.json"}).exit_code, 3);
}

TEST(Cli, BoundsOfD1) {
    const auto r = run_cli(exe, {"bounds", data_dir + "/d1.json"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "A = 1.38034, B = 2.61966\n");
    EXPECT_EQ(run_cli(exe, {"bounds", data_dir + "/d1.csv"}).out, r.out);
}

TEST(Cli, DualOfOnbIsItself) {
    TempDir tmp;
    write_matrix(tmp.file("onb.json"), Matrix::identity(3));
    const auto r = run_cli(exe, {"dual", tmp.file("onb.json")});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_LE(frobenius_norm(subtract(parse_matrix(r.out), Matrix::identity(3))), 1e-15);
}

TEST(Cli, CheckAndPlot) {
    const auto check = run_cli(exe, {"check", data_dir + "/d3.json"});
    EXPECT_EQ(check.exit_code, 0);
    EXPECT_NE(check.out.find("PASS"), std::string::npos);

    const auto plot = run_cli(exe, {"plot", data_dir + "/d1.json", "--dual"});
    ASSERT_EQ(plot.exit_code, 0);
    EXPECT_NE(plot.out.find("<svg"), std::string::npos);
    TempDir tmp;
    ASSERT_EQ(run_cli(exe, {"gen", "--dim", "4", "--count", "5", "--out", tmp.file("f4.json")}).exit_code, 0);
    EXPECT_EQ(run_cli(exe, {"plot", tmp.file("f4.json")}).exit_code, 2);
}

TEST(Cli, BenchCsv) {
    const auto r = run_cli(exe, {"bench", "--grid", "2x3,4x5", "--repeats", "3"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind(std::string(bench_csv_header) + "\n2,3,26,20,26,20,", 0), 0u);
    EXPECT_NE(r.out.find("\n4,5,132,144,132,144,"), std::string::npos);
    EXPECT_EQ(run_cli(exe, {"bench", "--grid", "3x2"}).exit_code, 2);
}

TEST(Cli, StabilityReportFormat) {
    const auto r = run_cli(exe, {"stability", "--dim", "8", "--m1", "19", "--m2", "27", "--trials", "10", "--seed", "3"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind("Dimension = 8, Number of frame elements, first frame = 19, second frame = 27\nFirst frame:\n"
                          "Created a frame with lower bound A = ",
                          0),
              0u);
    EXPECT_NE(r.out.find("\nThe maximal error in 10 runs was "), std::string::npos);
}
