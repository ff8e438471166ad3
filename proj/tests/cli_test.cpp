#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "minlam/io/cli.hpp"
#include "minlam/io/report.hpp"

namespace minlam::io {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("minlam_cli_test_" + name);
}

TEST(Cli, Winding)
{
    const auto r = run({"winding", "--a", "0.001", "--t1", "0.1", "--t2", "0.2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("turns 0.79572"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("limit 0.79577"), std::string::npos) << r.out;
}

TEST(Cli, UnknownFlagIsUsageError)
{
    const auto r = run({"mesh", "--bogus", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, MissingSubcommand)
{
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, OutOfRangeParameter)
{
    EXPECT_EQ(run({"mesh", "--a", "0.7", "--nx", "3", "--ns", "3"}).code, 2);
    EXPECT_EQ(run({"mesh", "--a", "0.1", "--helicoid"}).code, 2);
}

TEST(Cli, MeshToStdout)
{
    const auto r = run({"mesh", "--a", "0.1", "--nx", "2", "--ns", "2", "--format", "obj"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), 'v'), 4);
    EXPECT_NE(r.out.find("\nf 1 3 4\nf 1 4 2\n"), std::string::npos) << r.out;
}

TEST(Cli, ConfigFileWithOverride)
{
    const auto config = temp_path("mesh.cfg");
    {
        std::ofstream file(config);
        file << "# mesh settings\nnx = 4\nns = 3\nformat = csv\na = 0.1\n";
    }
    const auto from_file = run({"mesh", "--config", config.string()});
    EXPECT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(std::count(from_file.out.begin(), from_file.out.end(), '\n'), 4 * 3 + 1);

    const auto overridden = run({"mesh", "--config", config.string(), "--nx", "2"});
    EXPECT_EQ(overridden.code, 0) << overridden.err;
    EXPECT_EQ(std::count(overridden.out.begin(), overridden.out.end(), '\n'), 2 * 3 + 1);
    std::filesystem::remove(config);
}

TEST(Cli, SliceWritesCsv)
{
    const auto path = temp_path("slice.csv");
    const auto r = run({"slice", "--a", "0.05", "--x", "0.25", "--n", "11", "--out", path.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("monotone"), std::string::npos);
    EXPECT_EQ(std::filesystem::file_size(path) > 0, true);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"slice", "--a", "0.05", "--x", "0.25", "--n", "10"}).code, 2);
}

TEST(Cli, ConvergeReport)
{
    const auto r = run({"converge", "--k-list", "3,6", "--nx", "5", "--ns", "5"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto doc = Json::parse(r.out);
    EXPECT_EQ(doc["kind"], "convergence");
    EXPECT_EQ(doc["payload"]["rows"].size(), 2u);
    EXPECT_EQ(run({"converge", "--k-list", "3,x"}).code, 2);
}

TEST(Cli, TheoremSectionsAndExitCode)
{
    const auto r = run({"theorem"});
    const auto doc = Json::parse(r.out);
    EXPECT_EQ(doc["kind"], "theorem");
    for (const char* section : {"scale", "curvature_blowup", "bounded_curvature", "multigraphs", "convergence"}) {
        EXPECT_TRUE(doc["payload"].contains(section)) << section;
    }
    // the exit status reports exactly whether every certificate flag passed
    EXPECT_EQ(r.code == 0, doc["passed"].get<bool>());
    EXPECT_TRUE(doc["payload"]["curvature_blowup"]["check"]["pass"].get<bool>());
    for (const auto& row : doc["payload"]["multigraphs"]) {
        EXPECT_TRUE(row["check"]["pass"].get<bool>());
    }
}

}  // namespace
}  // namespace minlam::io
