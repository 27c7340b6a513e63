#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mta/dataset.hpp"
#include "mta/report_io.hpp"
#include "test_support.hpp"

using namespace mta;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("mta_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write_values(const std::string& name, const std::vector<double>& values, bool with_time = false)
    {
        const auto path = dir_ / name;
        std::ofstream out(path);
        out.precision(17);
        if (with_time) out << "time,value\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (with_time) out << "t" << i << ",";
            out << values[i] << "\n";
        }
        return path;
    }

    struct Result {
        int code;
        std::string out;
        std::string err;
    };

    Result invoke(const std::vector<std::string>& args)
    {
        std::ostringstream out;
        std::ostringstream err;
        try {
            const auto config = cli::parse_args(args);
            const int code = cli::run_command(config, out, err);
            return {code, out.str(), err.str()};
        } catch (const cli::UsageError& e) {
            return {e.exit_code(), out.str(), e.what()};
        }
    }

    fs::path dir_;
};

std::vector<double> planted_series()
{
    auto values = synth::random_walk(500, 123);
    const auto bump = synth::bump_segment(40, 5.0);
    synth::plant(values, bump, 100);
    synth::plant(values, bump, 350);
    return values;
}

}  // namespace

TEST(ParseArgs, DiscoverOptions)
{
    const auto config = cli::parse_args({"discover", "-i", "steamgen", "-s", "10", "-a", "6", "-r", "0.5"});
    EXPECT_EQ(config.command, cli::Command::Discover);
    EXPECT_EQ(config.input, "steamgen");
    EXPECT_EQ(config.params.symbol_length, 10);
    EXPECT_EQ(config.params.alphabet_size, 6);
    EXPECT_DOUBLE_EQ(config.params.threshold, 0.5);
    EXPECT_TRUE(config.params.normalize);
    EXPECT_FALSE(config.params.max_generations);
    EXPECT_FALSE(config.output);
}

TEST(ParseArgs, PowerDemandStyle)
{
    const auto config = cli::parse_args({"discover", "-i", "power.txt", "--preset", "powerdemand", "-s", "500", "-r",
                                         "4", "--no-normalize", "--max-generations", "3", "-o", "out.json"});
    EXPECT_EQ(config.preset, "powerdemand");
    EXPECT_EQ(config.params.symbol_length, 500);
    EXPECT_DOUBLE_EQ(config.params.threshold, 4.0);
    EXPECT_FALSE(config.params.normalize);
    EXPECT_EQ(config.params.max_generations, 3);
    EXPECT_EQ(config.output, "out.json");
    EXPECT_FALSE(cli::dataset_request(config).subset);
}

TEST(ParseArgs, SubsetOverridesPreset)
{
    const auto config = cli::parse_args({"oracle", "-i", "steamgen", "--offset", "20", "--max-span", "40"});
    EXPECT_EQ(config.command, cli::Command::Oracle);
    EXPECT_EQ(config.max_span, 40);
    const auto request = cli::dataset_request(config);
    ASSERT_TRUE(request.subset);
    EXPECT_EQ(request.subset->stride, 10);
    EXPECT_EQ(request.subset->offset, 20);
}

TEST(ParseArgs, Rejections)
{
    try {
        cli::parse_args({"discover", "-i", "x", "-a", "1"});
        FAIL();
    } catch (const cli::UsageError& e) {
        EXPECT_EQ(e.exit_code(), cli::kUsage);
        EXPECT_NE(std::string(e.what()).find("--alphabet"), std::string::npos) << e.what();
    }
    EXPECT_THROW(cli::parse_args({"discover", "-i", "x", "-a", "27"}), cli::UsageError);
    EXPECT_THROW(cli::parse_args({"discover", "-i", "x", "-r", "0"}), cli::UsageError);
    EXPECT_THROW(cli::parse_args({"discover", "-i", "x", "--stride", "0"}), cli::UsageError);
    EXPECT_THROW(cli::parse_args({"discover"}), cli::UsageError);
    EXPECT_THROW(cli::parse_args({}), cli::UsageError);
    try {
        cli::parse_args({"--help"});
        FAIL();
    } catch (const cli::UsageError& e) {
        EXPECT_EQ(e.exit_code(), cli::kSuccess);
    }
}

TEST_F(CliTest, ValidatePlantedFixture)
{
    const auto input = write_values("planted.txt", planted_series());
    const auto result = invoke({"validate", "-i", input.string(), "-s", "10", "-a", "6", "-r", "0.3"});
    EXPECT_EQ(result.code, cli::kSuccess) << result.out << result.err;
    EXPECT_NE(result.out.find("verdict: PASS"), std::string::npos);
    EXPECT_NE(result.err.find("elapsed_ms:"), std::string::npos);
}

TEST_F(CliTest, DiscoverMatchesLibrary)
{
    const auto values = planted_series();
    const auto input = write_values("planted.txt", values);
    const auto output = dir_ / "report.json";
    const auto result =
        invoke({"discover", "-i", input.string(), "-s", "10", "-r", "0.3", "-o", output.string(), "--emit-plot-data"});
    ASSERT_EQ(result.code, cli::kSuccess) << result.err;

    std::ifstream in(output);
    std::stringstream text;
    text << in.rdbuf();

    Params params;
    params.symbol_length = 10;
    params.threshold = 0.3;
    // The file round-trips through text, so compare against the same values reloaded.
    const auto series = load_dataset({input.string(), std::nullopt, std::nullopt, std::nullopt});
    EXPECT_EQ(text.str(), serialize_report(run(series, params)));
    EXPECT_TRUE(fs::exists(dir_ / "report_plots"));
}

TEST_F(CliTest, StdoutWhenNoOutput)
{
    const auto input = write_values("walk.txt", synth::random_walk(200, 4));
    const auto result = invoke({"discover", "-i", input.string(), "-s", "5"});
    ASSERT_EQ(result.code, cli::kSuccess);
    EXPECT_NO_THROW(parse_report(result.out));
}

TEST_F(CliTest, OracleCsvOutput)
{
    const auto input = write_values("walk.txt", synth::random_walk(120, 9));
    const auto result = invoke({"oracle", "-i", input.string(), "-s", "5", "-r", "0.5", "--max-span", "10"});
    ASSERT_EQ(result.code, cli::kSuccess) << result.err;
    EXPECT_EQ(result.out.rfind("span,start_x,start_y,ed\n", 0), 0u);
}

TEST_F(CliTest, DataErrors)
{
    const auto empty = dir_ / "empty.txt";
    std::ofstream(empty).close();
    EXPECT_EQ(invoke({"discover", "-i", empty.string()}).code, cli::kIO);
    EXPECT_EQ(invoke({"discover", "-i", (dir_ / "absent.txt").string()}).code, cli::kIO);

    const auto flat = write_values("flat.txt", std::vector<double>(50, 2.0));
    const auto result = invoke({"discover", "-i", flat.string()});
    EXPECT_EQ(result.code, cli::kIO);
    EXPECT_NE(result.err.find("ZeroVariance"), std::string::npos) << result.err;

    const auto walk = write_values("walk.txt", synth::random_walk(100, 2));
    EXPECT_EQ(invoke({"discover", "-i", walk.string(), "--offset", "500"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"discover", "-i", walk.string(), "-s", "200"}).code, cli::kUsage);
}

TEST_F(CliTest, TimeColumnBecomesStartsTime)
{
    const auto input = write_values("timed.csv", planted_series(), true);
    const auto result = invoke({"discover", "-i", input.string(), "-s", "10", "-r", "0.3"});
    ASSERT_EQ(result.code, cli::kSuccess) << result.err;
    const auto doc = nlohmann::json::parse(result.out);
    ASSERT_FALSE(doc.at("motifs").empty());
    for (const auto& motif : doc.at("motifs")) {
        const auto starts = motif.at("starts_raw_coords").get<std::vector<Index>>();
        const auto times = motif.at("starts_time").get<std::vector<std::string>>();
        ASSERT_EQ(times.size(), starts.size());
        for (std::size_t i = 0; i < starts.size(); ++i) EXPECT_EQ(times[i], "t" + std::to_string(starts[i]));
    }
}

TEST_F(CliTest, TraceAndDump)
{
    const auto input = write_values("walk.txt", synth::random_walk(200, 4));
    const auto trace = dir_ / "trace.jsonl";
    const auto dump = dir_ / "dump.txt";
    const auto result = invoke({"discover", "-i", input.string(), "-s", "5", "-o", (dir_ / "r.json").string(),
                                "--trace", trace.string(), "--dump-candidates", dump.string()});
    ASSERT_EQ(result.code, cli::kSuccess) << result.err;
    std::ifstream in(trace);
    std::string line;
    Index generation = 0;
    while (std::getline(in, line)) {
        EXPECT_EQ(nlohmann::json::parse(line).at("generation"), ++generation);
    }
    EXPECT_GT(generation, 0);
    EXPECT_GT(fs::file_size(dump), 0u);
}

TEST_F(CliTest, PresetsResolveAgainstDataDirectory)
{
    std::vector<double> steam(9600);
    std::vector<double> power(35040);
    for (std::size_t i = 0; i < steam.size(); ++i) steam[i] = std::sin(0.01 * static_cast<double>(i * i % 997));
    for (std::size_t i = 0; i < power.size(); ++i) power[i] = std::cos(0.37 * static_cast<double>(i)) + 1e-3 * i;
    write_values("steamgen.txt", steam);
    write_values("powerdemand.txt", power);

    const char* previous = std::getenv(kDataDirEnv);
    const std::string saved = previous ? previous : "";
    ::setenv(kDataDirEnv, dir_.c_str(), 1);
    const auto steam_series = load_dataset({"steamgen", std::nullopt, std::nullopt, std::nullopt});
    const auto power_series = load_dataset({"powerdemand", std::nullopt, std::nullopt, std::nullopt});
    if (previous) {
        ::setenv(kDataDirEnv, saved.c_str(), 1);
    } else {
        ::unsetenv(kDataDirEnv);
    }

    EXPECT_EQ(steam_series.raw_length(), 960);
    EXPECT_DOUBLE_EQ(steam_series.raw[1], steam[10]);
    EXPECT_EQ(power_series.raw_length(), 5000);
    EXPECT_DOUBLE_EQ(power_series.raw[0], power[5000]);
}

TEST(Subset, Stride)
{
    const std::vector<double> v{0, 1, 2, 3, 4, 5, 6};
    EXPECT_EQ(apply_subset(v, {3, 1, std::nullopt}), (std::vector<double>{1, 4}));
    EXPECT_EQ(apply_subset(v, {2, 0, 3}), (std::vector<double>{0, 2, 4}));
    try {
        apply_subset(v, {0, 0, std::nullopt});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SubsetOutOfRange);
    }
    EXPECT_THROW(apply_subset(v, {1, 7, std::nullopt}), Error);
    EXPECT_THROW(apply_subset(v, {2, 0, 5}), Error);
}
