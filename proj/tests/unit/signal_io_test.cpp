#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "projkernel/config.hpp"
#include "projkernel/signal_io.hpp"

using namespace projkernel;

namespace {

SignalIoErrc parse_error_code(const std::string& text)
{
    std::istringstream in(text);
    try {
        parse_signal(in, Domain::coordinate);
    } catch (const SignalIoError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return SignalIoErrc::io_failure;
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("projkernel_test_" + name);
}

} // namespace

TEST(ParseSignal, ThreeRows)
{
    std::istringstream in("0,0.0,1,0\n1,0.1,2,0.5\n2,0.2,3,-1\n");
    const SampledSignal s = parse_signal(in, Domain::momentum);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s.domain(), Domain::momentum);
    EXPECT_NEAR(s.grid().step(), 0.1, 1e-15);
    EXPECT_EQ(s[1], Complex(2.0, 0.5));
}

TEST(ParseSignal, HeaderSkipped)
{
    std::istringstream in("index,x,re,im\n0,-1,1,0\n1,0,2,0\n2,1,3,0\n");
    const SampledSignal s = parse_signal(in, Domain::coordinate);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_DOUBLE_EQ(s.grid().x_min(), -1.0);
}

TEST(ParseSignal, ToleratesCrLfAndBlankLines)
{
    std::istringstream in("index,x,re,im\r\n0,0,1,0\r\n\r\n1,1,2,0\r\n");
    EXPECT_EQ(parse_signal(in, Domain::coordinate).size(), 2u);
}

TEST(ParseSignal, DistinctErrorCodes)
{
    EXPECT_EQ(parse_error_code("0,0.0,1,0\n1,0.1,1,0\n2,0.2,1,0\n3,0.4,1,0\n"), SignalIoErrc::non_uniform_grid);
    EXPECT_EQ(parse_error_code(""), SignalIoErrc::empty_file);
    EXPECT_EQ(parse_error_code("index,x,re,im\n"), SignalIoErrc::empty_file);
    EXPECT_EQ(parse_error_code("0,0,1,0\n1,abc,1,0\n"), SignalIoErrc::parse_error);
    EXPECT_EQ(parse_error_code("0,0,1\n1,1,1\n"), SignalIoErrc::parse_error);
    EXPECT_EQ(parse_error_code("0,0,1,0,9\n1,1,1,0,9\n"), SignalIoErrc::parse_error);
    EXPECT_EQ(parse_error_code("0,0,1,0\n2,1,1,0\n"), SignalIoErrc::index_gap);
    EXPECT_EQ(parse_error_code("0,1,1,0\n1,0,1,0\n"), SignalIoErrc::non_uniform_grid);
    EXPECT_EQ(parse_error_code("0,0,nan,0\n1,1,1,0\n"), SignalIoErrc::parse_error);
}

TEST(ParseSignal, ErrorCarriesLineNumber)
{
    std::istringstream in("index,x,re,im\n0,0,1,0\n1,0.1,1,0\n2,0.3,1,0\n");
    try {
        parse_signal(in, Domain::coordinate);
        FAIL();
    } catch (const SignalIoError& e) {
        EXPECT_EQ(e.code(), SignalIoErrc::non_uniform_grid);
        EXPECT_EQ(e.line(), 4u);
    }
}

TEST(ParseSignal, SpacingWithinRelativeToleranceAccepted)
{
    std::istringstream in("0,0,1,0\n1,0.1000000000001,1,0\n2,0.2,1,0\n");
    EXPECT_EQ(parse_signal(in, Domain::coordinate).size(), 3u);
}

TEST(ReadSignal, MissingFileIsIoFailure)
{
    try {
        read_signal("/nonexistent/dir/signal.csv", Domain::coordinate);
        FAIL();
    } catch (const SignalIoError& e) {
        EXPECT_EQ(e.code(), SignalIoErrc::io_failure);
    }
}

TEST(SignalRoundTrip, BitExactForRandomFiniteDoubles)
{
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::uint64_t> bits;
    const UniformGrid grid(-3.0, 0.01, 5000);
    std::vector<Complex> values(grid.count());
    auto random_finite = [&] {
        while (true) {
            const double v = std::bit_cast<double>(bits(rng));
            if (std::isfinite(v)) {
                return v;
            }
        }
    };
    for (Complex& v : values) {
        v = {random_finite(), random_finite()};
    }
    values[0] = {-0.0, std::numeric_limits<double>::denorm_min()};
    values[1] = {std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
    const SampledSignal original(grid, values, Domain::time);

    const auto path = temp_file("roundtrip.csv");
    write_signal(path, original);
    const SampledSignal back = read_signal(path, Domain::time);
    std::filesystem::remove(path);

    ASSERT_EQ(back.size(), original.size());
    for (std::size_t i = 0; i < original.size(); ++i) {
        EXPECT_EQ(std::bit_cast<std::uint64_t>(back[i].real()), std::bit_cast<std::uint64_t>(original[i].real()));
        EXPECT_EQ(std::bit_cast<std::uint64_t>(back[i].imag()), std::bit_cast<std::uint64_t>(original[i].imag()));
    }
    EXPECT_NEAR(back.grid().step(), grid.step(), 1e-15);
}

TEST(WriteSignal, HeaderAndRows)
{
    std::ostringstream out;
    write_signal(out, SampledSignal(UniformGrid(0.0, 0.5, 2), {Complex{1.0, -2.0}, Complex{0.25, 0.0}}, Domain::coordinate));
    EXPECT_EQ(out.str(), "index,x,re,im\n0,0,1,-2\n1,0.5,0.25,0\n");
}

TEST(Config, ParseRule)
{
    EXPECT_EQ(parse_rule("trapezoid"), Rule::trapezoid);
    EXPECT_EQ(parse_rule("simpson"), Rule::simpson);
    EXPECT_FALSE(parse_rule("gauss").has_value());
    EXPECT_EQ(to_string(Rule::simpson), "simpson");
}

TEST(Config, DefaultsWithoutEnvironment)
{
    ::unsetenv(kConfigEnvVar.data());
    const QuadratureConfig cfg = default_config();
    EXPECT_EQ(cfg.half_width, 400.0);
    EXPECT_EQ(cfg.step, 0.05);
    EXPECT_EQ(cfg.pv_exclusion, 0.05);
    EXPECT_EQ(cfg.rule, Rule::trapezoid);
}

TEST(Config, FileOverridesDefaults)
{
    const auto path = temp_file("config.json");
    {
        std::ofstream out(path);
        out << R"({"L": 120, "eps": 0.1, "rule": "simpson"})";
    }
    ::setenv(kConfigEnvVar.data(), path.c_str(), 1);
    const QuadratureConfig cfg = default_config();
    ::unsetenv(kConfigEnvVar.data());
    std::filesystem::remove(path);
    EXPECT_EQ(cfg.half_width, 120.0);
    EXPECT_EQ(cfg.step, 0.05);
    EXPECT_EQ(cfg.pv_exclusion, 0.1);
    EXPECT_EQ(cfg.rule, Rule::simpson);
}

TEST(Config, InvalidFilesRejected)
{
    const auto path = temp_file("bad_config.json");
    for (const char* text : {R"({"rule": "gauss"})", R"({"L": "wide"})", "[1,2]", "{not json",
                             R"({"eps": 0.07})"}) {
        {
            std::ofstream out(path);
            out << text;
        }
        EXPECT_ANY_THROW(load_config_file(path)) << text;
    }
    std::filesystem::remove(path);
    EXPECT_THROW(load_config_file("/nonexistent/config.json"), std::runtime_error);
}
