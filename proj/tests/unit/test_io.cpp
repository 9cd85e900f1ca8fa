#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "geophase/circuits.hpp"
#include "geophase/errors.hpp"
#include "geophase/hamiltonian_models.hpp"
#include "geophase/io.hpp"

using namespace geophase;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("geophase_io_" + name);
}

int line_count(const std::string& text) { return static_cast<int>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST(TrajectoryCsv, HeadersAndRows) {
    const Trajectory t = integrate_schrodinger(ComplexMatrix2::diagonal(1.0, 2.0), {1.0, 0.0}, {0.01, 0.02, 1});
    ASSERT_EQ(t.size(), 3u);
    std::ostringstream out;
    io::write_trajectory_csv(t, out);
    EXPECT_EQ(line_count(out.str()), 4);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "t,re1,im1,re2,im2");

    SecondOrderSystem sys;
    sys.stiffness = Eigen::Matrix2d::Identity();
    EXPECT_EQ(io::csv_header(integrate_second_order(sys, {1, 0}, {0, 0}, {0.1, 1.0, 1})), "t,v1,v2");
    EXPECT_EQ(io::csv_header(integrate_real4(real4(ComplexMatrix2{}), {1, 0, 0, 0}, {0.1, 1.0, 1})),
              "t,v1,v2,v3,v4");
}

TEST(TrajectoryCsv, SeventeenDigits) {
    EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(std::stod(io::format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(TrajectoryJson, RoundTrip) {
    Trajectory t = integrate_schrodinger(build_pt_dimer({0.1, 1.0, 0.3}).matrix(), {0.6, 0.8}, {1e-3, 1.0, 37});
    t.parameters = {{"a", 0.1}, {"g", 1.0}, {"s", 0.3}};
    const auto path = temp_path("roundtrip.json");
    io::export_trajectory(t, io::Format::JSON, path.string());
    EXPECT_EQ(io::import_trajectory_json(path.string()), t);

    SecondOrderSystem sys;
    sys.stiffness = 4.0 * Eigen::Matrix2d::Identity();
    const Trajectory s = integrate_second_order(sys, {1, 0}, {0, 0.3}, {1e-3, 2.0, 10});
    EXPECT_EQ(io::trajectory_from_json(io::trajectory_to_json(s)), s);
    std::filesystem::remove(path);
}

TEST(TrajectoryJson, SchemaFields) {
    const Trajectory t = integrate_schrodinger(ComplexMatrix2::identity(), {1.0, 0.0}, {0.1, 0.2, 1});
    const nlohmann::json j = io::trajectory_to_json(t);
    EXPECT_EQ(j.at("spec_version"), 1);
    EXPECT_EQ(j.at("metadata").at("representation_tag"), "complex2");
    EXPECT_TRUE(j.at("metadata").contains("step"));
}

TEST(TrajectoryJson, MalformedInput) {
    EXPECT_THROW(io::trajectory_from_json(nlohmann::json::array()), SpecParseError);
    nlohmann::json j = io::trajectory_to_json(integrate_schrodinger(ComplexMatrix2::identity(), {1.0, 0.0}, {0.1, 0.2, 1}));
    j["states"][0] = {1.0, 2.0};
    EXPECT_THROW(io::trajectory_from_json(j), SpecParseError);
    j.erase("times");
    EXPECT_THROW(io::trajectory_from_json(j), SpecParseError);
    EXPECT_THROW(io::import_trajectory_json("/nonexistent/dir/x.json"), IOError);
}

TEST(Export, IOErrorAndEmpty) {
    const Trajectory t = integrate_schrodinger(ComplexMatrix2::identity(), {1.0, 0.0}, {0.1, 0.2, 1});
    EXPECT_THROW(io::export_trajectory(t, io::Format::CSV, "/nonexistent/dir/x.csv"), IOError);
    EXPECT_THROW(io::export_trajectory(Trajectory{}, io::Format::CSV, temp_path("empty.csv").string()),
                 InvalidParameter);
}

TEST(SweepCsv, Header) {
    const std::vector<double> grid = {0.0, 1.5};
    std::ostringstream out;
    io::write_sweep_csv(gamma_sweep({1.0, 1.0, 0.2, std::nullopt}, grid), out);
    const std::string text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "gamma,re1,re2,re3,re4,im1,im2,im3,im4,classification");
    EXPECT_EQ(line_count(text), 3);
    EXPECT_NE(text.find("above_ep"), std::string::npos);
}
