#include "vmkdv/io.hpp"

#include "doctest.h"

#include <sstream>

using namespace vmkdv;
using vmkdv::io::Json;

TEST_CASE("doubles format with 17 significant digits") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(2.0) == "2");
    const double v = 1.0 / 3.0;
    CHECK(std::stod(io::format_double(v)) == v);
}

TEST_CASE("verification report serialization") {
    auto rep = VerificationReport::make("demo", 1e-9, 1e-6);
    rep.metadata["grid"] = "3001";
    const Json j = io::to_json(rep);
    CHECK(j["name"] == "demo");
    CHECK(j["pass"] == true);
    CHECK(j["metadata"]["grid"] == "3001");
}

TEST_CASE("Lax JSON block schema") {
    const Json j = io::lax_to_json(lax_u());
    CHECK(j.contains("0"));
    CHECK(j.contains("1"));
    CHECK(j["1"]["a"] == "1");
    CHECK(j["1"]["v2"] == "0");
    CHECK(j["0"]["v2"] == "u0");
    CHECK(j["0"]["W"] == "0");
}

TEST_CASE("times parsing") {
    const TimeVector t = io::times_from_json(Json::parse(R"({"t1": 0.5, "t3": -2.0})"));
    CHECK(t.x() == 0.5);
    CHECK(t.entries().at(1) == -2.0);
    CHECK_THROWS_AS(io::times_from_json(Json::parse(R"({"t2": 1.0})")), ConfigError);
    CHECK_THROWS_AS(io::times_from_json(Json::parse(R"({"x": 1.0})")), ConfigError);
    CHECK_THROWS_AS(io::times_from_json(Json::parse(R"([1.0])")), ConfigError);

    const Json round = io::times_to_json(t);
    CHECK(round["t1"] == 0.5);
    CHECK(round["t3"] == -2.0);
}

TEST_CASE("soliton params parsing and validation") {
    const auto p = io::soliton_params_from_json(
        Json::parse(R"({"mu": 1.5, "c0": 0.0, "c": [0.6, 0.8], "times": {"t3": 0.1}})"));
    CHECK(p.mu == 1.5);
    CHECK(p.c.size() == 2);
    CHECK_THROWS_AS(io::soliton_params_from_json(Json::parse(R"({"mu": 1.0, "c": [2.0]})")),
                    ConfigError); // sphere constraint
    CHECK_THROWS_AS(io::soliton_params_from_json(Json::parse(R"({"c": [1.0]})")), ConfigError);
}

TEST_CASE("breather params parsing: flat and nested C") {
    const auto p = io::breather_params_from_json(Json::parse(
        R"({"mu": [0.8, 0.6], "s": 1, "C": [[1,0],[0,0],[0,1]]})"));
    CHECK(p.s == 1);
    CHECK(p.components() == 1);
    CHECK(p.C(0, 0) == Complex(1, 0));
    CHECK(p.C(2, 0) == Complex(0, 1));

    // nested form with two columns on N = 2: an isotropic pair
    std::mt19937 rng(5);
    const Eigen::MatrixXcd c = random_isotropic_matrix(2, 2, rng);
    Json nested;
    nested["mu"] = Json::array({0.7, 0.9});
    nested["s"] = 2;
    Json rows = Json::array();
    for (int r = 0; r < c.rows(); ++r) {
        Json row = Json::array();
        for (int cc = 0; cc < c.cols(); ++cc)
            row.push_back(Json::array({c(r, cc).real(), c(r, cc).imag()}));
        rows.push_back(row);
    }
    nested["C"] = rows;
    const auto p2 = io::breather_params_from_json(nested);
    CHECK(p2.s == 2);
    CHECK(p2.components() == 2);

    CHECK_THROWS_AS(io::breather_params_from_json(Json::parse(
                        R"({"mu": [0.8, 0.6], "s": 1, "C": [[1,0],[1,0],[0,0]]})")),
                    ConfigError); // not isotropic
}

TEST_CASE("CSV field dump") {
    SolutionField field;
    field.grid = Grid{0.0, 1.0, 3};
    field.samples = Eigen::MatrixXd(3, 2);
    field.samples << 1.0, 2.0, 3.0, 4.0, 5.0, 6.5;
    std::ostringstream os;
    io::write_field_csv(os, field, 0.25);
    const std::string expected = "x,t,u_1,u_2\n"
                                 "0,0.25,1,2\n"
                                 "0.5,0.25,3,4\n"
                                 "1,0.25,5,6.5\n";
    CHECK(os.str() == expected);
}

TEST_CASE("error JSON shape") {
    const Json j = io::error_json("config", "bad file");
    CHECK(j["error"]["type"] == "config");
    CHECK(j["error"]["message"] == "bad file");
}
