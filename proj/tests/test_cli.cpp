#include <doctest.h>

#include <oracles.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <cli.hpp>
#include <painleve/json_io.hpp>

using namespace painleve;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "painleve");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("painleve_cli_" + name);
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("analyze")
    {
        const Outcome r = invoke({"analyze", "--C", "-16/5", "--lambda", "1/9"});
        REQUIRE(r.code == cli::ok);
        const json j = json::parse(r.out);
        CHECK(j["label"] == "three-parameter-candidate");
        CHECK(j["candidate_C_values"].size() == 6);
        CHECK(j["provenance"]["command"] == "analyze");
        CHECK(invoke({"analyze", "--C", "0"}).code == cli::invalid_config);
    }

    TEST_CASE("series and its exit codes")
    {
        const Outcome r = invoke({"series", "--case", "C43", "--lambda", "1/9", "--N", "12"});
        REQUIRE(r.code == cli::ok);
        const json j = json::parse(r.out);
        CHECK(j["N"] == 12);
        CHECK(scalar_from_json(j["residual_max"]).magnitude() < BigFloat::pow2(-200, 256));
        CHECK(invoke({"series", "--N", "3"}).code == cli::invalid_config);
        CHECK(invoke({"series", "--case", "C43", "--branch", "zero"}).code == cli::compatibility);
        CHECK(invoke({"series", "--case", "C43", "--branch", "zero", "--lambda", "1"}).code == cli::ok);
        CHECK(invoke({"series", "--case", "C44"}).code == cli::invalid_config);
        CHECK(invoke({"series", "--precision", "32"}).code == cli::invalid_config);
    }

    TEST_CASE("all branches with residue pairs")
    {
        const Outcome r = invoke({"series", "--case", "C43", "--all-branches", "--N", "8"});
        REQUIRE(r.code == cli::ok);
        const json j = json::parse(r.out);
        CHECK(j["branches"].size() == 4);
        CHECK(j["residue_pairs"].size() == 2);
    }

    TEST_CASE("certify")
    {
        const Outcome r = invoke({"certify", "--case", "C165", "--N", "40", "--epsilon", "1/10"});
        REQUIRE(r.code == cli::ok);
        CHECK(json::parse(r.out)["certificate"]["verdict"] == "certified");
        CHECK(invoke({"certify", "--case", "C165", "--N", "40", "--a2", "500"}).code == cli::certification);
    }

    TEST_CASE("fit the fixture")
    {
        const Outcome r = invoke({"fit", "--series", oracle::data_path("t_minus2.json"), "--m", "2"});
        REQUIRE(r.code == cli::ok);
        const json j = json::parse(r.out);
        CHECK(j["fit"]["nullspace_dim"] == 1);
        CHECK(invoke({"fit", "--series", "/nonexistent.json"}).code == cli::invalid_config);
    }

    TEST_CASE("verify a written series report")
    {
        const auto path = scratch("series.json");
        REQUIRE(invoke({"series", "--N", "30", "--output", path.string()}).code == cli::ok);
        const Outcome r = invoke({"verify", "--series", path.string()});
        REQUIRE(r.code == cli::ok);
        const json j = json::parse(r.out);
        CHECK(scalar_from_json(j["residual_max"]).magnitude() < BigFloat::pow2(-200, 256));
        CHECK(scalar_from_json(j["numeric"]["max_component_difference"]).magnitude() < BigFloat::pow2(-50, 256));
        std::filesystem::remove(path);
    }

    TEST_CASE("sweep flags merges")
    {
        const Outcome r = invoke({"sweep", "--case", "C43", "--lambda-grid", "0:1:1/2"});
        REQUIRE(r.code == cli::ok);
        const json j = json::parse(r.out);
        REQUIRE(j["points"].size() == 3);
        CHECK(j["points"][0]["merge"] == false);
        CHECK(j["points"][1]["merge"] == true);
        CHECK(j["points"][2]["merge"] == true);
    }

    TEST_CASE("random sweep is reproducible")
    {
        const Outcome a = invoke({"--seed", "17", "sweep", "--case", "C165", "--random", "3"});
        const Outcome b = invoke({"--seed", "17", "sweep", "--case", "C165", "--random", "3"});
        REQUIRE(a.code == cli::ok);
        json ja = json::parse(a.out);
        json jb = json::parse(b.out);
        CHECK(ja["points"] == jb["points"]);
    }
}
