// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/codec.hpp"
#include "cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace binseq;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name)
{
    auto path = std::filesystem::temp_directory_path() / ("binseq_test_" + name);
    std::filesystem::remove(path);
    return path;
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("eval prints the Barker-4 report")
{
    const auto r = run({"eval", "1", "--length", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("energy: 2\n") != std::string::npos);
    CHECK(r.out.find("merit_factor: 4.0000\n") != std::string::npos);
    CHECK(r.out.find("merit_factor_full: 4\n") != std::string::npos);
    CHECK(r.out.find("psl: 1\n") != std::string::npos);
    CHECK(r.out.find("skew_symmetric: false\n") != std::string::npos);
}

TEST_CASE("eval of a length-one sequence reports unbounded merit")
{
    const auto r = run({"eval", "0", "-L", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("merit_factor: inf") != std::string::npos);
    CHECK(r.out.find("psl: n/a") != std::string::npos);
}

TEST_CASE("decode and encode")
{
    CHECK(run({"decode", "D", "-L", "4"}).out == "--+-\n");
    CHECK(run({"decode", "1D", "-L", "5"}).out == "---+-\n");
    CHECK(run({"encode", "---+-"}).out == "1D 5\n");
}

TEST_CASE("verify the bundled table")
{
    const auto r = run({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("51 of 51 records verified") != std::string::npos);
}

TEST_CASE("verify reports mismatches with exit code 1")
{
    const auto path = temp_file("bad_table.txt");
    std::ofstream(path) << "13 14.0833 1F35\n13 14.0900 1F35\n";
    const auto r = run({"verify", "--dataset", path.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("1 of 2 records verified") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("spectrum CSV")
{
    const auto r = run({"spectrum", "0", "-L", "1", "--samples", "4"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"t,modulus", "0,1", "0.25,1", "0.5,1", "0.75,1"});

    const auto b = run({"spectrum", "1", "-L", "4", "--samples", "3"});
    const auto rows = lines(b.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1] == "0,2");
    CHECK(rows[2].starts_with("0.333333333,"));
}

TEST_CASE("oracle report")
{
    const auto r = run({"oracle", "-L", "13", "--mode", "skew"});
    CHECK(r.code == 0);
    CHECK(r.out.find("optimal_energy: 6\n") != std::string::npos);
    CHECK(r.out.find("merit_factor: 14.0833\n") != std::string::npos);

    const auto over = run({"oracle", "-L", "29", "--mode", "full"});
    CHECK(over.code == 2);
    CHECK(over.err.find("capped") != std::string::npos);
}

TEST_CASE("search appends a re-verifiable record")
{
    const auto path = temp_file("results.jsonl");
    const std::vector<std::string> args = {"search", "-L", "21", "--mode", "skew", "--seed", "5",
                                           "--max-flips", "20000", "--out", path.string()};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);

    std::ifstream in(path);
    std::string l1, l2, extra;
    REQUIRE(std::getline(in, l1));
    REQUIRE(std::getline(in, l2));
    CHECK_FALSE(std::getline(in, extra));

    const auto r1 = nlohmann::json::parse(l1);
    const auto r2 = nlohmann::json::parse(l2);
    CHECK(cli::without_timing(r1) == cli::without_timing(r2));
    CHECK(r1.at("timing").contains("timestamp"));
    CHECK(r1.at("result").at("rng") == "mt19937_64");
    CHECK(r1.at("config").at("target_energy").is_null());

    const auto s = decode(r1.at("hex").get<std::string>(), 21);
    CHECK(energy(s) == r1.at("result").at("energy").get<std::int64_t>());
    CHECK(is_skew_symmetric(s));

    const auto re = run({"recheck", path.string()});
    CHECK(re.code == 0);
    CHECK(re.out.find("2 of 2 records re-verified") != std::string::npos);

    std::ofstream(path, std::ios::app) << R"({"hex":"1","result":{"length":4,"energy":3,"mode":"full"}})" << '\n';
    CHECK(run({"recheck", path.string()}).code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("search honours target energy and budget environment overrides")
{
    const auto r = run({"search", "-L", "15", "--mode", "full", "--target-energy", "15", "--seed", "1"});
    REQUIRE(r.code == 0);
    const auto rec = nlohmann::json::parse(r.out);
    CHECK(rec.at("result").at("energy") == 15);
    CHECK(rec.at("result").at("target_reached") == true);

    setenv("BINSEQ_MAX_FLIPS", "123", 1);
    const auto e = run({"search", "-L", "41", "--seed", "1"});
    unsetenv("BINSEQ_MAX_FLIPS");
    REQUIRE(e.code == 0);
    const auto erec = nlohmann::json::parse(e.out);
    CHECK(erec.at("config").at("max_flips") == 123);
    CHECK(erec.at("result").at("flips").get<std::uint64_t>() <= 123);
}

TEST_CASE("usage and input errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"eval"}).code == 2);
    CHECK(run({"eval", "XYZ"}).code == 2);
    CHECK(run({"eval", "D", "-L", "3"}).code == 2);
    CHECK(run({"search", "-L", "12", "--mode", "skew"}).code == 2);
    CHECK(run({"search", "-L", "13", "--mode", "sideways"}).code == 2);
    CHECK(run({"spectrum", "D", "--samples", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
