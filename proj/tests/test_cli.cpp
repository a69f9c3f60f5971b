#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

#include "commands.hpp"
#include "test_util.hpp"

using namespace bruns;
using namespace bruns::cli;
using nlohmann::json;
using testutil::run_command;

namespace {

std::string cli_path() { return testutil::env_or("BRUNS_CLI", BRUNS_CLI_DEFAULT); }
std::string data_dir() { return testutil::env_or("BRUNS_DATA", BRUNS_DATA_DEFAULT); }

} // namespace

TEST_CASE("pmf inline syntax") {
    const DiePmf single = parse_pmf("out:1.0");
    REQUIRE(single.outcomes.size() == 1);
    CHECK(single.outcomes[0].first == BallOutcome::Out);
    CHECK(single.outcomes[0].second == 1.0);

    const DiePmf book = parse_pmf("out:0.2,1:0.2,2:0.2,4:0.2,6:0.2");
    REQUIRE(book.outcomes.size() == 5);
    CHECK(book.outcomes[3].first == BallOutcome::Run4);
    CHECK(book.outcomes[3].second == doctest::Approx(0.2).epsilon(1e-12));

    const DiePmf preset = parse_pmf("book-cricket");
    REQUIRE(preset.outcomes.size() == 5);
    CHECK(preset.outcomes[0].first == BallOutcome::Out);
    CHECK(preset.outcomes[0].second == 0.2);

    // a 1e-10 shortfall is inside the 1e-9 gate and gets renormalized
    CHECK_NOTHROW(parse_pmf("out:0.5,1:0.4999999999"));

    CHECK_THROWS_AS(parse_pmf("out:0.5,1:0.4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pmf("out:0.5,5:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pmf("out 1.0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pmf("out:0.5,out:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pmf("out:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pmf(""), std::invalid_argument);
}

TEST_CASE("evaluate command emits table rows and json") {
    const std::string csv = data_dir() + "/batsmen.csv";
    const auto table = run_command(cli_path() + " evaluate " + csv);
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("Virender Sehwag") != std::string::npos);
    CHECK(table.output.find("275.96") != std::string::npos);

    const auto report = run_command(cli_path() + " evaluate " + csv + " --format json");
    CHECK(report.exit_code == 0);
    const json doc = json::parse(report.output);
    CHECK(doc["command"] == "evaluate");
    CHECK(doc["metadata"]["balls"] == 300);
    REQUIRE(doc["players"].size() == 7);
    CHECK(doc["players"][0]["name"] == "Virender Sehwag");
    CHECK(std::abs(doc["players"][0]["mean"].get<double>() - 275.9565) < 1e-3);
    CHECK(doc["warnings"].empty());
}

TEST_CASE("evaluate failures set the data exit code") {
    const auto missing = run_command(cli_path() + " evaluate /nonexistent.csv 2>/dev/null");
    CHECK(missing.exit_code == 2);

    const std::string empty_path = "/tmp/bruns_empty_test.csv";
    std::ofstream(empty_path).close();
    const auto empty = run_command(cli_path() + " evaluate " + empty_path + " 2>/dev/null");
    CHECK(empty.exit_code == 2);
    std::remove(empty_path.c_str());

    const std::string bad_path = "/tmp/bruns_badline_test.csv";
    {
        std::ofstream out(bad_path);
        out << "name,role,avg,rate\nGood,batsman,40,80\nBad,batsman,-1,80\n";
    }
    const auto partial =
        run_command(cli_path() + " evaluate " + bad_path + " --format json");
    CHECK(partial.exit_code == 2); // rows still emitted, nonzero for the bad line
    const json doc = json::parse(partial.output);
    CHECK(doc["players"].size() == 1);
    CHECK(doc["warnings"].size() == 1);
    std::remove(bad_path.c_str());
}

TEST_CASE("rank command orders players and honors the role filter") {
    const auto bowlers = run_command(cli_path() + " rank " + data_dir() +
                                     "/bowlers.csv --role bowler --format json");
    CHECK(bowlers.exit_code == 0);
    const json doc = json::parse(bowlers.output);
    REQUIRE(!doc["players"].empty());
    CHECK(doc["players"][0]["name"] == "Harbhajan Singh");
    CHECK(doc["players"][0]["rank"] == 1);
    CHECK(std::abs(doc["players"][0]["rrr"].get<double>() - 4.9031) < 1e-3);

    const auto single =
        run_command(cli_path() + " rank " + data_dir() + "/batsmen.csv --role batsman");
    CHECK(single.exit_code == 0);
    CHECK(single.output.find("Mahendra Singh Dhoni") != std::string::npos);
}

TEST_CASE("simulate command: certain dismissal pmf") {
    const auto result = run_command(cli_path() +
                                    " simulate --pmf out:1.0 --seed 5 --format json");
    CHECK(result.exit_code == 0);
    const json doc = json::parse(result.output);
    CHECK(doc["result"]["mean"] == 0.0);
    CHECK(doc["result"]["wickets_mean"] == 10.0);
    CHECK(doc["model"]["type"] == "die");
}

TEST_CASE("simulate command: usage errors") {
    const auto conflict = run_command(
        cli_path() + " simulate --pmf out:1.0 --avg 47 --rate 90.2 --role batsman"
                     " 2>/dev/null");
    CHECK(conflict.exit_code == 1);

    const auto incomplete = run_command(cli_path() + " simulate --avg 47 2>/dev/null");
    CHECK(incomplete.exit_code == 1);

    const auto bad_pmf =
        run_command(cli_path() + " simulate --pmf out:0.7,1:0.7 2>/dev/null");
    CHECK(bad_pmf.exit_code == 1);

    const auto no_model = run_command(cli_path() + " simulate 2>/dev/null");
    CHECK(no_model.exit_code == 1);

    const auto unknown = run_command(cli_path() + " simulate --frobnicate 2>/dev/null");
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("simulate command: inconsistent career figures are a data error") {
    const auto result = run_command(
        cli_path() + " simulate --avg 0.5 --rate 90.2 --role batsman 2>/dev/null");
    CHECK(result.exit_code == 2);
}

TEST_CASE("simulate json is byte-identical across reruns and workers") {
    const std::string flags =
        " simulate --avg 47 --rate 90.2 --role batsman --n 5000 --seed 11 --format json";
    const auto first = run_command(cli_path() + flags);
    CHECK(first.exit_code == 0);
    const auto again = run_command(cli_path() + flags);
    CHECK(again.output == first.output);
    const auto threaded = run_command(cli_path() + flags + " --workers 8");
    CHECK(threaded.output == first.output);
}

TEST_CASE("verify command exit codes") {
    const std::string player = " verify --avg 47 --rate 90.2 --role batsman --seed 7";
    const auto pass = run_command(cli_path() + player + " --n 20000");
    CHECK(pass.exit_code == 0);
    CHECK(pass.output.find("PASS") != std::string::npos);

    const auto fail = run_command(cli_path() + player +
                                  " --n 10 --tolerance-sigmas 0.0001");
    CHECK(fail.exit_code == 3);
    CHECK(fail.output.find("FAIL") != std::string::npos);
}
