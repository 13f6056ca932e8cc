// Copyright 2026-present the cyclosum project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cyclosum/cli.hpp"

using namespace cyclosum;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cyclosum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pmf json") {
    const Run r = run({"pmf", "--N", "4", "--l", "1", "--m", "2", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["denominator"] == "6");
    CHECK(j["atoms"].size() == 5);
    CHECK(j["uniformity"]["is_uniform"] == false);
    CHECK(j["components"]["U"].size() == 3);
    int thirds = 0;
    for (const auto& a : j["atoms"]) thirds += a["probability"] == "1/3";
    CHECK(thirds == 1);
}

TEST_CASE("output is byte-identical between runs") {
    const std::vector<std::string> args{"moments", "--N", "7", "--l", "2", "--m", "3", "--k-max", "9"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> smp{"sample", "--N", "900", "--l", "4", "--m", "30", "--trials", "400", "--seed", "5"};
    const Run a = run(smp);
    std::vector<std::string> threaded = smp;
    threaded.insert(threaded.end(), {"--threads", "3"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == run(threaded).out);
}

TEST_CASE("moments report") {
    const Run r = run({"moments", "--N", "4", "--l", "1", "--m", "2", "--k-max", "4"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["variance"] == "4/3");
    CHECK(j["moments"][3]["value"]["exact"] == "-8/3");
    CHECK(j["componentwise_square_expectation"]["exact"] == "4/3");
}

TEST_CASE("verify exit codes") {
    const Run ok = run({"verify", "--N-range", "2..6", "--k-max", "8"});
    CHECK(ok.code == kExitOk);
    CHECK(nlohmann::json::parse(ok.out)["failures"].empty());
    const Run single = run({"verify", "--N", "6", "--l", "1,5", "--m", "2", "--format", "csv"});
    CHECK(single.code == kExitOk);
    CHECK(single.out.rfind("N,l,m,check,status", 0) == 0);
}

TEST_CASE("conjecture scan reports the composite uniform cases") {
    const Run r = run({"scan-conjecture", "--N-max", "13"});
    CHECK(r.code == kExitMathFailure);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["counterexamples"].size() == 12);
    CHECK(j["counterexamples"][0]["N"] == 9);
    CHECK(run({"scan-conjecture", "--N-max", "8"}).code == kExitOk);
}

TEST_CASE("identities") {
    const Run r = run({"identities", "--name", "central_square_sum", "--range", "1..20", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out) == 21);
    CHECK(run({"identities", "--range", "1..4"}).code == kExitOk);
}

TEST_CASE("bernoulli and coherence") {
    const Run b = run({"bernoulli", "--N", "4", "--l", "1", "--m", "2"});
    REQUIRE(b.code == kExitOk);
    CHECK(nlohmann::json::parse(b.out)["comparison"]["tilde_variance"] == "1");
    const Run c = run({"coherence", "--N", "7", "--rows", "1,2,4"});
    REQUIRE(c.code == kExitOk);
    CHECK(nlohmann::json::parse(c.out)["satisfied"] == true);
    const Run p = run({"coherence", "--N", "5", "--rows", "0,2", "--pairs", "--format", "csv"});
    CHECK(p.code == kExitOk);
    CHECK(lines(p.out) == 11);
}

TEST_CASE("sample with cross-check") {
    const Run r = run({"sample", "--N", "6", "--l", "1", "--m", "3", "--trials", "5000", "--seed", "1", "--cross-check"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["cross_check"]["passed"] == true);
}

TEST_CASE("usage errors exit 2 with one line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"pmf", "--N", "4", "--l", "1"},
             {"pmf", "--N", "4", "--l", "9", "--m", "2"},
             {"pmf", "--N", "4", "--l", "1", "--m", "2", "--format", "xml"},
             {"sample", "--N", "10", "--l", "1", "--m", "2", "--trials", "10"},
             {"verify", "--N-range", "5..2"},
             {"verify", "--N", "5", "--checks", "bogus"},
             {"coherence", "--N", "8", "--rows", "1,1"},
             {"identities", "--name", "nope", "--range", "1..2"},
             {"bogus"}}) {
        const Run r = run(args);
        CAPTURE(r.err);
        CHECK(r.code == kExitUsage);
        CHECK(lines(r.err) == 1);
    }
}

TEST_CASE("budget errors exit 3") {
    const Run r = run({"pmf", "--N", "40", "--l", "1", "--m", "20"});
    CHECK(r.code == kExitBudget);
    CHECK(lines(r.err) == 1);
    CHECK(run({"pmf", "--N", "12", "--l", "1", "--m", "6", "--budget", "100"}).code == kExitBudget);
    CHECK(run({"bernoulli", "--N", "30", "--l", "1", "--m", "3"}).code == kExitBudget);
}

TEST_CASE("help") {
    const Run r = run({"pmf", "--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("--budget") != std::string::npos);
}

TEST_CASE("output file") {
    const std::string path = "cli_test_output.json";
    std::remove(path.c_str());
    const Run r = run({"coherence", "--N", "4", "--m", "2", "--output", path});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(nlohmann::json::parse(ss.str())["m"] == 2);
    std::remove(path.c_str());
}

}
