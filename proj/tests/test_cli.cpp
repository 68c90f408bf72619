#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "qloop/cli.hpp"
#include "qloop/errors.hpp"
#include "qloop/verify.hpp"

using namespace qloop;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<const char*> args) {
    args.insert(args.begin(), "qloop");
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("word and list parsing") {
    CHECK(cli::parse_word("2:0, 1:-1", 2) == Word{{1, 0}, {0, -1}});
    CHECK(cli::word_str({{1, 0}, {0, -1}}) == "2:0,1:-1");
    CHECK_THROWS_AS(cli::parse_word("3:0", 2), ConfigError);
    CHECK_THROWS_AS(cli::parse_word("1-0", 2), ConfigError);
    CHECK(cli::parse_int_list("1, -2,3") == std::vector<int>{1, -2, 3});
    CHECK_THROWS_AS(cli::parse_int_list("1,x"), ConfigError);
}

TEST_CASE("selftest") {
    auto r = run({"selftest", "--type", "A2"});
    CHECK(r.code == cli::kOk);
    auto j = json::parse(r.out);
    CHECK(j["schema"] == cli::kReportSchema);
    bool saw_residue = false;
    for (const auto& c : j["checks"]) {
        if (c["id"] == "a2.residue") {
            saw_residue = true;
            CHECK(c["values"]["value"] == "(q*x^-1)/((q - q^-1))");
        }
    }
    CHECK(saw_residue);
    CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("minimal pairs and AR quiver") {
    auto r = run({"minimal-pairs", "--type", "A2", "--orientation", "1>2"});
    REQUIRE(r.code == cli::kOk);
    auto pairs = json::parse(r.out)["result"]["pairs"];
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0]["alpha"] == json{1, 0});
    CHECK(pairs[0]["beta"] == json{0, 1});

    auto ar = json::parse(run({"ar-quiver", "--type", "A3", "--orientation", "1>2,2>3"}).out);
    std::string order;
    for (int r : ar["result"]["refinement"]) order += (order.empty() ? "" : ",") + std::to_string(r);
    auto o = run({"minimal-pairs", "--type", "A3", "--orientation", "1>2,2>3", "--order", order.c_str()});
    CHECK(o.code == cli::kOk);
    CHECK(json::parse(o.out)["summary"]["failed"] == 0);
    CHECK(run({"minimal-pairs", "--type", "A3", "--order", "0,1,2,3,4,5"}).code == cli::kConfigError);

    auto dot = run({"ar-quiver", "--type", "A2", "--format", "dot"});
    CHECK(dot.code == cli::kOk);
    CHECK(dot.out.rfind("digraph ar {", 0) == 0);
    CHECK(dot.out.find("r1 -> r2;") != std::string::npos);
}

TEST_CASE("config errors exit 2") {
    CHECK(run({"selftest", "--orientation", "1>2,2>1"}).code == cli::kConfigError);
    CHECK(run({"roots", "--type", "B2"}).code == cli::kConfigError);
    CHECK(run({"shuffle-mul", "--word", "3:0"}).code == cli::kConfigError);
    CHECK(run({"verify-fusion", "--degrees", "2..1"}).code == cli::kConfigError);
    CHECK(run({"paths", "enumerate", "--size", "2,0", "--bound", "(1,0)"}).code == cli::kConfigError);
    CHECK(run({"nonsense"}).code == cli::kConfigError);
    CHECK(run({}).code == cli::kConfigError);
}

TEST_CASE("subcommand outputs") {
    auto sm = json::parse(run({"shuffle-mul", "--word", "2:0,1:0"}).out);
    CHECK(sm["result"]["numerator"] == "q*z1_1 - z2_1");
    auto pr = json::parse(run({"pairing", "--element", "2:0,1:0", "--word", "2:0,1:0"}).out);
    CHECK(pr["result"]["value"] == "1");
    auto sp = json::parse(run({"spec", "--word", "2:0,1:0", "--v", "1,0", "--w", "0,1"}).out);
    CHECK(sp["result"]["two_point"]["residue"] == sp["result"]["spec"]);
    CHECK(sp["summary"]["failed"] == 0);
    auto pe = json::parse(run({"paths", "enumerate", "--size", "2,0", "--bound", "(2,0)"}).out);
    CHECK(pe["result"]["paths"] == json::array({json::array({json::array({2, 0})})}));
    auto pc = json::parse(run({"paths", "convexify", "--legs", "(1,1),(1,-1)"}).out);
    CHECK(pc["result"]["area"] == "2");
}

TEST_CASE("verify-fusion report is deterministic") {
    auto a = run({"verify-fusion", "--type", "A3", "--window", "1", "--degrees", "-1..1", "--threads", "1"});
    auto b = run({"verify-fusion", "--type", "A3", "--window", "1", "--degrees", "-1..1", "--threads", "3"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(j["result"]["failures"] == 0);
    CHECK(j["result"]["records"] == j["checks"].size());
}

TEST_CASE("verification grid") {
    FusionConfig cfg;
    cfg.window = 1;
    cfg.d_min = 0;
    cfg.d_max = 0;
    auto run1 = verify_fusion(QuiverOrientation::parse(DynkinType::parse("A2"), "1>2"), cfg);
    REQUIRE(run1.pairs.size() == 1);
    CHECK(run1.failures == 0);
    CHECK(run1.records.size() == 6);
    cfg.pair = 3;
    CHECK_THROWS_AS(verify_fusion(QuiverOrientation::parse(DynkinType::parse("A2"), "1>2"), cfg), std::out_of_range);

    std::vector<int> hits(100, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK_THROWS_AS(parallel_for(10, 2, [](std::size_t i) {
                        if (i == 5) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
}
