#include "doctest.h"

#include "klein/checks.hpp"
#include "klein/scalars.hpp"

using namespace klein;

namespace {

RunConfig small_config()
{
    RunConfig c;
    c.window = 2;
    c.q_list = {5};
    c.census_n = {2};
    c.coboundary_samples = 3;
    c.module_samples = 5;
    c.coordinate_samples = 5;
    c.free_samples = 10;
    c.topology_samples = 10;
    return c;
}

}  // namespace

TEST_SUITE("checks")
{
    TEST_CASE("config validation")
    {
        CHECK_NOTHROW(RunConfig{}.validate());
        RunConfig c;
        c.q_list = {7};
        CHECK_THROWS_AS(c.validate(), PreconditionError);
        c = RunConfig{};
        c.census_n = {3};
        CHECK_THROWS_AS(c.validate(), PreconditionError);
        c = RunConfig{};
        c.window = 0;
        CHECK_THROWS_AS(c.validate(), PreconditionError);
        c = RunConfig{};
        c.module_samples = 0;
        CHECK_THROWS_AS(c.validate(), PreconditionError);
        CHECK(parse_format("json") == OutputFormat::json);
        CHECK_THROWS_AS(parse_format("yaml"), PreconditionError);
    }

    TEST_CASE("a small run passes and has six suites")
    {
        const auto r = run_verify(small_config());
        CHECK(r.pass());
        CHECK(r.suites.size() == 6);
        CHECK(r.count(CheckStatus::fail) == 0);
        CHECK(r.count(CheckStatus::pass) > 50);
        for (const auto& s : r.suites)
            for (const auto& c : s.checks) {
                CHECK_FALSE(c.id.empty());
                CHECK_FALSE(c.claim.empty());
                CHECK(c.witness.is_null());
            }
    }

    TEST_CASE("JSON report shape and determinism")
    {
        auto cfg = small_config();
        cfg.format = OutputFormat::json;
        const std::string a = render(run_verify(cfg));
        const std::string b = render(run_verify(cfg));
        CHECK(a == b);
        const auto j = nlohmann::json::parse(a);
        CHECK(j.contains("config"));
        CHECK(j["suites"].size() == 6);
        CHECK(j["suites"][0]["name"] == "cocycle");
        CHECK(j["suites"][0]["elapsed"].is_null());
        CHECK(j["suites"][0]["checks"][0].contains("witness"));
        CHECK(j.contains("summary"));
        cfg.seed = 2;
        CHECK(render(run_verify(cfg)) != a);
    }

    TEST_CASE("timings appear only on request")
    {
        auto cfg = small_config();
        cfg.format = OutputFormat::json;
        cfg.timings = true;
        const auto j = nlohmann::json::parse(render(run_verify(cfg)));
        CHECK(j["suites"][0]["elapsed"].is_number());
    }

    TEST_CASE("text report lists every check")
    {
        const auto r = run_verify(small_config());
        const std::string text = r.to_text();
        for (const auto& s : r.suites)
            for (const auto& c : s.checks) CHECK(text.find(c.id) != std::string::npos);
        CHECK(text.find("0 failed") != std::string::npos);
    }
}
