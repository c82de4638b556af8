#include "doctest.h"

#include "jml/report.hpp"

using namespace jml;
using nlohmann::json;

namespace {

bool mentions(const std::vector<Diagnostic>& ds, const std::string& text)
{
    for (const auto& d : ds)
        if ((d.path + ": " + d.message).find(text) != std::string::npos)
            return true;
    return false;
}

}  // namespace

TEST_CASE("bundled examples validate and agree")
{
    auto names = exampleNames();
    CHECK(names.size() >= 8);
    for (const auto& n : names) {
        CAPTURE(n);
        auto j = example(n);
        auto ds = validate(j);
        CHECK(ds.empty());
        RunOptions o;
        o.witnesses = false;
        auto r = runPipelines(parseDocument(j), o);
        CHECK(r.failures.empty());
        CHECK(r.allAgree());
    }
}

TEST_CASE("unknown example lists the names")
{
    CHECK_THROWS_WITH_AS(example("nope"), doctest::Contains("heisenberg"), std::invalid_argument);
}

TEST_CASE("structural errors carry a path")
{
    json j = example("heisenberg");
    j["u"] = json::array({1});
    auto ds = validate(j);
    CHECK(!ds.empty());
    CHECK(mentions(ds, "/u"));

    j = example("heisenberg");
    j["representation"]["generators"][2]["xi"] = 0;
    CHECK(mentions(validate(j), "xi = 1"));

    j = example("heisenberg");
    j["representation"]["generators"][0]["matrix"] = "2";
    CHECK(mentions(validate(j), "u b u^-1 b^-1 a^-1"));

    j = example("heisenberg");
    j["queries"]["lambda"] = json::array({"(t-1)^2"});
    CHECK(!validate(j).empty());

    CHECK_THROWS_AS(parseDocument(json::object()), DocumentError);
}

TEST_CASE("corrupted lifts are caught")
{
    for (const auto& n : corruptionNames()) {
        CAPTURE(n);
        auto j = corruption(n);
        auto ds = validate(j);
        if (!ds.empty())
            continue;
        RunOptions o;
        o.witnesses = false;
        CHECK(!runPipelines(parseDocument(j), o).allAgree());
    }
}

TEST_CASE("reports are deterministic and exact")
{
    auto doc = parseDocument(example("anosov"));
    auto a = toJson(runPipelines(doc)).dump();
    auto b = toJson(runPipelines(doc)).dump();
    CHECK(a == b);
    CHECK(a.find("\"verdict\"") != std::string::npos);
    CHECK(a.find("timing_ms") == std::string::npos);
    RunOptions timed;
    timed.timing = true;
    CHECK(toJson(runPipelines(doc, timed)).dump().find("timing_ms") != std::string::npos);
    CHECK(matrixJson(Mat{{Scalar(mpq_class(1, 3)), Scalar(mpq_class(0), mpq_class(-1))}}).dump() ==
          R"([["1/3","-i"]])");
}

TEST_CASE("query restriction")
{
    auto doc = parseDocument(example("heisenberg"));
    RunOptions o;
    o.lambdas = {"1"};
    o.degrees = {1};
    o.pipelines = {"P1", "P2"};
    auto r = runPipelines(doc, o);
    REQUIRE(r.entries.size() == 1);
    CHECK(r.entries[0].degree == 1);
    CHECK(r.entries[0].J == 2);
    CHECK(!r.entries[0].M.has_value());
    CHECK(r.allAgree());
}
