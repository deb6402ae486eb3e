#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "pmlv/cli.hpp"
#include "pmlv/lvalues.hpp"

using namespace pmlv;
using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run_job(const JobConfig& c)
{
    std::ostringstream out, err;
    const int status = run(c, out, err);
    return {status, out.str(), err.str()};
}

JobConfig job(const std::string& command)
{
    JobConfig c;
    c.command = command;
    c.timing = false;
    return c;
}

} // namespace

TEST_CASE("eval writes the documented JSON schema")
{
    JobConfig c = job("eval");
    c.weights = {1};
    c.truncation = 100000;
    const auto r = run_job(c);
    REQUIRE(r.status == kExitOk);
    const auto doc = json::parse(r.out);
    CHECK(doc["command"] == "eval");
    CHECK(doc["inputs"]["weights"] == json::array({1}));
    CHECK(doc.contains("error_estimate"));
    CHECK_FALSE(doc.contains("runtime_ms"));
    const std::string re = doc["result"]["value"]["re"];
    CHECK(re.rfind("-6.9314718055994", 0) == 0);
    CHECK(doc["result"]["convergence"] == "conditional");

    c.timing = true;
    CHECK(json::parse(run_job(c).out).contains("runtime_ms"));
}

TEST_CASE("identical configs give identical bytes")
{
    JobConfig c = job("closed");
    c.n = 3;
    c.k = 3;
    const auto a = run_job(c), b = run_job(c);
    CHECK(a.out == b.out);
    JobConfig e = job("eval");
    e.n = 2;
    e.k = 2;
    e.truncation = 1000;
    CHECK(run_job(e).out == run_job(e).out);
}

TEST_CASE("closed --normalize")
{
    JobConfig c = job("closed");
    c.n = 2;
    c.k = 3;
    c.normalize = true;
    const auto doc = json::parse(run_job(c).out);
    CHECK(doc["result"]["rendered"] == "-1/30240*pi^6");
    c.output = "text";
    c.normalize = false;
    CHECK(run_job(c).out == "7/32*zeta(2)*zeta(4) - 1/48*zeta(2)^3 - 31/96*zeta(6)\n");
}

TEST_CASE("closed output round-trips against eval")
{
    for (int n = 1; n <= 3; ++n) {
        JobConfig c = job("closed");
        c.n = n;
        c.k = 2;
        const auto closed = json::parse(run_job(c).out);
        const SymbolicValue v = symbolic_from_json(closed["result"]);
        JobConfig e = job("eval");
        e.n = n;
        e.k = 2;
        e.truncation = 100000;
        const auto ev = json::parse(run_job(e).out);
        const Real value = Real::parse(ev["result"]["value"]["re"], bits_for_digits(30));
        const Real est = Real::parse(ev["error_estimate"], bits_for_digits(30));
        CHECK(abs(value - numeric_eval(v, 30)) <= max(est, Real::parse("1e-20", bits_for_digits(30))));
    }
}

TEST_CASE("closed forms")
{
    JobConfig c = job("closed");
    c.n = 4;
    c.k = 2;
    c.form = "plethysm";
    const auto doc = json::parse(run_job(c).out);
    CHECK(doc["result"]["rendered"] == "-19/3628800*pi^8");
}

TEST_CASE("genfun")
{
    JobConfig c = job("genfun");
    c.series = "P2";
    c.n = 3;
    c.order = 3;
    auto doc = json::parse(run_job(c).out);
    REQUIRE(doc["result"].size() == 4);
    CHECK(doc["result"][3]["degree"] == 3);
    CHECK(doc["result"][3]["rendered"] == "-3/4*zeta(3)");

    c.series = "U";
    c.N = 3;
    c.M = 2;
    c.n = 1;
    c.order = 4;
    const auto bad = run_job(c);
    CHECK(bad.status == kExitUsage);
    CHECK(bad.err.find("M | N") != std::string::npos);
    c.mode = "numeric";
    CHECK(run_job(c).status == kExitOk);
}

TEST_CASE("verify reports and exit codes")
{
    JobConfig c = job("verify");
    c.suite = "bernoulli";
    auto r = run_job(c);
    CHECK(r.status == kExitOk);
    auto doc = json::parse(r.out);
    CHECK(doc["result"]["pass"] == true);
    CHECK(doc["result"]["checks"].size() >= 18);

    c.suite = "plethysm";
    c.output = "csv";
    r = run_job(c);
    CHECK(r.out.rfind("suite,name,pass,gap,tolerance\n", 0) == 0);

    c.suite = "nonsense";
    CHECK(run_job(c).status == kExitUsage);
}

TEST_CASE("usage errors")
{
    JobConfig c = job("eval");
    c.digits = 5;
    auto r = run_job(c);
    CHECK(r.status == kExitUsage);
    CHECK(r.err.find("precision") != std::string::npos);
    c.digits = 30;
    c.truncation = 5;
    CHECK(run_job(c).status == kExitUsage);
    c.truncation = 1000;
    c.M = 1;
    c.weights = {1};
    CHECK(run_job(c).status == kExitUsage);
    CHECK(run_job(job("frobnicate")).status == kExitUsage);
}

TEST_CASE("table")
{
    JobConfig c = job("table");
    c.n = 2;
    c.k = 2;
    c.output = "csv";
    const auto r = run_job(c);
    CHECK(r.out.rfind("n,k,closed_form,value\n1,1,-log2,", 0) == 0);
    c.mode = "numeric";
    c.truncation = 10000;
    c.output = "json";
    const auto doc = json::parse(run_job(c).out);
    REQUIRE(doc["result"].size() == 4);
    CHECK(doc["result"][3].contains("gap"));
}

TEST_CASE("environment defaults")
{
    JobConfig c;
    setenv("PMLV_PRECISION", "40", 1);
    setenv("PMLV_T", "5000", 1);
    apply_environment(c);
    CHECK(c.digits == 40);
    CHECK(c.truncation == 5000);
    setenv("PMLV_T", "lots", 1);
    CHECK_THROWS(apply_environment(c));
    unsetenv("PMLV_PRECISION");
    unsetenv("PMLV_T");
}
