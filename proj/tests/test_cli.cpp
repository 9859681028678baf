#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(ARCINV_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(ARCINV_DATA) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("qpers on a divisorial arc") {
    const auto r = run("qpers --surface " + data("example72.surface") + " --arc " + data("a10.arc") + " --format machine");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["r"] == "2");
    CHECK(doc["nu"] == 2);
    CHECK(doc["r_bar"] == "1");
}

TEST_CASE("qpers with a user presentation and limit table") {
    const auto r = run("qpers --surface " + data("example72.surface") + " --arc " + data("a11.arc") +
                       " --presentation " + data("example72_user.pres") + " --n-max 4 --format machine");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["r_bar"] == "6/5");
    CHECK(doc["limit_check"]["rows"].size() == 4);
    CHECK(doc["limit_check"]["rows"][3]["rho_n"] == 24);
    CHECK(doc["verdict"] == "pass");
}

TEST_CASE("contact components") {
    const auto r = run("contact --resolution " + data("example72.res") + " --m 13 --bound 40");
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "components      (2,3) (5,1)"));
    CHECK(contains(r.out, "delta           14/13"));
    const auto c = run("contact --resolution " + data("almost_rees.res") + " --m 3");
    CHECK(c.code == 0);
    CHECK(contains(c.out, "candidates"));
    CHECK(!contains(c.out, "components"));
}

TEST_CASE("tight bound is inconclusive") {
    const auto r = run("contact --resolution " + data("almost_rees.res") + " --m 4 --bound 4");
    CHECK(r.code == 4);
    CHECK(contains(r.out, "warning"));
}

TEST_CASE("delta table") {
    const auto r = run("contact --resolution " + data("example72.res") + " --m-max 20 --bound 25 --format machine");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["delta_table"]["rows"][12]["delta"] == "14/13");
    CHECK(doc["verdict"] == "pass");
}

TEST_CASE("bounds") {
    const auto r = run("bounds --resolution " + data("example72.res"));
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "upper           6/5"));
    CHECK(contains(r.out, "6/5 at (1,1) (attained)"));
}

TEST_CASE("nash trace") {
    const auto r = run("nash --surface " + data("cusp.surface") + " --arc " + data("cusp.arc") + " --trace --format machine");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rho"] == 3);
    CHECK(doc["trace"].size() == 3);
    CHECK(doc["trace"][2]["multiplicity"] == 1);
    const auto t = run("nash --surface " + data("node.surface") + " --arc " + data("node.arc"));
    CHECK(t.code == 0);
    CHECK(contains(t.out, "rho             1"));
}

TEST_CASE("exit codes") {
    CHECK(run("qpers --surface " + data("missing.surface") + " --arc " + data("a10.arc")).code == 2);
    CHECK(run("qpers --surface").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("qpers --surface " + data("node.surface") + " --arc " + data("a10.arc")).code == 3);
    CHECK(run("nash --surface " + data("cusp.surface") + " --arc " + data("cusp.arc") + " --budget 0").code == 3);
    CHECK(run("nash --surface " + data("example72.surface") + " --arc " + data("a11.arc") + " --budget 3").code == 4);
    CHECK(run("contact --resolution " + data("example72.res")).code == 3);
    CHECK(run("verify nosuch").code == 3);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const std::string args :
         {"qpers --surface " + data("cusp.surface") + " --arc " + data("rational.arc") + " --n-max 6",
          "contact --resolution " + data("example72.res") + " --m-max 30 --bound 34 --format machine",
          "nash --surface " + data("example72.surface") + " --arc " + data("a11.arc") + " --trace"}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verify") {
    const auto r = run("verify example72 --format machine");
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["criteria"].size() == 8);
    for (const auto& c : doc["criteria"]) CHECK_MESSAGE(c["passed"] == true, c["title"].get<std::string>());
}

}
