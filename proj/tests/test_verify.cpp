#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bruhat/verify.hpp"

using namespace bruhat;

TEST_CASE("all sweeps pass at n = 3") {
    SweepOptions opt;
    opt.n = 3;
    opt.samples = 16;
    for (const std::string& name : theorem_names()) {
        SweepResult res = verify_theorem(name, opt);
        CHECK_MESSAGE(res.ok(), res.theorem, " ",
                      res.failure_details.empty() ? "" : res.failure_details[0]);
        CHECK(res.instances > 0);
    }
}

TEST_CASE("serial reference and parallel sweeps agree") {
    for (const std::string& name : {std::string("relations"), std::string("tensor"),
                                    std::string("twist-table")}) {
        SweepOptions serial;
        serial.n = 3;
        serial.jobs = 1;
        SweepOptions parallel = serial;
        parallel.jobs = 0;
        SweepResult a = verify_theorem(name, serial);
        SweepResult b = verify_theorem(name, parallel);
        CHECK(a.instances == b.instances);
        CHECK(a.failures == b.failures);
        CHECK(a.failure_details == b.failure_details);
    }
}

TEST_CASE("acceptance-only sweeps at small bounds") {
    SweepOptions opt;
    opt.n = 3;
    opt.samples = 8;
    CHECK(verify_zero_criterion(opt).ok());
    CHECK(verify_characteristic(opt).ok());
    CHECK(verify_indecomposability(opt).ok());
    CHECK(verify_descent_iso(opt).ok());
}

TEST_CASE("a deliberately broken task is reported") {
    std::vector<SweepTask> tasks;
    tasks.push_back([](std::string&) { return true; });
    tasks.push_back([](std::string& why) {
        why = "intentional";
        return false;
    });
    tasks.push_back([](std::string&) -> bool { throw std::runtime_error("boom"); });
    SweepResult res = run_tasks("negative-control", tasks, 1);
    CHECK(res.instances == 3);
    CHECK(res.failures == 2);
    REQUIRE(res.failure_details.size() == 2);
    CHECK(res.failure_details[0] == "task 1: intentional");
    CHECK(res.failure_details[1] == "task 2: exception: boom");
}

TEST_CASE("determinism under a fixed seed") {
    SweepOptions opt;
    opt.n = 3;
    opt.seed = 7;
    opt.samples = 8;
    SweepResult a = verify_theorem("twist-functoriality", opt);
    SweepResult b = verify_theorem("twist-functoriality", opt);
    CHECK(a.instances == b.instances);
    CHECK(a.failures == b.failures);
}
