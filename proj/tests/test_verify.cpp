#include <doctest.h>

#include "sbond/error.hpp"
#include "sbond/verify.hpp"

using namespace sbond;

TEST_CASE("parallel_map keeps index order and rethrows the first failure") {
  const auto squares = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  REQUIRE(squares.size() == 100);
  for (std::size_t i = 0; i < squares.size(); ++i) CHECK(squares[i] == static_cast<int>(i * i));

  CHECK_THROWS_WITH(parallel_map<int>(10, 3,
                                      [](std::size_t i) -> int {
                                        if (i == 4 || i == 7) throw std::runtime_error("job " + std::to_string(i));
                                        return 0;
                                      }),
                    "job 4");
}

TEST_CASE("suites pass on reduced parameters") {
  SuiteParams p;
  p.threads = 2;
  p.max_n = 4;
  p.max_k = 2;
  p.samples = 20;
  p.sample_n = 5;
  p.family_k = 3;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto r = run_suite(name, p);
    CHECK(r.suite == name);
    CHECK(r.cases_run > 0);
    CHECK(r.ok());
    CHECK(r.cases_passed + r.failures.size() == r.cases_run);
  }
}

TEST_CASE("suite reports are deterministic across thread counts") {
  SuiteParams one;
  one.threads = 1;
  one.max_n = 4;
  one.samples = 30;
  SuiteParams many = one;
  many.threads = 4;
  for (const char* name : {"stepwise", "trees", "compose"}) {
    const auto a = run_suite(name, one);
    const auto b = run_suite(name, many);
    CHECK(a.cases_run == b.cases_run);
    CHECK(a.notes == b.notes);
  }
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_suite("nope", {}), Error);
}
