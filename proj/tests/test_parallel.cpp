#include <doctest.h>

#include "bipermkit/report.hpp"
#include "bipermkit/suites.hpp"

using namespace bpk;

namespace {

struct JobsGuard
{
  int saved = jobs();
  ~JobsGuard() { set_jobs(saved); }
};

std::string pred(long i)
{
  if (i % 97 == 13)
    return "bad " + std::to_string(i);
  return "";
}

} // namespace

TEST_CASE("parallel check agrees with the serial reference")
{
  JobsGuard g;
  for (int j : {1, 2, 4, 7}) {
    set_jobs(j);
    for (long n : {0L, 1L, 13L, 14L, 1000L}) {
      CheckLine a = run_check("x", "y", n, pred);
      CheckLine b = run_check_serial("x", "y", n, pred);
      CHECK(a.instances == b.instances);
      CHECK(a.failures == b.failures);
      CHECK(a.witness == b.witness);
    }
  }
  // first witness is the smallest failing index
  CHECK(run_check_serial("x", "y", 1000, pred).witness.find("13") != std::string::npos);
}

TEST_CASE("exceptions become failures")
{
  CheckLine l = run_check("x", "y", 5, [](long i) -> std::string {
    if (i == 3)
      throw std::runtime_error("boom");
    return "";
  });
  CHECK(l.failures == 1);
  CHECK(l.witness.find("boom") != std::string::npos);
}

TEST_CASE("report output does not depend on the worker count")
{
  JobsGuard g;
  SuiteConfig c;
  c.arity = 2;
  set_jobs(1);
  std::string one = suite_roundtrip(c, 4).to_json().dump();
  set_jobs(3);
  std::string three = suite_roundtrip(c, 4).to_json().dump();
  CHECK(one == three);
}

TEST_CASE("report aggregation")
{
  Report r;
  r.add(single_check("a", "A", true));
  r.add(single_check("b", "B", false, "w"));
  CHECK_FALSE(r.ok());
  CHECK(r.failures() == 1);
  CHECK(r.first_failure()->id == "b");
  CHECK(r.find("a")->ok());
  auto j = r.to_json();
  CHECK(j["checks"].size() == 2);
  CHECK(r.human().find("total 2 instances, 1 failures") != std::string::npos);
}
