#include "bipermkit/report.hpp"

#include <atomic>
#include <climits>
#include <cstdio>
#include <exception>

#include <omp.h>

namespace bpk {

namespace {

std::atomic<int> g_jobs{1};

std::string guarded(std::function<std::string(long)> const &pred, long i)
{
  try {
    return pred(i);
  } catch (std::exception const &e) {
    return std::string("exception: ") + e.what();
  }
}

} // namespace

void Report::append(Report const &other)
{
  for (auto const &l : other.lines)
    lines.push_back(l);
}

bool Report::ok() const { return failures() == 0; }

long Report::failures() const
{
  long f = 0;
  for (auto const &l : lines)
    f += l.failures;
  return f;
}

long Report::instances() const
{
  long f = 0;
  for (auto const &l : lines)
    f += l.instances;
  return f;
}

CheckLine const *Report::first_failure() const
{
  for (auto const &l : lines)
    if (!l.ok())
      return &l;
  return nullptr;
}

CheckLine const *Report::find(std::string const &id) const
{
  for (auto const &l : lines)
    if (l.id == id)
      return &l;
  return nullptr;
}

nlohmann::json Report::to_json() const
{
  nlohmann::json j;
  j["suite"] = suite;
  auto arr = nlohmann::json::array();
  for (auto const &l : lines) {
    nlohmann::json e;
    e["id"] = l.id;
    e["anchor"] = l.anchor;
    e["status"] = l.ok() ? "pass" : "fail";
    e["instances"] = l.instances;
    e["failures"] = l.failures;
    if (!l.ok())
      e["witness"] = l.witness;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["total_instances"] = instances();
  j["total_failures"] = failures();
  return j;
}

std::string Report::human() const
{
  std::string s = "suite " + suite + "\n";
  for (auto const &l : lines) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%8ld", l.instances);
    s += (l.ok() ? "  PASS " : "  FAIL ") + std::string(buf) + "  " + l.id +
         "  (" + l.anchor + ")\n";
    if (!l.ok())
      s += "        " + std::to_string(l.failures) + " failing, first: " +
           l.witness + "\n";
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "  total %ld instances, %ld failures\n", instances(),
                failures());
  return s + buf;
}

int jobs() { return g_jobs.load(); }

void set_jobs(int n) { g_jobs.store(n < 1 ? 1 : n); }

CheckLine run_check_serial(std::string id, std::string anchor, long n,
                           std::function<std::string(long)> const &pred)
{
  CheckLine l{std::move(id), std::move(anchor), n, 0, ""};
  for (long i = 0; i < n; ++i) {
    std::string w = guarded(pred, i);
    if (!w.empty()) {
      if (l.failures == 0)
        l.witness = w;
      ++l.failures;
    }
  }
  return l;
}

CheckLine run_check(std::string id, std::string anchor, long n,
                    std::function<std::string(long)> const &pred)
{
  int nj = jobs();
  if (nj <= 1 || n < 2 || omp_in_parallel())
    return run_check_serial(std::move(id), std::move(anchor), n, pred);

  long failures = 0;
  long first = LONG_MAX;
  std::string witness;
#pragma omp parallel num_threads(nj)
  {
    long lf = 0, lfirst = LONG_MAX;
    std::string lw;
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      std::string w = guarded(pred, i);
      if (!w.empty()) {
        ++lf;
        if (i < lfirst) {
          lfirst = i;
          lw = std::move(w);
        }
      }
    }
#pragma omp critical
    {
      failures += lf;
      if (lfirst < first) {
        first = lfirst;
        witness = std::move(lw);
      }
    }
  }
  return CheckLine{std::move(id), std::move(anchor), n, failures, witness};
}

CheckLine single_check(std::string id, std::string anchor, bool ok,
                       std::string witness)
{
  return CheckLine{std::move(id), std::move(anchor), 1, ok ? 0 : 1,
                   ok ? "" : std::move(witness)};
}

} // namespace bpk
