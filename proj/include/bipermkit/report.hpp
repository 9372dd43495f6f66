#ifndef BIPERMKIT_REPORT_HPP
#define BIPERMKIT_REPORT_HPP

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bpk {

// One axiom checked over a family of instances.
struct CheckLine
{
  std::string id;
  std::string anchor;
  long instances = 0;
  long failures = 0;
  std::string witness;  // first failing instance, by index

  bool ok() const { return failures == 0; }
};

struct Report
{
  std::string suite;
  std::vector<CheckLine> lines;
  double elapsed = 0;  // seconds; not part of either output form

  void add(CheckLine l) { lines.push_back(std::move(l)); }
  void append(Report const &other);
  bool ok() const;
  long failures() const;
  long instances() const;
  // First failing line or nullptr.
  CheckLine const *first_failure() const;
  CheckLine const *find(std::string const &id) const;

  nlohmann::json to_json() const;
  std::string human() const;
};

// Worker count for checks; 1 runs the serial reference path.
int jobs();
void set_jobs(int n);

// Evaluates pred(i) for i in [0, n). pred returns "" on success and a witness
// otherwise. The result does not depend on the worker count.
CheckLine run_check(std::string id, std::string anchor, long n,
                    std::function<std::string(long)> const &pred);

// Serial reference used to test run_check.
CheckLine run_check_serial(std::string id, std::string anchor, long n,
                           std::function<std::string(long)> const &pred);

// A single boolean instance.
CheckLine single_check(std::string id, std::string anchor, bool ok,
                       std::string witness = "");

} // namespace bpk

#endif
