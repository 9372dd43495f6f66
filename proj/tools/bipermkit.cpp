#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bipermkit/gamma.hpp"
#include "bipermkit/gro.hpp"
#include "bipermkit/report.hpp"
#include "bipermkit/serialize.hpp"
#include "bipermkit/suites.hpp"

using namespace bpk;

namespace {

struct Options
{
  SuiteConfig cfg;
  std::string input;
  std::string format = "human";
  int jobs = 1;
  bool check_terminal = false;
  bool seed_given = false;
};

struct Output
{
  std::string command;
  std::vector<Report> reports;
  Json tables;  // null unless the command emits a category

  bool ok() const
  {
    for (auto const &r : reports)
      if (!r.ok())
        return false;
    return true;
  }
};

std::uint64_t env_seed()
{
  char const *s = std::getenv("BIPERMKIT_SEED");
  if (!s || !*s)
    return 1;
  try {
    return std::stoull(s);
  } catch (std::exception const &) {
    throw ParseError(std::string("BIPERMKIT_SEED is not a non-negative integer: ") + s);
  }
}

template <class F>
Report timed(F f)
{
  auto t0 = std::chrono::steady_clock::now();
  Report r = f();
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json config_json(Options const &o)
{
  auto const &c = o.cfg;
  return Json{{"instance", c.instance}, {"input", o.input}, {"size", c.size},
              {"len", c.len},           {"max", c.max},     {"trunc", c.trunc},
              {"arity", c.arity},       {"seed", c.seed}};
}

void emit(Output const &out, Options const &o)
{
  if (o.format == "machine") {
    Json j;
    j["command"] = out.command;
    j["config"] = config_json(o);
    Json rs = Json::array();
    for (auto const &r : out.reports)
      rs.push_back(r.to_json());
    j["reports"] = rs;
    if (!out.tables.is_null())
      j["category"] = out.tables;
    j["status"] = out.ok() ? "pass" : "fail";
    std::cout << dump(j);
    return;
  }
  if (!out.tables.is_null()) {
    std::cout << "category: " << out.tables["objects"].size() << " objects, "
              << out.tables["morphisms"].size() << " morphisms\n";
    for (auto const &x : out.tables["objects"])
      std::cout << "  " << x.dump() << "\n";
  }
  for (auto const &r : out.reports) {
    std::cout << r.human();
    std::fprintf(stderr, "%s: %.3f s\n", r.suite.c_str(), r.elapsed);
  }
  std::cout << (out.ok() ? "PASS" : "FAIL") << "\n";
}

std::vector<Obj> dobjects(BipermPtr const &d, SuiteConfig const &c)
{
  return d->objects(bound_of(c));
}

Output cmd_verify(Options const &o)
{
  Output out{"verify", {}, {}};
  if (o.input.empty()) {
    out.reports.push_back(timed([&] { return suite_instance(o.cfg); }));
    return out;
  }
  Json j = load_json_file(o.input);
  std::string kind = j.is_object() && j.contains("kind") ? j["kind"].get<std::string>() : "category";
  if (kind == "category") {
    FinCategory c = category_from_json(j);
    out.reports.push_back(timed([&] { return verify_category(c); }));
  } else if (kind == "additive-smf") {
    std::vector<Obj> bound;
    auto x = smf_from_json(j, &bound);
    DSample s;
    s.dobjs = bound;
    s.seed = o.cfg.seed;
    out.reports.push_back(timed([&] { return check_additive_smf(*x, s); }));
  } else if (kind == "gamma") {
    auto x = gamma_from_json(j);
    out.reports.push_back(timed([&] { return check_gamma(*x, 300, o.cfg.seed); }));
  } else {
    throw ParseError("unknown kind \"" + kind + "\"");
  }
  return out;
}

Output cmd_grothendieck(Options const &o)
{
  Output out{"grothendieck", {}, {}};
  AsmfPtr x;
  std::vector<Obj> bound;
  if (!o.input.empty()) {
    x = smf_from_json(load_json_file(o.input), &bound);
  } else {
    auto d = instance_by_name(o.cfg.instance);
    x = std::make_shared<ConstUnitSMF>(d);
    bound = dobjects(d, o.cfg);
  }
  DSample s;
  s.dobjs = bound;
  s.seed = o.cfg.seed;
  Report pre = timed([&] { return check_additive_smf(*x, s); });
  out.reports.push_back(pre);
  if (!pre.ok()) {
    std::cerr << "refused: the input is not an additive symmetric monoidal functor\n";
    return out;
  }
  GroContext ctx(bound);
  auto g = ctx.category(x);
  out.tables = category_tables(*g, g->objects());
  out.reports.push_back(timed([&] { return suite_grothendieck(x, bound, o.cfg.seed); }));
  return out;
}

Output cmd_invk(Options const &o)
{
  Output out{"invk", {}, {}};
  if (o.input.empty())
    throw ParseError("invk needs --input with a Gamma-category");
  auto x = gamma_from_json(load_json_file(o.input));
  if (o.cfg.max > x->trunc())
    throw BoundError("sequence entries up to " + std::to_string(o.cfg.max) +
                     " need the Gamma-category up to <" + std::to_string(o.cfg.max) +
                     ">, but it is truncated at " + std::to_string(x->trunc()));
  auto dA = instance_mandellA();
  DBound b{0, o.cfg.len, o.cfg.max};
  auto dobjs = dA->objects(b);
  out.reports.push_back(timed([&] { return check_gamma(*x, 300, o.cfg.seed); }));
  InverseK P(dobjs);
  DSample s;
  s.dobjs = dobjs;
  s.seed = o.cfg.seed;
  out.reports.push_back(timed([&] { return check_additive_smf(*P.A().object(x), s); }));
  auto px = P.object(x);
  auto objs = px->objects();
  out.tables = category_tables(*px, objs);
  out.reports.push_back(timed([&] {
    Report r = check_permutative(*px, objs, {}, "PX");
    return r;
  }));
  if (o.check_terminal)
    out.reports.push_back(
        timed([&] { return check_P_terminal(px, std::make_shared<DCategory>(dA, b)); }));
  return out;
}

Output cmd_suite(std::string const &name, Options const &o)
{
  Output out{name, {}, {}};
  if (name == "preimage")
    out.reports.push_back(timed([&] { return suite_roundtrip(o.cfg, 10); }));
  else if (name == "pseudo") {
    out.reports.push_back(timed([&] { return suite_gro_multifunctor(o.cfg, 12); }));
    out.reports.push_back(timed([&] { return suite_inverse_k(o.cfg, false); }));
  } else if (name == "einfty")
    out.reports.push_back(timed([&] { return suite_einfty(o.cfg); }));
  return out;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"bipermkit: finite checks for bipermutative categories, D-Cat, "
               "Grothendieck constructions and inverse K-theory"};
  app.require_subcommand(1, 1);
  Options o;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App *s) {
    s->add_option("--instance", o.cfg.instance, "finsk, fset, fskel, mandellA, natdisc")
        ->capture_default_str();
    s->add_option("--input", o.input, "JSON input file");
    s->add_option("--size", o.cfg.size, "object bound for number-like instances")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s->add_option("--len", o.cfg.len, "sequence length bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s->add_option("--max", o.cfg.max, "sequence entry bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s->add_option("--trunc", o.cfg.trunc, "Gamma truncation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s->add_option("--arity", o.cfg.arity, "largest outer arity")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
    s->add_option("--seed", seed, "sampling seed (default: BIPERMKIT_SEED, else 1)")
        ->each([&](std::string const &) { o.seed_given = true; });
    s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    s->add_option("--format", o.format, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}))
        ->capture_default_str();
  };

  std::vector<std::pair<std::string, std::string>> cmds{
      {"verify", "bipermutative and Laplaza suites, or check an input file"},
      {"grothendieck", "build the Grothendieck construction of an additive functor"},
      {"invk", "inverse K-theory of a Gamma-category"},
      {"preimage", "round trips of the Grothendieck multifunctor"},
      {"pseudo", "pseudo symmetry suites"},
      {"einfty", "E-infinity algebras and their images"}};
  for (auto const &[n, d] : cmds) {
    auto *s = app.add_subcommand(n, d);
    add_common(s);
    if (n == "invk")
      s->add_flag("--check-terminal", o.check_terminal, "verify P(terminal) against the sequence instance");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e);
  }

  try {
    o.cfg.seed = o.seed_given ? seed : env_seed();
    set_jobs(o.jobs);
    std::string name = app.get_subcommands().front()->get_name();
    Output out;
    if (name == "verify")
      out = cmd_verify(o);
    else if (name == "grothendieck")
      out = cmd_grothendieck(o);
    else if (name == "invk")
      out = cmd_invk(o);
    else
      out = cmd_suite(name, o);
    emit(out, o);
    return out.ok() ? 0 : 1;
  } catch (ParseError const &e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (BoundError const &e) {
    std::cerr << "bound error: " << e.what() << "\n";
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
