#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bipermkit/biperm.hpp"
#include "bipermkit/perm.hpp"
#include "bipermkit/report.hpp"
#include "bipermkit/suites.hpp"
#include "oracles.hpp"

using namespace bpk;

namespace {

struct Outcome
{
  bool ok = true;
  std::string note;
};

void fail(Outcome &o, std::string const &what)
{
  if (o.ok)
    o.note = what;
  o.ok = false;
}

void need(Outcome &o, Report const &r)
{
  if (auto const *l = r.first_failure())
    fail(o, r.suite + ": " + l->id + ": " + l->witness);
}

void need_line(Outcome &o, Report const &r, std::string const &id)
{
  auto const *l = r.find(id);
  if (!l)
    fail(o, r.suite + ": missing line " + id);
  else if (!l->ok())
    fail(o, r.suite + ": " + id + ": " + l->witness);
}

double total_seconds = 0;

bool criterion(int n, std::string const &what, double limit, std::function<Outcome()> body)
{
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (std::exception const &e) {
    fail(o, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (n <= 9)
    total_seconds += secs;
  if (limit > 0 && secs > limit)
    fail(o, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
  std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", n, o.ok ? "PASS" : "FAIL", what.c_str(),
              secs, o.note.empty() ? "" : ": ", o.note.c_str());
  std::fflush(stdout);
  return o.ok;
}

SuiteConfig base_config()
{
  SuiteConfig c;
  c.instance = "mandellA";
  c.len = 2;
  c.max = 3;
  c.trunc = 3;
  c.arity = 3;
  c.seed = 1;
  return c;
}

} // namespace

int main()
{
  bool all = true;

  all &= criterion(1, "permutation formulas against brute-force oracles", 5, [] {
    Outcome o;
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        if (block_swap(m, n).images() != oracle::block_swap(m, n))
          fail(o, "block swap " + std::to_string(m) + "," + std::to_string(n));
        for (int p = 0; p <= 4; ++p)
          if (tetris(m, n, p).images() != oracle::stack(m, n, p))
            fail(o, "tetris " + std::to_string(m) + "," + std::to_string(n) + "," +
                        std::to_string(p));
      }
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n)
        if (transpose_perm(m, n).images() != oracle::transpose(m, n))
          fail(o, "transpose " + std::to_string(m) + "," + std::to_string(n));
    return o;
  });

  all &= criterion(2, "bipermutative axioms on every instance; corrupted instance rejected", 60, [] {
    Outcome o;
    for (auto name : {"finsk", "fset", "fskel"})
      need(o, check_bipermutative(*instance_by_name(name), DBound{4, 0, 0}));
    need(o, check_bipermutative(*instance_mandellA(), DBound{0, 2, 3}));
    Report bad = check_bipermutative(*instance_by_name("finsk-corrupted"), DBound{4, 0, 0});
    auto const *l = bad.first_failure();
    if (!l || l->id.empty())
      fail(o, "corrupted instance passed");
    else
      o.note = "corrupted instance fails " + l->id;
    return o;
  });

  all &= criterion(3, "alternative structure paths agree for n <= 3", 30, [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i < n; ++i)
        if (laplaza_paths(n, i).size() < 2)
          fail(o, "fewer than two paths at n=" + std::to_string(n));
    for (auto name : {"finsk", "fset", "fskel"})
      need(o, check_laplaza(*instance_by_name(name), DBound{3, 0, 0}, 3));
    Report r = check_laplaza(*instance_mandellA(), DBound{0, 2, 2}, 3);
    need(o, r);
    need_line(o, r, "laplaza.paths-agree");
    return o;
  });

  all &= criterion(4, "Grothendieck construction of 20 generated functors", 0, [] {
    Outcome o;
    Report r = suite_grothendieck_generated(base_config(), 20);
    need(o, r);
    need_line(o, r, "gro.generated-count");
    return o;
  });

  all &= criterion(5, "int as a pseudo symmetric multifunctor", 0, [] {
    Outcome o;
    Report r = suite_gro_multifunctor(base_config(), 12);
    need(o, r);
    for (auto id : {"pseudo.units", "pseudo.composition", "pseudo.unit-permutation",
                    "pseudo.product-permutation", "pseudo.top-equivariance",
                    "pseudo.bottom-equivariance", "int.non-symmetry-witness",
                    "int.strict-symmetry"})
      need_line(o, r, id);
    return o;
  });

  all &= criterion(6, "preimage and reconstruction round trips", 0, [] {
    Outcome o;
    Report r = suite_roundtrip(base_config(), 10);
    need(o, r);
    for (auto id : {"int.back-after-forward", "int.forward-after-back",
                    "int-2cells.back-after-forward", "recon.inverse-objects"}) {
      need_line(o, r, id);
      if (auto const *l = r.find(id); l && l->instances < 10)
        fail(o, std::string(id) + " ran on fewer than 10 instances");
    }
    return o;
  });

  all &= criterion(7, "A: additivity, arity 0, strict multifunctor", 0, [] {
    Outcome o;
    SuiteConfig c = base_config();
    c.arity = 2;
    Report r = suite_A(c);
    need(o, r);
    for (auto id : {"a0.objects", "strict.units", "strict.composition", "strict.symmetry"})
      need_line(o, r, id);
    return o;
  });

  all &= criterion(8, "P: terminal example, P_s = id iff s = id, direct pseudo symmetry", 0, [] {
    Outcome o;
    SuiteConfig c = base_config();
    c.len = 3;
    c.max = 3;
    Report r = suite_inverse_k(c, true);
    need(o, r);
    for (auto id : {"pterm.objects", "pterm.morphisms", "pterm.monoidal", "P.pseudo-identity",
                    "P.pseudo-direct"})
      need_line(o, r, id);
    return o;
  });

  all &= criterion(9, "E-infinity algebras and the P-image; suites 1-9 under 10 minutes", 0, [] {
    Outcome o;
    Report r = suite_einfty(base_config());
    need(o, r);
    need_line(o, r, "einfty.hexagon");
    return o;
  });
  if (total_seconds > 600) {
    std::printf("criterion 9: FAIL  suites 1-9 took %.1f s\n", total_seconds);
    all = false;
  }

  all &= criterion(10, "reports identical for any worker count", 0, [] {
    Outcome o;
    int saved = jobs();
    auto run = [] {
      SuiteConfig c = base_config();
      c.arity = 2;
      std::string s = check_bipermutative(*instance_fskel(), DBound{3, 0, 0}).to_json().dump();
      s += suite_roundtrip(c, 4).to_json().dump();
      s += check_bipermutative(*instance_by_name("finsk-corrupted"), DBound{3, 0, 0}).to_json().dump();
      return s;
    };
    set_jobs(1);
    std::string a = run();
    for (int j : {2, 4}) {
      set_jobs(j);
      if (run() != a)
        fail(o, "output differs with " + std::to_string(j) + " workers");
    }
    set_jobs(saved);
    return o;
  });

  std::printf("total %.1f s for suites 1-9\n", total_seconds);
  return all ? 0 : 1;
}
