#include <doctest.h>

#include <set>

#include "bipermkit/biperm.hpp"
#include "oracles.hpp"

using namespace bpk;

TEST_CASE("number instances: structure maps are the permutation formulas")
{
  auto b = instance_finsk();
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      CHECK(b->beta_plus({m}, {n}).map == oracle::block_swap(m, n));
      if (m && n)
        CHECK(b->beta_times({m}, {n}).map == oracle::transpose(m, n));
      for (int p = 1; p <= 3; ++p) {
        // (A + B) C -> AC + BC is the stacking rearrangement
        Mor f = b->inverse(b->fact_left({m}, {n}, {p}));
        CHECK(f.map == oracle::stack(m, n, p));
      }
    }
}

TEST_CASE("pair index in the sequence instance")
{
  // blocks (2,1) x (1,2): pairs of blocks ordered first factor fastest,
  // inside a block pair the first element fastest
  auto b = instance_mandellA();
  Obj a{2, 1}, c{1, 2};
  std::vector<std::pair<int, int>> expect;
  std::vector<std::vector<int>> ab{{1, 2}, {3}}, cb{{1}, {2, 3}};
  for (auto const &y : cb)
    for (auto const &x : ab)
      for (int v : y)
        for (int u : x)
          expect.push_back({u, v});
  CHECK(b->pair_order(a, c) == expect);
  for (std::size_t w = 0; w < expect.size(); ++w) {
    CHECK(b->pair_index(a, c, expect[w].first, expect[w].second) == static_cast<int>(w) + 1);
    CHECK(b->pair_split(a, c, static_cast<int>(w) + 1) == expect[w]);
  }
  CHECK(b->times(a, c) == oracle::seq_times(a, c));
  CHECK_THROWS_AS(b->pair_index(a, c, 4, 1), std::out_of_range);
}

TEST_CASE("hom-set sizes")
{
  auto fin = instance_finsk();
  CHECK(fin->hom({2}, {3}).size() == 9);
  CHECK(fin->hom({0}, {3}).size() == 1);
  CHECK(fin->hom({2}, {0}).empty());
  auto fsk = instance_fskel();
  CHECK(fsk->hom({2}, {2}).size() == 9);  // pointed: 3^2
  auto nd = instance_natdisc();
  CHECK(nd->hom({2}, {2}).size() == 1);
  CHECK(nd->hom({2}, {3}).empty());
  // sequence morphisms: fibers of each target block inside one source block
  auto A = instance_mandellA();
  auto h = A->hom({1, 1}, {2});
  for (auto const &f : h)
    CHECK(A->valid(f));
  CHECK(A->hom({2}, {1, 1}).size() > 0);
}

TEST_CASE("object bounds")
{
  CHECK(instance_finsk()->objects(DBound{3, 0, 0}).size() == 4);
  // sequences of length <= 2 with entries in 1..2: 1 + 2 + 4
  CHECK(instance_mandellA()->objects(DBound{0, 2, 2}).size() == 7);
}

TEST_CASE("instances pass the bipermutative axioms on small bounds")
{
  for (auto name : {"finsk", "fset", "fskel", "natdisc"}) {
    Report r = check_bipermutative(*instance_by_name(name), DBound{3, 0, 0});
    CHECK_MESSAGE(r.ok(), r.human());
  }
  Report r = check_bipermutative(*instance_mandellA(), DBound{0, 2, 2});
  CHECK_MESSAGE(r.ok(), r.human());
}

TEST_CASE("corrupted braiding fails a named axiom")
{
  Report r = check_bipermutative(*instance_by_name("finsk-corrupted"), DBound{3, 0, 0});
  CHECK_FALSE(r.ok());
  std::set<std::string> failed;
  for (auto const &l : r.lines)
    if (!l.ok())
      failed.insert(l.id);
  CHECK(failed.count("multiplicative.naturality") == 1);
  CHECK(!r.first_failure()->witness.empty());
}

TEST_CASE("unknown instance")
{
  CHECK_THROWS(instance_by_name("nope"));
}

TEST_CASE("structure words")
{
  auto e = ex_prod(ex_sum(ex_var("a"), ex_var("b")), ex_var("c"));
  CHECK(ex_regular(e));
  CHECK_FALSE(ex_regular(ex_prod(ex_var("a"), ex_var("a"))));
  auto b = instance_finsk();
  CHECK(ex_eval(*b, e, {{"a", {1}}, {"b", {2}}, {"c", {3}}}) == Obj{9});
}

TEST_CASE("Laplaza paths agree and reproduce the canonical map")
{
  auto b = instance_finsk();
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i < n; ++i) {
      auto ps = laplaza_paths(n, i);
      CHECK(ps.size() >= 2);
      std::vector<Obj> as(n, Obj{2});
      auto env = laplaza_bindings(as, i, {1});
      Mor want = b->laplaza(as, i, {1});
      for (auto const &p : ps)
        CHECK(evaluate_structure_path(*b, p, env) == want);
    }
  // single factor: identity
  CHECK(b->laplaza({{3}}, 0, {2}) == b->id({5}));
  Report r = check_laplaza(*instance_mandellA(), DBound{0, 2, 2}, 3);
  CHECK_MESSAGE(r.ok(), r.human());
}
