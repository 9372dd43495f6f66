#include <doctest.h>

#include "bipermkit/gamma.hpp"
#include "bipermkit/suites.hpp"

using namespace bpk;

namespace {

PointedFinCategory chain(int k)
{
  std::vector<Val> objs;
  for (int i = 0; i < k; ++i)
    objs.push_back(i);
  return PointedFinCategory(
      preorder_category(objs, [](Val const &a, Val const &b) { return a <= b; }), Val(0));
}

} // namespace

TEST_CASE("pointed functions")
{
  CHECK(PointedFn::all(2, 3).size() == 16);
  auto f = PointedFn::point(3, 2);
  CHECK(f.m == 1);
  CHECK(f.n == 3);
  CHECK(f(1) == 2);
  CHECK(f(0) == 0);
  auto id = PointedFn::identity(3);
  for (auto const &g : PointedFn::all(3, 2))
    CHECK(compose(g, id) == g);
}

TEST_CASE("smash indices, first factor fastest")
{
  std::vector<int> ms{2, 3};
  int k = 1;
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 2; ++i) {
      CHECK(smash_index(ms, {i, j}) == k);
      CHECK(smash_split(ms, k) == std::vector<int>{i, j});
      ++k;
    }
  CHECK(smash_index(ms, {0, 2}) == 0);
  CHECK(product_of(ms) == 6);
  CHECK(smash_permutation(ms, Perm::identity(2)) == PointedFn::identity(6));
}

TEST_CASE("smash permutation moves pairs")
{
  // read off from the target: (j, i) in 3 x 2 comes from (i, j) in 2 x 3
  auto p = smash_permutation({2, 3}, Perm({2, 1}));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(p(smash_index({3, 2}, {j, i})) == smash_index({2, 3}, {i, j}));
}

TEST_CASE("smash of chains has 1 + prod(|X_i| - 1) objects")
{
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 2; ++c) {
        auto s = smash({chain(a), chain(b), chain(c)});
        CHECK(s.cat.objects().size() ==
              static_cast<std::size_t>(1 + (a - 1) * (b - 1) * (c - 1)));
        CHECK(verify_category(s.cat).ok());
      }
  CHECK(smash({}).cat.objects().size() == 2);
  // two parallel arrows
  std::vector<FinCategory::Mor> ms{{Val(10), 0, 0}, {Val(11), 1, 1}, {Val(12), 0, 1}, {Val(13), 0, 1}};
  std::map<std::pair<Val, Val>, Val> comp{{{10, 10}, 10}, {{11, 11}, 11}, {{12, 10}, 12},
                                          {{11, 12}, 12}, {{13, 10}, 13}, {{11, 13}, 13}};
  PointedFinCategory par(FinCategory({0, 1}, ms, {{0, 10}, {1, 11}}, comp), Val(0));
  CHECK_THROWS_AS(smash({chain(2), par}), StructuralError);
}

TEST_CASE("stock Gamma-categories are functors")
{
  for (auto const &x : generated_gammas(2)) {
    Report r = check_gamma(*x, 100, 1);
    CHECK_MESSAGE(r.ok(), x->name(), "\n", r.human());
  }
  CHECK_THROWS_AS(terminal_gamma(2)->category(3), BoundError);
}

TEST_CASE("monoid power: a point map pushes to the coordinate")
{
  MonoidPowerGamma y(Semiring::parse("mod3"), 3, false);
  CHECK(y.objects(2).size() == 9);
  // <3> -> <1> collapsing 1 and 3 to 1, 2 to the basepoint
  PointedFn f{3, 1, {1, 0, 1}};
  CHECK(y.push(f, Val::ints({1, 2, 1})) == Val::ints({2}));
}

TEST_CASE("product multimaps are natural and pointed")
{
  auto y = std::make_shared<MonoidPowerGamma>(Semiring::parse("trunc2"), 4, true);
  GSample s;
  s.count = 60;
  Rng g(2);
  for (int n = 0; n <= 3; ++n) {
    auto f = random_product_multimap(g, y, n);
    Report r = check_gamma_multimap(*f, s);
    CHECK_MESSAGE(r.ok(), r.human());
  }
  auto f = random_product_multimap(g, y, 2);
  auto [t, hi] = random_scalar_gamma_mod(g, f);
  (void)hi;
  CHECK(check_gamma_mod(*t, s).ok());
}

TEST_CASE("A at arity 0 is an object of the first level")
{
  auto y = std::make_shared<MonoidPowerGamma>(Semiring::parse("trunc2"), 8, true);
  for (int c = 0; c < 3; ++c) {
    auto f = std::make_shared<ConstantMultimap>(y, Val::ints({c}));
    CHECK(A_arity0(*f) == Val::ints({c}));
    auto back = A_arity0_inverse(y, Val::ints({c}));
    GSample s;
    CHECK(diff_gmap(*back, *f, s).empty());
  }
  std::vector<GMapPtr> zs{std::make_shared<ConstantMultimap>(y, Val::ints({1}))};
  CHECK(check_A_arity0(y, zs, GSample{}).ok());
}

TEST_CASE("A of a Gamma-category is additive")
{
  AFunctor A;
  DSample ds;
  ds.dobjs = instance_mandellA()->objects(DBound{0, 2, 2});
  ds.count = 80;
  for (auto const &x : generated_gammas(2)) {
    Report r = check_additive_smf(*A.object(x), ds);
    CHECK_MESSAGE(r.ok(), x->name(), "\n", r.human());
  }
}

TEST_CASE("P of the terminal Gamma-category is the sequence category")
{
  auto dA = instance_mandellA();
  DBound b{0, 2, 2};
  auto P = inverse_K(terminal_gamma(2), dA->objects(b));
  Report r = check_P_terminal(P, std::make_shared<DCategory>(dA, b));
  CHECK_MESSAGE(r.ok(), r.human());
  // a non-terminal input is not isomorphic to the sequence category
  auto Q = inverse_K(std::make_shared<MonoidPowerGamma>(Semiring::parse("trunc1"), 2, false),
                     dA->objects(b));
  CHECK_FALSE(check_P_terminal(Q, std::make_shared<DCategory>(dA, b)).ok());
}

TEST_CASE("tabulated Gamma-category matches its source")
{
  MonoidPowerGamma y(Semiring::parse("mod2"), 2, false);
  auto t = tabulate_gamma(y);
  for (int n = 0; n <= 2; ++n)
    CHECK(t->objects(n) == y.objects(n));
  for (auto const &f : PointedFn::all(2, 1))
    for (auto const &x : y.objects(2))
      CHECK(t->push(f, x) == y.push(f, x));
}
