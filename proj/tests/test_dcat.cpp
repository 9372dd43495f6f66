#include <doctest.h>

#include "bipermkit/dcat.hpp"
#include "bipermkit/suites.hpp"

using namespace bpk;

namespace {

DSample seq_sample(int len, int max, long count = 100)
{
  DSample s;
  s.dobjs = instance_mandellA()->objects(DBound{0, len, max});
  s.count = count;
  return s;
}

std::shared_ptr<const VecFunctor> vec(std::string const &sr, bool ordered)
{
  return std::make_shared<VecFunctor>(instance_mandellA(), Semiring::parse(sr), ordered);
}

} // namespace

TEST_CASE("semiring laws")
{
  for (auto name : {"trunc1", "trunc3", "maxmin2", "mod2", "mod5"}) {
    Semiring s = Semiring::parse(name);
    CHECK(s.name() == name);
    int n = s.size();
    for (int a = 0; a < n; ++a) {
      CHECK(s.add(a, s.zero()) == a);
      CHECK(s.mul(a, s.one()) == a);
      CHECK(s.mul(a, s.zero()) == s.zero());
      for (int b = 0; b < n; ++b) {
        CHECK(s.add(a, b) == s.add(b, a));
        CHECK(s.mul(a, b) == s.mul(b, a));
        for (int c = 0; c < n; ++c) {
          CHECK(s.add(s.add(a, b), c) == s.add(a, s.add(b, c)));
          CHECK(s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)));
          CHECK(s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c)));
        }
      }
    }
  }
  CHECK_THROWS(Semiring::parse("trunc0"));
  CHECK_THROWS(Semiring::parse("ring"));
}

TEST_CASE("vector functors are additive")
{
  for (auto sr : {"trunc1", "maxmin1", "mod2"})
    for (bool ordered : {false, true}) {
      Report r = check_additive_smf(*vec(sr, ordered), seq_sample(2, 2));
      CHECK_MESSAGE(r.ok(), sr, ordered, "\n", r.human());
    }
  auto fset = instance_fset();
  DSample s;
  s.dobjs = fset->objects(DBound{3, 0, 0});
  s.count = 100;
  Report r = check_additive_smf(VecFunctor(fset, Semiring::parse("trunc2"), true), s);
  CHECK_MESSAGE(r.ok(), r.human());
  CHECK(check_additive_smf(ConstUnitSMF(instance_mandellA()), seq_sample(2, 2)).ok());
}

TEST_CASE("fiber size is the semiring size to the card")
{
  auto x = vec("trunc2", false);
  CHECK(x->fiber_objects({2, 1}).size() == 27);
  CHECK(x->fiber_objects({}).size() == 1);
}

TEST_CASE("a tabulated functor with a corrupted sum fails")
{
  auto x = vec("trunc1", false);
  auto bound = instance_mandellA()->objects(DBound{0, 2, 1});
  TabulatedSMF t = tabulate_smf(*x, bound);
  Report good = check_additive_smf(t, seq_sample(2, 1));
  CHECK_MESSAGE(good.ok(), good.human());

  auto sums = t.sums();
  auto it = sums.find({Obj{1}, Obj{1}});
  REQUIRE(it != sums.end());
  // swap the two images of distinct pairs
  auto &objs = it->second.objects;
  Val k1 = Val::list({Val::ints({1}), Val::ints({0})});
  Val k2 = Val::list({Val::ints({0}), Val::ints({1})});
  REQUIRE(objs.count(k1));
  std::swap(objs[k1], objs[k2]);
  TabulatedSMF bad(t.base(), t.bound(), t.fibers(), t.pushes(), t.unit(), sums);
  Report r = check_additive_smf(bad, seq_sample(2, 1, 300));
  CHECK_FALSE(r.ok());
}

TEST_CASE("product transformations and their algebra")
{
  auto x = vec("mod3", false);
  DSample s = seq_sample(2, 2, 60);
  for (int n = 0; n <= 3; ++n) {
    Rng g(n);
    auto phi = random_product_nat(g, x, n);
    Report r = check_additive_nat(*phi, s);
    CHECK_MESSAGE(r.ok(), n, "\n", r.human());
  }
  // c x1 x2 composed with d1 y and d2 z1 z2 is c d1 d2 y z1 z2; 2 * 2 * 1 = 1 mod 3
  std::vector<AsmfPtr> one{x}, two{x, x}, three{x, x, x};
  auto outer = std::make_shared<ProductNat>(two, x, 2);
  auto i1 = std::make_shared<ProductNat>(one, x, 2);
  auto i2 = std::make_shared<ProductNat>(two, x, 1);
  auto direct = std::make_shared<ProductNat>(three, x, 1);
  CHECK(diff_nat(*gamma(NatPtr(outer), {i1, i2}), *direct, s).empty());
  auto wrong = std::make_shared<ProductNat>(three, x, 2);
  CHECK_FALSE(diff_nat(*gamma(NatPtr(outer), {i1, i2}), *wrong, s).empty());
  auto idn = std::make_shared<IdentityNat>(x);
  CHECK(diff_nat(*gamma(NatPtr(idn), {outer}), *outer, s).empty());
}

TEST_CASE("scalar modifications")
{
  auto x = vec("trunc2", true);
  std::vector<AsmfPtr> two{x, x};
  auto lo = std::make_shared<const ProductNat>(two, x, 0);
  auto hi = std::make_shared<const ProductNat>(two, x, 2);
  auto m = std::make_shared<ScalarMod>(lo, hi);
  DSample s = seq_sample(2, 2, 60);
  Report r = check_additive_mod(*m, s);
  CHECK_MESSAGE(r.ok(), r.human());
  CHECK_THROWS(ScalarMod(hi, lo));
  auto v = std::make_shared<VerticalMod>(m, std::make_shared<IdentityMod>(lo));
  CHECK(diff_mod(*v, *m, s).empty());
}
