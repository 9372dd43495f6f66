#include <doctest.h>

#include "bipermkit/gro.hpp"
#include "bipermkit/suites.hpp"

using namespace bpk;

namespace {

std::vector<Obj> seqs(int len, int max) { return instance_mandellA()->objects(DBound{0, len, max}); }

std::shared_ptr<const VecFunctor> vec(std::string const &sr, bool ordered)
{
  return std::make_shared<VecFunctor>(instance_mandellA(), Semiring::parse(sr), ordered);
}

} // namespace

TEST_CASE("int of the constant functor is the base")
{
  auto fset = instance_fset();
  auto bound = fset->objects(DBound{3, 0, 0});
  auto g = build_grothendieck(std::make_shared<ConstUnitSMF>(fset), bound);
  auto d = std::make_shared<DCategory>(fset, DBound{3, 0, 0});
  CHECK(g->objects().size() == bound.size());
  for (auto const &a : g->objects())
    for (auto const &b : g->objects())
      CHECK(g->hom(a, b).size() == d->hom(a[0], b[0]).size());
  CHECK(verify_category(materialize(*g)).ok());
}

TEST_CASE("objects of int are pairs, counted fibrewise")
{
  auto x = vec("trunc1", false);
  auto bound = seqs(2, 1);  // (), (1), (1,1)
  auto g = build_grothendieck(x, bound);
  CHECK(g->objects().size() == 1 + 2 + 4);
  CHECK(g->unit() == Val::list({obj_val({}), x->unit()}));
}

TEST_CASE("int is permutative and its projection a permutative opfibration")
{
  auto bound = seqs(2, 1);
  for (bool ordered : {false, true}) {
    auto x = vec("trunc1", ordered);
    Report r = suite_grothendieck(x, bound, 3);
    CHECK_MESSAGE(r.ok(), r.human());
  }
}

TEST_CASE("tensor in int is not symmetric on the nose")
{
  auto x = vec("trunc1", false);
  auto g = build_grothendieck(x, seqs(2, 1));
  Val a = Val::list({obj_val({1}), Val::ints({1})});
  Val b = Val::list({obj_val({1}), Val::ints({0})});
  Val br = g->braid(a, b);
  CHECK(g->dom(br) == g->tensor(a, b));
  CHECK(g->cod(br) == g->tensor(b, a));
  CHECK_FALSE(g->tensor(a, b) == g->tensor(b, a));
}

TEST_CASE("preimage inverts int on multimorphisms")
{
  auto x = vec("mod2", false);
  auto bound = seqs(2, 2);
  GroContext ctx(bound);
  DSample ds;
  ds.dobjs = bound;
  ds.count = 60;
  Rng g(9);
  for (int n = 0; n <= 3; ++n) {
    auto phi = random_product_nat(g, x, n);
    CHECK(diff_nat(*preimage_nlinear(ctx.nat(phi)), *phi, ds).empty());
  }
  auto xo = vec("trunc2", true);
  auto phi = random_product_nat(g, xo, 2);
  auto [m, hi] = random_scalar_mod(g, phi);
  (void)hi;
  CHECK(diff_mod(*preimage_transformation(ctx.mod(m)), *m, ds).empty());
}

TEST_CASE("int phi is n-linear and opcartesian")
{
  auto x = vec("trunc1", true);
  auto bound = seqs(2, 2);
  GroContext ctx(bound);
  auto pool = gro_pool(*ctx.category(x), bound, 3, 1);
  Rng g(4);
  for (int n = 1; n <= 3; ++n) {
    auto F = ctx.nat(random_product_nat(g, x, n));
    auto s = uniform_sample(pool, n, 60, n);
    Report r = check_nlinear(*F, s);
    CHECK_MESSAGE(r.ok(), r.human());
    Report o = check_opcartesian_nlinear(*F, s);
    CHECK_MESSAGE(o.ok(), o.human());
  }
}

TEST_CASE("reconstruction round trip and refusal")
{
  auto dA = instance_mandellA();
  auto bound = seqs(2, 1);
  auto dc = std::make_shared<DCategory>(dA, DBound{});
  auto x = vec("trunc1", true);
  GroContext ctx(bound);
  auto p = grothendieck_opfibration(ctx.category(x), dc);
  auto r = reconstruct_from_opfibration(p, dA, 40, 1);
  Report rr = check_reconstruction(r, p, 40, 1);
  CHECK_MESSAGE(rr.ok(), rr.human());

  auto small = std::make_shared<DCategory>(dA, DBound{0, 2, 1});
  auto q = identity_opfibration(small);
  CHECK_NOTHROW(reconstruct_from_opfibration(q, dA, 40, 1));
  q.lift = [small](Val const &y, Val const &) { return small->id(y); };
  CHECK_THROWS_AS(reconstruct_from_opfibration(q, dA, 40, 1), StructuralError);
}
