#include <doctest.h>

#include "bipermkit/biperm.hpp"
#include "bipermkit/permcat.hpp"

using namespace bpk;

namespace {

std::shared_ptr<const DCategory> small(std::string const &name)
{
  return std::make_shared<DCategory>(instance_by_name(name), DBound{2, 2, 2});
}

} // namespace

TEST_CASE("instance categories are permutative")
{
  for (auto name : {"finsk", "fskel", "mandellA"}) {
    auto d = small(name);
    auto objs = d->objects();
    Report r = check_permutative(*d, objs, {}, name);
    CHECK_MESSAGE(r.ok(), r.human());
  }
}

TEST_CASE("tensor functors are multilinear")
{
  for (auto name : {"finsk", "fset", "mandellA"}) {
    auto d = small(name);
    for (int n = 1; n <= 3; ++n) {
      TensorNL t(d, n);
      Report r = check_nlinear(t, uniform_sample(d->objects(), n, 80, 5));
      CHECK_MESSAGE(r.ok(), name, " ", n, "\n", r.human());
    }
  }
}

TEST_CASE("identity constraints on the tensor fail")
{
  auto d = small("finsk");
  TensorNL t(d, 2, true);
  Report r = check_nlinear(t, uniform_sample(d->objects(), 2, 80, 5));
  CHECK_FALSE(r.ok());
  auto d2 = small("mandellA");
  TensorNL t2(d2, 2, true);
  CHECK_FALSE(check_nlinear(t2, uniform_sample(d2->objects(), 2, 80, 5)).ok());
}

TEST_CASE("sigma action and composition of tensors")
{
  auto d = small("finsk");
  auto pool = d->objects();
  auto t2 = std::make_shared<const TensorNL>(d, 2);
  auto t1 = std::make_shared<const TensorNL>(d, 1);
  auto id = std::make_shared<const IdentityNL>(d);
  // identity acts trivially, composites with the identity are the cell itself
  CHECK(diff_nl(*sigma_act(t2, Perm::identity(2)), *t2, uniform_sample(pool, 2, 50, 1)).empty());
  CHECK(diff_nl(*gamma_compose(t2, {id, id}), *t2, uniform_sample(pool, 2, 50, 1)).empty());
  CHECK(diff_nl(*gamma_compose(id, {t2}), *t2, uniform_sample(pool, 2, 50, 1)).empty());
  auto c = gamma_compose(t2, {t2, t1});
  CHECK(c->arity() == 3);
  Report r = check_nlinear(*c, uniform_sample(pool, 3, 60, 2));
  CHECK_MESSAGE(r.ok(), r.human());
  auto s = sigma_act(c, Perm({3, 1, 2}));
  Report rs = check_nlinear(*s, uniform_sample(pool, 3, 60, 3));
  CHECK_MESSAGE(rs.ok(), rs.human());
}

TEST_CASE("braiding is a multilinear transformation")
{
  auto d = small("finsk");
  auto mu = std::make_shared<const TensorNL>(d, 2);
  auto b = std::make_shared<const BraidingNLTrans>(d, mu);
  Report r = check_nlinear_trans(*b, uniform_sample(d->objects(), 2, 80, 4));
  CHECK_MESSAGE(r.ok(), r.human());
  // the braiding composed with itself is the identity
  auto bb = vertical(sigma_act(NLTransPtr(b), Perm({2, 1})), NLTransPtr(b));
  auto idt = std::make_shared<const IdentityNLTrans>(mu);
  CHECK(diff_nl_trans(*bb, *idt, uniform_sample(d->objects(), 2, 80, 4)).empty());
}
