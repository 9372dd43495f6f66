#include <doctest.h>

#include "bipermkit/einfty.hpp"
#include "bipermkit/multicat.hpp"

using namespace bpk;

namespace {

CellGen<Perm> perm_gen()
{
  return [](Rng &g, int n) { return detail::random_perm(g, n); };
}

PseudoSymmetricData<Perm, BECell2, Perm, BECell2> identity_data()
{
  std::function<Perm(Perm const &)> cell = [](Perm const &p) { return p; };
  std::function<BECell2(BECell2 const &)> cell2 = [](BECell2 const &a) { return a; };
  return strict_symmetric<Perm, BECell2, Perm, BECell2>(cell, cell2, be_view());
}

} // namespace

TEST_CASE("permute_cells puts v_j at s(j)")
{
  std::vector<char> v{'a', 'b', 'c'};
  CHECK(permute_cells(Perm({2, 3, 1}), v) == std::vector<char>{'c', 'a', 'b'});
}

TEST_CASE("a trivial action breaks equivariance")
{
  auto v = be_view();
  v.act = [](Perm const &c, Perm const &) { return c; };
  MulticatSample ms;
  ms.count = 100;
  Report r = check_multicat(v, perm_gen(), ms);
  CHECK_FALSE(r.ok());
  CHECK(r.find("multicat.unity")->ok());
  CHECK(r.find("multicat.associativity")->ok());
  CHECK_FALSE(r.find("multicat.top-equivariance")->ok());
}

TEST_CASE("a composition that ignores the outer cell fails")
{
  auto v = be_view();
  v.gamma = [](Perm const &, std::vector<Perm> const &ts) { return block_sum(ts); };
  MulticatSample ms;
  ms.count = 100;
  CHECK_FALSE(check_multicat(v, perm_gen(), ms).ok());
}

TEST_CASE("identity is strict and pseudo symmetric")
{
  auto v = be_view();
  MulticatSample ms;
  ms.count = 50;
  std::function<Perm(Perm const &)> cell = [](Perm const &p) { return p; };
  Report s = check_strict_multifunctor(v, v, cell, perm_gen(), ms);
  CHECK_MESSAGE(s.ok(), s.human());

  std::vector<Perm> cells;
  for (int k = 0; k <= 3; ++k)
    for (auto const &p : Perm::all(k))
      cells.push_back(p);
  Report p = check_pseudo_symmetric_all(v, v, identity_data(), cells, perm_gen(), 2, 1);
  CHECK_MESSAGE(p.ok(), p.human());
  // cells are every permutation of arity <= 3, each with all pairs
  REQUIRE(p.find("pseudo.product-permutation") != nullptr);
  CHECK(p.find("pseudo.product-permutation")->instances == 1 + 1 + 2 * 4 + 6 * 36);

  auto twice = compose_pseudo_symmetric(identity_data(), identity_data(), v);
  Report p2 = check_pseudo_einfty(v, twice, 3, 2, 3);
  CHECK_MESSAGE(p2.ok(), p2.human());
}

TEST_CASE("a non-strict map is caught")
{
  auto v = be_view();
  MulticatSample ms;
  ms.count = 50;
  // inverse is a multifunctor only up to symmetry
  std::function<Perm(Perm const &)> cell = [](Perm const &p) { return p.inverse(); };
  CHECK_FALSE(check_strict_multifunctor(v, v, cell, perm_gen(), ms).ok());
}

TEST_CASE("round trip through inverses")
{
  RoundTrip<Perm, Perm> t;
  t.name = "inv";
  t.forward = [](Perm const &p) { return p.inverse(); };
  t.back = [](Perm const &p) { return p.inverse(); };
  auto same = [](Perm const &a, Perm const &b) { return a == b ? std::string() : a.str(); };
  t.diff_source = same;
  t.diff_target = same;
  std::function<Perm(Rng &)> gen = [](Rng &g) { return detail::random_perm(g, 4); };
  CHECK(multiequivalence_roundtrip(t, gen, gen, 30, 1).ok());
  t.back = [](Perm const &p) { return p; };
  CHECK_FALSE(multiequivalence_roundtrip(t, gen, gen, 30, 1).ok());
}
