#include <doctest.h>

#include "bipermkit/fincat.hpp"

using namespace bpk;

namespace {

// arrow category 0 -> 1
FinCategory arrow()
{
  std::vector<Val> objs{0, 1};
  std::vector<FinCategory::Mor> ms{{Val(10), 0, 0}, {Val(11), 1, 1}, {Val(12), 0, 1}};
  std::map<Val, Val> id{{0, 10}, {1, 11}};
  std::map<std::pair<Val, Val>, Val> comp{{{10, 10}, 10}, {{11, 11}, 11}, {{12, 10}, 12},
                                          {{11, 12}, 12}};
  return FinCategory(objs, ms, id, comp);
}

} // namespace

TEST_CASE("small categories verify")
{
  CHECK(verify_category(arrow()).ok());
  CHECK(verify_category(terminal_category()).ok());
  CHECK(verify_category(discrete_category({1, 2, 3})).ok());
  auto le = preorder_category({0, 1, 2}, [](Val const &a, Val const &b) { return a <= b; });
  CHECK(verify_category(le).ok());
  CHECK(le.hom(0, 2).size() == 1);
  CHECK(le.hom(2, 0).empty());
}

TEST_CASE("product hom-sets multiply")
{
  auto le = preorder_category({0, 1, 2}, [](Val const &a, Val const &b) { return a <= b; });
  FinCategory p = product({le, arrow()});
  CHECK(verify_category(p).ok());
  CHECK(p.objects().size() == 6);
  // morphisms: 6 in the order, 3 in the arrow
  CHECK(p.morphisms().size() == 18);
}

TEST_CASE("corrupted tables are rejected")
{
  auto a = arrow();
  auto comp = a.composition();
  comp[{Val(11), Val(12)}] = Val(10);  // wrong codomain
  CHECK_FALSE(verify_category(FinCategory(a.objects(), a.morphisms(), a.identity_map(), comp)).ok());
  comp[{Val(11), Val(12)}] = Val(99);
  CHECK_THROWS_AS(FinCategory(a.objects(), a.morphisms(), a.identity_map(), comp), StructuralError);
}

TEST_CASE("non-associative table fails verification")
{
  // one object, morphisms e, a, b with a a = b, b a = e but a b = a
  std::vector<Val> objs{0};
  std::vector<FinCategory::Mor> ms{{Val(0), 0, 0}, {Val(1), 0, 0}, {Val(2), 0, 0}};
  std::map<std::pair<Val, Val>, Val> comp;
  for (int x = 0; x < 3; ++x) {
    comp[{Val(0), Val(x)}] = x;
    comp[{Val(x), Val(0)}] = x;
  }
  comp[{Val(1), Val(1)}] = 2;
  comp[{Val(2), Val(1)}] = 0;
  comp[{Val(1), Val(2)}] = 1;
  comp[{Val(2), Val(2)}] = 2;
  Report r = verify_category(FinCategory(objs, ms, {{0, 0}}, comp));
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure());
  CHECK(r.first_failure()->id.find("assoc") != std::string::npos);
}

TEST_CASE("functor and natural transformation checks")
{
  auto c = std::make_shared<const FinCategory>(arrow());
  auto idf = std::make_shared<const FunctorData>(identity_functor(c));
  CHECK(verify_functor(*idf, c->objects()).ok());
  auto t = identity_nat(idf, c->objects());
  CHECK(verify_natural(t, c->objects()).ok());

  // constant at 0, into the identity
  std::map<Val, Val> o0{{0, 0}, {1, 0}}, m0{{10, 10}, {11, 10}, {12, 10}};
  auto k0 = std::make_shared<const FunctorData>(c, c, o0, m0);
  CHECK(verify_functor(*k0, c->objects()).ok());
  NatTransData good(k0, idf, {{0, 10}, {1, 12}});
  CHECK(verify_natural(good, c->objects()).ok());
  NatTransData bad(k0, idf, {{0, 10}, {1, 11}});
  CHECK_FALSE(verify_natural(bad, c->objects()).ok());
}

TEST_CASE("tuple decoding is mixed radix, first digit fastest")
{
  CHECK(decode_tuple(5, {2, 3}) == std::vector<long>{1, 2});
  auto idx = choose_indices(100, 10, 7);
  CHECK(idx.size() == 10);
  CHECK(std::is_sorted(idx.begin(), idx.end()));
  CHECK(choose_indices(5, 10, 7).size() == 5);
}
