#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bipermkit/serialize.hpp"
#include "bipermkit/suites.hpp"

using namespace bpk;

TEST_CASE("permutations and morphisms round trip")
{
  Perm p({3, 1, 2});
  CHECK(perm_to_json(p) == Json::parse("[3,1,2]"));
  CHECK(perm_from_json(perm_to_json(p)) == p);
  CHECK_THROWS_AS(perm_from_json(Json::parse("[1,1]")), ParseError);
  CHECK_THROWS_AS(perm_from_json(Json::parse("\"x\"")), ParseError);
  Mor f{{2, 1}, {3}, {1, 1, 2}};
  CHECK(mor_from_json(mor_to_json(f)) == f);
  PointedFn g{3, 2, {1, 0, 2}};
  CHECK(pointed_fn_from_json(pointed_fn_to_json(g)) == g);
  CHECK_THROWS_AS(pointed_fn_from_json(Json::parse(R"({"m":2,"n":1,"map":[1,2]})")), ParseError);
}

TEST_CASE("categories round trip")
{
  auto c = preorder_category({0, 1, 2}, [](Val const &a, Val const &b) { return a <= b; });
  FinCategory d = category_from_json(category_to_json(c));
  CHECK(d == c);
  CHECK(dump(category_to_json(d)) == dump(category_to_json(c)));
  auto bad = category_to_json(c);
  bad["composition"] = Json::array();
  CHECK_FALSE(verify_category(category_from_json(bad)).ok());
  bad["identity"] = Json::array();
  CHECK_THROWS_AS(category_from_json(bad), ParseError);
}

TEST_CASE("functors and natural transformations round trip")
{
  auto c = std::make_shared<const FinCategory>(
      preorder_category({0, 1}, [](Val const &a, Val const &b) { return a <= b; }));
  auto f = std::make_shared<const FunctorData>(identity_functor(c));
  FunctorData g = functor_from_json(functor_to_json(*f));
  CHECK(g.object_map() == f->object_map());
  CHECK(g.morphism_map() == f->morphism_map());
  auto t = identity_nat(f, c->objects());
  NatTransData u = nat_from_json(nat_to_json(t));
  CHECK(u.components() == t.components());
}

TEST_CASE("tabulated additive functor round trip")
{
  auto x = std::make_shared<VecFunctor>(instance_mandellA(), Semiring::parse("trunc1"), false);
  auto bound = instance_mandellA()->objects(DBound{0, 2, 1});
  TabulatedSMF t = tabulate_smf(*x, bound);
  Json j = smf_to_json(t);
  std::vector<Obj> b2;
  auto y = smf_from_json(j, &b2);
  CHECK(b2 == bound);
  auto ty = std::dynamic_pointer_cast<const TabulatedSMF>(y);
  REQUIRE(ty);
  CHECK(dump(smf_to_json(*ty)) == dump(j));
  DSample s;
  s.dobjs = bound;
  CHECK(check_additive_smf(*y, s).ok());
}

TEST_CASE("stock inputs")
{
  auto j = load_json_file(BIPERMKIT_TEST_DATA "/vector_seq.json");
  std::vector<Obj> bound;
  auto x = smf_from_json(j, &bound);
  CHECK(bound.size() == 4);
  auto v = std::dynamic_pointer_cast<const VecFunctor>(x);
  REQUIRE(v);
  CHECK(v->ordered());
  auto g = gamma_from_json(load_json_file(BIPERMKIT_TEST_DATA "/terminal_n2.json"));
  CHECK(g->trunc() == 2);
  CHECK(g->objects(2).size() == 1);
  CHECK_THROWS_AS(gamma_from_json(Json::parse(R"({"kind":"gamma","stock":"nope","trunc":1})")),
                  ParseError);
  CHECK_THROWS_AS(smf_from_json(Json::parse(R"({"kind":"additive-smf","instance":"mandellA","bound":[[0]]})")),
                  ParseError);
}

TEST_CASE("tabulated Gamma-category round trip")
{
  MonoidPowerGamma y(Semiring::parse("mod2"), 2, true);
  auto t = tabulate_gamma(y);
  Json j = gamma_to_json(*t);
  auto back = std::dynamic_pointer_cast<const TabulatedGamma>(gamma_from_json(j));
  REQUIRE(back);
  CHECK(dump(gamma_to_json(*back)) == dump(j));
  CHECK(check_gamma(*back, 60, 1).ok());
}

TEST_CASE("malformed input is a parse error")
{
  CHECK_THROWS_AS(load_json_file(BIPERMKIT_TEST_DATA "/malformed.json"), ParseError);
  CHECK_THROWS_AS(load_json_file(BIPERMKIT_TEST_DATA "/does-not-exist.json"), ParseError);
  CHECK_THROWS_AS(category_from_json(Json::parse("[1,2]")), ParseError);
  CHECK_THROWS_AS(smf_from_json(Json::parse(R"({"kind":"gamma"})")), ParseError);
}
