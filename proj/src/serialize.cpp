#include "bipermkit/serialize.hpp"

#include <fstream>
#include <sstream>

namespace bpk {

namespace {

Json need(Json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Json need_array(Json const &j, char const *key)
{
  Json a = need(j, key);
  if (!a.is_array())
    throw ParseError(std::string("field \"") + key + "\" must be an array");
  return a;
}

Val val(Json const &j)
{
  try {
    return Val::from_json(j);
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

int as_int(Json const &j, char const *what)
{
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(Json const &j, char const *what)
{
  if (!j.is_string())
    throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

// [[key, value], ...]
Json pairs(std::map<Val, Val> const &m)
{
  Json a = Json::array();
  for (auto const &[k, v] : m)
    a.push_back(Json::array({k.to_json(), v.to_json()}));
  return a;
}

std::map<Val, Val> read_pairs(Json const &a, char const *what)
{
  if (!a.is_array())
    throw ParseError(std::string(what) + " must be an array of pairs");
  std::map<Val, Val> m;
  for (auto const &e : a) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError(std::string(what) + " entries must be pairs");
    if (!m.emplace(val(e[0]), val(e[1])).second)
      throw ParseError(std::string(what) + " has a repeated key " + e[0].dump());
  }
  return m;
}

template <class F>
auto guarded(F f) -> decltype(f())
{
  try {
    return f();
  } catch (ParseError const &) {
    throw;
  } catch (Json::exception const &e) {
    throw ParseError(e.what());
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  } catch (StructuralError const &e) {
    throw ParseError(std::string("inconsistent data: ") + e.what());
  }
}

std::shared_ptr<const FinCategory> shared_category(Json const &j)
{
  return std::make_shared<const FinCategory>(category_from_json(j));
}

} // namespace

Json load_json_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (Json::parse_error const &e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(Json const &j) { return j.dump(2) + "\n"; }

Json perm_to_json(Perm const &p) { return p.images(); }

Perm perm_from_json(Json const &j)
{
  return guarded([&] {
    if (!j.is_array())
      throw ParseError("permutation must be an integer sequence");
    return Perm(j.get<std::vector<int>>());
  });
}

Json obj_to_json(Obj const &a) { return a; }

Obj obj_from_json(Json const &j)
{
  return guarded([&] {
    if (!j.is_array())
      throw ParseError("object must be an integer sequence");
    return j.get<Obj>();
  });
}

Json mor_to_json(Mor const &f)
{
  return Json{{"dom", f.dom}, {"cod", f.cod}, {"map", f.map}};
}

Mor mor_from_json(Json const &j)
{
  return guarded([&] {
    Mor f;
    f.dom = obj_from_json(need(j, "dom"));
    f.cod = obj_from_json(need(j, "cod"));
    f.map = need_array(j, "map").get<std::vector<int>>();
    return f;
  });
}

Json category_to_json(FinCategory const &c)
{
  Json objs = Json::array();
  for (auto const &o : c.objects())
    objs.push_back(o.to_json());
  Json mors = Json::array();
  for (auto const &m : c.morphisms())
    mors.push_back(Json{{"id", m.id.to_json()}, {"dom", m.dom.to_json()}, {"cod", m.cod.to_json()}});
  Json comp = Json::array();
  for (auto const &[gf, h] : c.composition())
    comp.push_back(Json::array({gf.first.to_json(), gf.second.to_json(), h.to_json()}));
  return Json{{"objects", objs},
              {"morphisms", mors},
              {"identity", pairs(c.identity_map())},
              {"composition", comp}};
}

FinCategory category_from_json(Json const &j)
{
  return guarded([&] {
    std::vector<Val> objs;
    for (auto const &o : need_array(j, "objects"))
      objs.push_back(val(o));
    std::vector<FinCategory::Mor> mors;
    for (auto const &m : need_array(j, "morphisms"))
      mors.push_back({val(need(m, "id")), val(need(m, "dom")), val(need(m, "cod"))});
    auto ids = read_pairs(need(j, "identity"), "identity");
    std::map<std::pair<Val, Val>, Val> comp;
    for (auto const &t : need_array(j, "composition")) {
      if (!t.is_array() || t.size() != 3)
        throw ParseError("composition entries must be triples [g, f, g o f]");
      comp[{val(t[0]), val(t[1])}] = val(t[2]);
    }
    return FinCategory(std::move(objs), std::move(mors), std::move(ids), std::move(comp));
  });
}

Json functor_to_json(FunctorData const &f)
{
  return Json{{"source", category_to_json(*f.src())},
              {"target", category_to_json(*f.tgt())},
              {"objects", pairs(f.object_map())},
              {"morphisms", pairs(f.morphism_map())}};
}

FunctorData functor_from_json(Json const &j)
{
  return guarded([&] {
    return FunctorData(shared_category(need(j, "source")), shared_category(need(j, "target")),
                       read_pairs(need(j, "objects"), "objects"),
                       read_pairs(need(j, "morphisms"), "morphisms"));
  });
}

Json nat_to_json(NatTransData const &t)
{
  auto s = std::dynamic_pointer_cast<const FunctorData>(t.source());
  auto u = std::dynamic_pointer_cast<const FunctorData>(t.target());
  if (!s || !u)
    throw std::invalid_argument("only tabulated functors serialize");
  return Json{{"source", functor_to_json(*s)},
              {"target", functor_to_json(*u)},
              {"components", pairs(t.components())}};
}

NatTransData nat_from_json(Json const &j)
{
  return guarded([&] {
    auto s = std::make_shared<const FunctorData>(functor_from_json(need(j, "source")));
    auto u = std::make_shared<const FunctorData>(functor_from_json(need(j, "target")));
    return NatTransData(s, u, read_pairs(need(j, "components"), "components"));
  });
}

Json pointed_fn_to_json(PointedFn const &f)
{
  return Json{{"m", f.m}, {"n", f.n}, {"map", f.map}};
}

PointedFn pointed_fn_from_json(Json const &j)
{
  return guarded([&] {
    PointedFn f;
    f.m = as_int(need(j, "m"), "m");
    f.n = as_int(need(j, "n"), "n");
    f.map = need_array(j, "map").get<std::vector<int>>();
    if (static_cast<int>(f.map.size()) != f.m)
      throw ParseError("pointed function " + f.str() + " has the wrong length");
    for (int x : f.map)
      if (x < 0 || x > f.n)
        throw ParseError("pointed function " + f.str() + " leaves its codomain");
    return f;
  });
}

// ---- additive functors

Json smf_to_json(TabulatedSMF const &x)
{
  Json bound = Json::array();
  for (auto const &a : x.bound())
    bound.push_back(obj_to_json(a));
  Json fibers = Json::array();
  for (auto const &[a, c] : x.fibers())
    fibers.push_back(Json{{"object", obj_to_json(a)}, {"category", category_to_json(*c)}});
  Json pushes = Json::array();
  for (auto const &[f, t] : x.pushes())
    pushes.push_back(Json{{"morphism", mor_to_json(f)},
                          {"objects", pairs(t.objects)},
                          {"morphisms", pairs(t.morphisms)}});
  Json sums = Json::array();
  for (auto const &[ab, t] : x.sums())
    sums.push_back(Json{{"left", obj_to_json(ab.first)},
                        {"right", obj_to_json(ab.second)},
                        {"objects", pairs(t.objects)},
                        {"morphisms", pairs(t.morphisms)}});
  return Json{{"kind", "additive-smf"}, {"instance", x.base()->name()},
              {"bound", bound},         {"fibers", fibers},
              {"pushes", pushes},       {"unit", x.unit().to_json()},
              {"sums", sums}};
}

AsmfPtr smf_from_json(Json const &j, std::vector<Obj> *bound_out)
{
  return guarded([&]() -> AsmfPtr {
    if (as_string(need(j, "kind"), "kind") != "additive-smf")
      throw ParseError("expected kind \"additive-smf\"");
    BipermPtr d = instance_by_name(as_string(need(j, "instance"), "instance"));
    std::vector<Obj> bound;
    for (auto const &a : need_array(j, "bound")) {
      Obj o = obj_from_json(a);
      if (!d->is_object(o))
        throw ParseError("bound entry " + obj_str(o) + " is not an object of " + d->name());
      bound.push_back(o);
    }
    if (bound_out)
      *bound_out = bound;
    if (j.contains("stock")) {
      std::string s = as_string(j.at("stock"), "stock");
      if (s == "const-unit")
        return std::make_shared<ConstUnitSMF>(d);
      if (s == "vector") {
        Semiring r = Semiring::parse(as_string(need(j, "semiring"), "semiring"));
        bool ordered = j.value("ordered", false);
        bool sorted = j.value("sorted", false);
        return std::make_shared<VecFunctor>(d, r, ordered, sorted);
      }
      throw ParseError("unknown stock additive functor \"" + s + "\"");
    }
    std::map<Obj, std::shared_ptr<const FinCategory>> fibers;
    for (auto const &e : need_array(j, "fibers"))
      fibers[obj_from_json(need(e, "object"))] = shared_category(need(e, "category"));
    std::map<Mor, TabulatedSMF::Push> pushes;
    for (auto const &e : need_array(j, "pushes")) {
      Mor f = mor_from_json(need(e, "morphism"));
      if (!d->valid(f))
        throw ParseError("push entry " + mor_str(f) + " is not a morphism of " + d->name());
      pushes[f] = {read_pairs(need(e, "objects"), "objects"),
                   read_pairs(need(e, "morphisms"), "morphisms")};
    }
    std::map<std::pair<Obj, Obj>, TabulatedSMF::Push> sums;
    for (auto const &e : need_array(j, "sums"))
      sums[{obj_from_json(need(e, "left")), obj_from_json(need(e, "right"))}] = {
          read_pairs(need(e, "objects"), "objects"), read_pairs(need(e, "morphisms"), "morphisms")};
    return std::make_shared<TabulatedSMF>(d, bound, std::move(fibers), std::move(pushes),
                                          val(need(j, "unit")), std::move(sums));
  });
}

// ---- Gamma-categories

Json gamma_to_json(TabulatedGamma const &x)
{
  Json cats = Json::array();
  int n = 0;
  for (auto const &c : x.categories())
    cats.push_back(Json{{"n", n++},
                        {"basepoint", c.basepoint.to_json()},
                        {"category", category_to_json(c.cat)}});
  Json fns = Json::array();
  for (auto const &[f, t] : x.pushes())
    fns.push_back(Json{{"function", pointed_fn_to_json(f)},
                       {"objects", pairs(t.objects)},
                       {"morphisms", pairs(t.morphisms)}});
  return Json{{"kind", "gamma"},
              {"name", x.name()},
              {"trunc", x.trunc()},
              {"categories", cats},
              {"functors", fns}};
}

GammaPtr gamma_from_json(Json const &j)
{
  return guarded([&]() -> GammaPtr {
    if (as_string(need(j, "kind"), "kind") != "gamma")
      throw ParseError("expected kind \"gamma\"");
    int N = as_int(need(j, "trunc"), "trunc");
    if (N < 0)
      throw ParseError("truncation must be non-negative");
    if (j.contains("stock")) {
      std::string s = as_string(j.at("stock"), "stock");
      if (s == "terminal")
        return terminal_gamma(N);
      if (s == "unit")
        return monoidal_unit_gamma(N);
      if (s == "monoid-power")
        return std::make_shared<MonoidPowerGamma>(
            Semiring::parse(as_string(need(j, "semiring"), "semiring")), N,
            j.value("ordered", false));
      throw ParseError("unknown stock Gamma-category \"" + s + "\"");
    }
    auto cj = need_array(j, "categories");
    if (static_cast<int>(cj.size()) != N + 1)
      throw ParseError("expected " + std::to_string(N + 1) + " categories for truncation " +
                       std::to_string(N));
    std::vector<PointedFinCategory> cats(N + 1);
    std::vector<bool> seen(N + 1, false);
    for (auto const &e : cj) {
      int n = as_int(need(e, "n"), "n");
      if (n < 0 || n > N || seen[n])
        throw ParseError("category index " + std::to_string(n) + " repeated or out of range");
      seen[n] = true;
      cats[n] = PointedFinCategory(category_from_json(need(e, "category")),
                                   val(need(e, "basepoint")));
    }
    std::map<PointedFn, TabulatedGamma::Push> pushes;
    for (auto const &e : need_array(j, "functors")) {
      PointedFn f = pointed_fn_from_json(need(e, "function"));
      if (f.m > N || f.n > N)
        throw ParseError("functor along " + f.str() + " exceeds the truncation");
      pushes[f] = {read_pairs(need(e, "objects"), "objects"),
                   read_pairs(need(e, "morphisms"), "morphisms")};
    }
    std::string name = j.contains("name") ? as_string(j.at("name"), "name") : "tabulated";
    return std::make_shared<TabulatedGamma>(name, std::move(cats), std::move(pushes));
  });
}

Json category_tables(Category const &c, std::vector<Val> const &objects)
{
  Json objs = Json::array();
  Json mors = Json::array();
  for (auto const &a : objects)
    objs.push_back(a.to_json());
  for (auto const &a : objects)
    for (auto const &b : objects)
      for (auto const &m : c.hom(a, b))
        mors.push_back(Json{{"id", m.to_json()}, {"dom", a.to_json()}, {"cod", b.to_json()}});
  return Json{{"objects", objs}, {"morphisms", mors}};
}

} // namespace bpk
