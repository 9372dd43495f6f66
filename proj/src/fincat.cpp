#include "bipermkit/fincat.hpp"

#include <algorithm>
#include <set>

namespace bpk {

std::vector<Val> Category::hom(Val const &, Val const &) const
{
  throw BoundError("hom enumeration not available for this category");
}

std::vector<Val> Category::objects() const
{
  throw BoundError("object enumeration not available for this category");
}

std::optional<Val> Category::inverse(Val const &f) const
{
  Val a = dom(f), b = cod(f);
  for (auto const &g : hom(b, a))
    if (compose(g, f) == id(a) && compose(f, g) == id(b))
      return g;
  return std::nullopt;
}

// FinCategory

FinCategory::FinCategory(std::vector<Val> objects, std::vector<Mor> morphisms,
                         std::map<Val, Val> identity,
                         std::map<std::pair<Val, Val>, Val> composition)
: objects_(std::move(objects)), morphisms_(std::move(morphisms)),
  identity_(std::move(identity)), composition_(std::move(composition))
{
  std::set<Val> objs(objects_.begin(), objects_.end());
  if (objs.size() != objects_.size())
    throw StructuralError("duplicate object");
  for (std::size_t k = 0; k < morphisms_.size(); ++k) {
    auto const &m = morphisms_[k];
    if (!objs.count(m.dom) || !objs.count(m.cod))
      throw StructuralError("morphism " + m.id.str() + " has dangling dom/cod");
    if (!mor_index_.emplace(m.id, k).second)
      throw StructuralError("duplicate morphism " + m.id.str());
    homs_[{m.dom, m.cod}].push_back(m.id);
  }
  for (auto const &x : objects_) {
    auto it = identity_.find(x);
    if (it == identity_.end())
      throw StructuralError("no identity for object " + x.str());
    if (!mor_index_.count(it->second))
      throw StructuralError("identity of " + x.str() + " is not a morphism");
  }
  for (auto const &[gf, h] : composition_) {
    if (!mor_index_.count(gf.first) || !mor_index_.count(gf.second) ||
        !mor_index_.count(h))
      throw StructuralError("composition entry names an unknown morphism");
  }
}

bool FinCategory::has_object(Val const &x) const { return identity_.count(x) > 0; }

bool FinCategory::has_morphism(Val const &f) const { return mor_index_.count(f) > 0; }

Val FinCategory::dom(Val const &f) const
{
  auto it = mor_index_.find(f);
  if (it == mor_index_.end())
    throw StructuralError("unknown morphism " + f.str());
  return morphisms_[it->second].dom;
}

Val FinCategory::cod(Val const &f) const
{
  auto it = mor_index_.find(f);
  if (it == mor_index_.end())
    throw StructuralError("unknown morphism " + f.str());
  return morphisms_[it->second].cod;
}

Val FinCategory::id(Val const &x) const
{
  auto it = identity_.find(x);
  if (it == identity_.end())
    throw StructuralError("unknown object " + x.str());
  return it->second;
}

Val FinCategory::compose(Val const &g, Val const &f) const
{
  auto it = composition_.find({g, f});
  if (it == composition_.end())
    throw StructuralError("composite " + g.str() + " o " + f.str() + " undefined");
  return it->second;
}

std::vector<Val> FinCategory::hom(Val const &a, Val const &b) const
{
  auto it = homs_.find({a, b});
  if (it == homs_.end())
    return {};
  return it->second;
}

bool operator==(FinCategory const &a, FinCategory const &b)
{
  if (a.objects_ != b.objects_ || a.identity_ != b.identity_ ||
      a.composition_ != b.composition_ || a.morphisms_.size() != b.morphisms_.size())
    return false;
  for (std::size_t k = 0; k < a.morphisms_.size(); ++k) {
    auto const &x = a.morphisms_[k];
    auto const &y = b.morphisms_[k];
    if (!(x.id == y.id && x.dom == y.dom && x.cod == y.cod))
      return false;
  }
  return true;
}

FinCategory terminal_category() { return product({}); }

FinCategory discrete_category(std::vector<Val> objects)
{
  return preorder_category(std::move(objects),
                           [](Val const &a, Val const &b) { return a == b; });
}

FinCategory preorder_category(std::vector<Val> objects,
                              std::function<bool(Val const &, Val const &)> leq)
{
  std::vector<FinCategory::Mor> mors;
  std::map<Val, Val> ids;
  std::map<std::pair<Val, Val>, Val> comp;
  for (auto const &a : objects)
    for (auto const &b : objects)
      if (leq(a, b))
        mors.push_back({Val::list({a, b}), a, b});
  for (auto const &a : objects)
    ids[a] = Val::list({a, a});
  for (auto const &f : mors)
    for (auto const &g : mors)
      if (g.dom == f.cod)
        comp[{g.id, f.id}] = Val::list({f.dom, g.cod});
  return FinCategory(std::move(objects), std::move(mors), std::move(ids),
                     std::move(comp));
}

FinCategory product(std::vector<FinCategory> const &cs)
{
  // object and morphism tuples by mixed-radix enumeration
  std::vector<long> orad, mrad;
  long nobj = 1, nmor = 1;
  for (auto const &c : cs) {
    orad.push_back(static_cast<long>(c.objects().size()));
    mrad.push_back(static_cast<long>(c.morphisms().size()));
    nobj *= orad.back();
    nmor *= mrad.back();
  }
  std::vector<Val> objs;
  std::map<Val, Val> ids;
  for (long k = 0; k < nobj; ++k) {
    auto t = decode_tuple(k, orad);
    std::vector<Val> xs, is;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      Val x = cs[j].objects()[t[j]];
      is.push_back(cs[j].id(x));
      xs.push_back(std::move(x));
    }
    Val o = Val::list(std::move(xs));
    ids[o] = Val::list(std::move(is));
    objs.push_back(std::move(o));
  }
  std::vector<FinCategory::Mor> mors;
  for (long k = 0; k < nmor; ++k) {
    auto t = decode_tuple(k, mrad);
    std::vector<Val> fs, ds, cds;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      auto const &m = cs[j].morphisms()[t[j]];
      fs.push_back(m.id);
      ds.push_back(m.dom);
      cds.push_back(m.cod);
    }
    mors.push_back({Val::list(fs), Val::list(ds), Val::list(cds)});
  }
  std::map<Val, std::vector<std::size_t>> by_dom;
  for (std::size_t k = 0; k < mors.size(); ++k)
    by_dom[mors[k].dom].push_back(k);
  std::map<std::pair<Val, Val>, Val> comp;
  for (auto const &f : mors)
    for (std::size_t gi : by_dom[f.cod]) {
      auto const &g = mors[gi];
      std::vector<Val> hs;
      for (std::size_t j = 0; j < cs.size(); ++j)
        hs.push_back(cs[j].compose(g.id[j], f.id[j]));
      comp[{g.id, f.id}] = Val::list(std::move(hs));
    }
  return FinCategory(std::move(objs), std::move(mors), std::move(ids),
                     std::move(comp));
}

FinCategory materialize(Category const &c) { return materialize(c, c.objects()); }

FinCategory materialize(Category const &c, std::vector<Val> const &objects)
{
  std::vector<FinCategory::Mor> mors;
  std::map<Val, Val> ids;
  std::map<std::pair<Val, Val>, Val> comp;
  std::map<std::pair<Val, Val>, std::vector<Val>> homs;
  for (auto const &a : objects) {
    ids[a] = c.id(a);
    for (auto const &b : objects) {
      auto h = c.hom(a, b);
      for (auto const &f : h)
        mors.push_back({f, a, b});
      homs[{a, b}] = std::move(h);
    }
  }
  for (auto const &a : objects)
    for (auto const &b : objects)
      for (auto const &f : homs[{a, b}])
        for (auto const &cc : objects)
          for (auto const &g : homs[{b, cc}])
            comp[{g, f}] = c.compose(g, f);
  return FinCategory(objects, std::move(mors), std::move(ids), std::move(comp));
}

Report verify_category(FinCategory const &c, std::optional<std::vector<Val>> bound)
{
  Report r;
  r.suite = "category";
  std::vector<Val> objs = bound ? *bound : c.objects();
  std::set<Val> in(objs.begin(), objs.end());
  std::vector<FinCategory::Mor> ms;
  for (auto const &m : c.morphisms())
    if (in.count(m.dom) && in.count(m.cod))
      ms.push_back(m);

  r.add(run_check("identity-typing", "identity morphism", static_cast<long>(objs.size()),
                  [&](long k) -> std::string {
                    auto const &x = objs[k];
                    Val i = c.id(x);
                    if (c.dom(i) != x || c.cod(i) != x)
                      return "identity of " + x.str() + " is " + i.str();
                    return "";
                  }));
  r.add(run_check("identity-law", "identity morphism", static_cast<long>(ms.size()),
                  [&](long k) -> std::string {
                    auto const &m = ms[k];
                    auto const &cp = c.composition();
                    auto l = cp.find({c.id(m.cod), m.id});
                    auto rr = cp.find({m.id, c.id(m.dom)});
                    if (l == cp.end() || rr == cp.end())
                      return "missing identity composite for " + m.id.str();
                    if (l->second != m.id || rr->second != m.id)
                      return "identity law fails at " + m.id.str();
                    return "";
                  }));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (ms[j].dom == ms[i].cod)
        pairs.emplace_back(j, i);  // (g, f)
  r.add(run_check("composition-total-and-typed", "composition",
                  static_cast<long>(pairs.size()), [&](long k) -> std::string {
                    auto const &g = ms[pairs[k].first];
                    auto const &f = ms[pairs[k].second];
                    auto it = c.composition().find({g.id, f.id});
                    if (it == c.composition().end())
                      return "no composite " + g.id.str() + " o " + f.id.str();
                    if (c.dom(it->second) != f.dom || c.cod(it->second) != g.cod)
                      return "composite " + g.id.str() + " o " + f.id.str() +
                             " has wrong dom/cod";
                    return "";
                  }));
  r.add(run_check("associativity", "composition", static_cast<long>(pairs.size()),
                  [&](long k) -> std::string {
                    auto const &g = ms[pairs[k].first];
                    auto const &f = ms[pairs[k].second];
                    auto const &cp = c.composition();
                    auto gf = cp.find({g.id, f.id});
                    if (gf == cp.end())
                      return "";
                    for (auto const &hm : ms) {
                      if (hm.dom != g.cod)
                        continue;
                      auto hg = cp.find({hm.id, g.id});
                      if (hg == cp.end())
                        continue;
                      auto l = cp.find({hm.id, gf->second});
                      auto rr = cp.find({hg->second, f.id});
                      if (l == cp.end() || rr == cp.end() || l->second != rr->second)
                        return "(" + hm.id.str() + "," + g.id.str() + "," + f.id.str() +
                               ")";
                    }
                    return "";
                  }));
  return r;
}

// ProductCategory

ProductCategory::ProductCategory(std::vector<CatPtr> factors)
: factors_(std::move(factors))
{}

bool ProductCategory::has_object(Val const &x) const
{
  if (x.is_int() || x.size() != factors_.size())
    return false;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    if (!factors_[j]->has_object(x[j]))
      return false;
  return true;
}

Val ProductCategory::dom(Val const &f) const
{
  std::vector<Val> r;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    r.push_back(factors_[j]->dom(f[j]));
  return Val::list(std::move(r));
}

Val ProductCategory::cod(Val const &f) const
{
  std::vector<Val> r;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    r.push_back(factors_[j]->cod(f[j]));
  return Val::list(std::move(r));
}

Val ProductCategory::id(Val const &x) const
{
  std::vector<Val> r;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    r.push_back(factors_[j]->id(x[j]));
  return Val::list(std::move(r));
}

Val ProductCategory::compose(Val const &g, Val const &f) const
{
  std::vector<Val> r;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    r.push_back(factors_[j]->compose(g[j], f[j]));
  return Val::list(std::move(r));
}

std::vector<Val> ProductCategory::hom(Val const &a, Val const &b) const
{
  std::vector<std::vector<Val>> hs;
  std::vector<long> rad;
  long total = 1;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    hs.push_back(factors_[j]->hom(a[j], b[j]));
    rad.push_back(static_cast<long>(hs.back().size()));
    total *= rad.back();
  }
  std::vector<Val> out;
  for (long k = 0; k < total; ++k) {
    auto t = decode_tuple(k, rad);
    std::vector<Val> fs;
    for (std::size_t j = 0; j < hs.size(); ++j)
      fs.push_back(hs[j][t[j]]);
    out.push_back(Val::list(std::move(fs)));
  }
  return out;
}

bool ProductCategory::has_objects() const
{
  for (auto const &c : factors_)
    if (!c->has_objects())
      return false;
  return true;
}

std::vector<Val> ProductCategory::objects() const
{
  std::vector<std::vector<Val>> os;
  std::vector<long> rad;
  long total = 1;
  for (auto const &c : factors_) {
    os.push_back(c->objects());
    rad.push_back(static_cast<long>(os.back().size()));
    total *= rad.back();
  }
  std::vector<Val> out;
  for (long k = 0; k < total; ++k) {
    auto t = decode_tuple(k, rad);
    std::vector<Val> xs;
    for (std::size_t j = 0; j < os.size(); ++j)
      xs.push_back(os[j][t[j]]);
    out.push_back(Val::list(std::move(xs)));
  }
  return out;
}

std::optional<Val> ProductCategory::inverse(Val const &f) const
{
  std::vector<Val> r;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    auto g = factors_[j]->inverse(f[j]);
    if (!g)
      return std::nullopt;
    r.push_back(*g);
  }
  return Val::list(std::move(r));
}

PointedFinCategory::PointedFinCategory(FinCategory c, Val b)
: cat(std::move(c)), basepoint(std::move(b))
{
  if (!cat.has_object(basepoint))
    throw StructuralError("basepoint " + basepoint.str() + " is not an object");
}

// Functors

FunctorData::FunctorData(std::shared_ptr<const FinCategory> src,
                         std::shared_ptr<const FinCategory> tgt,
                         std::map<Val, Val> objects, std::map<Val, Val> morphisms)
: src_(std::move(src)), tgt_(std::move(tgt)), obj_(std::move(objects)),
  mor_(std::move(morphisms))
{}

Val FunctorData::obj(Val const &x) const
{
  auto it = obj_.find(x);
  if (it == obj_.end())
    throw StructuralError("functor undefined on object " + x.str());
  return it->second;
}

Val FunctorData::mor(Val const &f) const
{
  auto it = mor_.find(f);
  if (it == mor_.end())
    throw StructuralError("functor undefined on morphism " + f.str());
  return it->second;
}

FunctorData identity_functor(std::shared_ptr<const FinCategory> c)
{
  std::map<Val, Val> o, m;
  for (auto const &x : c->objects())
    o[x] = x;
  for (auto const &f : c->morphisms())
    m[f.id] = f.id;
  return FunctorData(c, c, std::move(o), std::move(m));
}

FunctorData tabulate(Functor const &f, std::shared_ptr<const FinCategory> src,
                     std::shared_ptr<const FinCategory> tgt)
{
  std::map<Val, Val> o, m;
  for (auto const &x : src->objects())
    o[x] = f.obj(x);
  for (auto const &g : src->morphisms())
    m[g.id] = f.mor(g.id);
  return FunctorData(std::move(src), std::move(tgt), std::move(o), std::move(m));
}

FunctorData compose_functors(FunctorData const &g, FunctorData const &f)
{
  std::map<Val, Val> o, m;
  for (auto const &[x, y] : f.object_map())
    o[x] = g.obj(y);
  for (auto const &[x, y] : f.morphism_map())
    m[x] = g.mor(y);
  return FunctorData(f.src(), g.tgt(), std::move(o), std::move(m));
}

NatTransData::NatTransData(FunctorPtr src, FunctorPtr tgt, std::map<Val, Val> components)
: src_(std::move(src)), tgt_(std::move(tgt)), comp_(std::move(components))
{}

Val NatTransData::component(Val const &x) const
{
  auto it = comp_.find(x);
  if (it == comp_.end())
    throw StructuralError("missing component at " + x.str());
  return it->second;
}

NatTransData identity_nat(FunctorPtr f, std::vector<Val> const &objects)
{
  std::map<Val, Val> c;
  for (auto const &x : objects)
    c[x] = f->target()->id(f->obj(x));
  return NatTransData(f, f, std::move(c));
}

NatTransData vertical(NatTrans const &t, NatTrans const &s,
                      std::vector<Val> const &objects)
{
  std::map<Val, Val> c;
  auto tgt = s.source()->target();
  for (auto const &x : objects)
    c[x] = tgt->compose(t.component(x), s.component(x));
  return NatTransData(s.source(), t.target(), std::move(c));
}

Report verify_functor(Functor const &f, std::vector<Val> const &bound)
{
  Report r;
  r.suite = "functor";
  auto const &S = *f.source();
  auto const &T = *f.target();
  r.add(run_check("object-image", "functor", static_cast<long>(bound.size()),
                  [&](long k) -> std::string {
                    auto y = f.obj(bound[k]);
                    if (!T.has_object(y))
                      return bound[k].str() + " -> " + y.str() + " not an object";
                    if (f.mor(S.id(bound[k])) != T.id(y))
                      return "identity at " + bound[k].str() + " not preserved";
                    return "";
                  }));
  long n = static_cast<long>(bound.size());
  r.add(run_check("dom-cod-and-composition", "functor", n * n,
                  [&](long k) -> std::string {
                    auto const &a = bound[k / n];
                    auto const &b = bound[k % n];
                    for (auto const &g : S.hom(a, b)) {
                      auto Fg = f.mor(g);
                      if (T.dom(Fg) != f.obj(a) || T.cod(Fg) != f.obj(b))
                        return "image of " + g.str() + " has wrong dom/cod";
                      for (auto const &c : bound)
                        for (auto const &h : S.hom(b, c))
                          if (f.mor(S.compose(h, g)) != T.compose(f.mor(h), Fg))
                            return "composite " + h.str() + " o " + g.str() +
                                   " not preserved";
                    }
                    return "";
                  }));
  return r;
}

Report verify_natural(NatTrans const &t, std::vector<Val> const &bound)
{
  Report r;
  r.suite = "natural transformation";
  auto const &F = *t.source();
  auto const &G = *t.target();
  auto const &S = *F.source();
  auto const &T = *F.target();
  r.add(run_check("component-typing", "natural transformation",
                  static_cast<long>(bound.size()), [&](long k) -> std::string {
                    auto const &x = bound[k];
                    auto c = t.component(x);
                    if (T.dom(c) != F.obj(x) || T.cod(c) != G.obj(x))
                      return "component at " + x.str() + " has wrong type";
                    return "";
                  }));
  long n = static_cast<long>(bound.size());
  r.add(run_check("naturality", "natural transformation", n * n,
                  [&](long k) -> std::string {
                    auto const &a = bound[k / n];
                    auto const &b = bound[k % n];
                    for (auto const &g : S.hom(a, b))
                      if (T.compose(G.mor(g), t.component(a)) !=
                          T.compose(t.component(b), F.mor(g)))
                        return "square at " + g.str() + " does not commute";
                    return "";
                  }));
  return r;
}

Report verify_modification(ModificationData const &m,
                           std::vector<Val> const &index_bound,
                           std::function<std::vector<Val>(Val const &)> const &sample)
{
  Report r;
  r.suite = "modification";
  r.add(run_check("component-typing", "modification axiom",
                  static_cast<long>(index_bound.size()), [&](long k) -> std::string {
                    auto const &i = index_bound[k];
                    auto th = m.component(i);
                    auto Zi = m.Z.at(i);
                    auto ph = m.phi(i), ps = m.psi(i);
                    for (auto const &x : sample(i)) {
                      auto c = th->component(x);
                      if (Zi->dom(c) != ph->obj(x) || Zi->cod(c) != ps->obj(x))
                        return "component at " + i.str() + "," + x.str() + " mistyped";
                    }
                    return "";
                  }));
  long n = static_cast<long>(index_bound.size());
  auto const &I = *m.X.index;
  r.add(run_check("modification-axiom", "modification axiom", n * n,
                  [&](long k) -> std::string {
                    auto const &i = index_bound[k / n];
                    auto const &j = index_bound[k % n];
                    for (auto const &f : I.hom(i, j)) {
                      auto Xf = m.X.along(f);
                      auto Zf = m.Z.along(f);
                      for (auto const &x : sample(i)) {
                        auto lhs = Zf->mor(m.component(i)->component(x));
                        auto rhs = m.component(j)->component(Xf->obj(x));
                        if (lhs != rhs)
                          return "at " + f.str() + ", " + x.str() + ": " + lhs.str() +
                                 " vs " + rhs.str();
                      }
                    }
                    return "";
                  }));
  return r;
}

std::vector<long> choose_indices(long total, long cap, std::uint64_t seed)
{
  std::vector<long> out;
  if (total <= cap) {
    for (long k = 0; k < total; ++k)
      out.push_back(k);
    return out;
  }
  Rng rng(seed);
  std::set<long> s;
  while (static_cast<long>(s.size()) < cap)
    s.insert(rng.below(total));
  return std::vector<long>(s.begin(), s.end());
}

std::vector<long> decode_tuple(long k, std::vector<long> const &radices)
{
  std::vector<long> t(radices.size());
  for (std::size_t j = 0; j < radices.size(); ++j) {
    t[j] = radices[j] ? k % radices[j] : 0;
    if (radices[j])
      k /= radices[j];
  }
  return t;
}

} // namespace bpk
