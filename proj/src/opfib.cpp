#include "bipermkit/gro.hpp"

#include <stdexcept>

namespace bpk {

namespace {

std::string neq(std::string const &what, Val const &l, Val const &r)
{
  return l == r ? std::string() : what + ": " + l.str() + " != " + r.str();
}

std::uint64_t mix(std::uint64_t seed, long i)
{
  return (seed + 0x7f4a7c159e3779b9ULL) * 0xbf58476d1ce4e5b9ULL +
         static_cast<std::uint64_t>(i) * 0x94d049bb133111ebULL;
}

class IdentityFunctor : public Functor
{
public:
  explicit IdentityFunctor(CatPtr c)
  : c_(std::move(c))
  {}
  CatPtr source() const override { return c_; }
  CatPtr target() const override { return c_; }
  Val obj(Val const &x) const override { return x; }
  Val mor(Val const &f) const override { return f; }

private:
  CatPtr c_;
};

class LambdaFunctor : public Functor
{
public:
  LambdaFunctor(CatPtr s, CatPtr t, std::function<Val(Val const &)> o,
                std::function<Val(Val const &)> m)
  : s_(std::move(s)), t_(std::move(t)), o_(std::move(o)), m_(std::move(m))
  {}
  CatPtr source() const override { return s_; }
  CatPtr target() const override { return t_; }
  Val obj(Val const &x) const override { return o_(x); }
  Val mor(Val const &f) const override { return m_(f); }

private:
  CatPtr s_, t_;
  std::function<Val(Val const &)> o_, m_;
};

// Fiber P^-1(a): objects over a, morphisms over 1_a.
class FiberCategory : public Category
{
public:
  FiberCategory(SplitOpfibration const &p, Val a)
  : p_(p), a_(std::move(a))
  {}
  bool has_object(Val const &x) const override
  {
    return p_.E->has_object(x) && p_.P->obj(x) == a_;
  }
  Val dom(Val const &f) const override { return p_.E->dom(f); }
  Val cod(Val const &f) const override { return p_.E->cod(f); }
  Val id(Val const &x) const override { return p_.E->id(x); }
  Val compose(Val const &g, Val const &f) const override { return p_.E->compose(g, f); }
  std::vector<Val> hom(Val const &x, Val const &y) const override
  {
    std::vector<Val> r;
    Val ia = p_.D->id(a_);
    for (auto const &m : p_.E->hom(x, y))
      if (p_.P->mor(m) == ia)
        r.push_back(m);
    return r;
  }
  bool has_objects() const override { return true; }
  std::vector<Val> objects() const override
  {
    std::vector<Val> r;
    for (auto const &e : p_.eobjs)
      if (p_.P->obj(e) == a_)
        r.push_back(e);
    return r;
  }
  std::optional<Val> inverse(Val const &f) const override
  {
    for (auto const &g : hom(cod(f), dom(f)))
      if (compose(g, f) == id(dom(f)) && compose(f, g) == id(cod(f)))
        return g;
    return std::nullopt;
  }

private:
  SplitOpfibration const &p_;
  Val a_;
};

Val pick(std::vector<Val> const &v, Rng &g) { return v[g.below(static_cast<long>(v.size()))]; }

// a D-morphism out of Py into some bounded D-object
Val sample_d(SplitOpfibration const &p, Val const &y, Rng &g)
{
  return sample_morphism(*p.D, p.P->obj(y), p.dobjs, g);
}

} // namespace

SplitOpfibration grothendieck_opfibration(GroPtr e, std::shared_ptr<const DCategory> d)
{
  SplitOpfibration p;
  p.E = e;
  p.D = d;
  p.Eperm = e;
  p.Dperm = d;
  p.P = std::make_shared<ProjectionFunctor>(e, d);
  p.lift = [e](Val const &y, Val const &f) { return e->lift(y, val_mor(f)); };
  p.eobjs = e->objects();
  for (auto const &a : e->bound())
    p.dobjs.push_back(obj_val(a));
  return p;
}

SplitOpfibration identity_opfibration(std::shared_ptr<const DCategory> d)
{
  SplitOpfibration p;
  p.E = d;
  p.D = d;
  p.Eperm = d;
  p.Dperm = d;
  p.P = std::make_shared<IdentityFunctor>(d);
  p.lift = [](Val const &, Val const &f) { return f; };
  p.eobjs = d->objects();
  p.dobjs = p.eobjs;
  return p;
}

std::string check_opcartesian_morphism(SplitOpfibration const &p, Val const &g)
{
  Val y = p.E->dom(g), z = p.E->cod(g);
  Val pg = p.P->mor(g);
  Val pz = p.P->obj(z);
  for (auto const &w : p.eobjs) {
    Val pw = p.P->obj(w);
    auto ks = p.D->hom(pz, pw);
    auto rs = p.E->hom(z, w);
    for (auto const &h : p.E->hom(y, w)) {
      Val ph = p.P->mor(h);
      for (auto const &k : ks) {
        if (p.D->compose(k, pg) != ph)
          continue;
        int count = 0;
        for (auto const &r : rs)
          if (p.P->mor(r) == k && p.E->compose(r, g) == h)
            ++count;
        if (count != 1)
          return "fore-raise " + h.str() + " over " + k.str() + " has " + std::to_string(count) +
                 " raises";
      }
    }
  }
  return "";
}

Report check_split_opfib(SplitOpfibration const &p, long count, std::uint64_t seed)
{
  Report rep;
  rep.suite = "split-opfibration";
  if (p.eobjs.empty())
    throw BoundError("split opfibration check needs a nonempty bound");
  rep.add(run_check("opfib.functor", "the projection is a functor", count, [&](long i) {
    Rng g(mix(seed, i));
    Val y = pick(p.eobjs, g);
    Val f = sample_morphism(*p.E, y, p.eobjs, g);
    Val h = sample_morphism(*p.E, p.E->cod(f), p.eobjs, g);
    std::string w = neq(y.str() + " identity", p.P->mor(p.E->id(y)), p.D->id(p.P->obj(y)));
    if (w.empty())
      w = neq(f.str() + " then " + h.str(), p.P->mor(p.E->compose(h, f)),
              p.D->compose(p.P->mor(h), p.P->mor(f)));
    return w;
  }));
  rep.add(run_check("opfib.lift", "chosen lift of the fore-lift", count, [&](long i) {
    Rng g(mix(seed + 1, i));
    Val y = pick(p.eobjs, g);
    Val f = sample_d(p, y, g);
    Val l = p.lift(y, f);
    std::string w = neq("domain", p.E->dom(l), y);
    if (w.empty())
      w = neq(y.str() + " projection", p.P->mor(l), f);
    return w;
  }));
  rep.add(run_check("opfib.opcartesian", "unique raise", std::min<long>(count, 40),
                    [&](long i) {
                      Rng g(mix(seed + 2, i));
                      Val y = pick(p.eobjs, g);
                      Val l = p.lift(y, sample_d(p, y, g));
                      return check_opcartesian_morphism(p, l);
                    }));
  rep.add(run_check("opfib.unitarity", "unitarity", count, [&](long i) {
    Rng g(mix(seed + 3, i));
    Val y = pick(p.eobjs, g);
    return neq(y.str(), p.lift(y, p.D->id(p.P->obj(y))), p.E->id(y));
  }));
  rep.add(run_check("opfib.multiplicativity", "multiplicativity", count, [&](long i) {
    Rng g(mix(seed + 4, i));
    Val y = pick(p.eobjs, g);
    Val f = sample_d(p, y, g);
    Val l = p.lift(y, f);
    Val h = sample_morphism(*p.D, p.D->cod(f), p.dobjs, g);
    return neq(y.str() + " " + f.str() + " " + h.str(), p.lift(y, p.D->compose(h, f)),
               p.E->compose(p.lift(p.E->cod(l), h), l));
  }));
  return rep;
}

Report check_perm_opfib(SplitOpfibration const &p, long count, std::uint64_t seed)
{
  if (!p.Eperm || !p.Dperm)
    throw StructuralError("not a permutative opfibration");
  Report rep = check_split_opfib(p, count, seed);
  rep.suite = "permutative-opfibration";
  auto const &E = *p.Eperm;
  auto const &D = *p.Dperm;
  rep.add(run_check("opfib.strict-symmetric", "strict symmetric monoidal projection", count,
                    [&](long i) {
                      Rng g(mix(seed + 5, i));
                      Val x = pick(p.eobjs, g), y = pick(p.eobjs, g);
                      Val f = sample_morphism(E, x, p.eobjs, g);
                      Val h = sample_morphism(E, y, p.eobjs, g);
                      std::string w = neq("unit", p.P->obj(E.unit()), D.unit());
                      if (w.empty())
                        w = neq(x.str() + " " + y.str(), p.P->obj(E.tensor(x, y)),
                                D.tensor(p.P->obj(x), p.P->obj(y)));
                      if (w.empty())
                        w = neq(f.str() + " " + h.str(), p.P->mor(E.tensor_mor(f, h)),
                                D.tensor_mor(p.P->mor(f), p.P->mor(h)));
                      if (w.empty())
                        w = neq("braiding " + x.str() + " " + y.str(), p.P->mor(E.braid(x, y)),
                                D.braid(p.P->obj(x), p.P->obj(y)));
                      return w;
                    }));
  rep.add(run_check("opfib.monoidal-lift", "sum of chosen lifts is the chosen lift", count,
                    [&](long i) {
                      Rng g(mix(seed + 6, i));
                      Val x = pick(p.eobjs, g), y = pick(p.eobjs, g);
                      Val f = sample_d(p, x, g), h = sample_d(p, y, g);
                      return neq(x.str() + " " + y.str(), p.lift(E.tensor(x, y), D.tensor_mor(f, h)),
                                 E.tensor_mor(p.lift(x, f), p.lift(y, h)));
                    }));
  rep.add(run_check("opfib.braiding-lift", "braiding is the chosen lift", count, [&](long i) {
    Rng g(mix(seed + 7, i));
    Val x = pick(p.eobjs, g), y = pick(p.eobjs, g);
    return neq(x.str() + " " + y.str(),
               p.lift(E.tensor(x, y), D.braid(p.P->obj(x), p.P->obj(y))), E.braid(x, y));
  }));
  return rep;
}

// ---- reconstruction

ReconstructedSMF::ReconstructedSMF(SplitOpfibration p, BipermPtr d)
: p_(std::move(p)), d_(std::move(d))
{}

CatPtr ReconstructedSMF::fiber(Obj const &a) const
{
  return std::make_shared<FiberCategory>(p_, obj_val(a));
}

std::vector<Val> ReconstructedSMF::fiber_objects(Obj const &a) const
{
  Val va = obj_val(a);
  bool in = false;
  for (auto const &b : p_.dobjs)
    in = in || b == va;
  if (!in)
    throw BoundError("D-object " + obj_str(a) + " outside the opfibration bound");
  return FiberCategory(p_, va).objects();
}

Val ReconstructedSMF::push(Mor const &f, Val const &x) const
{
  return p_.E->cod(p_.lift(x, mor_val(f)));
}

Val ReconstructedSMF::raise(Val const &m) const
{
  Val y = p_.E->dom(m);
  Val f = p_.P->mor(m);
  Val l = p_.lift(y, f);
  Val b = p_.D->cod(f);
  Val ib = p_.D->id(b);
  for (auto const &r : p_.E->hom(p_.E->cod(l), p_.E->cod(m)))
    if (p_.P->mor(r) == ib && p_.E->compose(r, l) == m)
      return r;
  throw StructuralError("no raise of " + m.str() + " through its chosen lift");
}

Val ReconstructedSMF::push_mor(Mor const &f, Val const &p) const
{
  Val fv = mor_val(f);
  Val y2 = p_.E->cod(p);
  return raise(p_.E->compose(p_.lift(y2, fv), p));
}

Val ReconstructedSMF::unit() const
{
  if (!p_.Eperm)
    throw StructuralError("reconstruction of a non-permutative opfibration has no unit");
  return p_.Eperm->unit();
}

Val ReconstructedSMF::sum(Obj const &, Obj const &, Val const &x, Val const &y) const
{
  return p_.Eperm->tensor(x, y);
}

Val ReconstructedSMF::sum_mor(Obj const &, Obj const &, Val const &p, Val const &q) const
{
  return p_.Eperm->tensor_mor(p, q);
}

Reconstruction reconstruct_from_opfibration(SplitOpfibration const &p, BipermPtr d, long count,
                                            std::uint64_t seed)
{
  Report chk = p.Eperm ? check_perm_opfib(p, count, seed) : check_split_opfib(p, count, seed);
  if (auto const *bad = chk.first_failure())
    throw StructuralError("reconstruction refused: " + bad->id + ": " + bad->witness);
  Reconstruction r;
  auto x = std::make_shared<const ReconstructedSMF>(p, d);
  r.X = x;
  std::vector<Obj> bound;
  for (auto const &a : p.dobjs)
    bound.push_back(val_obj(a));
  r.gro = build_grothendieck(x, bound);
  auto gro = r.gro;
  SplitOpfibration const &q = x->opfibration();
  r.phi = std::make_shared<LambdaFunctor>(
      gro, q.E, [](Val const &o) { return o[1]; },
      [x](Val const &m) {
        auto const &q = x->opfibration();
        return q.E->compose(m[2], q.lift(m[0][1], m[1]));
      });
  r.phi_inv = std::make_shared<LambdaFunctor>(
      q.E, gro, [x](Val const &e) { return Val::list({x->opfibration().P->obj(e), e}); },
      [x](Val const &m) {
        auto const &q = x->opfibration();
        Val e = q.E->dom(m);
        return Val::list({Val::list({q.P->obj(e), e}), q.P->mor(m), x->raise(m)});
      });
  return r;
}

Report check_reconstruction(Reconstruction const &r, SplitOpfibration const &p, long count,
                            std::uint64_t seed)
{
  Report rep;
  rep.suite = "reconstruction";
  auto const &G = *r.gro;
  auto gobjs = G.objects();
  auto const &phi = *r.phi;
  auto const &inv = *r.phi_inv;
  rep.add(run_check("recon.inverse-objects", "phi is bijective on objects",
                    static_cast<long>(gobjs.size() + p.eobjs.size()), [&](long i) {
                      if (i < static_cast<long>(gobjs.size()))
                        return neq("int X", inv.obj(phi.obj(gobjs[i])), gobjs[i]);
                      Val e = p.eobjs[i - gobjs.size()];
                      return neq("E", phi.obj(inv.obj(e)), e);
                    }));
  rep.add(run_check("recon.inverse-morphisms", "phi is bijective on morphisms", count,
                    [&](long i) {
                      Rng g(mix(seed + 11, i));
                      Val o = pick(gobjs, g);
                      Val m = sample_morphism(G, o, gobjs, g);
                      Val e = pick(p.eobjs, g);
                      Val k = sample_morphism(*p.E, e, p.eobjs, g);
                      std::string w = neq("int X", inv.mor(phi.mor(m)), m);
                      if (w.empty())
                        w = neq("E", phi.mor(inv.mor(k)), k);
                      return w;
                    }));
  rep.add(run_check("recon.functor", "phi is a functor", count, [&](long i) {
    Rng g(mix(seed + 12, i));
    Val o = pick(gobjs, g);
    Val m = sample_morphism(G, o, gobjs, g);
    Val m2 = sample_morphism(G, G.cod(m), gobjs, g);
    std::string w = neq("identity", phi.mor(G.id(o)), p.E->id(phi.obj(o)));
    if (w.empty())
      w = neq("composite", phi.mor(G.compose(m2, m)), p.E->compose(phi.mor(m2), phi.mor(m)));
    return w;
  }));
  rep.add(run_check("recon.projection", "P phi is the first-factor projection", count,
                    [&](long i) {
                      Rng g(mix(seed + 13, i));
                      Val m = sample_morphism(G, pick(gobjs, g), gobjs, g);
                      return neq(m.str(), p.P->mor(phi.mor(m)), m[1]);
                    }));
  rep.add(run_check("recon.lifts", "phi preserves chosen lifts", count, [&](long i) {
    Rng g(mix(seed + 14, i));
    Val o = pick(gobjs, g);
    Val f = sample_morphism(*p.D, o[0], p.dobjs, g);
    return neq(o.str() + " " + f.str(), phi.mor(G.lift(o, val_mor(f))), p.lift(phi.obj(o), f));
  }));
  if (p.Eperm) {
    auto const &E = *p.Eperm;
    rep.add(run_check("recon.monoidal", "phi is strict symmetric monoidal", count, [&](long i) {
      Rng g(mix(seed + 15, i));
      Val a = pick(gobjs, g), b = pick(gobjs, g);
      Val f = sample_morphism(G, a, gobjs, g), h = sample_morphism(G, b, gobjs, g);
      std::string w = neq("unit", phi.obj(G.unit()), E.unit());
      if (w.empty())
        w = neq(a.str() + " " + b.str(), phi.obj(G.tensor(a, b)),
                E.tensor(phi.obj(a), phi.obj(b)));
      if (w.empty())
        w = neq("morphisms", phi.mor(G.tensor_mor(f, h)), E.tensor_mor(phi.mor(f), phi.mor(h)));
      if (w.empty())
        w = neq("braiding", phi.mor(G.braid(a, b)), E.braid(phi.obj(a), phi.obj(b)));
      return w;
    }));
  }
  return rep;
}

} // namespace bpk
